//! Linear constraints, open polyhedra, and exact feasibility of mixed
//! strict/weak systems.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{dot, is_zero_vector, Point, Rational};
use super::simplex::{maximize, LpOutcome, LpRow, RowKind};
use crate::error::GeometryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessEq,
    #[serde(rename = "=")]
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessEq => "<=",
            Relation::Equal => "=",
        }
    }
}

/// `coeffs · x  rel  rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> Self {
        LinearConstraint { coeffs, rel, rhs }
    }

    pub fn strict(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self::new(coeffs, Relation::Less, rhs)
    }

    pub fn weak(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self::new(coeffs, Relation::LessEq, rhs)
    }

    pub fn equality(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self::new(coeffs, Relation::Equal, rhs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `rhs - coeffs · x`.
    pub fn slack_at(&self, x: &[Rational]) -> Rational {
        &self.rhs - dot(&self.coeffs, x)
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let s = self.slack_at(x);
        match self.rel {
            Relation::Less => s.is_positive(),
            Relation::LessEq => !s.is_negative(),
            Relation::Equal => s.is_zero(),
        }
    }

    /// The closed complement of a strict row: `a·x < b` becomes `-a·x ≤ -b`.
    pub fn reversed(&self) -> LinearConstraint {
        debug_assert_eq!(self.rel, Relation::Less);
        LinearConstraint::weak(self.coeffs.iter().map(|c| -c).collect(), -self.rhs.clone())
    }

    /// Rewrites the row in parameters `t` along `x = base + Σ t_k directions[k]`.
    pub fn substitute(&self, base: &[Rational], directions: &[Point]) -> LinearConstraint {
        let coeffs = directions.iter().map(|d| dot(&self.coeffs, d)).collect();
        LinearConstraint::new(coeffs, self.rel, self.slack_at(base))
    }
}

/// Outcome of [`feasible`]. `slack` is the largest common margin `ε ≤ 1`
/// by which the strict rows can be satisfied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityOutcome {
    pub feasible: bool,
    pub witness: Option<Point>,
    pub slack: Rational,
}

fn check_dims(dim: usize, rows: &[LinearConstraint]) -> Result<(), GeometryError> {
    for r in rows {
        if r.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: r.dim(),
            });
        }
        if r.rel == Relation::Equal && is_zero_vector(&r.coeffs) {
            return Err(GeometryError::ZeroNormalEquality);
        }
    }
    Ok(())
}

/// Builds LP rows over `x⁺, x⁻` (and optionally a trailing `ε` column).
fn split_rows(dim: usize, rows: &[LinearConstraint], with_eps: bool) -> Vec<LpRow> {
    let width = 2 * dim + usize::from(with_eps);
    rows.iter()
        .map(|r| {
            let mut coeffs = vec![Rational::zero(); width];
            for (k, c) in r.coeffs.iter().enumerate() {
                coeffs[k] = c.clone();
                coeffs[dim + k] = -c.clone();
            }
            let kind = match r.rel {
                Relation::Less => {
                    if with_eps {
                        coeffs[2 * dim] = Rational::one();
                    }
                    RowKind::Le
                }
                Relation::LessEq => RowKind::Le,
                Relation::Equal => RowKind::Eq,
            };
            LpRow {
                coeffs,
                kind,
                rhs: r.rhs.clone(),
            }
        })
        .collect()
}

fn unsplit(dim: usize, point: &[Rational]) -> Point {
    (0..dim).map(|k| &point[k] - &point[dim + k]).collect()
}

/// Decides whether some `x ∈ R^dim` satisfies every row, strict rows strictly,
/// by maximizing `ε` subject to `a·x + ε ≤ b` on strict rows and `0 ≤ ε ≤ 1`.
pub fn feasible(
    dim: usize,
    constraints: &[LinearConstraint],
) -> Result<FeasibilityOutcome, GeometryError> {
    check_dims(dim, constraints)?;
    if constraints.is_empty() {
        return Ok(FeasibilityOutcome {
            feasible: true,
            witness: Some(vec![Rational::zero(); dim]),
            slack: Rational::one(),
        });
    }
    let has_strict = constraints.iter().any(|r| r.rel == Relation::Less);
    let nvars = 2 * dim + 1;
    let mut rows = split_rows(dim, constraints, true);
    let mut cap = vec![Rational::zero(); nvars];
    cap[2 * dim] = Rational::one();
    rows.push(LpRow {
        coeffs: cap,
        kind: RowKind::Le,
        rhs: Rational::one(),
    });
    let mut objective = vec![Rational::zero(); nvars];
    objective[2 * dim] = Rational::one();

    let infeasible = |slack| FeasibilityOutcome {
        feasible: false,
        witness: None,
        slack,
    };
    match maximize(nvars, &objective, &rows) {
        LpOutcome::Optimal { point, value } => {
            if has_strict && !value.is_positive() {
                return Ok(infeasible(value));
            }
            let witness = unsplit(dim, &point);
            debug_assert!(constraints.iter().all(|r| r.is_satisfied_by(&witness)));
            Ok(FeasibilityOutcome {
                feasible: true,
                witness: Some(witness),
                slack: value,
            })
        }
        LpOutcome::Infeasible => Ok(infeasible(Rational::zero())),
        LpOutcome::Unbounded => unreachable!("ε is capped at 1"),
    }
}

/// Maximizes `objective · x` over a system of weak rows and equalities.
pub(crate) fn maximize_over(
    dim: usize,
    constraints: &[LinearConstraint],
    objective: &[Rational],
) -> Option<Point> {
    debug_assert!(constraints.iter().all(|r| r.rel != Relation::Less));
    let rows = split_rows(dim, constraints, false);
    let mut obj = Vec::with_capacity(2 * dim);
    obj.extend(objective.iter().cloned());
    obj.extend(objective.iter().map(|c| -c));
    match maximize(2 * dim, &obj, &rows) {
        LpOutcome::Optimal { point, .. } => Some(unsplit(dim, &point)),
        _ => None,
    }
}

/// An open polyhedron `{x : a_r·x < b_r for every row r}`; no rows means all of `R^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenPolyhedron {
    dim: usize,
    rows: Vec<LinearConstraint>,
}

impl OpenPolyhedron {
    pub fn new(dim: usize, rows: Vec<LinearConstraint>) -> Result<Self, GeometryError> {
        for r in &rows {
            if r.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    got: r.dim(),
                });
            }
            if r.rel != Relation::Less {
                return Err(GeometryError::NonStrictRow);
            }
        }
        Ok(OpenPolyhedron { dim, rows })
    }

    pub fn whole(dim: usize) -> Self {
        OpenPolyhedron {
            dim,
            rows: Vec::new(),
        }
    }

    /// `lo_k < x_k < hi_k` for every coordinate.
    pub fn open_box(lo: &[Rational], hi: &[Rational]) -> Self {
        assert_eq!(lo.len(), hi.len());
        let dim = lo.len();
        let mut rows = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            let mut e = vec![Rational::zero(); dim];
            e[k] = Rational::one();
            rows.push(LinearConstraint::strict(
                e.iter().map(|c| -c).collect(),
                -lo[k].clone(),
            ));
            rows.push(LinearConstraint::strict(e, hi[k].clone()));
        }
        OpenPolyhedron { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[LinearConstraint] {
        &self.rows
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.rows.iter().all(|r| r.is_satisfied_by(x))
    }

    pub fn intersect(&self, other: &OpenPolyhedron) -> Result<OpenPolyhedron, GeometryError> {
        if other.dim != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(OpenPolyhedron {
            dim: self.dim,
            rows,
        })
    }

    pub fn feasibility(&self) -> FeasibilityOutcome {
        feasible(self.dim, &self.rows).expect("rows are well formed")
    }

    pub fn witness(&self) -> Option<Point> {
        self.feasibility().witness
    }

    pub fn is_empty(&self) -> bool {
        !self.feasibility().feasible
    }

    /// The polyhedron in parameters `t` along the flat `x = base + Σ t_k directions[k]`.
    pub fn substitute(&self, base: &[Rational], directions: &[Point]) -> OpenPolyhedron {
        OpenPolyhedron {
            dim: directions.len(),
            rows: self
                .rows
                .iter()
                .map(|r| r.substitute(base, directions))
                .collect(),
        }
    }
}
