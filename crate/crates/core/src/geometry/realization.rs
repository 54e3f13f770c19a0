//! Labeled families of open polyhedra, their atoms and their codes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::polyhedron::{feasible, LinearConstraint, OpenPolyhedron, Relation};
use super::rational::{format_rational, parse_rational, Point, Rational};
use crate::code::Code;
use crate::codeword::Codeword;
use crate::complex::SimplicialComplex;
use crate::error::GeometryError;

pub const DEFAULT_CAP: usize = 16;

/// Open sets `U_1..U_n` inside an open ambient region (all of `R^d` by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    dim: usize,
    ambient: OpenPolyhedron,
    sets: Vec<OpenPolyhedron>,
}

impl Realization {
    pub fn new(
        dim: usize,
        ambient: OpenPolyhedron,
        sets: Vec<OpenPolyhedron>,
    ) -> Result<Self, GeometryError> {
        for p in std::iter::once(&ambient).chain(&sets) {
            if p.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(Realization { dim, ambient, sets })
    }

    pub fn in_space(dim: usize, sets: Vec<OpenPolyhedron>) -> Result<Self, GeometryError> {
        Self::new(dim, OpenPolyhedron::whole(dim), sets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn ambient(&self) -> &OpenPolyhedron {
        &self.ambient
    }

    pub fn sets(&self) -> &[OpenPolyhedron] {
        &self.sets
    }

    pub fn set(&self, label: usize) -> Result<&OpenPolyhedron, GeometryError> {
        self.check_label(label)?;
        Ok(&self.sets[label - 1])
    }

    fn check_label(&self, label: usize) -> Result<(), GeometryError> {
        if label == 0 || label > self.n() {
            return Err(GeometryError::LabelOutOfRange { label, n: self.n() });
        }
        Ok(())
    }

    fn check_sigma(&self, sigma: Codeword) -> Result<(), GeometryError> {
        match sigma.iter().find(|&i| i > self.n()) {
            Some(label) => Err(GeometryError::LabelOutOfRange { label, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Rows of `X ∩ ⋂_{i∈σ} U_i`.
    pub fn intersection_rows(
        &self,
        sigma: Codeword,
    ) -> Result<Vec<LinearConstraint>, GeometryError> {
        self.check_sigma(sigma)?;
        let mut rows = self.ambient.rows().to_vec();
        for i in sigma.iter() {
            rows.extend(self.sets[i - 1].rows().iter().cloned());
        }
        Ok(rows)
    }

    /// A point of `X ∩ ⋂_{i∈σ} U_i`, if any.
    pub fn intersection_witness(&self, sigma: Codeword) -> Result<Option<Point>, GeometryError> {
        let rows = self.intersection_rows(sigma)?;
        Ok(feasible(self.dim, &rows)?.witness)
    }

    /// A point in exactly the sets of `σ`, if the atom is nonempty.
    pub fn atom_witness(&self, sigma: Codeword) -> Result<Option<Point>, GeometryError> {
        let rows = self.intersection_rows(sigma)?;
        let Some(start) = feasible(self.dim, &rows)?.witness else {
            return Ok(None);
        };
        let excluded: Vec<&OpenPolyhedron> = (1..=self.n())
            .filter(|&j| !sigma.contains(j))
            .map(|j| &self.sets[j - 1])
            .collect();
        Ok(avoid_all(self.dim, rows, start, &excluded))
    }

    pub fn atom_nonempty(&self, sigma: Codeword) -> Result<bool, GeometryError> {
        Ok(self.atom_witness(sigma)?.is_some())
    }

    /// `N(U) = {σ : X ∩ U_σ ≠ ∅}`, built upward so empty intersections prune supersets.
    pub fn nerve(&self) -> Result<SimplicialComplex, GeometryError> {
        Ok(
            SimplicialComplex::new(self.n(), self.nerve_faces(DEFAULT_CAP.max(self.n()))?)
                .expect("nerve is downward closed"),
        )
    }

    fn nerve_faces(&self, cap: usize) -> Result<BTreeSet<Codeword>, GeometryError> {
        let n = self.n();
        if n > cap {
            return Err(GeometryError::CapExceeded { n, cap });
        }
        let mut faces = BTreeSet::new();
        if self.intersection_witness(Codeword::EMPTY)?.is_none() {
            return Ok(faces);
        }
        faces.insert(Codeword::EMPTY);
        let mut layer = vec![Codeword::EMPTY];
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for s in &layer {
                let start = s.max_index() + 1;
                for i in start..=n {
                    let t = s.with(i);
                    if t.iter().all(|j| faces.contains(&t.without(j)))
                        && self.intersection_witness(t)?.is_some()
                    {
                        next.insert(t);
                    }
                }
            }
            faces.extend(next.iter().copied());
            layer = next.into_iter().collect();
        }
        Ok(faces)
    }

    /// The code `{σ : atom(σ) ≠ ∅}` with the default cap on `n`.
    pub fn code(&self) -> Result<Code, GeometryError> {
        self.code_with_cap(DEFAULT_CAP)
    }

    pub fn code_with_cap(&self, cap: usize) -> Result<Code, GeometryError> {
        let mut words = Vec::new();
        for sigma in self.nerve_faces(cap)? {
            if self.atom_nonempty(sigma)? {
                words.push(sigma);
            }
        }
        Ok(Code::new(self.n(), words).expect("labels lie in [n]"))
    }

    /// The set of labels whose sets contain `x`.
    pub fn labels_at(&self, x: &[Rational]) -> Codeword {
        let mut w = Codeword::EMPTY;
        for (k, s) in self.sets.iter().enumerate() {
            if s.contains(x) {
                w = w.with(k + 1);
            }
        }
        w
    }
}

/// Depth-first search for a point of `rows` outside every excluded set. Each
/// level picks one row of the next excluded set and imposes its weak reverse.
fn avoid_all(
    dim: usize,
    mut rows: Vec<LinearConstraint>,
    start: Point,
    excluded: &[&OpenPolyhedron],
) -> Option<Point> {
    fn go(
        dim: usize,
        rows: &mut Vec<LinearConstraint>,
        w: &Point,
        excluded: &[&OpenPolyhedron],
    ) -> Option<Point> {
        let Some((first, rest)) = excluded.split_first() else {
            return Some(w.clone());
        };
        for r in first.rows() {
            let rev = r.reversed();
            let reuse = rev.is_satisfied_by(w);
            rows.push(rev);
            let found = if reuse {
                Some(w.clone())
            } else {
                feasible(dim, rows).expect("rows are well formed").witness
            };
            let res = found.and_then(|w2| go(dim, rows, &w2, rest));
            rows.pop();
            if res.is_some() {
                return res;
            }
        }
        None
    }
    go(dim, &mut rows, &start, excluded)
}

/// A point of `P \ (Q_1 ∪ … ∪ Q_m)`, if any.
pub fn union_difference_witness(
    p: &OpenPolyhedron,
    qs: &[&OpenPolyhedron],
) -> Result<Option<Point>, GeometryError> {
    for q in qs {
        if q.dim() != p.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: p.dim(),
                got: q.dim(),
            });
        }
    }
    let Some(start) = p.witness() else {
        return Ok(None);
    };
    Ok(avoid_all(p.dim(), p.rows().to_vec(), start, qs))
}

pub fn region_difference_witness(
    p: &OpenPolyhedron,
    q: &OpenPolyhedron,
) -> Result<Option<Point>, GeometryError> {
    union_difference_witness(p, &[q])
}

/// `P \ Q = ∅`, i.e. `P ⊆ Q`.
pub fn region_difference_empty(
    p: &OpenPolyhedron,
    q: &OpenPolyhedron,
) -> Result<bool, GeometryError> {
    Ok(region_difference_witness(p, q)?.is_none())
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawRow {
    coeffs: Vec<String>,
    rel: Relation,
    rhs: String,
}

#[derive(Serialize, Deserialize)]
struct RawSet {
    label: usize,
    rows: Vec<RawRow>,
}

#[derive(Serialize, Deserialize)]
struct RawRealization {
    dim: usize,
    #[serde(default)]
    ambient: Vec<RawRow>,
    sets: Vec<RawSet>,
}

#[derive(Serialize, Deserialize)]
struct RawSystem {
    dim: usize,
    rows: Vec<RawRow>,
}

impl RawRow {
    pub(crate) fn parse(&self) -> Result<LinearConstraint, GeometryError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<_, _>>()?;
        Ok(LinearConstraint::new(
            coeffs,
            self.rel,
            parse_rational(&self.rhs)?,
        ))
    }

    pub(crate) fn from_constraint(r: &LinearConstraint) -> Self {
        RawRow {
            coeffs: r.coeffs.iter().map(format_rational).collect(),
            rel: r.rel,
            rhs: format_rational(&r.rhs),
        }
    }
}

fn parse_open(dim: usize, rows: &[RawRow]) -> Result<OpenPolyhedron, GeometryError> {
    let rows = rows
        .iter()
        .map(RawRow::parse)
        .collect::<Result<Vec<_>, _>>()?;
    OpenPolyhedron::new(dim, rows)
}

fn json_err(e: serde_json::Error) -> GeometryError {
    GeometryError::Parse(e.to_string())
}

impl Realization {
    /// Reads `{"dim", "ambient", "sets": [{"label", "rows"}]}`. Labels must be exactly `1..=n`.
    pub fn parse_json(text: &str) -> Result<Self, GeometryError> {
        let raw: RawRealization = serde_json::from_str(text).map_err(json_err)?;
        let ambient = parse_open(raw.dim, &raw.ambient)?;
        let n = raw.sets.len();
        let mut slots: Vec<Option<OpenPolyhedron>> = vec![None; n];
        for s in &raw.sets {
            if s.label == 0 || s.label > n {
                return Err(GeometryError::LabelOutOfRange { label: s.label, n });
            }
            if slots[s.label - 1].is_some() {
                return Err(GeometryError::Parse(format!("duplicate label {}", s.label)));
            }
            slots[s.label - 1] = Some(parse_open(raw.dim, &s.rows)?);
        }
        let sets = slots
            .into_iter()
            .map(|s| s.expect("labels are a permutation"))
            .collect();
        Realization::new(raw.dim, ambient, sets)
    }

    pub fn to_json(&self) -> String {
        let raw = RawRealization {
            dim: self.dim,
            ambient: self
                .ambient
                .rows()
                .iter()
                .map(RawRow::from_constraint)
                .collect(),
            sets: self
                .sets
                .iter()
                .enumerate()
                .map(|(k, s)| RawSet {
                    label: k + 1,
                    rows: s.rows().iter().map(RawRow::from_constraint).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

/// Reads an ad hoc system `{"dim", "rows"}`, where any relation is allowed.
pub fn parse_system_json(text: &str) -> Result<(usize, Vec<LinearConstraint>), GeometryError> {
    let raw: RawSystem = serde_json::from_str(text).map_err(json_err)?;
    let rows = raw
        .rows
        .iter()
        .map(RawRow::parse)
        .collect::<Result<Vec<_>, _>>()?;
    for r in &rows {
        if r.dim() != raw.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: raw.dim,
                got: r.dim(),
            });
        }
    }
    Ok((raw.dim, rows))
}

pub fn system_to_json(dim: usize, rows: &[LinearConstraint]) -> String {
    let raw = RawSystem {
        dim,
        rows: rows.iter().map(RawRow::from_constraint).collect(),
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}
