//! Sunflowers of open polyhedra and checkers for the hyperplane theorem and
//! its colorful and affine-slice corollaries.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::is_independent;
use super::polyhedron::{feasible, LinearConstraint, OpenPolyhedron};
use super::rational::{
    dot, is_zero_vector, parse_point, parse_rational, ser_point, ser_points, Point, Rational,
};
use super::realization::region_difference_empty;
use crate::error::GeometryError;

fn check_dims(dim: usize, sets: &[OpenPolyhedron]) -> Result<(), GeometryError> {
    match sets.iter().find(|s| s.dim() != dim) {
        Some(s) => Err(GeometryError::DimensionMismatch {
            expected: dim,
            got: s.dim(),
        }),
        None => Ok(()),
    }
}

fn conjunction(dim: usize, sets: &[OpenPolyhedron]) -> OpenPolyhedron {
    let rows = sets.iter().flat_map(|s| s.rows().iter().cloned()).collect();
    OpenPolyhedron::new(dim, rows).expect("strict rows of matching dimension")
}

/// Returns the center when the sets form a sunflower: the common intersection
/// is nonempty and every pairwise intersection is contained in it.
pub fn is_sunflower(sets: &[OpenPolyhedron]) -> Result<Option<OpenPolyhedron>, GeometryError> {
    if sets.len() < 2 {
        return Err(GeometryError::TooFewSets {
            needed: 2,
            got: sets.len(),
        });
    }
    let dim = sets[0].dim();
    check_dims(dim, sets)?;
    let center = conjunction(dim, sets);
    if center.is_empty() {
        return Ok(None);
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let pair = sets[i].intersect(&sets[j])?;
            if !region_difference_empty(&pair, &center)? {
                return Ok(None);
            }
        }
    }
    Ok(Some(center))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sunflower {
    petals: Vec<OpenPolyhedron>,
    center: OpenPolyhedron,
}

impl Sunflower {
    pub fn new(petals: Vec<OpenPolyhedron>) -> Result<Self, GeometryError> {
        let center = is_sunflower(&petals)?.ok_or(GeometryError::NotASunflower)?;
        Ok(Sunflower { petals, center })
    }

    pub fn petals(&self) -> &[OpenPolyhedron] {
        &self.petals
    }

    pub fn center(&self) -> &OpenPolyhedron {
        &self.center
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn len(&self) -> usize {
        self.petals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.petals.is_empty()
    }

    /// At least `d + 1` petals, the hypothesis of the hyperplane theorem.
    pub fn in_hypothesis(&self) -> bool {
        self.len() > self.dim()
    }
}

/// `{x : normal · x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    #[serde(serialize_with = "ser_point")]
    normal: Point,
    #[serde(serialize_with = "super::rational::ser_rational")]
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Point, offset: Rational) -> Result<Self, GeometryError> {
        if is_zero_vector(&normal) {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        dot(&self.normal, x) == self.offset
    }

    pub fn constraint(&self) -> LinearConstraint {
        LinearConstraint::equality(self.normal.clone(), self.offset.clone())
    }
}

/// `{base + Σ t_k directions[k]}` with independent directions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineFlat {
    #[serde(serialize_with = "ser_point")]
    base: Point,
    #[serde(serialize_with = "ser_points")]
    directions: Vec<Point>,
}

impl AffineFlat {
    pub fn new(base: Point, directions: Vec<Point>) -> Result<Self, GeometryError> {
        let d = base.len();
        if let Some(v) = directions.iter().find(|v| v.len() != d) {
            return Err(GeometryError::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        if !is_independent(&directions) {
            return Err(GeometryError::DependentDirections);
        }
        Ok(AffineFlat { base, directions })
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn directions(&self) -> &[Point] {
        &self.directions
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    pub fn point_at(&self, t: &[Rational]) -> Point {
        let mut x = self.base.clone();
        for (tk, dir) in t.iter().zip(&self.directions) {
            for (xi, di) in x.iter_mut().zip(dir) {
                *xi += tk * di;
            }
        }
        x
    }
}

/// A point of `P ∩ H`, if any.
pub fn hyperplane_meets(
    p: &OpenPolyhedron,
    h: &Hyperplane,
) -> Result<Option<Point>, GeometryError> {
    if h.dim() != p.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: p.dim(),
            got: h.dim(),
        });
    }
    let mut rows = p.rows().to_vec();
    rows.push(h.constraint());
    Ok(feasible(p.dim(), &rows)?.witness)
}

/// A point of `P ∩ flat`, if any.
pub fn flat_meets(p: &OpenPolyhedron, flat: &AffineFlat) -> Result<Option<Point>, GeometryError> {
    if flat.ambient_dim() != p.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: p.dim(),
            got: flat.ambient_dim(),
        });
    }
    let sliced = p.substitute(flat.base(), flat.directions());
    Ok(sliced.witness().map(|t| flat.point_at(&t)))
}

/// Classification of a slice (hyperplane or lower-dimensional flat) against a sunflower.
/// Petal numbers are 1-based positions in the petal list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum SliceVerdict {
    Holds {
        #[serde(serialize_with = "ser_point")]
        witness: Point,
    },
    NotApplicable {
        missed_petal: usize,
    },
    Counterexample {
        #[serde(serialize_with = "ser_points")]
        petal_witnesses: Vec<Point>,
    },
}

impl SliceVerdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, SliceVerdict::Counterexample { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            SliceVerdict::Holds { .. } => "holds",
            SliceVerdict::NotApplicable { .. } => "not-applicable",
            SliceVerdict::Counterexample { .. } => "counterexample",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    #[serde(flatten)]
    pub verdict: SliceVerdict,
    pub in_hypothesis: bool,
}

fn classify(
    sf: &Sunflower,
    mut meets: impl FnMut(&OpenPolyhedron) -> Result<Option<Point>, GeometryError>,
) -> Result<SliceVerdict, GeometryError> {
    let mut petal_witnesses = Vec::with_capacity(sf.len());
    for (k, p) in sf.petals().iter().enumerate() {
        match meets(p)? {
            Some(w) => petal_witnesses.push(w),
            None => {
                return Ok(SliceVerdict::NotApplicable {
                    missed_petal: k + 1,
                })
            }
        }
    }
    Ok(match meets(sf.center())? {
        Some(witness) => SliceVerdict::Holds { witness },
        None => SliceVerdict::Counterexample { petal_witnesses },
    })
}

/// A hyperplane meeting every petal must meet the center when there are at least `d + 1` petals.
pub fn theorem_sunflower_check(
    sf: &Sunflower,
    h: &Hyperplane,
) -> Result<TheoremCheck, GeometryError> {
    if h.dim() != sf.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: sf.dim(),
            got: h.dim(),
        });
    }
    let verdict = classify(sf, |p| hyperplane_meets(p, h))?;
    Ok(TheoremCheck {
        verdict,
        in_hypothesis: sf.in_hypothesis(),
    })
}

/// Same classification for a `k`-flat, `k ≤ min(d - 1, n - 1)` with `n + 1` petals.
pub fn affine_slice_check(
    sf: &Sunflower,
    flat: &AffineFlat,
) -> Result<SliceVerdict, GeometryError> {
    if flat.ambient_dim() != sf.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: sf.dim(),
            got: flat.ambient_dim(),
        });
    }
    let n = sf.len() as i64 - 1;
    let bound = (sf.dim() as i64 - 1).min(n - 1);
    if flat.dim() as i64 > bound {
        return Err(GeometryError::FlatDimension {
            k: flat.dim(),
            bound,
        });
    }
    classify(sf, |p| flat_meets(p, flat))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorfulOutcome {
    pub holds: bool,
    #[serde(serialize_with = "super::rational::ser_opt_point")]
    pub weights: Option<Point>,
    #[serde(serialize_with = "super::rational::ser_opt_point")]
    pub point: Option<Point>,
}

/// Whether the convex hull of one point per petal meets the center, decided
/// exactly as a feasibility problem in the convex weights.
pub fn colorful_witness_check(
    sf: &Sunflower,
    points: &[Point],
) -> Result<ColorfulOutcome, GeometryError> {
    let d = sf.dim();
    let m = sf.len();
    if m < d + 1 {
        return Err(GeometryError::TooFewSets {
            needed: d + 1,
            got: m,
        });
    }
    if points.len() != m {
        return Err(GeometryError::PointCountMismatch {
            expected: m,
            got: points.len(),
        });
    }
    for (k, (p, petal)) in points.iter().zip(sf.petals()).enumerate() {
        if p.len() != d {
            return Err(GeometryError::DimensionMismatch {
                expected: d,
                got: p.len(),
            });
        }
        if !petal.contains(p) {
            return Err(GeometryError::PointOutsidePetal { index: k + 1 });
        }
    }
    let mut rows = Vec::with_capacity(m + 1 + sf.center().rows().len());
    for k in 0..m {
        let mut e = vec![Rational::zero(); m];
        e[k] = -Rational::one();
        rows.push(LinearConstraint::weak(e, Rational::zero()));
    }
    rows.push(LinearConstraint::equality(
        vec![Rational::one(); m],
        Rational::one(),
    ));
    for r in sf.center().rows() {
        let coeffs = points.iter().map(|p| dot(&r.coeffs, p)).collect();
        rows.push(LinearConstraint::strict(coeffs, r.rhs.clone()));
    }
    let out = feasible(m, &rows)?;
    let point = out.witness.as_ref().map(|lambda| {
        let mut x = vec![Rational::zero(); d];
        for (l, p) in lambda.iter().zip(points) {
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi += l * pi;
            }
        }
        x
    });
    Ok(ColorfulOutcome {
        holds: out.feasible,
        weights: out.witness,
        point,
    })
}

#[derive(Deserialize)]
struct RawHyperplane {
    normal: Vec<String>,
    offset: String,
}

#[derive(Deserialize)]
struct RawFlat {
    base: Vec<String>,
    #[serde(default)]
    directions: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct RawPoints {
    points: Vec<Vec<String>>,
}

fn json_err(e: serde_json::Error) -> GeometryError {
    GeometryError::Parse(e.to_string())
}

impl Hyperplane {
    /// Reads `{"normal": ["p/q", ...], "offset": "p/q"}`.
    pub fn parse_json(text: &str) -> Result<Self, GeometryError> {
        let raw: RawHyperplane = serde_json::from_str(text).map_err(json_err)?;
        Hyperplane::new(parse_point(&raw.normal)?, parse_rational(&raw.offset)?)
    }
}

impl AffineFlat {
    /// Reads `{"base": [...], "directions": [[...], ...]}`.
    pub fn parse_json(text: &str) -> Result<Self, GeometryError> {
        let raw: RawFlat = serde_json::from_str(text).map_err(json_err)?;
        let directions = raw
            .directions
            .iter()
            .map(|d| parse_point(d))
            .collect::<Result<_, _>>()?;
        AffineFlat::new(parse_point(&raw.base)?, directions)
    }
}

/// Reads `{"points": [[...], ...]}`.
pub fn parse_points_json(text: &str) -> Result<Vec<Point>, GeometryError> {
    let raw: RawPoints = serde_json::from_str(text).map_err(json_err)?;
    raw.points.iter().map(|p| parse_point(p)).collect()
}
