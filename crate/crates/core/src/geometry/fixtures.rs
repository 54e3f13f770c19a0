//! Built-in polyhedral configurations used by tests, examples and the CLI.

use num_traits::{One, Zero};

use super::polyhedron::{LinearConstraint, OpenPolyhedron};
use super::rational::{int, Rational};
use super::realization::Realization;

fn unit(d: usize, k: usize, value: Rational) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); d];
    e[k] = value;
    e
}

/// The open standard simplex `{x_i > 0, Σx < 1}` in `R^d`.
pub fn open_simplex(d: usize) -> OpenPolyhedron {
    simplex_with(d, None, int(0), int(1))
}

fn simplex_with(
    d: usize,
    relaxed: Option<usize>,
    lower: Rational,
    upper: Rational,
) -> OpenPolyhedron {
    let mut rows = Vec::with_capacity(d + 1);
    for k in 0..d {
        let lo = if relaxed == Some(k) {
            lower.clone()
        } else {
            Rational::zero()
        };
        rows.push(LinearConstraint::strict(unit(d, k, -Rational::one()), lo));
    }
    rows.push(LinearConstraint::strict(vec![Rational::one(); d], upper));
    OpenPolyhedron::new(d, rows).expect("strict rows")
}

/// `d + 1` petals around the open standard simplex: petal `i ≤ d` relaxes
/// `x_i > 0` to `x_i > -1`, and the last petal relaxes `Σx < 1` to `Σx < 2`.
pub fn simplex_petals(d: usize) -> Vec<OpenPolyhedron> {
    let mut petals: Vec<OpenPolyhedron> = (0..d)
        .map(|k| simplex_with(d, Some(k), int(1), int(1)))
        .collect();
    petals.push(simplex_with(d, None, int(0), int(2)));
    petals
}

pub fn simplex_realization(d: usize) -> Realization {
    Realization::in_space(d, simplex_petals(d)).expect("matching dimensions")
}
