//! Fraction-free elimination over the integers: rank and nullspace of
//! rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{common_denominator, Rational};

fn to_integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = common_denominator(row);
            row.iter()
                .map(|r| (r * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Bareiss elimination to row echelon form, in place. Returns the pivot columns.
fn bareiss(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = to_integer_rows(rows);
    bareiss(&mut m, ncols).len()
}

/// Basis of `{x : Ax = 0}` as primitive integer vectors (stored as rationals).
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = to_integer_rows(rows);
    let pivots = bareiss(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rational::zero(); ncols];
        x[f] = Rational::one();
        for (k, &p) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::zero();
            for j in p + 1..ncols {
                if !m[k][j].is_zero() && !x[j].is_zero() {
                    acc += Rational::from_integer(m[k][j].clone()) * &x[j];
                }
            }
            x[p] = -acc / Rational::from_integer(m[k][p].clone());
        }
        basis.push(primitive(x));
    }
    basis
}

/// Scales a nonzero rational vector to coprime integers.
fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let l = common_denominator(&v);
    let ints: Vec<BigInt> = v
        .iter()
        .map(|r| (r * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

pub(crate) fn is_independent(vectors: &[Vec<Rational>]) -> bool {
    rank(vectors) == vectors.len()
}
