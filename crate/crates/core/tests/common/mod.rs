//! Independent oracles shared by the integration tests. Nothing here calls the
//! library routine it is used to check.

#![allow(dead_code)]

pub mod laws;

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use codebench::geometry::realization::parse_system_json;
use codebench::geometry::{feasible, LinearConstraint, Rational, Relation};
use codebench::{Code, Codeword};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixtures_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn w(indices: &[usize]) -> Codeword {
    Codeword::from_indices(indices.iter().copied()).unwrap()
}

pub fn code_from_masks(n: usize, masks: &[u64]) -> Code {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Code::new(n, masks.iter().map(|&m| Codeword::from_bits(m & full))).unwrap()
}

pub fn random_code<R: Rng>(rng: &mut R, n: usize, max_words: usize) -> Code {
    let count = rng.gen_range(1..=max_words);
    let masks: Vec<u64> = (0..count).map(|_| rng.gen_range(0..(1u64 << n))).collect();
    code_from_masks(n, &masks)
}

/// Every code on `[n]`, as bitmasks over the `2^n` possible words.
pub fn all_codes(n: usize) -> impl Iterator<Item = Code> {
    let words = 1usize << n;
    (1u64..(1u64 << words)).map(move |sel| {
        let masks: Vec<u64> = (0..words as u64).filter(|k| sel >> k & 1 == 1).collect();
        code_from_masks(n, &masks)
    })
}

/// `{c ∈ C : σ ⊆ c}` by direct filtering.
pub fn brute_trunk(code: &Code, sigma: u64) -> BTreeSet<Codeword> {
    code.iter().filter(|c| c.bits() & sigma == sigma).collect()
}

/// All trunks by enumerating every `σ ⊆ [n]`; the empty trunk is included.
pub fn brute_all_trunks(code: &Code) -> BTreeSet<BTreeSet<Codeword>> {
    let mut out: BTreeSet<BTreeSet<Codeword>> = (0..1u64 << code.n())
        .map(|s| brute_trunk(code, s))
        .collect();
    out.insert(BTreeSet::new());
    out
}

pub fn brute_trunk_count(code: &Code) -> usize {
    brute_all_trunks(code).len()
}

pub fn brute_is_trunk(code: &Code, set: &BTreeSet<Codeword>) -> bool {
    set.is_empty() || (0..1u64 << code.n()).any(|s| brute_trunk(code, s) == *set)
}

/// Closes the maximal words under pairwise intersection by fixed point and
/// checks membership of everything produced.
pub fn brute_mic(code: &Code) -> bool {
    let words: Vec<Codeword> = code.iter().collect();
    let maximal: BTreeSet<Codeword> = words
        .iter()
        .copied()
        .filter(|c| !words.iter().any(|d| d != c && c.is_subset(*d)))
        .collect();
    let mut closure = maximal.clone();
    loop {
        let snapshot: Vec<Codeword> = closure.iter().copied().collect();
        let before = closure.len();
        for a in &snapshot {
            for b in &snapshot {
                closure.insert(a.intersection(*b));
            }
        }
        if closure.len() == before {
            break;
        }
    }
    closure.iter().all(|c| code.contains(*c))
}

/// Independent reducedness check: no index is trivial, and no simple trunk is
/// the intersection of the other simple trunks containing it.
pub fn brute_is_reduced(code: &Code) -> bool {
    let n = code.n();
    for i in 1..=n {
        let ti = brute_trunk(code, 1 << (i - 1));
        if ti.is_empty() {
            return false;
        }
        let mut acc: BTreeSet<Codeword> = code.words().clone();
        for j in (1..=n).filter(|&j| j != i) {
            let tj = brute_trunk(code, 1 << (j - 1));
            if ti.is_subset(&tj) {
                acc.retain(|c| tj.contains(c));
            }
        }
        if acc == ti {
            return false;
        }
    }
    true
}

/// A row with integer coefficients, equivalent to the original.
#[derive(Clone, Debug)]
pub struct IntRow {
    pub coeffs: Vec<i128>,
    pub rel: Relation,
    pub rhs: i128,
}

pub fn integer_row(row: &LinearConstraint) -> IntRow {
    let mut scale = num_bigint::BigInt::one();
    for r in row.coeffs.iter().chain(std::iter::once(&row.rhs)) {
        scale = scale.lcm(r.denom());
    }
    let s = Rational::from_integer(scale);
    let conv = |r: &Rational| (r * &s).to_integer().to_i128().expect("small coefficient");
    IntRow {
        coeffs: row.coeffs.iter().map(conv).collect(),
        rel: row.rel,
        rhs: conv(&row.rhs),
    }
}

/// Grid points `k / denom` with `|k| <= half_width * denom` in every
/// coordinate. Scans grid lines along the last axis and solves each line
/// exactly in integers. Returns the first hit in lexicographic order.
pub fn grid_witness(
    dim: usize,
    rows: &[LinearConstraint],
    denom: i128,
    half_width: i128,
) -> Option<Vec<Rational>> {
    let rows: Vec<IntRow> = rows.iter().map(integer_row).collect();
    let bound = half_width * denom;
    let to_point = |ks: &[i128]| -> Vec<Rational> {
        ks.iter()
            .map(|&k| Rational::new((k as i64).into(), (denom as i64).into()))
            .collect()
    };
    if dim == 0 {
        return rows
            .iter()
            .all(|r| holds_scalar(0, r.rel, denom * r.rhs))
            .then(Vec::new);
    }
    let mut prefix = vec![-bound; dim - 1];
    loop {
        if let Some(k) = line_hit(&rows, &prefix, denom, bound) {
            let mut ks = prefix.clone();
            ks.push(k);
            return Some(to_point(&ks));
        }
        let mut axis = 0;
        loop {
            if axis == prefix.len() {
                return None;
            }
            if prefix[axis] < bound {
                prefix[axis] += 1;
                break;
            }
            prefix[axis] = -bound;
            axis += 1;
        }
    }
}

fn holds_scalar(lhs: i128, rel: Relation, rhs: i128) -> bool {
    match rel {
        Relation::Less => lhs < rhs,
        Relation::LessEq => lhs <= rhs,
        Relation::Equal => lhs == rhs,
    }
}

fn line_hit(rows: &[IntRow], prefix: &[i128], denom: i128, bound: i128) -> Option<i128> {
    let (mut lo, mut hi) = (-bound, bound);
    for row in rows {
        let last = *row.coeffs.last().unwrap();
        let partial: i128 = row.coeffs.iter().zip(prefix).map(|(a, k)| a * k).sum();
        let r = denom * row.rhs - partial;
        if last.is_zero() {
            if !holds_scalar(0, row.rel, r) {
                return None;
            }
            continue;
        }
        match row.rel {
            Relation::Equal => {
                if r % last != 0 {
                    return None;
                }
                let k = r / last;
                lo = lo.max(k);
                hi = hi.min(k);
            }
            Relation::Less if last > 0 => hi = hi.min(Integer::div_floor(&(r - 1), &last)),
            Relation::LessEq if last > 0 => hi = hi.min(Integer::div_floor(&r, &last)),
            Relation::Less => lo = lo.max(Integer::div_floor(&-r, &-last) + 1),
            Relation::LessEq => lo = lo.max(-Integer::div_floor(&r, &-last)),
        }
        if lo > hi {
            return None;
        }
    }
    (lo <= hi).then_some(lo)
}

pub fn load_system(name: &str) -> (usize, Vec<LinearConstraint>) {
    parse_system_json(&read_fixture(&format!("systems/{name}"))).unwrap()
}

pub fn system_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir().join("systems"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    names
}

/// Exact evaluation of one row at a point.
pub fn row_holds(row: &LinearConstraint, x: &[Rational]) -> bool {
    let lhs: Rational = row.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
    match row.rel {
        Relation::Less => lhs < row.rhs,
        Relation::LessEq => lhs <= row.rhs,
        Relation::Equal => lhs == row.rhs,
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// The system with every inequality demanded strictly, inside the open box
/// `(-h, h)^d`. Its margin bounds how far a rounded grid point can drift.
pub fn robust_rows(dim: usize, rows: &[LinearConstraint], h: i64) -> Vec<LinearConstraint> {
    let mut out: Vec<LinearConstraint> = rows
        .iter()
        .map(|r| match r.rel {
            Relation::LessEq => LinearConstraint::strict(r.coeffs.clone(), r.rhs.clone()),
            _ => r.clone(),
        })
        .collect();
    for i in 0..dim {
        let mut e = vec![rational(0, 1); dim];
        e[i] = rational(1, 1);
        out.push(LinearConstraint::strict(e.clone(), rational(h, 1)));
        e[i] = rational(-1, 1);
        out.push(LinearConstraint::strict(e, rational(h, 1)));
    }
    out
}

/// Checks both directions of the grid rule. `Ok(true)` when the completeness
/// direction was exercised.
pub fn grid_rule(name: &str) -> Result<bool, String> {
    let (dim, rows) = load_system(name);
    let lp = feasible(dim, &rows).unwrap();
    let grid = grid_witness(dim, &rows, 64, 4);
    if let Some(g) = &grid {
        assert!(
            rows.iter().all(|r| row_holds(r, g)),
            "{name}: grid oracle is inconsistent"
        );
        if !lp.feasible {
            return Err(format!("{name}: grid point {g:?} but LP says infeasible"));
        }
    }
    let robust = feasible(dim, &robust_rows(dim, &rows, 4)).unwrap();
    let wide = robust.feasible && robust.slack >= rational(1, 8);
    if wide && grid.is_none() {
        return Err(format!("{name}: slack {} but no grid point", robust.slack));
    }
    Ok(wide)
}
