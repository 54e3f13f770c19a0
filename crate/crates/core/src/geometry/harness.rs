//! Seeded random search for counterexamples to the hyperplane slicing property
//! of sunflowers and to the colorful convex-hull property.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::linalg::nullspace;
use super::polyhedron::{feasible, maximize_over, LinearConstraint, OpenPolyhedron};
use super::rational::{dot, int, Point, Rational};
use super::sunflower::{
    colorful_witness_check, theorem_sunflower_check, Hyperplane, SliceVerdict, Sunflower,
};

const WEIGHT_BITS: u32 = 14;
const MAX_COMBINED: usize = 4;
const BOX_RADIUS: i64 = 4;

/// Independent random stream for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws interior points of an open polyhedron as random convex combinations
/// of LP vertices of a shrunken, boxed copy of it.
#[derive(Clone, Debug)]
pub struct InteriorSampler {
    pool: Vec<Point>,
}

impl InteriorSampler {
    /// `None` when the polyhedron is empty.
    pub fn new(p: &OpenPolyhedron) -> Option<Self> {
        let out = feasible(p.dim(), p.rows()).expect("rows are well formed");
        let center = out.witness?;
        let d = p.dim();
        let margin = out.slack / int(2);
        let mut rows: Vec<LinearConstraint> = p
            .rows()
            .iter()
            .map(|r| LinearConstraint::weak(r.coeffs.clone(), &r.rhs - &margin))
            .collect();
        for k in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[k] = Rational::one();
            rows.push(LinearConstraint::weak(
                e.clone(),
                &center[k] + int(BOX_RADIUS),
            ));
            e[k] = -Rational::one();
            rows.push(LinearConstraint::weak(e, -(&center[k] - int(BOX_RADIUS))));
        }
        let mut pool: BTreeSet<Point> = BTreeSet::new();
        pool.insert(center);
        for signs in sign_patterns(d) {
            let objective: Vec<Rational> = signs.iter().map(|&s| int(s)).collect();
            if let Some(v) = maximize_over(d, &rows, &objective) {
                debug_assert!(p.contains(&v));
                pool.insert(v);
            }
        }
        Some(InteriorSampler {
            pool: pool.into_iter().collect(),
        })
    }

    pub fn pool(&self) -> &[Point] {
        &self.pool
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Point {
        let k = self.pool.len().min(MAX_COMBINED);
        let chosen = sample(rng, self.pool.len(), k);
        let weights: Vec<i64> = (0..k)
            .map(|_| rng.gen_range(1..=1i64 << WEIGHT_BITS))
            .collect();
        let total = Rational::from_integer(BigInt::from(weights.iter().sum::<i64>()));
        let d = self.pool[0].len();
        let mut x = vec![Rational::zero(); d];
        for (idx, w) in chosen.iter().zip(&weights) {
            let w = int(*w);
            for (xi, pi) in x.iter_mut().zip(&self.pool[idx]) {
                *xi += &w * pi;
            }
        }
        x.into_iter().map(|c| c / &total).collect()
    }
}

/// All `±1` vectors for small `d`, a fixed pseudo-random selection of 16 otherwise.
fn sign_patterns(d: usize) -> Vec<Vec<i64>> {
    if d <= 4 {
        (0..1u32 << d)
            .map(|m| {
                (0..d)
                    .map(|k| if m >> k & 1 == 1 { 1 } else { -1 })
                    .collect()
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..16)
            .map(|_| {
                (0..d)
                    .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
                    .collect()
            })
            .collect()
    }
}

/// The hyperplane through `d` points in `R^d`, or `None` when their affine hull is degenerate.
pub fn hyperplane_through(points: &[Point]) -> Option<Hyperplane> {
    let first = points.first()?;
    let d = first.len();
    if points.len() != d {
        return None;
    }
    let diffs: Vec<Point> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    let mut basis = nullspace(&diffs, d);
    if basis.len() != 1 {
        return None;
    }
    let normal = basis.pop().expect("one vector");
    let offset = dot(&normal, first);
    Hyperplane::new(normal, offset).ok()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub trials: u64,
    pub seed: u64,
    pub in_hypothesis: bool,
    pub applicable: u64,
    pub holds: u64,
    pub not_applicable: u64,
    pub counterexamples: u64,
    pub skipped: u64,
    /// Normals and offsets of the first few counterexample hyperplanes.
    pub counterexample_hyperplanes: Vec<Hyperplane>,
}

enum TrialOutcome {
    Skipped,
    Verdict(SliceVerdict, Hyperplane),
}

/// Runs `trials` random hyperplanes through interior points of `d` distinct
/// petals and classifies each with [`theorem_sunflower_check`].
pub fn random_hyperplane_harness(sf: &Sunflower, trials: u64, seed: u64) -> HarnessReport {
    let mut report = HarnessReport {
        trials,
        seed,
        in_hypothesis: sf.in_hypothesis(),
        ..Default::default()
    };
    if trials == 0 {
        return report;
    }
    let d = sf.dim();
    let samplers: Vec<InteriorSampler> = sf
        .petals()
        .iter()
        .map(|p| InteriorSampler::new(p).expect("petals contain the center"))
        .collect();
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            if samplers.len() < d || d == 0 {
                return TrialOutcome::Skipped;
            }
            let mut chosen = sample(&mut rng, samplers.len(), d).into_vec();
            chosen.sort_unstable();
            let points: Vec<Point> = chosen
                .iter()
                .map(|&k| samplers[k].sample(&mut rng))
                .collect();
            match hyperplane_through(&points) {
                None => TrialOutcome::Skipped,
                Some(h) => {
                    let check = theorem_sunflower_check(sf, &h).expect("dimensions match");
                    TrialOutcome::Verdict(check.verdict, h)
                }
            }
        })
        .collect();
    for o in outcomes {
        match o {
            TrialOutcome::Skipped => report.skipped += 1,
            TrialOutcome::Verdict(v, h) => match v {
                SliceVerdict::Holds { .. } => {
                    report.applicable += 1;
                    report.holds += 1;
                }
                SliceVerdict::NotApplicable { .. } => report.not_applicable += 1,
                SliceVerdict::Counterexample { .. } => {
                    report.applicable += 1;
                    report.counterexamples += 1;
                    if report.counterexample_hyperplanes.len() < 8 {
                        report.counterexample_hyperplanes.push(h);
                    }
                }
            },
        }
    }
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ColorfulReport {
    pub draws: u64,
    pub seed: u64,
    pub holds: u64,
    pub failures: u64,
}

/// Draws one interior point per petal, `draws` times, and checks that their
/// convex hull meets the center.
pub fn random_colorful_harness(sf: &Sunflower, draws: u64, seed: u64) -> ColorfulReport {
    let samplers: Vec<InteriorSampler> = sf
        .petals()
        .iter()
        .map(|p| InteriorSampler::new(p).expect("petals contain the center"))
        .collect();
    let results: Vec<bool> = (0..draws)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let points: Vec<Point> = samplers.iter().map(|s| s.sample(&mut rng)).collect();
            colorful_witness_check(sf, &points)
                .map(|o| o.holds)
                .unwrap_or(false)
        })
        .collect();
    let holds = results.iter().filter(|&&h| h).count() as u64;
    ColorfulReport {
        draws,
        seed,
        holds,
        failures: draws - holds,
    }
}
