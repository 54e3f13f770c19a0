mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use codebench::geometry::fixtures::{simplex_petals, simplex_realization};
use codebench::geometry::{
    colorful_witness_check, feasible, is_sunflower, random_hyperplane_harness,
    theorem_sunflower_check, Hyperplane, LinearConstraint, OpenPolyhedron, Rational, Realization,
    Relation, Sunflower,
};
use codebench::{Code, Codeword};
use common::*;

const REALIZATIONS: [&str; 7] = [
    "simplex-d2.json",
    "simplex-d3.json",
    "realization-n2.json",
    "realization-n3.json",
    "boxes-overlap.json",
    "boxes-disjoint.json",
    "boxes-not-sunflower.json",
];

fn load(name: &str) -> Realization {
    Realization::parse_json(&read_fixture(name)).unwrap()
}

#[test]
fn lp_agrees_with_grid_on_bundled_systems() {
    let names = system_names();
    assert!(names.len() >= 10);
    let results: Vec<Result<bool, String>> = names.iter().map(|n| grid_rule(n)).collect();
    let violations: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    assert!(violations.is_empty(), "{violations:?}");
    let wide = results.iter().filter(|r| matches!(r, Ok(true))).count();
    assert!(
        wide >= 3,
        "only {wide} systems exercise the completeness direction"
    );
}

#[test]
fn lp_witnesses_satisfy_bundled_systems() {
    for name in system_names() {
        let (dim, rows) = load_system(&name);
        let out = feasible(dim, &rows).unwrap();
        match out.witness {
            Some(x) => assert!(rows.iter().all(|r| row_holds(r, &x)), "{name}"),
            None => assert!(!out.feasible, "{name}"),
        }
    }
}

#[test]
fn grid_oracle_self_check() {
    let tri = vec![
        LinearConstraint::strict(vec![rational(-1, 1), rational(0, 1)], rational(0, 1)),
        LinearConstraint::strict(vec![rational(0, 1), rational(-1, 1)], rational(0, 1)),
        LinearConstraint::strict(vec![rational(1, 1), rational(1, 1)], rational(1, 16)),
    ];
    assert_eq!(
        grid_witness(2, &tri, 64, 4),
        Some(vec![rational(1, 64), rational(1, 64)])
    );
    let thinner = vec![
        tri[0].clone(),
        tri[1].clone(),
        LinearConstraint::strict(vec![rational(1, 1), rational(1, 1)], rational(1, 32)),
    ];
    assert_eq!(grid_witness(2, &thinner, 64, 4), None);
    let point = vec![LinearConstraint::equality(
        vec![rational(3, 1)],
        rational(3, 64),
    )];
    assert_eq!(grid_witness(1, &point, 64, 4), Some(vec![rational(1, 64)]));
}

/// Set membership by direct row evaluation.
fn labels_by_rows(real: &Realization, x: &[Rational]) -> Codeword {
    Codeword::from_indices(
        real.sets()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.rows().iter().all(|r| row_holds(r, x)))
            .map(|(k, _)| k + 1),
    )
    .unwrap()
}

fn sample_grid(dim: usize, lo: i64, hi: i64, denom: i64) -> Vec<Vec<Rational>> {
    let ticks: Vec<Rational> = (lo * denom..=hi * denom)
        .map(|k| rational(k, denom))
        .collect();
    let mut pts = vec![Vec::new()];
    for _ in 0..dim {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                ticks.iter().map(move |t| {
                    let mut q = p.clone();
                    q.push(t.clone());
                    q
                })
            })
            .collect();
    }
    pts
}

#[test]
fn atoms_partition_grid_samples() {
    for (name, lo, hi, denom) in [
        ("simplex-d2.json", -2, 3, 8),
        ("simplex-d3.json", -2, 3, 4),
        ("realization-n2.json", -1, 5, 8),
        ("realization-n3.json", -1, 7, 2),
        ("boxes-overlap.json", -1, 3, 8),
        ("boxes-disjoint.json", -1, 4, 8),
    ] {
        let real = load(name);
        let code = real.code().unwrap();
        let mut seen = BTreeSet::new();
        for x in sample_grid(real.dim(), lo, hi, denom) {
            let sigma = labels_by_rows(&real, &x);
            assert_eq!(real.labels_at(&x), sigma, "{name} at {x:?}");
            assert!(
                code.contains(sigma),
                "{name}: atom {sigma} sampled at {x:?} is not in the code"
            );
            seen.insert(sigma);
        }
        assert!(seen.len() >= 2, "{name}: grid too coarse to be informative");
    }
}

#[test]
fn nerve_equals_delta_of_code() {
    for name in REALIZATIONS {
        let real = load(name);
        let code = real.code().unwrap();
        assert_eq!(real.nerve().unwrap(), code.delta(), "{name}");
    }
}

#[test]
fn nerve_faces_have_witnesses() {
    for name in REALIZATIONS {
        let real = load(name);
        for face in real.nerve().unwrap().faces() {
            if face.is_empty() {
                continue;
            }
            let x = real
                .intersection_witness(*face)
                .unwrap()
                .expect("face has a point");
            assert!(face.is_subset(labels_by_rows(&real, &x)), "{name}: {face}");
        }
    }
}

#[test]
fn atom_witnesses_lie_in_their_atoms() {
    for name in REALIZATIONS {
        let real = load(name);
        for sigma in real.code().unwrap().iter() {
            let x = real
                .atom_witness(sigma)
                .unwrap()
                .expect("codeword atom is nonempty");
            assert_eq!(labels_by_rows(&real, &x), sigma, "{name}");
        }
    }
}

#[test]
fn realization_json_round_trips() {
    for name in REALIZATIONS {
        let real = load(name);
        let again = Realization::parse_json(&real.to_json()).unwrap();
        assert_eq!(again.to_json(), real.to_json(), "{name}");
        assert_eq!(again.code().unwrap(), real.code().unwrap(), "{name}");
    }
}

#[test]
fn sunflower_status_of_fixtures() {
    for (name, expected) in [
        ("simplex-d2.json", true),
        ("simplex-d3.json", true),
        ("boxes-overlap.json", true),
        ("boxes-disjoint.json", false),
        ("boxes-not-sunflower.json", false),
    ] {
        let real = load(name);
        assert_eq!(
            is_sunflower(real.sets()).unwrap().is_some(),
            expected,
            "{name}"
        );
    }
}

#[test]
fn fixed_seed_harness_is_reproducible() {
    let sf = Sunflower::new(simplex_petals(2)).unwrap();
    let a = random_hyperplane_harness(&sf, 60, 7);
    let b = random_hyperplane_harness(&sf, 60, 7);
    assert_eq!(a, b);
    assert_eq!(a.counterexamples, 0);
}

fn small_row() -> impl Strategy<Value = (Vec<i64>, i64, u8)> {
    (prop::collection::vec(-3i64..=3, 1..=3), -4i64..=4, 0u8..3)
}

fn to_constraint(dim: usize, (coeffs, rhs, kind): &(Vec<i64>, i64, u8)) -> LinearConstraint {
    let mut c: Vec<Rational> = coeffs.iter().map(|&a| rational(a, 1)).collect();
    c.resize(dim, rational(0, 1));
    if c.iter().all(is_zero) {
        c[0] = rational(1, 1);
    }
    let rel = match kind {
        0 => Relation::Less,
        1 => Relation::LessEq,
        _ => Relation::Equal,
    };
    LinearConstraint::new(c, rel, rational(*rhs, 2))
}

fn permuted<T: Clone>(items: &[T], keys: &[u32]) -> (Vec<T>, Vec<usize>) {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&k| (keys[k % keys.len()], k));
    (order.iter().map(|&k| items[k].clone()).collect(), order)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_systems_agree_with_coarse_grid(dim in 1usize..=3, raw in prop::collection::vec(small_row(), 1..=5)) {
        let rows: Vec<LinearConstraint> = raw.iter().map(|r| to_constraint(dim, r)).collect();
        let lp = feasible(dim, &rows).unwrap();
        if let Some(x) = &lp.witness {
            prop_assert!(rows.iter().all(|r| row_holds(r, x)));
            prop_assert!(lp.feasible);
        }
        if let Some(g) = grid_witness(dim, &rows, 8, 3) {
            prop_assert!(lp.feasible, "grid point {:?}", g);
        }
    }

    #[test]
    fn atoms_ignore_row_order_and_labels(seed in any::<u64>(), keys in prop::collection::vec(any::<u32>(), 8)) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let name = ["simplex-d2.json", "realization-n2.json", "boxes-overlap.json"][(seed % 3) as usize];
        let real = load(name);
        let code = real.code().unwrap();
        let shuffled: Vec<OpenPolyhedron> = real.sets().iter().map(|s| {
            let mut rows = s.rows().to_vec();
            rows.shuffle(&mut rng);
            OpenPolyhedron::new(s.dim(), rows).unwrap()
        }).collect();
        let (sets, order) = permuted(&shuffled, &keys);
        let other = Realization::in_space(real.dim(), sets).unwrap();
        // old label order[k] + 1 is new label k + 1
        let mut back = vec![0; order.len() + 1];
        for (k, &old) in order.iter().enumerate() {
            back[old + 1] = k + 1;
        }
        let relabeled: Vec<Codeword> = code.iter().map(|c| c.relabel(|i| Some(back[i]))).collect();
        prop_assert_eq!(other.code().unwrap(), Code::new(code.n(), relabeled).unwrap());
    }

    #[test]
    fn sunflower_status_is_permutation_invariant(pick in 0usize..5, keys in prop::collection::vec(any::<u32>(), 6)) {
        let sets: Vec<OpenPolyhedron> = match pick {
            0 => simplex_petals(2),
            1 => simplex_petals(3),
            2 => load("boxes-not-sunflower.json").sets().to_vec(),
            3 => load("boxes-disjoint.json").sets().to_vec(),
            _ => load("realization-n2.json").sets().to_vec(),
        };
        let base = is_sunflower(&sets).unwrap().is_some();
        let (perm, _) = permuted(&sets, &keys);
        prop_assert_eq!(is_sunflower(&perm).unwrap().is_some(), base);
    }

    #[test]
    fn hyperplanes_through_the_center_hold(d in 2usize..=3, a in prop::collection::vec(-5i64..=5, 3), t in 1i64..=8) {
        let sf = Sunflower::new(simplex_petals(d)).unwrap();
        let mut normal: Vec<Rational> = a[..d].iter().map(|&v| rational(v, 1)).collect();
        if normal.iter().all(is_zero) {
            normal[0] = rational(1, 1);
        }
        // through (c, ..., c) with c = t/(8d+8), so d·c < 1
        let offset: Rational = normal.iter().map(|c| c * rational(t, 8 * d as i64 + 8)).sum();
        let h = Hyperplane::new(normal, offset).unwrap();
        let check = theorem_sunflower_check(&sf, &h).unwrap();
        prop_assert!(!check.verdict.is_counterexample());
        prop_assert_eq!(check.verdict.label(), "holds");
    }

    #[test]
    fn colorful_points_from_petal_grids(d in 2usize..=3, picks in prop::collection::vec(0usize..64, 4)) {
        let real = simplex_realization(d);
        let sf = Sunflower::new(real.sets().to_vec()).unwrap();
        let grid = sample_grid(d, -1, 2, 4);
        let mut pts = Vec::new();
        for (k, petal) in sf.petals().iter().enumerate() {
            let inside: Vec<&Vec<Rational>> = grid.iter().filter(|x| petal.contains(x)).collect();
            prop_assume!(!inside.is_empty());
            pts.push(inside[picks[k] % inside.len()].clone());
        }
        let out = colorful_witness_check(&sf, &pts).unwrap();
        prop_assert!(out.holds);
        let x = out.point.unwrap();
        prop_assert!(sf.center().contains(&x));
    }
}
