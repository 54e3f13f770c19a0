mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;

use codebench::cn::{
    build_realization, combinatorics_only_report, expected_word_count, generate_cn,
    verify_built_realization, verify_covered_family,
};
use codebench::covering::covered_mic_shortcut;
use codebench::geometry::Rational;
use codebench::{Code, Codeword};
use common::*;

/// Membership in `C_n`, decided from the shape of the word rather than by
/// listing families.
fn in_cn(n: usize, w: u64) -> bool {
    let low = (1u64 << n) - 1;
    let hub = 1u64 << n;
    let a = w & low;
    let has_hub = w & hub != 0;
    let b = w >> (n + 1);
    let tail = (1u64 << (n + 1)) - 1;
    let single_b = b.count_ones() == 1;
    let b_index = b.trailing_zeros() as usize + 1;
    match (a, has_hub, b) {
        (0, false, 0) => true,
        (_, true, 0) => a != 0 && a != low,
        (0, false, _) if single_b => true,
        (0, false, _) => b == tail,
        (_, true, _) if single_b && b_index <= n => a == low & !(1 << (b_index - 1)),
        (_, true, _) if single_b => a == low,
        _ => false,
    }
}

fn cn_by_predicate(n: usize) -> Code {
    let masks: Vec<u64> = (0..1u64 << (2 * n + 2)).filter(|&w| in_cn(n, w)).collect();
    code_from_masks(2 * n + 2, &masks)
}

/// Intersections of maximal words that are not codewords.
fn brute_missing(code: &Code) -> BTreeSet<Codeword> {
    let words: Vec<Codeword> = code.iter().collect();
    let maximal: Vec<Codeword> = words
        .iter()
        .copied()
        .filter(|c| !words.iter().any(|d| d != c && c.is_subset(*d)))
        .collect();
    let mut out = BTreeSet::new();
    for pick in 1u64..1 << maximal.len() {
        let meet = (0..maximal.len())
            .filter(|k| pick >> k & 1 == 1)
            .map(|k| maximal[k])
            .reduce(|x, y| x.intersection(y))
            .unwrap();
        if !code.contains(meet) {
            out.insert(meet);
        }
    }
    out
}

#[test]
fn generator_matches_bundled_examples() {
    assert_eq!(
        generate_cn(2).unwrap(),
        Code::parse_any(&read_fixture("c2.code")).unwrap()
    );
    assert_eq!(
        generate_cn(3).unwrap(),
        Code::parse_any(&read_fixture("c3.json")).unwrap()
    );
}

#[test]
fn generator_matches_membership_predicate() {
    for n in 2..=6 {
        assert_eq!(generate_cn(n).unwrap(), cn_by_predicate(n), "n={n}");
    }
}

#[test]
fn word_counts() {
    for n in 2..=8 {
        let c = generate_cn(n).unwrap();
        assert_eq!(c.len(), (1 << n) + 2 * n + 2);
        assert_eq!(c.len(), expected_word_count(n));
    }
    assert!(generate_cn(1).is_err());
}

#[test]
fn small_members_are_reduced() {
    for n in 2..=5 {
        assert!(brute_is_reduced(&generate_cn(n).unwrap()), "n={n}");
    }
}

#[test]
fn only_the_hub_singleton_is_missing() {
    for n in 2..=5 {
        let c = generate_cn(n).unwrap();
        let expected: BTreeSet<Codeword> = [w(&[n + 1])].into_iter().collect();
        assert_eq!(brute_missing(&c), expected, "n={n}");
        assert_eq!(c.max_intersections().unwrap().missing, expected, "n={n}");
    }
}

#[test]
fn combinatorics_reports_pass_beyond_the_verified_range() {
    for n in 2..=7 {
        let r = combinatorics_only_report(n).unwrap();
        assert!(r.passed, "n={n}: {:?}", r.failures);
        assert_eq!(r.missing, vec![w(&[n + 1])]);
    }
}

#[test]
fn shortcut_matches_brute_force_mic() {
    for n in 2..=3 {
        let c = generate_cn(n).unwrap();
        for i in 1..=2 * n + 2 {
            let cov = codebench::covering::covered_code(&c, i).unwrap();
            let direct = brute_mic(&cov);
            assert_eq!(covered_mic_shortcut(&c, i).unwrap(), direct, "n={n} i={i}");
            assert_eq!(direct, i <= n + 1, "n={n} i={i}");
        }
    }
}

fn labels_by_rows(sets: &[codebench::geometry::OpenPolyhedron], x: &[Rational]) -> u64 {
    sets.iter()
        .enumerate()
        .filter(|(_, s)| s.rows().iter().all(|r| row_holds(r, x)))
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

#[test]
fn realization_grid_samples_lie_in_the_deleted_code() {
    for n in 2..=3 {
        let real = build_realization(n).unwrap();
        let target: BTreeSet<u64> = cn_by_predicate(n)
            .iter()
            .map(|c| c.bits() & !(1 << (2 * n + 1)))
            .collect();
        let denom = 10i64;
        let steps: Vec<i64> = (-5..=25).collect();
        let mut seen = BTreeSet::new();
        let mut coords = vec![0usize; n];
        loop {
            let x: Vec<Rational> = coords.iter().map(|&k| rational(steps[k], denom)).collect();
            let labels = labels_by_rows(real.sets(), &x);
            assert!(
                target.contains(&labels),
                "n={n}: {x:?} has labels {labels:b}"
            );
            seen.insert(labels);
            let mut axis = 0;
            while axis < n && coords[axis] + 1 == steps.len() {
                coords[axis] = 0;
                axis += 1;
            }
            if axis == n {
                break;
            }
            coords[axis] += 1;
        }
        assert!(!seen.contains(&(1u64 << n)), "n={n}: hub singleton sampled");
        assert!(
            seen.len() >= n + 3,
            "n={n}: only {} distinct words",
            seen.len()
        );
    }
}

#[test]
fn explicit_witness_lies_in_the_first_sets() {
    for n in 2..=4 {
        let real = build_realization(n).unwrap();
        let x = vec![rational(4 * n as i64 - 1, 2 * n as i64); n];
        for k in 0..=n {
            assert!(
                real.sets()[k].rows().iter().all(|r| row_holds(r, &x)),
                "n={n} set {}",
                k + 1
            );
        }
        let r = verify_built_realization(n).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.failures);
    }
}

fn golden_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/cn{n}.json"))
}

#[test]
fn reports_are_stable() {
    for n in 2..=3 {
        let first = verify_covered_family(n).unwrap();
        assert!(first.passed, "n={n}: {:?}", first.failures);
        let json = first.to_json();
        assert_eq!(json, verify_covered_family(n).unwrap().to_json());
        assert_eq!(
            first.to_table(),
            verify_covered_family(n).unwrap().to_table()
        );
        let path = golden_path(n);
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &json).unwrap();
        } else {
            let golden = std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(
                json, golden,
                "n={n}: rerun with UPDATE_GOLDEN=1 after an intended change"
            );
        }
    }
}

#[test]
fn covered_family_report_rejects_large_n() {
    assert!(verify_covered_family(5).is_err());
    assert!(verify_covered_family(1).is_err());
}
