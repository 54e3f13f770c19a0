//! The family `C_n` over `[2n+2]`: generation, structural checks, covered
//! codes, and the explicit polyhedral realization of `C_n^(2n+2)`.
//!
//! The codewords of `C_n` are
//!
//! - (i) `∅`;
//! - (ii) `σ ∪ {n+1}` for every nonempty proper `σ ⊂ [n]`;
//! - (iii) `{n+1+i}` for `1 ≤ i ≤ n+1`;
//! - (iv) `([n] \ {i}) ∪ {n+1, n+1+i}` for `1 ≤ i ≤ n`;
//! - (v) `[n] ∪ {n+1, 2n+2}`;
//! - (vi) `{n+2, …, 2n+2}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::code::Code;
use crate::codeword::Codeword;
use crate::covering::{covered_code, covered_mic_shortcut};
use crate::geometry::polyhedron::{feasible, LinearConstraint, OpenPolyhedron};
use crate::geometry::rational::{format_point, int, rat, Point, Rational};
use crate::geometry::realization::{
    region_difference_witness, union_difference_witness, Realization,
};
use crate::geometry::sunflower::is_sunflower;
use crate::reduce::isomorphic;

/// Largest `n` for which the realization and covered-family checks run.
pub const MAX_VERIFY_N: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnError {
    #[error("C_n needs n >= 2, got {0}")]
    TooSmall(usize),
    #[error("n = {n} exceeds the supported maximum {max} for this check")]
    TooLarge { n: usize, max: usize },
}

/// A claim that did not hold, with a machine-readable witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckFailure {
    pub claim: String,
    pub witness: Value,
}

fn fail(claim: impl Into<String>, witness: Value) -> CheckFailure {
    CheckFailure {
        claim: claim.into(),
        witness,
    }
}

fn words_json(words: impl IntoIterator<Item = Codeword>) -> Value {
    Value::Array(words.into_iter().map(|w| json!(w.to_vec())).collect())
}

fn check_n(n: usize) -> Result<(), CnError> {
    if n < 2 {
        return Err(CnError::TooSmall(n));
    }
    Ok(())
}

fn check_n_bounded(n: usize) -> Result<(), CnError> {
    check_n(n)?;
    if n > MAX_VERIFY_N {
        return Err(CnError::TooLarge {
            n,
            max: MAX_VERIFY_N,
        });
    }
    Ok(())
}

fn range(lo: usize, hi: usize) -> Codeword {
    Codeword::from_indices(lo..=hi).expect("indices within 64")
}

/// `[n]`.
fn base(n: usize) -> Codeword {
    Codeword::full(n)
}

/// Family (iv) for index `i ∈ [n]`.
pub fn family_iv(n: usize, i: usize) -> Codeword {
    base(n).without(i).with(n + 1).with(n + 1 + i)
}

/// Family (v).
pub fn family_v(n: usize) -> Codeword {
    base(n).with(n + 1).with(2 * n + 2)
}

/// Family (vi).
pub fn family_vi(n: usize) -> Codeword {
    range(n + 2, 2 * n + 2)
}

/// Families (iv), (v) and (vi), the expected maximal words.
pub fn expected_maximal(n: usize) -> BTreeSet<Codeword> {
    let mut out: BTreeSet<Codeword> = (1..=n).map(|i| family_iv(n, i)).collect();
    out.insert(family_v(n));
    out.insert(family_vi(n));
    out
}

pub fn generate_cn(n: usize) -> Result<Code, CnError> {
    check_n(n)?;
    let full = base(n);
    let mut words = vec![Codeword::EMPTY];
    words.extend(
        full.subsets()
            .filter(|s| !s.is_empty() && *s != full)
            .map(|s| s.with(n + 1)),
    );
    words.extend((1..=n + 1).map(|i| Codeword::of(&[n + 1 + i])));
    words.extend((1..=n).map(|i| family_iv(n, i)));
    words.push(family_v(n));
    words.push(family_vi(n));
    Ok(Code::new(2 * n + 2, words).expect("indices within [2n+2]"))
}

pub fn expected_word_count(n: usize) -> usize {
    (1 << n) + 2 * n + 2
}

/// Structural facts about a code claimed to be `C_n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CombinatoricsReport {
    pub n: usize,
    pub word_count: usize,
    pub maximal: Vec<Codeword>,
    pub missing: Vec<Codeword>,
    pub link_facets: Vec<Codeword>,
    pub failures: Vec<CheckFailure>,
}

/// Checks word count, maximal words, missing max-intersections and the link of `{n+1}`.
pub fn check_cn_combinatorics(code: &Code, n: usize) -> CombinatoricsReport {
    let mut failures = Vec::new();
    let word_count = code.len();
    if word_count != expected_word_count(n) {
        failures.push(fail(
            "word count equals 2^n + 2n + 2",
            json!({ "expected": expected_word_count(n), "got": word_count }),
        ));
    }

    let (maximal, missing) = match code.max_intersections() {
        Ok(r) => (r.maximal, r.missing),
        Err(_) => (BTreeSet::new(), BTreeSet::new()),
    };
    let expected = expected_maximal(n);
    let absent: Vec<Codeword> = expected.difference(&maximal).copied().collect();
    let extra: Vec<Codeword> = maximal.difference(&expected).copied().collect();
    if !absent.is_empty() || !extra.is_empty() {
        failures.push(fail(
            "maximal words are exactly families (iv), (v), (vi)",
            json!({ "absent": words_json(absent), "unexpected": words_json(extra) }),
        ));
    }

    let hub = Codeword::of(&[n + 1]);
    let expected_missing: BTreeSet<Codeword> = [hub].into_iter().collect();
    if missing != expected_missing {
        failures.push(fail(
            "the only missing max-intersection is {n+1}",
            json!({ "missing": words_json(missing.iter().copied()) }),
        ));
    }

    let mut expected_link: BTreeSet<Codeword> = (1..=n)
        .map(|i| base(n).without(i).with(n + 1 + i))
        .collect();
    expected_link.insert(base(n).with(2 * n + 2));
    let link_facets: BTreeSet<Codeword> = match code.delta().link(hub) {
        Ok(lk) => lk.facets(),
        Err(_) => BTreeSet::new(),
    };
    if link_facets != expected_link {
        let diff: Vec<Codeword> = link_facets
            .symmetric_difference(&expected_link)
            .copied()
            .collect();
        failures.push(fail(
            "link of {n+1} has facets [n]∪{2n+2} and ([n]\\{i})∪{n+1+i}",
            json!({ "differing_facets": words_json(diff) }),
        ));
    }

    CombinatoricsReport {
        n,
        word_count,
        maximal: maximal.into_iter().collect(),
        missing: missing.into_iter().collect(),
        link_facets: link_facets.into_iter().collect(),
        failures,
    }
}

pub fn verify_cn_combinatorics(n: usize) -> Result<CombinatoricsReport, CnError> {
    Ok(check_cn_combinatorics(&generate_cn(n)?, n))
}

fn coord_row(n: usize, entries: &[(usize, Rational)], rhs: Rational) -> LinearConstraint {
    let mut coeffs = vec![Rational::zero(); n];
    for (k, v) in entries {
        coeffs[k - 1] = v.clone();
    }
    LinearConstraint::strict(coeffs, rhs)
}

/// Sets `U_1..U_{2n+1}` in `R^n`:
/// `U_{n+1} = {2n-1 < Σx < 2n, x > 0}`, `U_j = U_{n+1} ∩ {Σ_{k≠j} x_k > n-1}` for `j ∈ [n]`,
/// and `U_j = {0 < x_k < 1 for k ≠ j-n-1}` for `n+2 ≤ j ≤ 2n+1`.
pub fn build_realization(n: usize) -> Result<Realization, CnError> {
    check_n(n)?;
    let ni = n as i64;
    let one = Rational::one;
    let mut hub_rows = vec![
        LinearConstraint::strict(vec![-one(); n], -int(2 * ni - 1)),
        LinearConstraint::strict(vec![one(); n], int(2 * ni)),
    ];
    hub_rows.extend((1..=n).map(|k| coord_row(n, &[(k, -one())], int(0))));
    let hub = OpenPolyhedron::new(n, hub_rows.clone()).expect("strict rows");

    let mut sets = Vec::with_capacity(2 * n + 1);
    for j in 1..=n {
        let mut rows = hub_rows.clone();
        let entries: Vec<(usize, Rational)> =
            (1..=n).filter(|&k| k != j).map(|k| (k, -one())).collect();
        rows.push(coord_row(n, &entries, -int(ni - 1)));
        sets.push(OpenPolyhedron::new(n, rows).expect("strict rows"));
    }
    sets.push(hub);
    for j in n + 2..=2 * n + 1 {
        let free = j - n - 1;
        let mut rows = Vec::new();
        for k in (1..=n).filter(|&k| k != free) {
            rows.push(coord_row(n, &[(k, -one())], int(0)));
            rows.push(coord_row(n, &[(k, one())], int(1)));
        }
        sets.push(OpenPolyhedron::new(n, rows).expect("strict rows"));
    }
    Ok(Realization::in_space(n, sets).expect("matching dimensions"))
}

/// Outcome of checking a realization of `C_n^(2n+2)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealizationReport {
    pub n: usize,
    pub code: Vec<Codeword>,
    pub covered_is_deletion: bool,
    pub lower_containment: bool,
    pub upper_containment: bool,
    pub claim_disjoint_petals: bool,
    pub claim_cover: bool,
    pub claim_common_point: bool,
    pub explicit_witness: Vec<String>,
    pub explicit_witness_ok: bool,
    pub maximal_present: bool,
    pub hub_singleton_absent: bool,
    pub petals_form_sunflower: bool,
    pub failures: Vec<CheckFailure>,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn point_json(p: &Point) -> Value {
    json!(format_point(p))
}

/// Runs every check against a realization that should behave like the
/// construction of [`build_realization`].
pub fn verify_realization(n: usize, real: &Realization) -> Result<RealizationReport, CnError> {
    check_n_bounded(n)?;
    let cn = generate_cn(n)?;
    let mut failures = Vec::new();
    let m = 2 * n + 1;
    if real.n() != m || real.dim() != n {
        failures.push(fail(
            "realization has 2n+1 sets in R^n",
            json!({ "sets": real.n(), "dim": real.dim() }),
        ));
        return Ok(empty_realization_report(n, failures));
    }

    let target = cn.delete_index(2 * n + 2).expect("index in range");
    let covered_is_deletion = covered_code(&cn, 2 * n + 2)
        .map(|c| isomorphic(&c, &target))
        .unwrap_or(false);
    if !covered_is_deletion {
        failures.push(fail(
            "C_n^(2n+2) is isomorphic to deleting index 2n+2",
            json!(null),
        ));
    }

    let d = real.code().expect("2n+1 <= default cap");
    let outside: Vec<Codeword> = d.iter().filter(|w| !target.contains(*w)).collect();
    let lower_containment = outside.is_empty();
    if !lower_containment {
        failures.push(fail(
            "D ⊆ C_n^(2n+2)",
            json!({ "extra_words": words_json(outside) }),
        ));
    }
    let delta = d.delta();
    let uncovered: Vec<Codeword> = target.iter().filter(|w| !delta.contains(*w)).collect();
    let upper_containment = uncovered.is_empty();
    if !upper_containment {
        failures.push(fail(
            "C_n^(2n+2) ⊆ Δ(D)",
            json!({ "missing_faces": words_json(uncovered) }),
        ));
    }

    let sets = real.sets();
    let hub = &sets[n];
    let mut claim_disjoint_petals = true;
    for j in 1..=n {
        let meet = hub.intersect(&sets[n + j]).expect("same dim");
        let mut rows = meet.rows().to_vec();
        rows.extend(sets[j - 1].rows().iter().cloned());
        if let Some(w) = feasible(n, &rows).expect("well formed").witness {
            claim_disjoint_petals = false;
            failures.push(fail(
                format!("U_{{n+1}} ∩ U_{} avoids U_{}", n + 1 + j, j),
                json!({ "point": point_json(&w) }),
            ));
        }
        for k in (1..=n).filter(|&k| k != j) {
            if let Some(w) = region_difference_witness(&meet, &sets[k - 1]).expect("same dim") {
                claim_disjoint_petals = false;
                failures.push(fail(
                    format!("U_{{n+1}} ∩ U_{} ⊆ U_{}", n + 1 + j, k),
                    json!({ "point": point_json(&w) }),
                ));
            }
        }
    }

    let cover: Vec<&OpenPolyhedron> = sets[..n].iter().collect();
    let claim_cover = match union_difference_witness(hub, &cover).expect("same dim") {
        None => true,
        Some(w) => {
            failures.push(fail(
                "U_1, …, U_n cover U_{n+1}",
                json!({ "point": point_json(&w) }),
            ));
            false
        }
    };

    let all_first = Codeword::full(n + 1);
    let claim_common_point = real
        .intersection_witness(all_first)
        .expect("labels in range")
        .is_some();
    if !claim_common_point {
        failures.push(fail("U_[n+1] is nonempty", json!(null)));
    }

    let explicit: Point = vec![int(2) - rat(1, 2 * n as i64); n];
    let explicit_witness_ok = (1..=n + 1).all(|k| sets[k - 1].contains(&explicit));
    if !explicit_witness_ok {
        failures.push(fail(
            "the point with all coordinates 2 - 1/(2n) lies in U_[n+1]",
            json!({ "point": point_json(&explicit) }),
        ));
    }

    let mut required: Vec<Codeword> = (1..=n).map(|i| family_iv(n, i)).collect();
    required.push(base(n).with(n + 1));
    required.push(range(n + 2, 2 * n + 1));
    let d_max = d.maximal_words();
    let absent: Vec<Codeword> = required
        .iter()
        .copied()
        .filter(|w| !d_max.contains(w))
        .collect();
    let maximal_present = absent.is_empty();
    if !maximal_present {
        failures.push(fail(
            "maximal words of D include families (iv), (v), (vi) without 2n+2",
            json!({ "absent": words_json(absent) }),
        ));
    }

    let hub_singleton_absent = !d.contains(Codeword::of(&[n + 1]));
    if !hub_singleton_absent {
        let w = real
            .atom_witness(Codeword::of(&[n + 1]))
            .expect("labels in range");
        failures.push(fail(
            "{n+1} is not a word of D",
            json!({ "point": w.as_ref().map(point_json) }),
        ));
    }

    let petals: Vec<OpenPolyhedron> = sets[n + 1..].to_vec();
    let cube = OpenPolyhedron::open_box(&vec![int(0); n], &vec![int(1); n]);
    let petals_form_sunflower = match is_sunflower(&petals).expect("at least two petals") {
        Some(center) => {
            region_difference_witness(&center, &cube)
                .expect("same dim")
                .is_none()
                && region_difference_witness(&cube, &center)
                    .expect("same dim")
                    .is_none()
        }
        None => false,
    };
    if !petals_form_sunflower {
        failures.push(fail(
            "U_{n+2}, …, U_{2n+1} form a sunflower centered on the open unit cube",
            json!(null),
        ));
    }

    Ok(RealizationReport {
        n,
        code: d.iter().collect(),
        covered_is_deletion,
        lower_containment,
        upper_containment,
        claim_disjoint_petals,
        claim_cover,
        claim_common_point,
        explicit_witness: format_point(&explicit),
        explicit_witness_ok,
        maximal_present,
        hub_singleton_absent,
        petals_form_sunflower,
        failures,
    })
}

fn empty_realization_report(n: usize, failures: Vec<CheckFailure>) -> RealizationReport {
    RealizationReport {
        n,
        code: Vec::new(),
        covered_is_deletion: false,
        lower_containment: false,
        upper_containment: false,
        claim_disjoint_petals: false,
        claim_cover: false,
        claim_common_point: false,
        explicit_witness: Vec::new(),
        explicit_witness_ok: false,
        maximal_present: false,
        hub_singleton_absent: false,
        petals_form_sunflower: false,
        failures,
    }
}

pub fn verify_built_realization(n: usize) -> Result<RealizationReport, CnError> {
    check_n_bounded(n)?;
    verify_realization(n, &build_realization(n)?)
}

/// How a simple trunk was judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrunkCheckKind {
    /// The trunk is max-intersection complete.
    Mic,
    /// The trunk is isomorphic to `{∅, {1}, {2}}`.
    ThreeWord,
    /// Surrogate: the subcode of families (ii) and (v) has a unique maximal word.
    UniqueMaximalSurrogate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimpleTrunkCheck {
    pub index: usize,
    pub kind: TrunkCheckKind,
    pub passed: bool,
}

/// How a covered code was judged beyond the MIC tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructuralKind {
    /// `i ≤ n+1`: only the MIC tests apply.
    None,
    /// Isomorphic to stripping `i` from `{i}` and family (vi), and MIC once `c` is removed.
    StripAndDropC,
    /// Isomorphic to deleting index `2n+2`; the realization check covers convexity.
    Deletion,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoveredCheck {
    pub index: usize,
    pub shortcut_mic: bool,
    pub direct_mic: bool,
    pub structural: StructuralKind,
    pub structural_ok: bool,
    pub trunk_count: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CnReport {
    pub n: usize,
    pub word_count: usize,
    pub maximal: Vec<Codeword>,
    pub missing: Vec<Codeword>,
    pub link_facets: Vec<Codeword>,
    pub trunk_count: usize,
    pub simple_trunks: Vec<SimpleTrunkCheck>,
    pub covered: Vec<CoveredCheck>,
    pub realization: Option<RealizationReport>,
    pub notes: Vec<String>,
    pub failures: Vec<CheckFailure>,
    pub passed: bool,
}

const NOTES: [&str; 3] = [
    "non-convexity of C_n rests on a topological argument and is not machine-checked",
    "convexity of Tk(n+1) is represented by its unique-maximal-word surrogate",
    "for n+2 <= i <= 2n+1 the ball insertion for codeword c is represented by MIC after removing c",
];

fn is_mic(code: &Code) -> bool {
    code.is_max_intersection_complete().unwrap_or(false)
}

/// Full report for `C_n`, `2 ≤ n ≤ 4`: combinatorics, simple trunks, every
/// covered code, and the realization of `C_n^(2n+2)`.
pub fn verify_covered_family(n: usize) -> Result<CnReport, CnError> {
    check_n_bounded(n)?;
    let cn = generate_cn(n)?;
    let comb = check_cn_combinatorics(&cn, n);
    let mut failures = comb.failures.clone();
    let total = 2 * n + 2;
    let trunk_count = cn.trunk_count();

    let mut simple_trunks = Vec::with_capacity(total);
    let three_word = Code::from_lists(2, &[&[], &[1], &[2]]);
    for i in 1..=total {
        let trunk = cn.simple_trunk(i).expect("index in range").to_code(total);
        let (kind, passed) = if i <= n {
            (TrunkCheckKind::Mic, is_mic(&trunk))
        } else if i == n + 1 {
            let sub: Vec<Codeword> = trunk
                .iter()
                .filter(|w| w.is_subset(base(n).with(n + 1)) || *w == family_v(n))
                .collect();
            let sub = Code::new(total, sub).expect("words of C_n");
            (
                TrunkCheckKind::UniqueMaximalSurrogate,
                sub.maximal_words().len() == 1,
            )
        } else {
            (TrunkCheckKind::ThreeWord, isomorphic(&trunk, &three_word))
        };
        if !passed {
            failures.push(fail(
                format!("simple trunk {i} check ({kind:?})"),
                json!({ "trunk": words_json(trunk.iter()) }),
            ));
        }
        simple_trunks.push(SimpleTrunkCheck {
            index: i,
            kind,
            passed,
        });
    }

    let mut covered = Vec::with_capacity(total);
    for i in 1..=total {
        let cov = covered_code(&cn, i).expect("C_n is reduced");
        let shortcut_mic = covered_mic_shortcut(&cn, i).expect("single missing singleton");
        let direct_mic = is_mic(&cov);
        let (structural, structural_ok) = if i <= n + 1 {
            (StructuralKind::None, true)
        } else if i <= 2 * n + 1 {
            let c = family_iv(n, i - n - 1);
            let stripped = cn
                .strip_index_from(i, &[family_vi(n), Codeword::of(&[i])])
                .expect("index in range");
            let without_c: Vec<Codeword> = stripped.iter().filter(|w| *w != c).collect();
            let without_c = Code::new(total, without_c).expect("same universe");
            (
                StructuralKind::StripAndDropC,
                isomorphic(&cov, &stripped) && is_mic(&without_c),
            )
        } else {
            let deleted = cn.delete_index(i).expect("index in range");
            (StructuralKind::Deletion, isomorphic(&cov, &deleted))
        };
        let cov_trunks = cov.trunk_count();
        let expect_mic = i <= n + 1;
        let mut passed = true;
        if shortcut_mic != direct_mic || direct_mic != expect_mic {
            passed = false;
            failures.push(fail(
                format!(
                    "covered code {i}: shortcut and direct MIC agree and hold exactly for i <= n+1"
                ),
                json!({ "shortcut": shortcut_mic, "direct": direct_mic }),
            ));
        }
        if !structural_ok {
            passed = false;
            failures.push(fail(
                format!("covered code {i}: structural description ({structural:?})"),
                json!({ "covered": words_json(cov.iter()) }),
            ));
        }
        if cov_trunks + 1 != trunk_count {
            passed = false;
            failures.push(fail(
                format!("covered code {i} has exactly one trunk fewer"),
                json!({ "expected": trunk_count - 1, "got": cov_trunks }),
            ));
        }
        covered.push(CoveredCheck {
            index: i,
            shortcut_mic,
            direct_mic,
            structural,
            structural_ok,
            trunk_count: cov_trunks,
            passed,
        });
    }

    let realization = verify_built_realization(n)?;
    failures.extend(realization.failures.iter().cloned());
    let passed = failures.is_empty();
    Ok(CnReport {
        n,
        word_count: comb.word_count,
        maximal: comb.maximal,
        missing: comb.missing,
        link_facets: comb.link_facets,
        trunk_count,
        simple_trunks,
        covered,
        realization: Some(realization),
        notes: NOTES.iter().map(|s| s.to_string()).collect(),
        failures,
        passed,
    })
}

/// Report with only the combinatorial section, for `n` beyond [`MAX_VERIFY_N`].
pub fn combinatorics_only_report(n: usize) -> Result<CnReport, CnError> {
    let cn = generate_cn(n)?;
    let comb = check_cn_combinatorics(&cn, n);
    let passed = comb.failures.is_empty();
    Ok(CnReport {
        n,
        word_count: comb.word_count,
        maximal: comb.maximal,
        missing: comb.missing,
        link_facets: comb.link_facets,
        trunk_count: cn.trunk_count(),
        simple_trunks: Vec::new(),
        covered: Vec::new(),
        realization: None,
        notes: NOTES.iter().map(|s| s.to_string()).collect(),
        failures: comb.failures,
        passed,
    })
}

fn list(words: &[Codeword]) -> String {
    words
        .iter()
        .map(|w| format!("{w:?}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

impl CnReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Human-readable table.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let n = self.n;
        let _ = writeln!(s, "C_{n} over [{}]", 2 * n + 2);
        let _ = writeln!(
            s,
            "  words          {} (expected {})",
            self.word_count,
            expected_word_count(n)
        );
        let _ = writeln!(s, "  trunks         {}", self.trunk_count);
        let _ = writeln!(s, "  maximal        {}", list(&self.maximal));
        let _ = writeln!(s, "  missing        {}", list(&self.missing));
        let _ = writeln!(s, "  link facets    {}", list(&self.link_facets));
        if !self.simple_trunks.is_empty() {
            let _ = writeln!(s, "\nsimple trunks");
            let _ = writeln!(s, "  {:>3}  {:<26}  result", "i", "check");
            for t in &self.simple_trunks {
                let kind = match t.kind {
                    TrunkCheckKind::Mic => "mic",
                    TrunkCheckKind::ThreeWord => "iso {∅,{1},{2}}",
                    TrunkCheckKind::UniqueMaximalSurrogate => "unique maximal (surrogate)",
                };
                let _ = writeln!(s, "  {:>3}  {:<26}  {}", t.index, kind, mark(t.passed));
            }
        }
        if !self.covered.is_empty() {
            let _ = writeln!(s, "\ncovered codes");
            let _ = writeln!(
                s,
                "  {:>3}  {:>8}  {:>6}  {:<16}  {:>6}  result",
                "i", "shortcut", "direct", "structural", "trunks"
            );
            for c in &self.covered {
                let structural = match c.structural {
                    StructuralKind::None => "-",
                    StructuralKind::StripAndDropC => "strip, drop c",
                    StructuralKind::Deletion => "deletion",
                };
                let _ = writeln!(
                    s,
                    "  {:>3}  {:>8}  {:>6}  {:<16}  {:>6}  {}",
                    c.index,
                    c.shortcut_mic,
                    c.direct_mic,
                    if c.structural_ok {
                        structural.to_string()
                    } else {
                        format!("{structural} FAIL")
                    },
                    c.trunk_count,
                    mark(c.passed)
                );
            }
        }
        if let Some(r) = &self.realization {
            let _ = writeln!(s, "\nrealization of C_{n}^({})", 2 * n + 2);
            let _ = writeln!(s, "  |D|                          {}", r.code.len());
            for (label, ok) in [
                ("covered code is deletion", r.covered_is_deletion),
                ("D ⊆ C_n^(2n+2)", r.lower_containment),
                ("C_n^(2n+2) ⊆ Δ(D)", r.upper_containment),
                ("petal contacts", r.claim_disjoint_petals),
                ("cover", r.claim_cover),
                ("common point", r.claim_common_point),
                ("explicit witness", r.explicit_witness_ok),
                ("maximal words present", r.maximal_present),
                ("{n+1} absent", r.hub_singleton_absent),
                ("petal sunflower", r.petals_form_sunflower),
            ] {
                let _ = writeln!(s, "  {label:<28} {}", mark(ok));
            }
            let _ = writeln!(
                s,
                "  witness                      ({})",
                r.explicit_witness.join(", ")
            );
        }
        if !self.notes.is_empty() {
            let _ = writeln!(s, "\nnotes");
            for note in &self.notes {
                let _ = writeln!(s, "  - {note}");
            }
        }
        for f in &self.failures {
            let _ = writeln!(s, "FAILED: {} {}", f.claim, f.witness);
        }
        let _ = writeln!(s, "\n{}", if self.passed { "PASS" } else { "FAIL" });
        s
    }
}
