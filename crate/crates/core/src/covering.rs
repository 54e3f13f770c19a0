//! Covered codes `C^(i)`, cover candidates, and max-intersection-completeness
//! criteria for images of morphisms.

use serde::Serialize;

use crate::code::Code;
use crate::codeword::Codeword;
use crate::error::MorphismError;
use crate::morphism::Morphism;
use crate::reduce::isomorphic;
use crate::trunk::Trunk;

fn ensure_reduced_with_index(code: &Code, i: usize) -> Result<(), MorphismError> {
    code.check_index(i)?;
    if code.is_trivial_index(i) {
        return Err(MorphismError::TrivialIndex(i));
    }
    if !code.is_reduced() {
        return Err(MorphismError::NotReduced);
    }
    Ok(())
}

/// The morphism defining `C^(i)`: family `{T_j : j ≠ i}` followed by
/// `{T_j ∩ T_i : j ≠ i, T_j ∩ T_i ≠ T_i}`, both in ascending `j`.
pub fn covered_morphism(code: &Code, i: usize) -> Result<Morphism, MorphismError> {
    ensure_reduced_with_index(code, i)?;
    let simple: Vec<Trunk> = (1..=code.n())
        .map(|j| code.simple_trunk(j))
        .collect::<Result<_, _>>()?;
    let ti = &simple[i - 1];
    let mut family: Vec<Trunk> = (1..=code.n())
        .filter(|&j| j != i)
        .map(|j| simple[j - 1].clone())
        .collect();
    for j in (1..=code.n()).filter(|&j| j != i) {
        let meet = simple[j - 1].intersect(ti);
        if meet != *ti {
            family.push(meet);
        }
    }
    Morphism::new(code.clone(), family)
}

/// `C^(i)`, the image of a reduced code under [`covered_morphism`].
pub fn covered_code(code: &Code, i: usize) -> Result<Code, MorphismError> {
    Ok(covered_morphism(code, i)?.image())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "index")]
pub enum ChildKind {
    Covered(usize),
    SimpleTrunk(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverStatus {
    /// Always covered by the parent.
    Cover,
    /// May or may not be covered; only the covered codes are guaranteed.
    CandidateOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct Child {
    pub kind: ChildKind,
    pub status: CoverStatus,
    pub code: Code,
    pub trunk_count: usize,
    /// For candidates: a strict chain through another code, proving this is not a cover.
    pub refuted_by: Option<ChainCertificate>,
}

/// Every code a reduced code can cover lies in this list (up to isomorphism):
/// all `C^(i)`, and all simple trunks as unconfirmed candidates.
pub fn covering_children(code: &Code) -> Result<Vec<Child>, MorphismError> {
    if !code.is_reduced() {
        return Err(MorphismError::NotReduced);
    }
    let mut out = Vec::new();
    for i in 1..=code.n() {
        let c = covered_code(code, i)?;
        let trunk_count = c.trunk_count();
        out.push(Child {
            kind: ChildKind::Covered(i),
            status: CoverStatus::Cover,
            code: c,
            trunk_count,
            refuted_by: None,
        });
    }
    for i in 1..=code.n() {
        let t = code.simple_trunk(i)?.to_code(code.n());
        let trunk_count = t.trunk_count();
        let refuted_by = refute_cover(code, &t);
        out.push(Child {
            kind: ChildKind::SimpleTrunk(i),
            status: CoverStatus::CandidateOnly,
            code: t,
            trunk_count,
            refuted_by,
        });
    }
    Ok(out)
}

/// One operation in the poset of codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "op")]
pub enum Step {
    /// Pass to the trunk `Tk(sigma)`.
    Trunk { sigma: Codeword },
    /// Pass to the covered code `C^(i)` of the reduced form.
    Covered { index: usize },
}

impl Step {
    pub fn apply(&self, code: &Code) -> Result<Code, MorphismError> {
        match *self {
            Step::Trunk { sigma } => Ok(code.trunk(sigma)?.to_code(code.n())),
            Step::Covered { index } => covered_code(&code.reduce().code, index),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCertificate {
    /// Codes from the top of the chain down.
    pub codes: Vec<Code>,
    pub trunk_counts: Vec<usize>,
    /// `steps[k]` takes `codes[k]` to a code isomorphic to `codes[k + 1]`.
    pub steps: Vec<Step>,
}

/// Verifies that each step maps one code onto (an isomorphic copy of) the next
/// and that trunk counts strictly decrease, which certifies
/// `[codes[last]] < ... < [codes[0]]`.
pub fn certify_chain(
    codes: &[Code],
    steps: &[Step],
) -> Result<Option<ChainCertificate>, MorphismError> {
    if codes.len() != steps.len() + 1 {
        return Ok(None);
    }
    let trunk_counts: Vec<usize> = codes.iter().map(Code::trunk_count).collect();
    if trunk_counts.windows(2).any(|w| w[0] <= w[1]) {
        return Ok(None);
    }
    for (k, step) in steps.iter().enumerate() {
        let next = step.apply(&codes[k])?;
        if !isomorphic(&next, &codes[k + 1]) {
            return Ok(None);
        }
    }
    Ok(Some(ChainCertificate {
        codes: codes.to_vec(),
        trunk_counts,
        steps: steps.to_vec(),
    }))
}

/// One-step moves out of a code: all trunks, plus covered codes of its reduced form.
fn one_step_moves(code: &Code) -> Vec<Step> {
    let mut steps: Vec<Step> = code
        .all_trunks()
        .into_iter()
        .filter_map(|t| t.sigma())
        .map(|sigma| Step::Trunk { sigma })
        .collect();
    for i in 1..=code.reduce().code.n() {
        steps.push(Step::Covered { index: i });
    }
    steps
}

/// Looks for a code strictly between `candidate` and `code`, reachable in one
/// step from each side. A hit proves `code` does not cover `candidate`;
/// a miss proves nothing.
pub fn refute_cover(code: &Code, candidate: &Code) -> Option<ChainCertificate> {
    let top = code.trunk_count();
    let bottom = candidate.trunk_count();
    if bottom + 1 >= top {
        return None;
    }
    for first in one_step_moves(code) {
        let Ok(mid) = first.apply(code) else { continue };
        let count = mid.trunk_count();
        if count <= bottom || count >= top {
            continue;
        }
        for second in one_step_moves(&mid) {
            let Ok(low) = second.apply(&mid) else {
                continue;
            };
            if isomorphic(&low, candidate) {
                return certify_chain(&[code.clone(), mid, candidate.clone()], &[first, second])
                    .ok()
                    .flatten();
            }
        }
    }
    None
}

/// Tests, from the source code alone, that for every `σ ∈ M̂(C) \ C` there is
/// `c ∈ C` with `σ_j ⊆ c ⇔ σ_j ⊆ σ` for all `j`.
///
/// The condition implies that `f(C)` is max-intersection complete. The
/// converse holds when every maximal word of `C` maps to a maximal word of
/// `f(C)`, and can fail otherwise: on `C = {124, 134, 14, 23}` with defining
/// sets `13, 1, 34, 2` the image `{123, 24, 2, 4}` is complete, yet `∅` has
/// no matching `c`.
pub fn image_mic_criterion(f: &Morphism) -> Result<bool, MorphismError> {
    let sigmas: Vec<Codeword> = f
        .family()
        .iter()
        .enumerate()
        .map(|(k, t)| {
            t.sigma()
                .ok_or(MorphismError::MissingSigma { label: k + 1 })
        })
        .collect::<Result<_, _>>()?;
    let report = f.source().max_intersections()?;
    Ok(report.missing.iter().all(|&sigma| {
        f.source().iter().any(|c| {
            sigmas
                .iter()
                .all(|&sj| sj.is_subset(c) == sj.is_subset(sigma))
        })
    }))
}

/// When `{i}` is the only missing max-intersection of `C`, `C^(j)` is max-intersection
/// complete iff `j = i` and `∅ ∈ C`, or `j ≠ i` and `{i, j} ∈ C`.
pub fn covered_mic_shortcut(code: &Code, j: usize) -> Result<bool, MorphismError> {
    code.check_index(j)?;
    let missing: Vec<Codeword> = code.max_intersections()?.missing.into_iter().collect();
    let i = match missing.as_slice() {
        [only] if only.len() == 1 => only.iter().next().expect("singleton"),
        _ => return Err(MorphismError::MissingNotSingleton { missing }),
    };
    if j == i {
        Ok(code.contains(Codeword::EMPTY))
    } else {
        let pair = Codeword::from_indices([i, j])?;
        Ok(code.contains(pair))
    }
}
