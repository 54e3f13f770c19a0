//! Simplicial-complex views of a code: `Δ(C)`, links, and intersections of
//! maximal codewords.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::code::Code;
use crate::codeword::Codeword;
use crate::error::CodeError;

/// A downward-closed family of faces over vertices `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    n: usize,
    faces: BTreeSet<Codeword>,
}

impl SimplicialComplex {
    pub fn new(n: usize, faces: BTreeSet<Codeword>) -> Result<Self, CodeError> {
        let universe = Codeword::full(n);
        for &f in &faces {
            if !f.is_subset(universe) {
                return Err(CodeError::IndexOutOfRange {
                    index: f.max_index(),
                    n,
                });
            }
            for i in f.iter() {
                let sub = f.without(i);
                if !faces.contains(&sub) {
                    return Err(CodeError::NotDownwardClosed { missing: sub });
                }
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// Smallest complex containing every given set.
    pub fn generated_by<I: IntoIterator<Item = Codeword>>(n: usize, sets: I) -> Self {
        let mut faces = BTreeSet::new();
        for s in sets {
            if faces.contains(&s) {
                continue;
            }
            faces.extend(s.subsets());
        }
        SimplicialComplex { n, faces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &BTreeSet<Codeword> {
        &self.faces
    }

    pub fn contains(&self, face: Codeword) -> bool {
        self.faces.contains(&face)
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> BTreeSet<Codeword> {
        maximal_sets(self.faces.iter().copied())
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅ and τ ∪ σ ∈ K}`.
    pub fn link(&self, sigma: Codeword) -> Result<SimplicialComplex, CodeError> {
        if !self.contains(sigma) {
            return Err(CodeError::NotAFace { word: sigma });
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(SimplicialComplex { n: self.n, faces })
    }
}

/// Inclusion-maximal members of a family of sets.
pub fn maximal_sets<I: IntoIterator<Item = Codeword>>(sets: I) -> BTreeSet<Codeword> {
    let all: BTreeSet<Codeword> = sets.into_iter().collect();
    all.iter()
        .copied()
        .filter(|s| !all.iter().any(|t| t != s && s.is_subset(*t)))
        .collect()
}

/// Maximal codewords `M(C)`, all intersections of nonempty subfamilies of them,
/// and the intersections that are absent from the code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxIntersectionReport {
    pub maximal: BTreeSet<Codeword>,
    pub closure: BTreeSet<Codeword>,
    pub missing: BTreeSet<Codeword>,
}

impl MaxIntersectionReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }
}

impl Code {
    /// `Δ(C)`, the downward closure of the codewords.
    pub fn delta(&self) -> SimplicialComplex {
        SimplicialComplex::generated_by(self.n(), self.iter())
    }

    pub fn maximal_words(&self) -> BTreeSet<Codeword> {
        maximal_sets(self.iter())
    }

    /// Single maximal words count as (trivial) intersections, so
    /// `maximal ⊆ closure` always holds.
    pub fn max_intersections(&self) -> Result<MaxIntersectionReport, CodeError> {
        if self.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        let maximal = self.maximal_words();
        let mut closure = maximal.clone();
        let mut frontier: Vec<Codeword> = maximal.iter().copied().collect();
        while let Some(s) = frontier.pop() {
            for &m in &maximal {
                let meet = s.intersection(m);
                if closure.insert(meet) {
                    frontier.push(meet);
                }
            }
        }
        let missing = closure
            .iter()
            .copied()
            .filter(|s| !self.contains(*s))
            .collect();
        Ok(MaxIntersectionReport {
            maximal,
            closure,
            missing,
        })
    }

    pub fn is_max_intersection_complete(&self) -> Result<bool, CodeError> {
        Ok(self.max_intersections()?.is_complete())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&[usize]]) -> BTreeSet<Codeword> {
        words.iter().map(|w| Codeword::of(w)).collect()
    }

    fn c2() -> Code {
        Code::from_lists(
            6,
            &[
                &[],
                &[1, 3],
                &[2, 3],
                &[4],
                &[5],
                &[6],
                &[2, 3, 4],
                &[1, 3, 5],
                &[1, 2, 3, 6],
                &[4, 5, 6],
            ],
        )
    }

    #[test]
    fn delta_of_single_word() {
        let k = Code::from_lists(2, &[&[1, 2]]).delta();
        assert_eq!(k.faces(), &set(&[&[], &[1], &[2], &[1, 2]]));
    }

    #[test]
    fn delta_of_empty_code_is_empty_complex() {
        assert!(Code::empty(3).delta().is_empty());
    }

    #[test]
    fn link_examples() {
        let k = c2().delta();
        let lk = k.link(Codeword::of(&[3])).unwrap();
        let facets = lk.facets();
        for f in [&[1, 2, 6][..], &[2, 4], &[1, 5]] {
            assert!(facets.contains(&Codeword::of(f)), "missing facet {f:?}");
        }
        assert_eq!(k.link(Codeword::EMPTY).unwrap(), k);
        assert!(k.link(Codeword::of(&[1, 4])).is_err());
    }

    #[test]
    fn complex_must_be_downward_closed() {
        assert!(SimplicialComplex::new(2, set(&[&[], &[1, 2]])).is_err());
        assert!(SimplicialComplex::new(2, set(&[&[], &[1], &[2], &[1, 2]])).is_ok());
    }

    #[test]
    fn max_intersections_of_c2() {
        let report = c2().max_intersections().unwrap();
        assert_eq!(
            report.maximal,
            set(&[&[2, 3, 4], &[1, 3, 5], &[1, 2, 3, 6], &[4, 5, 6]])
        );
        assert_eq!(report.missing, set(&[&[3]]));
        assert!(report.maximal.is_subset(&report.closure));
    }

    #[test]
    fn max_intersections_trivial_cases() {
        let c = Code::from_lists(1, &[&[], &[1]]);
        assert!(c.max_intersections().unwrap().missing.is_empty());
        assert_eq!(
            Code::empty(2).max_intersections(),
            Err(CodeError::EmptyCode)
        );
    }
}
