//! Trunks `Tk_C(σ) = {c ∈ C : σ ⊆ c}` and the trunk lattice of a code.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::code::Code;
use crate::codeword::Codeword;
use crate::error::CodeError;

/// A trunk of some code: its member words plus the set that defines it.
///
/// `sigma` is `None` only for the empty trunk built without a defining set.
/// Two trunks are equal when they have the same members, whatever their
/// defining sets.
#[derive(Clone, Debug, Serialize)]
pub struct Trunk {
    sigma: Option<Codeword>,
    members: BTreeSet<Codeword>,
}

impl Trunk {
    /// The empty trunk, without a defining set.
    pub fn empty() -> Self {
        Trunk {
            sigma: None,
            members: BTreeSet::new(),
        }
    }

    #[cfg(test)]
    pub(crate) fn from_parts(sigma: Option<Codeword>, members: BTreeSet<Codeword>) -> Self {
        Trunk { sigma, members }
    }

    pub fn sigma(&self) -> Option<Codeword> {
        self.sigma
    }

    pub fn members(&self) -> &BTreeSet<Codeword> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, word: Codeword) -> bool {
        self.members.contains(&word)
    }

    pub fn is_subset(&self, other: &Trunk) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `Tk(σ) ∩ Tk(τ) = Tk(σ ∪ τ)`; the defining sets are merged accordingly.
    pub fn intersect(&self, other: &Trunk) -> Trunk {
        let members: BTreeSet<Codeword> =
            self.members.intersection(&other.members).copied().collect();
        let sigma = match (self.sigma, other.sigma) {
            (Some(a), Some(b)) => Some(a.union(b)),
            _ => None,
        };
        Trunk { sigma, members }
    }

    /// Intersection of all members' words; `None` for the empty trunk.
    pub fn core(&self) -> Option<Codeword> {
        let mut it = self.members.iter().copied();
        let first = it.next()?;
        Some(it.fold(first, Codeword::intersection))
    }

    /// The trunk viewed as a code over the same universe.
    pub fn to_code(&self, n: usize) -> Code {
        Code::new(n, self.members.iter().copied()).expect("trunk members lie in [n]")
    }
}

impl PartialEq for Trunk {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Trunk {}

impl Hash for Trunk {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Trunk {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl PartialOrd for Trunk {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Code {
    /// `Tk_C(σ)`; may be empty, in which case it still remembers `σ`.
    pub fn trunk(&self, sigma: Codeword) -> Result<Trunk, CodeError> {
        self.check_subset_of_universe(sigma)?;
        let members = self.iter().filter(|c| sigma.is_subset(*c)).collect();
        Ok(Trunk {
            sigma: Some(sigma),
            members,
        })
    }

    /// The simple trunk `Tk_C(i)`.
    pub fn simple_trunk(&self, i: usize) -> Result<Trunk, CodeError> {
        self.check_index(i)?;
        self.trunk(Codeword::singleton(i)?)
    }

    /// The whole code as a trunk, `Tk_C(∅)`.
    pub fn whole_trunk(&self) -> Trunk {
        Trunk {
            sigma: Some(Codeword::EMPTY),
            members: self.words().clone(),
        }
    }

    /// Every distinct trunk of the code, the empty trunk included.
    ///
    /// Computed as the intersection closure of the simple trunks together
    /// with the whole code, since `Tk(σ) = ⋂_{i∈σ} Tk(i)`. Each nonempty
    /// trunk carries its largest defining set (the intersection of its words).
    pub fn all_trunks(&self) -> BTreeSet<Trunk> {
        let mut found: BTreeSet<BTreeSet<Codeword>> = BTreeSet::new();
        let mut frontier: Vec<BTreeSet<Codeword>> = Vec::new();
        let mut generators = vec![self.words().clone()];
        for i in 1..=self.n() {
            let members: BTreeSet<Codeword> = self.iter().filter(|c| c.contains(i)).collect();
            generators.push(members);
        }
        for g in &generators {
            if found.insert(g.clone()) {
                frontier.push(g.clone());
            }
        }
        while let Some(t) = frontier.pop() {
            for g in &generators {
                let meet: BTreeSet<Codeword> = t.intersection(g).copied().collect();
                if found.insert(meet.clone()) {
                    frontier.push(meet);
                }
            }
        }
        found.insert(BTreeSet::new());
        found
            .into_iter()
            .map(|members| {
                let t = Trunk {
                    sigma: None,
                    members,
                };
                let sigma = t.core();
                Trunk { sigma, ..t }
            })
            .collect()
    }

    pub fn trunk_count(&self) -> usize {
        self.all_trunks().len()
    }

    /// Decides whether `set` is a trunk, returning it with a defining set when it is.
    ///
    /// A nonempty `S` is a trunk exactly when `S = Tk(⋂S)`: if `S = Tk(τ)` then
    /// `τ ⊆ ⋂S`, so `Tk(⋂S) ⊆ Tk(τ) = S ⊆ Tk(⋂S)`.
    pub fn is_trunk(&self, set: &BTreeSet<Codeword>) -> Result<Option<Trunk>, CodeError> {
        if let Some(&w) = set.iter().find(|w| !self.contains(**w)) {
            return Err(CodeError::NotAMember { word: w });
        }
        if set.is_empty() {
            return Ok(Some(Trunk::empty()));
        }
        let t = Trunk {
            sigma: None,
            members: set.clone(),
        };
        let sigma = t.core().expect("nonempty");
        let candidate = self.trunk(sigma)?;
        Ok((candidate.members == *set).then_some(candidate))
    }

    pub(crate) fn ensure_trunk(&self, t: &Trunk) -> Result<(), CodeError> {
        match self.is_trunk(&t.members)? {
            Some(_) => Ok(()),
            None => Err(CodeError::NotATrunk),
        }
    }

    /// A trunk is irreducible when it is not the intersection of two trunks
    /// that properly contain it.
    pub fn is_irreducible(&self, t: &Trunk) -> Result<bool, CodeError> {
        self.ensure_trunk(t)?;
        let above: Vec<Trunk> = self
            .all_trunks()
            .into_iter()
            .filter(|s| t.is_subset(s) && s != t)
            .collect();
        for (k, a) in above.iter().enumerate() {
            for b in &above[k + 1..] {
                if a.intersect(b) == *t {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_code() -> Code {
        Code::from_lists(3, &[&[], &[1], &[2], &[3], &[2, 3]])
    }

    fn members(words: &[&[usize]]) -> BTreeSet<Codeword> {
        words.iter().map(|w| Codeword::of(w)).collect()
    }

    #[test]
    fn trunk_examples() {
        let r = sample_code();
        let t = r.trunk(Codeword::of(&[2])).unwrap();
        assert_eq!(t.members(), &members(&[&[2], &[2, 3]]));
        assert_eq!(r.trunk(Codeword::EMPTY).unwrap().members(), r.words());
        let e = r.trunk(Codeword::of(&[1, 2])).unwrap();
        assert!(e.is_empty());
        assert_eq!(e, Trunk::empty());
        assert!(r.trunk(Codeword::of(&[4])).is_err());
    }

    #[test]
    fn all_trunks_of_sample_code() {
        let r = sample_code();
        let trunks = r.all_trunks();
        let expected: BTreeSet<BTreeSet<Codeword>> = [
            members(&[&[], &[1], &[2], &[3], &[2, 3]]),
            members(&[&[1]]),
            members(&[&[2], &[2, 3]]),
            members(&[&[3], &[2, 3]]),
            members(&[&[2, 3]]),
            BTreeSet::new(),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<BTreeSet<Codeword>> =
            trunks.iter().map(|t| t.members().clone()).collect();
        assert_eq!(got, expected);
        assert_eq!(r.trunk_count(), 6);
    }

    #[test]
    fn trunk_count_small_cases() {
        assert_eq!(Code::from_lists(0, &[&[]]).trunk_count(), 2);
        assert_eq!(Code::empty(2).trunk_count(), 1);
    }

    #[test]
    fn is_trunk_criterion() {
        let r = sample_code();
        let t = r.is_trunk(&members(&[&[2], &[2, 3]])).unwrap().unwrap();
        assert_eq!(t.sigma(), Some(Codeword::of(&[2])));
        assert!(r.is_trunk(&members(&[&[], &[1]])).unwrap().is_none());
        assert!(r.is_trunk(&BTreeSet::new()).unwrap().is_some());
        assert!(matches!(
            r.is_trunk(&members(&[&[1, 2]])),
            Err(CodeError::NotAMember { .. })
        ));
    }

    #[test]
    fn irreducibility() {
        let r = sample_code();
        let t23 = r.trunk(Codeword::of(&[2, 3])).unwrap();
        assert!(!r.is_irreducible(&t23).unwrap());
        let t2 = r.simple_trunk(2).unwrap();
        assert!(r.is_irreducible(&t2).unwrap());
        assert!(r.is_irreducible(&r.whole_trunk()).unwrap());
        let bogus = Trunk::from_parts(None, members(&[&[], &[1]]));
        assert!(r.is_irreducible(&bogus).is_err());
    }

    #[test]
    fn intersect_merges_sigma() {
        let r = sample_code();
        let meet = r
            .simple_trunk(2)
            .unwrap()
            .intersect(&r.simple_trunk(3).unwrap());
        assert_eq!(meet.sigma(), Some(Codeword::of(&[2, 3])));
        assert_eq!(meet.members(), &members(&[&[2, 3]]));
    }
}
