//! Reduced codes and the isomorphism test built on them.
//!
//! Every code is isomorphic to a reduced code, unique up to permuting
//! indices. Two codes are therefore isomorphic exactly when their reduced
//! forms agree after some relabeling, which is what [`isomorphism`] searches for.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::code::Code;
use crate::codeword::Codeword;

/// Result of [`Code::reduce`]. Index lists use the input's labels.
#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub code: Code,
    pub trivial: Vec<usize>,
    pub redundant: Vec<usize>,
    /// `kept[k]` is the input label of reduced index `k + 1`.
    pub kept: Vec<usize>,
}

impl Code {
    /// `i` is trivial when no codeword contains it.
    pub fn is_trivial_index(&self, i: usize) -> bool {
        !self.iter().any(|c| c.contains(i))
    }

    /// `i` is redundant when `Tk(i) = Tk(σ)` for some σ avoiding `i`. The only
    /// candidate worth testing is `(⋂ Tk(i)) \ {i}`, the largest such σ.
    pub fn is_redundant_index(&self, i: usize) -> bool {
        let mut containing = self.iter().filter(|c| c.contains(i));
        let Some(first) = containing.next() else {
            return false;
        };
        let core = containing.fold(first, Codeword::intersection).without(i);
        self.iter().all(|c| !core.is_subset(c) || c.contains(i))
    }

    pub fn is_reduced(&self) -> bool {
        (1..=self.n()).all(|i| !self.is_trivial_index(i) && !self.is_redundant_index(i))
    }

    /// Deletes trivial indices, then repeatedly drops the lowest redundant index
    /// until none is left. Remaining indices are renumbered in ascending order.
    pub fn reduce(&self) -> Reduction {
        self.reduce_with(|candidates| candidates[0])
    }

    /// Like [`Code::reduce`], but `choose` picks which of the currently
    /// redundant indices (ascending, current labels) is dropped next.
    pub fn reduce_with(&self, mut choose: impl FnMut(&[usize]) -> usize) -> Reduction {
        let mut labels: Vec<usize> = (1..=self.n()).collect();
        let mut current = self.clone();
        let mut trivial = Vec::new();
        let mut redundant = Vec::new();

        let mut i = 1;
        while i <= current.n() {
            if current.is_trivial_index(i) {
                trivial.push(labels.remove(i - 1));
                current = current.delete_index(i).expect("index in range");
            } else {
                i += 1;
            }
        }

        loop {
            let candidates: Vec<usize> = (1..=current.n())
                .filter(|&i| current.is_redundant_index(i))
                .collect();
            if candidates.is_empty() {
                break;
            }
            let i = choose(&candidates);
            assert!(candidates.contains(&i), "chosen index {i} is not redundant");
            redundant.push(labels.remove(i - 1));
            current = current.delete_index(i).expect("index in range");
        }

        Reduction {
            code: current,
            trivial,
            redundant,
            kept: labels,
        }
    }

    /// Applies an index permutation: index `i` becomes `perm[i - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Code {
        assert_eq!(perm.len(), self.n());
        let words = self.iter().map(|w| w.relabel(|i| Some(perm[i - 1])));
        Code::new(self.n(), words).expect("permutation stays inside [n]")
    }
}

/// Witness that two codes are isomorphic.
#[derive(Clone, Debug, Serialize)]
pub struct Isomorphism {
    pub left: Reduction,
    pub right: Reduction,
    /// Reduced index `i` of the left code corresponds to reduced index `perm[i - 1]` of the right.
    pub perm: Vec<usize>,
}

pub fn isomorphic(a: &Code, b: &Code) -> bool {
    isomorphism(a, b).is_some()
}

pub fn isomorphism(a: &Code, b: &Code) -> Option<Isomorphism> {
    let left = a.reduce();
    let right = b.reduce();
    let perm = find_permutation(&left.code, &right.code)?;
    Some(Isomorphism { left, right, perm })
}

/// Per-index invariant: simple-trunk size and the sorted sizes of its words.
fn signature(code: &Code, i: usize) -> (usize, Vec<usize>) {
    let mut sizes: Vec<usize> = code
        .iter()
        .filter(|c| c.contains(i))
        .map(Codeword::len)
        .collect();
    sizes.sort_unstable();
    (sizes.len(), sizes)
}

/// Searches for a permutation mapping `a`'s words onto `b`'s.
pub(crate) fn find_permutation(a: &Code, b: &Code) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.len() != b.len() {
        return None;
    }
    let mut size_a: Vec<usize> = a.iter().map(Codeword::len).collect();
    let mut size_b: Vec<usize> = b.iter().map(Codeword::len).collect();
    size_a.sort_unstable();
    size_b.sort_unstable();
    if size_a != size_b {
        return None;
    }
    let sig_a: Vec<_> = (1..=n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (1..=n).map(|i| signature(b, i)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    // Most constrained indices first: those whose signature is rarest in `b`.
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&i| (sig_b.iter().filter(|s| **s == sig_a[i - 1]).count(), i));

    let words_a: Vec<Codeword> = a.iter().collect();
    let words_b: Vec<Codeword> = b.iter().collect();
    let mut perm = vec![0usize; n];
    let mut used = vec![false; n + 1];
    if search(
        0, &order, &sig_a, &sig_b, &words_a, &words_b, &mut perm, &mut used,
    ) {
        Some(perm)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    depth: usize,
    order: &[usize],
    sig_a: &[(usize, Vec<usize>)],
    sig_b: &[(usize, Vec<usize>)],
    words_a: &[Codeword],
    words_b: &[Codeword],
    perm: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        let mapped: BTreeSet<Codeword> = words_a
            .iter()
            .map(|w| w.relabel(|i| Some(perm[i - 1])))
            .collect();
        return mapped.len() == words_b.len() && words_b.iter().all(|w| mapped.contains(w));
    }
    let i = order[depth];
    for j in 1..=sig_b.len() {
        if used[j] || sig_b[j - 1] != sig_a[i - 1] {
            continue;
        }
        perm[i - 1] = j;
        used[j] = true;
        if projections_agree(&order[..=depth], perm, words_a, words_b)
            && search(depth + 1, order, sig_a, sig_b, words_a, words_b, perm, used)
        {
            return true;
        }
        used[j] = false;
    }
    perm[i - 1] = 0;
    false
}

/// Restricted to the indices assigned so far, both word multisets must agree.
fn projections_agree(
    assigned: &[usize],
    perm: &[usize],
    words_a: &[Codeword],
    words_b: &[Codeword],
) -> bool {
    let dom = Codeword::from_indices(assigned.iter().copied()).expect("valid indices");
    let img = Codeword::from_indices(assigned.iter().map(|&i| perm[i - 1])).expect("valid indices");
    let mut pa: Vec<u64> = words_a
        .iter()
        .map(|w| w.intersection(dom).relabel(|i| Some(perm[i - 1])).bits())
        .collect();
    let mut pb: Vec<u64> = words_b.iter().map(|w| w.intersection(img).bits()).collect();
    pa.sort_unstable();
    pb.sort_unstable();
    pa == pb
}
