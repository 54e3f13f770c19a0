//! Codewords: finite subsets of `[n] = {1, ..., n}` stored as a 64-bit mask.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CodeError;

/// Largest index a codeword can hold.
pub const MAX_INDEX: usize = 64;

/// A set of 1-based indices. Bit `i - 1` of the mask holds index `i`.
///
/// Ordering is lexicographic on the ascending index sequence, so
/// `{} < {1} < {1,2} < {1,3} < {2}`. Codes sort their words with it,
/// which keeps serialized output byte-stable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Codeword(u64);

impl Codeword {
    pub const EMPTY: Codeword = Codeword(0);

    pub fn from_bits(bits: u64) -> Self {
        Codeword(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self, CodeError> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > MAX_INDEX {
                return Err(CodeError::IndexOutOfRange {
                    index: i,
                    n: MAX_INDEX,
                });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Codeword(bits))
    }

    /// Panics on an index outside `1..=64`; meant for literals in tests and generators.
    pub fn of(indices: &[usize]) -> Self {
        Self::from_indices(indices.iter().copied()).expect("codeword index out of range")
    }

    pub fn singleton(i: usize) -> Result<Self, CodeError> {
        Self::from_indices([i])
    }

    /// All of `[n]`.
    pub fn full(n: usize) -> Self {
        match n {
            0 => Codeword(0),
            n if n >= 64 => Codeword(u64::MAX),
            n => Codeword((1u64 << n) - 1),
        }
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_INDEX).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_subset(self, other: Codeword) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Codeword) -> bool {
        other.is_subset(self)
    }

    pub fn union(self, other: Codeword) -> Codeword {
        Codeword(self.0 | other.0)
    }

    pub fn intersection(self, other: Codeword) -> Codeword {
        Codeword(self.0 & other.0)
    }

    pub fn difference(self, other: Codeword) -> Codeword {
        Codeword(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Codeword) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, i: usize) -> Codeword {
        debug_assert!((1..=MAX_INDEX).contains(&i));
        Codeword(self.0 | (1 << (i - 1)))
    }

    pub fn without(self, i: usize) -> Codeword {
        if i == 0 || i > MAX_INDEX {
            return self;
        }
        Codeword(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest index present, or 0 for the empty word.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Indices in ascending order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of this word, the empty set and the word itself included.
    pub fn subsets(self) -> impl Iterator<Item = Codeword> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(Codeword(cur))
        })
    }

    /// Re-labels indices: index `i` becomes `map(i)`; indices mapped to `None` are dropped.
    pub fn relabel(self, mut map: impl FnMut(usize) -> Option<usize>) -> Codeword {
        let mut out = 0u64;
        for i in self.iter() {
            if let Some(j) = map(i) {
                out |= 1 << (j - 1);
            }
        }
        Codeword(out)
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text form: ascending comma-separated indices, `-` for the empty word.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        f.write_str("}")
    }
}

impl FromStr for Codeword {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" {
            return Ok(Codeword::EMPTY);
        }
        let mut indices = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let i: usize = part
                .parse()
                .map_err(|_| CodeError::Parse(format!("bad index {part:?} in codeword {s:?}")))?;
            if let Some(&last) = indices.last() {
                if i <= last {
                    return Err(CodeError::Parse(format!(
                        "codeword {s:?} is not strictly ascending"
                    )));
                }
            }
            indices.push(i);
        }
        Codeword::from_indices(indices)
    }
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        Codeword::from_indices(indices).map_err(serde::de::Error::custom)
    }
}
