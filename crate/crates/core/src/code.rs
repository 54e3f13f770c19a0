//! Combinatorial codes and their text / JSON file formats.
//!
//! Text format:
//!
//! ```text
//! n=3
//! -
//! 1
//! 2,3
//! ```
//!
//! The first line declares the universe `[n]`; each further line is one
//! codeword as ascending comma-separated indices, `-` being the empty word.
//! Blank lines and lines starting with `#` are ignored. The JSON form is
//! `{"n": 3, "words": [[], [1], [2, 3]]}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codeword::{Codeword, MAX_INDEX};
use crate::error::CodeError;

/// A finite set of codewords over `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Code {
    n: usize,
    words: BTreeSet<Codeword>,
}

impl Code {
    pub fn new<I: IntoIterator<Item = Codeword>>(n: usize, words: I) -> Result<Self, CodeError> {
        if n > MAX_INDEX {
            return Err(CodeError::UniverseTooLarge(n));
        }
        let universe = Codeword::full(n);
        let mut set = BTreeSet::new();
        for w in words {
            if !w.is_subset(universe) {
                return Err(CodeError::IndexOutOfRange {
                    index: w.max_index(),
                    n,
                });
            }
            set.insert(w);
        }
        Ok(Code { n, words: set })
    }

    /// Builds a code from index lists; panics on malformed input. Intended for literals.
    pub fn from_lists(n: usize, words: &[&[usize]]) -> Self {
        Code::new(n, words.iter().map(|w| Codeword::of(w))).expect("malformed code literal")
    }

    /// The code with no codewords at all.
    pub fn empty(n: usize) -> Self {
        Code {
            n,
            words: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> Codeword {
        Codeword::full(self.n)
    }

    pub fn words(&self) -> &BTreeSet<Codeword> {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.words.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: Codeword) -> bool {
        self.words.contains(&word)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<(), CodeError> {
        if i == 0 || i > self.n {
            Err(CodeError::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_subset_of_universe(&self, sigma: Codeword) -> Result<(), CodeError> {
        if sigma.is_subset(self.universe()) {
            Ok(())
        } else {
            Err(CodeError::IndexOutOfRange {
                index: sigma.max_index(),
                n: self.n,
            })
        }
    }

    /// Same universe, only the given words. Words must already belong to `self`.
    pub fn subcode<'a, I: IntoIterator<Item = &'a Codeword>>(
        &self,
        words: I,
    ) -> Result<Code, CodeError> {
        let mut set = BTreeSet::new();
        for &w in words {
            if !self.contains(w) {
                return Err(CodeError::NotAMember { word: w });
            }
            set.insert(w);
        }
        Ok(Code {
            n: self.n,
            words: set,
        })
    }

    /// Removes index `i` from every word and shifts higher indices down by one.
    pub fn delete_index(&self, i: usize) -> Result<Code, CodeError> {
        self.check_index(i)?;
        let words = self.iter().map(|w| {
            w.relabel(|k| match k.cmp(&i) {
                std::cmp::Ordering::Less => Some(k),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(k - 1),
            })
        });
        Code::new(self.n - 1, words)
    }

    /// Index `i` removed from the listed words only; the universe is unchanged.
    pub fn strip_index_from(&self, i: usize, targets: &[Codeword]) -> Result<Code, CodeError> {
        self.check_index(i)?;
        let words = self.iter().map(|w| {
            if targets.contains(&w) {
                w.without(i)
            } else {
                w
            }
        });
        Code::new(self.n, words)
    }

    /// Canonical text serialization; byte-stable for equal codes.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, CodeError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| CodeError::Parse("missing `n=<int>` header".into()))?;
        let n = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| {
                CodeError::Parse(format!("bad header {header:?}, expected `n=<int>`"))
            })?;
        let mut words = Vec::new();
        for line in lines {
            words.push(line.parse::<Codeword>()?);
        }
        Code::new(n, words)
    }

    pub fn parse_json(text: &str) -> Result<Self, CodeError> {
        let raw: RawCode =
            serde_json::from_str(text).map_err(|e| CodeError::Parse(e.to_string()))?;
        Code::new(raw.n, raw.words)
    }

    /// Accepts either format, deciding by the first non-blank character.
    pub fn parse_any(text: &str) -> Result<Self, CodeError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("code serialization cannot fail")
    }
}

#[derive(Deserialize)]
struct RawCode {
    n: usize,
    words: Vec<Codeword>,
}

impl<'de> Deserialize<'de> for Code {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawCode::deserialize(deserializer)?;
        Code::new(raw.n, raw.words).map_err(serde::de::Error::custom)
    }
}

impl FromStr for Code {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Code::parse_any(s)
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code[n={}]", self.n)?;
        f.debug_set().entries(self.words.iter()).finish()
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_canonical() {
        let text = "n=3\n2,3\n-\n1\n";
        let code = Code::parse_text(text).unwrap();
        assert_eq!(code.to_text(), "n=3\n-\n1\n2,3\n");
        assert_eq!(Code::parse_text(&code.to_text()).unwrap(), code);
    }

    #[test]
    fn json_form() {
        let code = Code::parse_any(r#"{"n": 3, "words": [[2,3], [], [1]]}"#).unwrap();
        assert_eq!(code.to_json(), r#"{"n":3,"words":[[],[1],[2,3]]}"#);
    }

    #[test]
    fn rejects_out_of_range_words() {
        assert!(Code::parse_text("n=2\n1,3\n").is_err());
        assert!(Code::parse_text("1,2\n").is_err());
        assert!(Code::parse_json(r#"{"n": 1, "words": [[2]]}"#).is_err());
    }

    #[test]
    fn empty_code_and_empty_word_differ() {
        let none = Code::parse_text("n=0\n").unwrap();
        let just_empty = Code::parse_text("n=0\n-\n").unwrap();
        assert!(none.is_empty());
        assert_eq!(just_empty.len(), 1);
        assert_ne!(none, just_empty);
    }

    #[test]
    fn delete_index_shifts_labels() {
        let code = Code::from_lists(3, &[&[], &[1, 3], &[2, 3]]);
        let d = code.delete_index(2).unwrap();
        assert_eq!(d, Code::from_lists(2, &[&[], &[1, 2], &[2]]));
    }
}
