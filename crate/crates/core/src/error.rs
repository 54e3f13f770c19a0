use thiserror::Error;

use crate::codeword::Codeword;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("index {index} is outside [{n}]")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("codeword {word:?} is not a word of the code")]
    NotAMember { word: Codeword },
    #[error("the given set of codewords is not a trunk")]
    NotATrunk,
    #[error("operation is undefined for the empty code")]
    EmptyCode,
    #[error("{word:?} is not a face of the complex")]
    NotAFace { word: Codeword },
    #[error("face set is not closed under taking subsets: {missing:?} is missing")]
    NotDownwardClosed { missing: Codeword },
    #[error("universe size {0} exceeds the supported maximum of 64")]
    UniverseTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("family member {label} is not a trunk of the source code")]
    NotATrunk { label: usize },
    #[error("mapping is not total: {word:?} has no image")]
    NotTotal { word: Codeword },
    #[error("mapping sends {word:?} outside the target code")]
    OutsideTarget { word: Codeword },
    #[error("morphisms have different source codes")]
    SourceMismatch,
    #[error("code is not reduced")]
    NotReduced,
    #[error("index {0} is trivial")]
    TrivialIndex(usize),
    #[error("family member {label} has no defining set")]
    MissingSigma { label: usize },
    #[error("missing max-intersections must be exactly one singleton, got {missing:?}")]
    MissingNotSingleton { missing: Vec<Codeword> },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("equality row with an all-zero normal")]
    ZeroNormalEquality,
    #[error("hyperplane normal is zero")]
    ZeroNormal,
    #[error("open sets admit only strict rows")]
    NonStrictRow,
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("atom enumeration over {n} sets exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("need at least {needed} sets, got {got}")]
    TooFewSets { needed: usize, got: usize },
    #[error("sets do not form a sunflower")]
    NotASunflower,
    #[error("expected {expected} points, got {got}")]
    PointCountMismatch { expected: usize, got: usize },
    #[error("point {index} does not lie in petal {index}")]
    PointOutsidePetal { index: usize },
    #[error("flat dimension {k} violates k <= min(d - 1, n - 1) = {bound}")]
    FlatDimension { k: usize, bound: i64 },
    #[error("flat directions are linearly dependent")]
    DependentDirections,
    #[error("parse error: {0}")]
    Parse(String),
}
