//! Exact rational geometry of open polyhedra.
//!
//! Everything is decided by [`feasible`], which maximizes a common strictness
//! margin `ε ∈ [0, 1]` with an exact simplex. Atoms `U_σ \ ⋃_{j∉σ} U_j` are
//! explored by choosing, for each excluded set, one of its rows to reverse.

pub mod fixtures;
pub mod harness;
pub mod linalg;
pub mod polyhedron;
pub mod rational;
pub mod realization;
mod simplex;
pub mod sunflower;

pub use harness::{
    random_colorful_harness, random_hyperplane_harness, ColorfulReport, HarnessReport,
    InteriorSampler,
};
pub use polyhedron::{feasible, FeasibilityOutcome, LinearConstraint, OpenPolyhedron, Relation};
pub use rational::{parse_rational, Point, Rational};
pub use realization::{
    region_difference_empty, region_difference_witness, union_difference_witness, Realization,
};
pub use sunflower::{
    affine_slice_check, colorful_witness_check, hyperplane_meets, is_sunflower, parse_points_json,
    theorem_sunflower_check, AffineFlat, ColorfulOutcome, Hyperplane, SliceVerdict, Sunflower,
    TheoremCheck,
};
