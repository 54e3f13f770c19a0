//! Combinatorial codes, trunk morphisms and covering relations, together with
//! an exact rational engine for codes realized by open polyhedra.
//!
//! The combinatorial side lives in [`code`], [`trunk`], [`reduce`],
//! [`complex`], [`morphism`] and [`covering`]; the geometry side in
//! [`geometry`]. [`cn`] builds the family `C_n` and checks its structure.

pub mod cn;
pub mod code;
pub mod codeword;
pub mod complex;
pub mod covering;
pub mod error;
pub mod geometry;
pub mod morphism;
pub mod reduce;
pub mod trunk;

pub use code::Code;
pub use codeword::Codeword;
pub use complex::{MaxIntersectionReport, SimplicialComplex};
pub use error::{CodeError, GeometryError, MorphismError};
pub use morphism::Morphism;
pub use reduce::{isomorphic, isomorphism, Reduction};
pub use trunk::Trunk;
