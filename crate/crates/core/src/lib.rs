//! Exact computations for weighted graded Poisson structures on polynomial
//! rings over ℚ: bracket verification, modular derivations, graded twists,
//! the rigidity invariant `rgt`, and truncated Poisson cohomology.
//!
//! Variable indices are 0-based throughout the Rust API. Textual forms
//! (`x1`, bracket keys `"1,2"`) are 1-based.

pub mod calculus;
pub mod catalog;
pub mod cohomology;
pub mod document;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod poisson;
pub mod poly;
pub mod report;
pub mod solver;

pub use calculus::Derivation;
pub use catalog::CatalogEntry;
pub use cohomology::SkewDerivation;
pub use error::{Error, ParseError, Result};
pub use poisson::PoissonStructure;
pub use poly::{Homogeneity, Poly, WeightedGrading};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
