//! Sparse homogeneous multivariate polynomials and projective maps.
//!
//! Provides exact composition, principal-ideal membership by single-divisor
//! division, projective equality strictly and modulo a curve, and a
//! univariate perfect-square extractor. The monomial order is graded
//! lexicographic, fixed globally.

pub mod multipoly;
pub mod projmap;
pub mod squares;

pub use multipoly::{Monomial, MultiPoly};
pub use projmap::{projective_closure, ProjMap, ProjVerdict};
pub use squares::perfect_square;
