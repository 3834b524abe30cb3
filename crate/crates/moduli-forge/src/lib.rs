//! Exact-arithmetic toolkit for fields of moduli of closed Riemann surfaces.
//!
//! Everything here runs over an exact coefficient tower (arbitrary-precision
//! rationals, quadratic number fields, the rational function field
//! Q(lambda), and quadratic extensions of it) and produces verdicts backed
//! by algebraic certificates rather than numerics. The main capabilities:
//!
//! - [`signatures`]: quadrangular orbifold signature classification into
//!   field-of-moduli definability cases, plus Riemann-Hurwitz genus
//!   arithmetic for smooth quotients.
//! - [`moebius`]: Moebius transformations, the anharmonic group acting on
//!   the lambda-line, and the elliptic j-invariant.
//! - [`kft`]: the one-parameter family of plane quartics with a symmetric
//!   group S4 action: automorphism certificates, branch data, the genus-one
//!   quotient invariants, companion parameters, conformal equivalence and
//!   fields of moduli, and the exceptional Fermat/Klein members.
//! - [`homology`]: homology covers of four-point orbifolds, the Legendre
//!   elliptic curve with its lifted involution group, and the degree-four
//!   covering map with exact branch certificates.
//! - [`finite_groups`]: generating-vector censuses of smooth epimorphisms
//!   onto small symmetric groups with braid-type moves.
//! - [`cli`]: an expression parser for exact field elements and subcommands
//!   emitting deterministic JSON reports.
//!
//! Each `examples/` program exercises one capability end to end; the
//! `moduli-forge` binary exposes the same analyses as subcommands.

pub mod cli;
pub mod error;
pub mod evidence;
pub mod exact;
pub mod finite_groups;
pub mod homology;
pub mod kft;
pub mod moebius;
pub mod polynomials;
pub mod signatures;

pub use error::{Error, Result};
