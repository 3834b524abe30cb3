//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by exact-arithmetic operations, analyzers and the CLI.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Rational construction with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,

    /// Binary operation on values from different coefficient contexts
    /// (distinct quadratic radicands, distinct cyclotomic moduli, ...).
    #[error("mismatched contexts: {0}")]
    MismatchedContext(String),

    /// Inversion of a non-invertible element.
    #[error("not invertible: {0}")]
    NotInvertible(String),

    /// Tuple arity does not match (projective maps, signatures, words).
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Expression syntax error with byte position.
    #[error("syntax error at position {pos}: {msg}")]
    Parse {
        /// Byte offset into the source text.
        pos: usize,
        /// What went wrong.
        msg: String,
    },

    /// A certificate that must hold by theorem failed to verify.
    /// Surfacing one of these means the implementation is wrong.
    #[error("internal certificate failure: {0}")]
    CertificateFailure(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
