//! Exact coefficient tower.
//!
//! Everything in the crate computes over this tower; there is no floating
//! point anywhere. The concrete levels are:
//!
//! - [`Rat`]: arbitrary-precision rationals,
//! - [`QuadNumber`]: quadratic number fields Q(sqrt(d)),
//! - [`UniPoly`]: univariate polynomials over any coefficient ring,
//! - [`RatFunc`]: the rational function field Q(lambda),
//! - [`QuadExt`]: quadratic extensions F[s]/(s^2 - D) of any field,
//! - [`CycloRing`]: the quotient ring F[t]/(t^a - 1) for root-of-unity
//!   bookkeeping.
//!
//! Values carry their own context (the radicand d, the extension constant D,
//! the modulus exponent a), are immutable after construction and compare by
//! canonical form.

pub mod cyclo;
pub mod quadext;
pub mod quadnum;
pub mod rat;
pub mod ratfunc;
pub mod unipoly;

pub use cyclo::{cyclo_reduce, CycloRing};
pub use quadext::QuadExt;
pub use quadnum::QuadNumber;
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

use std::fmt;

/// Commutative ring with context-preserving constants.
///
/// Values may carry a context (a radicand, a modulus); `zero_like` and
/// friends produce constants in the **same** context as `self`, which is how
/// generic polynomial code stays total without threading a ring object
/// around. Binary operations on mismatched contexts panic; checked entry
/// points on the concrete types return [`crate::Error`] instead.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    /// Additive identity in the context of `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity in the context of `self`.
    fn one_like(&self) -> Self;
    /// Integer constant in the context of `self`.
    fn from_int_like(&self, n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
}

/// Ring with (partial) inversion.
///
/// `inv` returns `None` exactly on the non-invertible elements. For honest
/// fields that is only zero; for a degenerate [`QuadExt`] (square D) it is
/// the zero divisors as well, and every identity checked through this trait
/// remains a valid ring identity.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` when not invertible.
    fn inv(&self) -> Option<Self>;
    /// Rational constant in the context of `self`.
    fn from_rat_like(&self, r: &Rat) -> Self;
    /// `self / rhs`, `None` when `rhs` is not invertible.
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
    /// Integer power; negative exponents invert first.
    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.one_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}
