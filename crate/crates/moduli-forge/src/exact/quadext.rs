//! Quadratic extensions F[s]/(s^2 - D) of an arbitrary base field.
//!
//! The extension constant D is any base-field element and is deliberately
//! not checked for being a non-square: a degenerate D (a square in F) still
//! yields a valid commutative ring, and every identity the analyzers verify
//! is a ring identity. Inversion is partial and fails exactly on zero norm.

use crate::error::{Error, Result};
use crate::exact::{Field, Rat, Ring};
use std::fmt;

/// An element `u + v*s` of F[s]/(s^2 - D).
#[derive(Clone, PartialEq)]
pub struct QuadExt<F: Field> {
    u: F,
    v: F,
    d: F,
}

impl<F: Field> QuadExt<F> {
    pub fn new(u: F, v: F, d: F) -> Self {
        QuadExt { u, v, d }
    }

    /// Base-field constant `u + 0*s` over the extension constant `d`.
    pub fn from_base(u: F, d: F) -> Self {
        let v = u.zero_like();
        QuadExt { u, v, d }
    }

    /// The adjoined square root `s` itself.
    pub fn gen(d: F) -> Self {
        QuadExt {
            u: d.zero_like(),
            v: d.one_like(),
            d,
        }
    }

    pub fn base_part(&self) -> &F {
        &self.u
    }

    pub fn radical_part(&self) -> &F {
        &self.v
    }

    pub fn ext_constant(&self) -> &F {
        &self.d
    }

    /// Conjugation `u + v s -> u - v s`; a ring homomorphism.
    pub fn conj(&self) -> Self {
        QuadExt {
            u: self.u.clone(),
            v: self.v.neg(),
            d: self.d.clone(),
        }
    }

    /// Norm `u^2 - v^2 D`, an element of the base field.
    pub fn norm(&self) -> F {
        self.u
            .mul(&self.u)
            .sub(&self.v.mul(&self.v).mul(&self.d))
    }

    /// Checked product per the `s^2 = D` rule; contexts must agree.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.d != rhs.d {
            return Err(Error::MismatchedContext(format!(
                "extension constants {} and {}",
                self.d, rhs.d
            )));
        }
        Ok(self.mul(rhs))
    }

    /// Checked inverse; fails on zero norm with a named error.
    pub fn checked_inv(&self) -> Result<Self> {
        self.inv()
            .ok_or_else(|| Error::NotInvertible(format!("{self}")))
    }

    /// Checked division through `checked_inv`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.checked_inv()?))
    }
}

impl<F: Field> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{} with s^2 = {}", self.u, self.d)
        } else if self.u.is_zero() {
            write!(f, "({})*s with s^2 = {}", self.v, self.d)
        } else {
            write!(f, "({})+({})*s with s^2 = {}", self.u, self.v, self.d)
        }
    }
}

impl<F: Field> fmt::Debug for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Ring for QuadExt<F> {
    fn zero_like(&self) -> Self {
        QuadExt {
            u: self.u.zero_like(),
            v: self.v.zero_like(),
            d: self.d.clone(),
        }
    }
    fn one_like(&self) -> Self {
        QuadExt {
            u: self.u.one_like(),
            v: self.v.zero_like(),
            d: self.d.clone(),
        }
    }
    fn from_int_like(&self, n: i64) -> Self {
        QuadExt {
            u: self.u.from_int_like(n),
            v: self.v.zero_like(),
            d: self.d.clone(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        assert!(self.d == rhs.d, "mismatched extension constants");
        QuadExt {
            u: self.u.add(&rhs.u),
            v: self.v.add(&rhs.v),
            d: self.d.clone(),
        }
    }
    fn neg(&self) -> Self {
        QuadExt {
            u: self.u.neg(),
            v: self.v.neg(),
            d: self.d.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert!(self.d == rhs.d, "mismatched extension constants");
        QuadExt {
            u: self.u.mul(&rhs.u).add(&self.v.mul(&rhs.v).mul(&self.d)),
            v: self.u.mul(&rhs.v).add(&self.v.mul(&rhs.u)),
            d: self.d.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
    fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }
}

impl<F: Field> Field for QuadExt<F> {
    fn inv(&self) -> Option<Self> {
        let ninv = self.norm().inv()?;
        let c = self.conj();
        Some(QuadExt {
            u: c.u.mul(&ninv),
            v: c.v.mul(&ninv),
            d: self.d.clone(),
        })
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        QuadExt {
            u: self.u.from_rat_like(r),
            v: self.v.zero_like(),
            d: self.d.clone(),
        }
    }
}
