//! Quadratic number fields Q(sqrt(d)).
//!
//! A [`QuadNumber`] is `a + b*sqrt(d)` with rational `a`, `b` and a fixed
//! nonzero squarefree integer radicand `d` (negative radicands give
//! imaginary quadratic fields). Two values with the same radicand are equal
//! iff componentwise equal; operations on distinct radicands are context
//! errors.

use crate::error::{Error, Result};
use crate::exact::{Field, Rat, Ring};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

/// An element `a + b*sqrt(d)` of the quadratic field Q(sqrt(d)).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadNumber {
    a: Rat,
    b: Rat,
    d: BigInt,
}

impl QuadNumber {
    /// Builds `a + b*sqrt(d)`. The radicand must be squarefree and not 0
    /// or 1; squarefreeness is the caller's contract and is validated for
    /// small factors only.
    pub fn new(a: Rat, b: Rat, d: impl Into<BigInt>) -> Result<Self> {
        let d: BigInt = d.into();
        if d == BigInt::from(0) || d == BigInt::from(1) {
            return Err(Error::Domain(format!("radicand {d} must be != 0, 1")));
        }
        if let Some(sq) = small_square_factor(&d) {
            return Err(Error::Domain(format!(
                "radicand {d} is divisible by {sq}^2; pass a squarefree radicand"
            )));
        }
        Ok(QuadNumber { a, b, d })
    }

    /// Rational constant viewed inside Q(sqrt(d)).
    pub fn from_rat(r: Rat, d: impl Into<BigInt>) -> Result<Self> {
        Self::new(r, Rat::zero(), d)
    }

    /// The generator sqrt(d).
    pub fn sqrt_d(d: impl Into<BigInt>) -> Result<Self> {
        Self::new(Rat::zero(), Rat::one(), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    /// True when the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> Self {
        QuadNumber {
            a: self.a.clone(),
            b: self.b.neg(),
            d: self.d.clone(),
        }
    }

    /// Field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rat {
        let d = rat_from_bigint(&self.d);
        self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(&d))
    }

    /// Checked addition: contexts must match.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_ctx(rhs)?;
        Ok(self.add(rhs))
    }

    /// Checked multiplication: contexts must match.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_ctx(rhs)?;
        Ok(self.mul(rhs))
    }

    fn check_ctx(&self, rhs: &Self) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::MismatchedContext(format!(
                "radicands {} and {}",
                self.d, rhs.d
            )));
        }
        Ok(())
    }

    /// Minimal polynomial over Q as coefficients `[c0, c1, 1]` of
    /// `X^2 + c1 X + c0`, or `[c0, 1]` for rational values (`X - a`).
    pub fn minimal_polynomial(&self) -> Vec<Rat> {
        if self.is_rational() {
            vec![self.a.neg(), Rat::one()]
        } else {
            // (X - a)^2 = b^2 d  =>  X^2 - 2a X + (a^2 - b^2 d)
            vec![
                self.norm(),
                self.a.add(&self.a).neg(),
                Rat::one(),
            ]
        }
    }
}

fn rat_from_bigint(n: &BigInt) -> Rat {
    Rat::new(n.clone(), BigInt::from(1)).expect("unit denominator")
}

/// Smallest prime p <= 1000 with p^2 | n, if any. A full squarefreeness
/// test would need integer factorization; radicands at desk scale are tiny.
fn small_square_factor(n: &BigInt) -> Option<u32> {
    let n = n.abs();
    (2u32..=1000)
        .filter(|p| (2..*p).all(|q| p % q != 0))
        .find(|&p| (&n % (BigInt::from(p) * BigInt::from(p))) == BigInt::from(0))
}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if !self.b.is_negative() {
                write!(f, "+")?;
            }
        }
        if self.b.is_one() {
            write!(f, "sqrt({})", self.d)
        } else if self.b == Rat::from_int(-1) {
            write!(f, "-sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for QuadNumber {
    fn zero_like(&self) -> Self {
        QuadNumber {
            a: Rat::zero(),
            b: Rat::zero(),
            d: self.d.clone(),
        }
    }
    fn one_like(&self) -> Self {
        QuadNumber {
            a: Rat::one(),
            b: Rat::zero(),
            d: self.d.clone(),
        }
    }
    fn from_int_like(&self, n: i64) -> Self {
        QuadNumber {
            a: Rat::from_int(n),
            b: Rat::zero(),
            d: self.d.clone(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "mismatched radicands");
        QuadNumber {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
            d: self.d.clone(),
        }
    }
    fn neg(&self) -> Self {
        QuadNumber {
            a: self.a.neg(),
            b: self.b.neg(),
            d: self.d.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "mismatched radicands");
        let d = rat_from_bigint(&self.d);
        QuadNumber {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.b).mul(&d)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a)),
            d: self.d.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl Field for QuadNumber {
    fn inv(&self) -> Option<Self> {
        // d squarefree != 0,1 makes the norm vanish only at zero
        let n = self.norm();
        let ninv = n.inv()?;
        let c = self.conj();
        Some(QuadNumber {
            a: c.a.mul(&ninv),
            b: c.b.mul(&ninv),
            d: self.d.clone(),
        })
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        QuadNumber {
            a: r.clone(),
            b: Rat::zero(),
            d: self.d.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64), d: i64) -> QuadNumber {
        QuadNumber::new(
            Rat::new(a.0, a.1).unwrap(),
            Rat::new(b.0, b.1).unwrap(),
            d,
        )
        .unwrap()
    }

    #[test]
    fn klein_alpha_times_conjugate() {
        // alpha = (-1+sqrt(-7))/2, alpha * conj(alpha) = norm = (1+7)/4 = 2
        let alpha = q((-1, 2), (1, 2), -7);
        let prod = alpha.mul(&alpha.conj());
        assert_eq!(prod, q((2, 1), (0, 1), -7));
        assert_eq!(alpha.norm(), Rat::from_int(2));
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = q((3, 2), (-1, 3), 5);
        let y = q((-2, 1), (4, 7), 5);
        assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
    }

    #[test]
    fn conjugation_is_a_ring_homomorphism() {
        let x = q((1, 1), (2, 1), -7);
        let y = q((-3, 4), (5, 2), -7);
        assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
        assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
    }

    #[test]
    fn inverse() {
        let x = q((0, 1), (1, 1), -7); // sqrt(-7)
        let xi = x.inv().unwrap();
        assert!(x.mul(&xi).is_one());
        assert_eq!(xi, q((0, 1), (-1, 7), -7));
        assert!(q((0, 1), (0, 1), -7).inv().is_none());
    }

    #[test]
    fn context_checks() {
        let x = q((1, 1), (1, 1), 2);
        let y = q((1, 1), (1, 1), 3);
        assert!(matches!(
            x.checked_mul(&y),
            Err(Error::MismatchedContext(_))
        ));
        assert!(QuadNumber::sqrt_d(12).is_err()); // 4 | 12
        assert!(QuadNumber::sqrt_d(1).is_err());
        assert!(QuadNumber::sqrt_d(0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(q((-3, 2), (3, 2), -7).to_string(), "-3/2+3/2*sqrt(-7)");
        assert_eq!(q((0, 1), (-1, 1), 2).to_string(), "-sqrt(2)");
        assert_eq!(q((5, 1), (0, 1), 2).to_string(), "5");
    }

    #[test]
    fn minimal_polynomial() {
        // 1 + sqrt(2): X^2 - 2X - 1
        let x = q((1, 1), (1, 1), 2);
        assert_eq!(
            x.minimal_polynomial(),
            vec![Rat::from_int(-1), Rat::from_int(-2), Rat::one()]
        );
    }
}
