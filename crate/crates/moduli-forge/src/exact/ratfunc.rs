//! The rational function field Q(lambda).
//!
//! A [`RatFunc`] is a quotient of univariate polynomials over the rationals
//! in canonical form: numerator and denominator coprime, denominator monic
//! and nonzero. Equality is componentwise equality of canonical forms.

use crate::error::{Error, Result};
use crate::exact::{Field, Rat, Ring, UniPoly};
use std::fmt;

/// An element of Q(lambda) in canonical form.
#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: UniPoly<Rat>,
    den: UniPoly<Rat>,
}

impl RatFunc {
    /// Builds `num/den` in canonical form: gcd cancelled, denominator monic.
    pub fn new(num: UniPoly<Rat>, den: UniPoly<Rat>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UniPoly::constant(Rat::one()),
            });
        }
        let g = num.gcd(&den).expect("gcd over a field");
        let (num, _) = num.divrem(&g).expect("divisible by gcd");
        let (den, _) = den.divrem(&g).expect("divisible by gcd");
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inv()
            .expect("nonzero leading coefficient");
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: UniPoly<Rat>) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::constant(Rat::one()),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(UniPoly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    /// The transcendental `lambda`.
    pub fn var() -> Self {
        Self::from_poly(UniPoly::monomial(Rat::one(), 1))
    }

    pub fn num(&self) -> &UniPoly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<Rat> {
        &self.den
    }

    /// `Some(r)` when the value is the constant `r`.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        if self.num.degree() == Some(0) && self.den.degree() == Some(0) {
            return Some(self.num.coeff(0).unwrap().clone());
        }
        None
    }

    /// Evaluates at a rational point; `None` at a pole of the canonical form.
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x).mul(&di))
    }

    /// Evaluates in any field containing Q; `None` when the denominator
    /// lands on a non-invertible element.
    pub fn eval_in<G: Field>(&self, x: &G) -> Option<G> {
        let embed = |r: &Rat| x.from_rat_like(r);
        let d = self.den.eval_in(x, &embed);
        let di = d.inv()?;
        Some(self.num.eval_in(x, &embed).mul(&di))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct WithVar<'a>(&'a UniPoly<Rat>);
        impl fmt::Display for WithVar<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with_var(f, "lambda")
            }
        }
        if self.den.is_one() {
            write!(f, "{}", WithVar(&self.num))
        } else {
            write!(f, "({})/({})", WithVar(&self.num), WithVar(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        Self::from_rat(Rat::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_rat(Rat::one())
    }
    fn from_int_like(&self, n: i64) -> Self {
        Self::from_int(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::new(num, den).expect("nonzero denominator product")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominator product")
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
        }
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        Self::from_rat(r.clone())
    }
}
