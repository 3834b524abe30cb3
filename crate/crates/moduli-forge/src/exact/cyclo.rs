//! The quotient ring F[t]/(t^a - 1).
//!
//! Root-of-unity bookkeeping for the coordinate-scaling actions on homology
//! covers: the formal generator t stands for e^(2*pi*i/a) and the only
//! relation ever used is t^a = 1, so the full quotient ring (rather than the
//! cyclotomic field) keeps reduction to exponent arithmetic.

use crate::error::{Error, Result};
use crate::exact::{Field, Rat, Ring, UniPoly};
use std::fmt;

/// A residue class in F[t]/(t^a - 1), stored with degree < a.
///
/// Carries a base-field context element so that zero residues can still
/// produce constants in the right base field.
#[derive(Clone)]
pub struct CycloRing<F: Field> {
    res: UniPoly<F>,
    a: usize,
    ctx: F,
}

impl<F: Field> CycloRing<F> {
    /// Reduces a polynomial mod t^a - 1. Requires `a >= 2`. `ctx` is any
    /// element of the base field (only its context is used).
    pub fn new(p: UniPoly<F>, a: usize, ctx: &F) -> Result<Self> {
        if a < 2 {
            return Err(Error::Domain(format!("modulus exponent {a} must be >= 2")));
        }
        Ok(CycloRing {
            res: reduce(&p, a),
            a,
            ctx: ctx.zero_like(),
        })
    }

    /// Base-field constant.
    pub fn from_base(c: F, a: usize) -> Result<Self> {
        let ctx = c.zero_like();
        Self::new(UniPoly::constant(c), a, &ctx)
    }

    /// The class of `t^k`.
    pub fn root_power(ctx: &F, k: usize, a: usize) -> Result<Self> {
        Self::new(UniPoly::monomial(ctx.one_like(), k), a, ctx)
    }

    pub fn residue(&self) -> &UniPoly<F> {
        &self.res
    }

    pub fn modulus_exponent(&self) -> usize {
        self.a
    }

    /// Checked product; moduli must agree.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.a != rhs.a {
            return Err(Error::MismatchedContext(format!(
                "cyclotomic moduli t^{} - 1 and t^{} - 1",
                self.a, rhs.a
            )));
        }
        Ok(self.mul(rhs))
    }
}

impl<F: Field> PartialEq for CycloRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.res == other.res
    }
}

fn reduce<F: Field>(p: &UniPoly<F>, a: usize) -> UniPoly<F> {
    let coeffs = p.coeffs();
    if coeffs.is_empty() {
        return UniPoly::zero();
    }
    let zero = coeffs[0].zero_like();
    let mut out = vec![zero; a];
    for (k, c) in coeffs.iter().enumerate() {
        out[k % a] = out[k % a].add(c);
    }
    UniPoly::from_coeffs(out)
}

/// Residue of `p` mod t^a - 1 over the rationals.
pub fn cyclo_reduce(p: &UniPoly<Rat>, a: usize) -> Result<CycloRing<Rat>> {
    CycloRing::new(p.clone(), a, &Rat::zero())
}

impl<F: Field> fmt::Display for CycloRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.res.fmt_with_var(f, "t")?;
        write!(f, " mod t^{}-1", self.a)
    }
}

impl<F: Field> fmt::Debug for CycloRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Ring for CycloRing<F> {
    fn zero_like(&self) -> Self {
        CycloRing {
            res: UniPoly::zero(),
            a: self.a,
            ctx: self.ctx.clone(),
        }
    }
    fn one_like(&self) -> Self {
        CycloRing {
            res: UniPoly::constant(self.ctx.one_like()),
            a: self.a,
            ctx: self.ctx.clone(),
        }
    }
    fn from_int_like(&self, n: i64) -> Self {
        CycloRing {
            res: UniPoly::constant(self.ctx.from_int_like(n)),
            a: self.a,
            ctx: self.ctx.clone(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.a, rhs.a, "mismatched cyclotomic moduli");
        CycloRing {
            res: self.res.add(&rhs.res),
            a: self.a,
            ctx: self.ctx.clone(),
        }
    }
    fn neg(&self) -> Self {
        CycloRing {
            res: self.res.neg(),
            a: self.a,
            ctx: self.ctx.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.a, rhs.a, "mismatched cyclotomic moduli");
        CycloRing {
            res: reduce(&self.res.mul(&rhs.res), self.a),
            a: self.a,
            ctx: self.ctx.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.res.is_zero()
    }
    fn is_one(&self) -> bool {
        self.res.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_pow(k: usize, a: usize) -> CycloRing<Rat> {
        CycloRing::root_power(&Rat::one(), k, a).unwrap()
    }

    #[test]
    fn defining_relation() {
        for a in 2..=6 {
            assert!(t_pow(a, a).is_one(), "t^{a} = 1 mod t^{a}-1");
        }
    }

    #[test]
    fn reduction_example() {
        // t^3 + t = 2t mod t^2 - 1
        let p = UniPoly::from_ints(&[0, 1, 0, 1]);
        let r = cyclo_reduce(&p, 2).unwrap();
        assert_eq!(r.residue(), &UniPoly::from_ints(&[0, 2]));
    }

    #[test]
    fn constant_untouched() {
        for a in 2..=5 {
            let r = cyclo_reduce(&UniPoly::from_ints(&[1]), a).unwrap();
            assert!(r.is_one());
        }
    }

    #[test]
    fn modulus_below_two_rejected() {
        assert!(cyclo_reduce(&UniPoly::from_ints(&[1]), 1).is_err());
        assert!(cyclo_reduce(&UniPoly::from_ints(&[1]), 0).is_err());
    }

    #[test]
    fn root_powers_invert_each_other() {
        let a = 5;
        for k in 0..=a {
            let prod = t_pow(k, a).mul(&t_pow(a - k, a));
            assert!(prod.is_one(), "t^{k} * t^{} = 1", a - k);
        }
    }

    #[test]
    fn zero_keeps_context() {
        let z = t_pow(1, 3).zero_like();
        assert!(z.is_zero());
        assert!(z.one_like().is_one());
        assert_eq!(z.from_int_like(5).residue(), &UniPoly::from_ints(&[5]));
    }

    #[test]
    fn mismatched_moduli_rejected() {
        assert!(t_pow(1, 2).checked_mul(&t_pow(1, 3)).is_err());
    }
}
