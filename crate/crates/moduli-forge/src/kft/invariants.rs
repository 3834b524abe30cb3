//! The five invariants of a family member: the fiber coordinate `G` and
//! the j-invariants of the four genus-one quotient orbifolds.

use crate::error::{Error, Result};
use crate::exact::{Field, Rat, RatFunc, UniPoly};

/// The invariant tuple attached to `lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct KftInvariants<F: Field> {
    /// `G = 16 (1+lambda)^3 / (27 (2+lambda))`.
    pub g: F,
    /// j-invariant of the quotient by the order-two subgroup (B-type):
    /// `-(lambda^2 - 12 lambda - 12)^3 / (108 (1+lambda) (2+lambda)^4)`.
    pub j2: F,
    /// j-invariant of the quotient by the order-three subgroup:
    /// `(16 lambda^2 + 48 lambda + 33)^3 / (108 (1+lambda) (2+lambda))`.
    pub j3: F,
    /// j-invariant of the quotient by the order-four subgroup:
    /// `(lambda^2 + 18 lambda + 33)^3 / (108 (1+lambda)^4 (2+lambda))`.
    pub j4: F,
    /// j-invariant of the quotient by the Klein four-subgroup:
    /// `4 (lambda^2 + 3 lambda + 3)^3 / (27 (1+lambda)^2 (2+lambda)^2)`.
    pub j22: F,
}

fn poly(c: &[i64]) -> UniPoly<Rat> {
    UniPoly::from_ints(c)
}

fn ratfunc(num: UniPoly<Rat>, den: UniPoly<Rat>) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator polynomial")
}

/// `G(lambda)` as a canonical rational function.
pub fn g_formula() -> RatFunc {
    ratfunc(
        poly(&[1, 1]).pow(3).scale(&Rat::from_int(16)),
        poly(&[2, 1]).scale(&Rat::from_int(27)),
    )
}

/// `j_2` as a canonical rational function.
pub fn j2_formula() -> RatFunc {
    ratfunc(
        poly(&[-12, -12, 1]).pow(3).scale(&Rat::from_int(-1)),
        poly(&[1, 1]).mul(&poly(&[2, 1]).pow(4)).scale(&Rat::from_int(108)),
    )
}

/// `j_3` as a canonical rational function.
pub fn j3_formula() -> RatFunc {
    ratfunc(
        poly(&[33, 48, 16]).pow(3),
        poly(&[1, 1]).mul(&poly(&[2, 1])).scale(&Rat::from_int(108)),
    )
}

/// `j_4` as a canonical rational function.
pub fn j4_formula() -> RatFunc {
    ratfunc(
        poly(&[33, 18, 1]).pow(3),
        poly(&[1, 1]).pow(4).mul(&poly(&[2, 1])).scale(&Rat::from_int(108)),
    )
}

/// `j_{2,2}` as a canonical rational function.
pub fn j22_formula() -> RatFunc {
    ratfunc(
        poly(&[3, 3, 1]).pow(3).scale(&Rat::from_int(4)),
        poly(&[1, 1])
            .pow(2)
            .mul(&poly(&[2, 1]).pow(2))
            .scale(&Rat::from_int(27)),
    )
}

/// Evaluates one named formula at `lambda` in any field containing Q,
/// failing with the formula's name at a pole.
pub fn eval_formula<F: Field>(name: &str, formula: &RatFunc, lambda: &F) -> Result<F> {
    formula.eval_in(lambda).ok_or_else(|| {
        Error::Domain(format!("pole of {name} at lambda = {lambda}"))
    })
}

/// The five invariants at `lambda`; the denominators only vanish on the
/// singular boundary {-2, -1}.
pub fn kft_invariants<F: Field>(lambda: &F) -> Result<KftInvariants<F>> {
    Ok(KftInvariants {
        g: eval_formula("G", &g_formula(), lambda)?,
        j2: eval_formula("j2", &j2_formula(), lambda)?,
        j3: eval_formula("j3", &j3_formula(), lambda)?,
        j4: eval_formula("j4", &j4_formula(), lambda)?,
        j22: eval_formula("j22", &j22_formula(), lambda)?,
    })
}
