//! Companion parameters: the other two points of the `G`-fiber through a
//! given `lambda`, living in the quadratic extension by `sqrt(lambda^2-4)`.
//!
//! The sign convention is fixed here: `lambda2` carries the minus sign in
//! front of the square root and `lambda3` the plus sign. The pair
//! `{lambda2, lambda3}` is the invariant object; flipping the square root
//! swaps the two.

use crate::error::{Error, Result};
use crate::evidence::{Certificate, EvidenceRecord};
use crate::exact::{Field, QuadExt, Ring, UniPoly};
use crate::kft::invariants::{
    eval_formula, g_formula, j22_formula, j2_formula, j3_formula, j4_formula,
};
use crate::exact::RatFunc;

/// The companion pair for one `lambda`, with the fiber certificate.
#[derive(Clone, Debug)]
pub struct Companions<F: Field> {
    pub lambda2: QuadExt<F>,
    pub lambda3: QuadExt<F>,
    pub record: EvidenceRecord,
}

/// The extension constant `lambda^2 - 4`.
pub fn companion_ext_constant<F: Field>(lambda: &F) -> F {
    lambda.mul(lambda).sub(&lambda.from_int_like(4))
}

/// Computes the companions and certifies the fiber identity
/// `16 (1+X)^3 - 27 G(lambda) (2+X) = 16 (X - lambda)(X - lambda2)(X - lambda3)`
/// as polynomials in `X` over the extension.
pub fn kft_companions<F: Field>(lambda: &F) -> Result<Companions<F>> {
    if *lambda == lambda.from_int_like(-2) {
        return Err(Error::Domain(
            "lambda = -2 is outside the family (pole of G)".into(),
        ));
    }
    let d = companion_ext_constant(lambda);
    let s = QuadExt::gen(d.clone());
    let c = |v: F| QuadExt::from_base(v, d.clone());
    let one = lambda.one_like();

    // -(6 + 5 lambda + lambda^2 -/+ (1+lambda) s) / (2 (2+lambda))
    let head = c(lambda
        .from_int_like(6)
        .add(&lambda.from_int_like(5).mul(lambda))
        .add(&lambda.mul(lambda)));
    let tail = c(one.add(lambda)).mul(&s);
    let den = c(lambda.from_int_like(2).mul(&lambda.from_int_like(2).add(lambda)));
    let lambda2 = head.sub(&tail).checked_div(&den)?.neg();
    let lambda3 = head.add(&tail).checked_div(&den)?.neg();

    let mut record = EvidenceRecord::new("companion fiber");
    let g = eval_formula("G", &g_formula(), lambda)?;
    let g_ext = c(g);

    // left side: 16(1+X)^3 - 27 G (2+X) =
    //   16 X^3 + 48 X^2 + (48 - 27G) X + (16 - 54G)
    let k = |n: i64| c(lambda.from_int_like(n));
    let lhs = UniPoly::from_coeffs(vec![
        k(16).sub(&k(54).mul(&g_ext)),
        k(48).sub(&k(27).mul(&g_ext)),
        k(48),
        k(16),
    ]);
    // right side: 16 (X - lambda)(X - lambda2)(X - lambda3)
    let lam_ext = c(lambda.clone());
    let root = |r: &QuadExt<F>| UniPoly::from_coeffs(vec![r.neg(), r.one_like()]);
    let rhs = root(&lam_ext)
        .mul(&root(&lambda2))
        .mul(&root(&lambda3))
        .scale(&k(16));
    record.push(if lhs == rhs {
        Certificate::pass(
            "fiber cubic identity",
            "16(1+X)^3 - 27 G (2+X) = 16 (X-lambda)(X-lambda2)(X-lambda3)",
        )
    } else {
        Certificate::fail(
            "fiber cubic identity",
            format!("lhs {lhs} differs from rhs {rhs}"),
        )
    });

    Ok(Companions {
        lambda2,
        lambda3,
        record,
    })
}

/// Separation of the invariant tuple along the fiber: with `lambda`
/// symbolic, records which of `G, j2, j3, j4, j22` differ at the
/// companions. `G` agrees by construction; `j3` separates both.
pub fn kft_separation_record() -> Result<EvidenceRecord> {
    let lam = RatFunc::var();
    let comps = kft_companions(&lam)?;
    let mut rec = EvidenceRecord::new("invariant separation along the G-fiber");

    let formulas = [
        ("G", g_formula()),
        ("j2", j2_formula()),
        ("j3", j3_formula()),
        ("j4", j4_formula()),
        ("j22", j22_formula()),
    ];
    for (which, companion) in [("lambda2", &comps.lambda2), ("lambda3", &comps.lambda3)] {
        let mut any_nonzero = false;
        for (name, f) in &formulas {
            let at_lambda = QuadExt::from_base(
                f.eval_in(&lam).expect("no pole at a transcendental"),
                companion.ext_constant().clone(),
            );
            let at_companion = f
                .eval_in(companion)
                .ok_or_else(|| Error::Domain(format!("pole of {name} at {which}")))?;
            let differs = at_companion != at_lambda;
            if *name == "G" {
                // negative control: the fiber coordinate cannot separate
                rec.push(if differs {
                    Certificate::fail(
                        format!("G({which}) = G(lambda)"),
                        "fiber coordinate changed along its own fiber",
                    )
                } else {
                    Certificate::pass(
                        format!("G({which}) = G(lambda)"),
                        "fiber coordinate constant along the fiber",
                    )
                });
                continue;
            }
            if differs {
                any_nonzero = true;
            }
            if *name == "j3" {
                rec.push(if differs {
                    Certificate::pass(
                        format!("j3({which}) differs from j3(lambda)"),
                        "nonzero difference in the quadratic extension",
                    )
                } else {
                    Certificate::fail(
                        format!("j3({which}) differs from j3(lambda)"),
                        "difference vanished",
                    )
                });
            }
        }
        rec.push(if any_nonzero {
            Certificate::pass(
                format!("invariant tuple separates lambda from {which}"),
                "some coordinate of (j2, j3, j4, j22) differs",
            )
        } else {
            Certificate::fail(
                format!("invariant tuple separates lambda from {which}"),
                "all five invariants agree",
            )
        });
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn symbolic_fiber_identity() {
        let comps = kft_companions(&RatFunc::var()).unwrap();
        assert!(comps.record.all_passed(), "{}", comps.record);
    }

    #[test]
    fn companions_at_minus_five_halves() {
        // sqrt(lambda^2 - 4) = 3/2 rationally: the companion set is {2, -5/2}
        let comps = kft_companions(&r(-5, 2)).unwrap();
        assert!(comps.record.all_passed(), "{}", comps.record);
        // specialize the formal s to 3/2 and -3/2: the value set must be
        // {2, -5/2} either way
        let spec = |x: &QuadExt<Rat>, sval: Rat| x.base_part().add(&x.radical_part().mul(&sval));
        let plus: Vec<Rat> = vec![
            spec(&comps.lambda2, r(3, 2)),
            spec(&comps.lambda3, r(3, 2)),
        ];
        assert!(plus.contains(&r(2, 1)) && plus.contains(&r(-5, 2)));
        let minus: Vec<Rat> = vec![
            spec(&comps.lambda2, r(-3, 2)),
            spec(&comps.lambda3, r(-3, 2)),
        ];
        assert!(minus.contains(&r(2, 1)) && minus.contains(&r(-5, 2)));
    }

    #[test]
    fn companions_at_zero() {
        // G(0) = 8/27; companions are the other two roots of
        // 16(1+X)^3 = 8(2+X); the fiber certificate pins them exactly
        let comps = kft_companions(&Rat::zero()).unwrap();
        assert!(comps.record.all_passed(), "{}", comps.record);
    }

    #[test]
    fn separation_record() {
        let rec = kft_separation_record().unwrap();
        assert!(rec.all_passed(), "{rec}");
    }

    #[test]
    fn minus_two_rejected() {
        assert!(kft_companions(&Rat::from_int(-2)).is_err());
    }
}
