//! The quartic family, its S4 action and the invariant map.

use crate::error::{Error, Result};
use crate::evidence::{CertStatus, Certificate, EvidenceRecord};
use crate::exact::{Field, QuadNumber, Rat, Ring};
use crate::polynomials::{projective_closure, MultiPoly, ProjMap, ProjVerdict};

/// One member of the quartic family.
#[derive(Clone, Debug)]
pub struct KftCurve<F: Field> {
    pub lambda: F,
    pub quartic: MultiPoly<F>,
    /// Parameter outside {-2, -1, 2}?
    pub smooth: bool,
}

/// `x^4 + y^4 + z^4 + lambda (x^2 y^2 + y^2 z^2 + z^2 x^2)` over the field
/// of `lambda`.
pub fn kft_quartic<F: Field>(lambda: &F) -> MultiPoly<F> {
    let one = lambda.one_like();
    let t = |c: &F, e: [u32; 3]| MultiPoly::term(c.clone(), e.to_vec());
    t(&one, [4, 0, 0])
        .add(&t(&one, [0, 4, 0]))
        .add(&t(&one, [0, 0, 4]))
        .add(&t(lambda, [2, 2, 0]))
        .add(&t(lambda, [0, 2, 2]))
        .add(&t(lambda, [2, 0, 2]))
}

/// Is the parameter outside the singular set {-2, -1, 2}?
pub fn in_smooth_family<F: Field>(lambda: &F) -> bool {
    [-2i64, -1, 2]
        .iter()
        .all(|&n| *lambda != lambda.from_int_like(n))
}

/// Builds the family member; singular parameters are allowed but flagged.
pub fn kft_curve<F: Field>(lambda: F) -> KftCurve<F> {
    let quartic = kft_quartic(&lambda);
    let smooth = in_smooth_family(&lambda);
    KftCurve {
        lambda,
        quartic,
        smooth,
    }
}

/// The order-four generator `A([x:y:z]) = [y:-x:-z]`.
pub fn kft_map_a<F: Field>(ctx: &F) -> ProjMap<F> {
    let one = ctx.one_like();
    let m = |c: &F, e: [u32; 3]| MultiPoly::term(c.clone(), e.to_vec());
    ProjMap::new(vec![
        m(&one, [0, 1, 0]),
        m(&one.neg(), [1, 0, 0]),
        m(&one.neg(), [0, 0, 1]),
    ])
    .expect("valid linear map")
}

/// The involution `B([x:y:z]) = [x:z:y]`.
pub fn kft_map_b<F: Field>(ctx: &F) -> ProjMap<F> {
    let one = ctx.one_like();
    let m = |c: &F, e: [u32; 3]| MultiPoly::term(c.clone(), e.to_vec());
    ProjMap::new(vec![
        m(&one, [1, 0, 0]),
        m(&one, [0, 0, 1]),
        m(&one, [0, 1, 0]),
    ])
    .expect("valid linear map")
}

fn verdict_cert(name: &str, verdict: &ProjVerdict) -> Certificate {
    match verdict {
        ProjVerdict::StrictEqual => Certificate::new(
            name,
            CertStatus::PassStrict,
            "all cross-products vanish identically",
        ),
        ProjVerdict::EqualOnCurve => Certificate::new(
            name,
            CertStatus::PassOnCurve,
            "cross-products divisible by the curve form",
        ),
        ProjVerdict::NotEqual { i, j, witness } => Certificate::fail(
            name,
            format!("cross-product ({i},{j}) = {witness}"),
        ),
    }
}

/// Certifies the S4 action on `C_lambda`: both generators preserve the
/// quartic, the presentation relations hold projectively, and the matrix
/// group they generate modulo scalars has order 24.
pub fn kft_group_check<F: Field>(lambda: &F) -> Result<EvidenceRecord> {
    let mut rec = EvidenceRecord::new("S4 action on the quartic family");
    let curve = kft_quartic(lambda);
    let a = kft_map_a(lambda);
    let b = kft_map_b(lambda);

    for (name, map) in [("A preserves the quartic", &a), ("B preserves the quartic", &b)] {
        match map.preserves_curve(&curve)? {
            Some(cof) => rec.push(Certificate::pass(name, format!("cofactor {cof}"))),
            None => rec.push(Certificate::fail(name, "substituted form not divisible")),
        }
    }

    let id = ProjMap::identity(lambda, 3);
    rec.push(verdict_cert(
        "A^4 = identity",
        &a.iterate(4)?.proj_equal(&id, None)?,
    ));
    rec.push(verdict_cert(
        "B^2 = identity",
        &b.iterate(2)?.proj_equal(&id, None)?,
    ));
    let ba = b.compose(&a)?;
    rec.push(verdict_cert(
        "(BA)^3 = identity",
        &ba.iterate(3)?.proj_equal(&id, None)?,
    ));

    match projective_closure(&[a, b], 48)? {
        Some(members) if members.len() == 24 => rec.push(Certificate::pass(
            "group order modulo scalars",
            "closure of <A, B> has exactly 24 elements",
        )),
        Some(members) => rec.push(Certificate::fail(
            "group order modulo scalars",
            format!("closure has {} elements, expected 24", members.len()),
        )),
        None => rec.push(Certificate::fail(
            "group order modulo scalars",
            "closure exceeded the cap",
        )),
    }
    Ok(rec)
}

/// Certifies that the degree-24 quotient map
/// `Q([x:y:z]) = x^2 y^2 z^2 / (x^2 + y^2 + z^2)^3` is invariant under the
/// group: numerator and the base of the denominator are literally fixed by
/// both generators, and `Q o A = Q = Q o B = Q o BA` as rational maps.
pub fn q_invariance_check<F: Field>(ctx: &F) -> Result<EvidenceRecord> {
    let mut rec = EvidenceRecord::new("invariance of the quotient map Q");
    let one = ctx.one_like();
    let num = MultiPoly::term(one.clone(), vec![2, 2, 2]);
    let sum_sq = MultiPoly::term(one.clone(), vec![2, 0, 0])
        .add(&MultiPoly::term(one.clone(), vec![0, 2, 0]))
        .add(&MultiPoly::term(one.clone(), vec![0, 0, 2]));
    let a = kft_map_a(ctx);
    let b = kft_map_b(ctx);
    let ba = b.compose(&a)?;

    for (name, form) in [("x^2 y^2 z^2", &num), ("x^2 + y^2 + z^2", &sum_sq)] {
        for (gen_name, map) in [("A", &a), ("B", &b)] {
            let pulled = form.substitute(map.components())?;
            let cert_name = format!("{name} fixed by {gen_name}");
            if pulled == *form {
                rec.push(Certificate::pass(cert_name, "substitution returns the form"));
            } else {
                rec.push(Certificate::fail(cert_name, format!("pulled back to {pulled}")));
            }
        }
    }

    // Q as a rational map: cross-identity num_M * den = num * den_M
    let den = sum_sq.pow(3);
    for (name, map) in [("Q o A = Q", &a), ("Q o B = Q", &b), ("Q o BA = Q", &ba)] {
        let num_m = num.substitute(map.components())?;
        let den_m = den.substitute(map.components())?;
        if num_m.mul(&den) == num.mul(&den_m) {
            rec.push(Certificate::pass(name, "cross-multiplication identity"));
        } else {
            rec.push(Certificate::fail(name, "cross-multiplication mismatch"));
        }
    }
    Ok(rec)
}

/// Exact singular point for the three boundary parameters:
/// `lambda = -1` has `[1:1:1]`, `lambda = -2` has `[0:1:-1]` (both over Q),
/// `lambda = 2` has `[1:i:0]` over Q(i). Returns the witness evidence.
pub fn singular_witness(lambda: i64) -> Result<EvidenceRecord> {
    match lambda {
        -1 | -2 => {
            let lam = Rat::from_int(lambda);
            let point: Vec<Rat> = match lambda {
                -1 => vec![Rat::one(), Rat::one(), Rat::one()],
                _ => vec![Rat::zero(), Rat::one(), Rat::from_int(-1)],
            };
            witness_record(&lam, &point, lambda)
        }
        2 => {
            let i = QuadNumber::sqrt_d(-1).expect("-1 is squarefree");
            let lam = i.from_int_like(2);
            let point = vec![i.one_like(), i.clone(), i.zero_like()];
            witness_record(&lam, &point, lambda)
        }
        _ => Err(Error::Domain(format!(
            "no singular witness catalogued for lambda = {lambda}; the singular set is {{-2, -1, 2}}"
        ))),
    }
}

fn witness_record<F: Field>(lambda: &F, point: &[F], tag: i64) -> Result<EvidenceRecord> {
    let mut rec = EvidenceRecord::new(format!("singular member at lambda = {tag}"));
    let curve = kft_quartic(lambda);
    let pt_str = format!(
        "[{}:{}:{}]",
        point[0], point[1], point[2]
    );
    let value = curve.eval_point(point)?;
    rec.push(if value.is_zero() {
        Certificate::pass("point on the quartic", pt_str.clone())
    } else {
        Certificate::fail("point on the quartic", format!("value {value}"))
    });
    for (i, var) in ["x", "y", "z"].iter().enumerate() {
        let d = curve.partial(i).eval_point(point)?;
        rec.push(if d.is_zero() {
            Certificate::pass(format!("d/d{var} vanishes"), pt_str.clone())
        } else {
            Certificate::fail(format!("d/d{var} vanishes"), format!("value {d}"))
        });
    }
    Ok(rec)
}

/// Candidate-family smoothness check at a concrete parameter: a singular
/// point with a zero coordinate forces `lambda^2 = 4`, and one with all
/// squares equal forces `lambda = -1`. Both conditions are tested exactly.
pub fn smooth_candidate_record<F: Field>(lambda: &F) -> EvidenceRecord {
    let mut rec = EvidenceRecord::new("candidate singular families");
    let four = lambda.from_int_like(4);
    let lam_sq = lambda.mul(lambda);
    rec.push(if lam_sq != four {
        Certificate::pass(
            "no singular point with a zero coordinate",
            "lambda^2 != 4",
        )
    } else {
        Certificate::fail(
            "no singular point with a zero coordinate",
            "lambda^2 = 4 admits one",
        )
    });
    let minus_one = lambda.from_int_like(-1);
    rec.push(if *lambda != minus_one {
        Certificate::pass(
            "no singular point with all squares equal",
            "lambda != -1",
        )
    } else {
        Certificate::fail(
            "no singular point with all squares equal",
            "lambda = -1 admits [1:1:1]",
        )
    });
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatFunc;

    #[test]
    fn fermat_member() {
        let c = kft_curve(Rat::zero());
        assert!(c.smooth);
        assert_eq!(c.quartic.num_terms(), 3);
        assert_eq!(c.quartic.to_string(), "x^4+y^4+z^4");
    }

    #[test]
    fn boundary_members_flagged() {
        assert!(!kft_curve(Rat::from_int(-1)).smooth);
        assert!(!kft_curve(Rat::from_int(2)).smooth);
        assert!(!kft_curve(Rat::from_int(-2)).smooth);
        assert!(kft_curve(Rat::from_int(1)).smooth);
    }

    #[test]
    fn group_check_symbolic() {
        let rec = kft_group_check(&RatFunc::var()).unwrap();
        assert!(rec.all_passed(), "{rec}");
    }

    #[test]
    fn a_preserves_quartic_with_unit_cofactor() {
        let lam = RatFunc::var();
        let curve = kft_quartic(&lam);
        let q = kft_map_a(&lam).preserves_curve(&curve).unwrap().unwrap();
        assert_eq!(q, MultiPoly::constant(lam.one_like(), 3));
    }

    #[test]
    fn q_invariance_symbolic_context() {
        let rec = q_invariance_check(&RatFunc::var()).unwrap();
        assert!(rec.all_passed(), "{rec}");
    }

    #[test]
    fn singular_witnesses_all_three() {
        for lam in [-2, -1, 2] {
            let rec = singular_witness(lam).unwrap();
            assert!(rec.all_passed(), "{rec}");
        }
        assert!(singular_witness(1).is_err());
    }

    #[test]
    fn smooth_candidates_pass_at_one_and_fail_on_boundary() {
        assert!(smooth_candidate_record(&Rat::from_int(1)).all_passed());
        assert!(smooth_candidate_record(&Rat::zero()).all_passed());
        assert!(!smooth_candidate_record(&Rat::from_int(-1)).all_passed());
        assert!(!smooth_candidate_record(&Rat::from_int(2)).all_passed());
    }
}
