//! Concrete parameter values: equivalence decisions, fields of moduli, the
//! exceptional Fermat and Klein members, and the hyperelliptic boundary
//! point of the family.

use crate::error::{Error, Result};
use crate::evidence::{CertStatus, Certificate, EvidenceRecord};
use crate::exact::{QuadNumber, Rat, Ring, UniPoly};
use crate::kft::curve::{in_smooth_family, kft_map_a, kft_map_b, kft_quartic};
use crate::polynomials::{projective_closure, ProjMap, ProjVerdict};
use crate::signatures::{rh_genus, Signature};
use std::fmt;

/// A concrete algebraic parameter: rational or quadratic irrational.
#[derive(Clone, PartialEq, Debug)]
pub enum AlgValue {
    Rational(Rat),
    Quadratic(QuadNumber),
}

impl AlgValue {
    /// Complex conjugation: the involution of the quadratic field for
    /// negative radicands; rational values are their own conjugates. For a
    /// real quadratic field the Galois conjugate is returned (the value and
    /// its image define the same abstract field).
    pub fn conj(&self) -> AlgValue {
        match self {
            AlgValue::Rational(r) => AlgValue::Rational(r.clone()),
            AlgValue::Quadratic(q) => AlgValue::Quadratic(q.conj()),
        }
    }

    /// Exact equality across the canonical embedding of Q into Q(sqrt d).
    pub fn eq_embedded(&self, other: &AlgValue) -> Result<bool> {
        match (self, other) {
            (AlgValue::Rational(a), AlgValue::Rational(b)) => Ok(a == b),
            (AlgValue::Rational(r), AlgValue::Quadratic(q))
            | (AlgValue::Quadratic(q), AlgValue::Rational(r)) => {
                Ok(q.is_rational() && q.rational_part() == r)
            }
            (AlgValue::Quadratic(a), AlgValue::Quadratic(b)) => {
                if a.is_rational() || b.is_rational() {
                    return Ok(a.is_rational()
                        && b.is_rational()
                        && a.rational_part() == b.rational_part());
                }
                if a.radicand() != b.radicand() {
                    return Err(Error::MismatchedContext(format!(
                        "cannot compare values over sqrt({}) and sqrt({})",
                        a.radicand(),
                        b.radicand()
                    )));
                }
                Ok(a == b)
            }
        }
    }

    pub fn is_in_family(&self) -> bool {
        match self {
            AlgValue::Rational(r) => in_smooth_family(r),
            AlgValue::Quadratic(q) => in_smooth_family(q),
        }
    }
}

impl fmt::Display for AlgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgValue::Rational(r) => write!(f, "{r}"),
            AlgValue::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

/// The three exceptional parameters, where the automorphism group jumps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExceptionalMember {
    /// `lambda = 0`: the Fermat quartic, 96 automorphisms.
    Fermat,
    /// `lambda = 3(-1 + sqrt(-7))/2`: Klein's quartic, 168 automorphisms.
    KleinPlus,
    /// `lambda = 3(-1 - sqrt(-7))/2`: the conjugate Klein point.
    KleinMinus,
}

impl ExceptionalMember {
    /// Fermat and the two Klein points give just two curves.
    pub fn curve_kind(self) -> &'static str {
        match self {
            ExceptionalMember::Fermat => "Fermat",
            _ => "Klein",
        }
    }
}

/// `3 alpha = 3(-1 + sqrt(-7))/2`, the Klein parameter.
pub fn klein_point() -> QuadNumber {
    QuadNumber::new(Rat::new(-3, 2).unwrap(), Rat::new(3, 2).unwrap(), -7)
        .expect("-7 is squarefree")
}

/// Membership in the exceptional set, decided by exact equality against
/// the three listed points.
pub fn exceptional_member(v: &AlgValue) -> Option<ExceptionalMember> {
    match v {
        AlgValue::Rational(r) => r.is_zero().then_some(ExceptionalMember::Fermat),
        AlgValue::Quadratic(q) => {
            if q.is_rational() {
                return q
                    .rational_part()
                    .is_zero()
                    .then_some(ExceptionalMember::Fermat);
            }
            if q.radicand() != klein_point().radicand() {
                return None;
            }
            if *q == klein_point() {
                Some(ExceptionalMember::KleinPlus)
            } else if *q == klein_point().conj() {
                Some(ExceptionalMember::KleinMinus)
            } else {
                None
            }
        }
    }
}

/// Equivalence decision for a pair of concrete family members.
#[derive(Clone, Debug)]
pub struct EquivalenceDecision {
    pub conformal: bool,
    pub anticonformal: bool,
    pub exceptional: (Option<ExceptionalMember>, Option<ExceptionalMember>),
    pub reason: String,
}

/// Decides conformal and anticonformal equivalence of two family members.
///
/// Off the exceptional set the answers are exact equality and exact
/// conjugate equality of the parameters; exceptional members are decided by
/// the curve they are (both Klein points give Klein's curve; both are
/// definable over the reals, hence anticonformally self-equivalent).
pub fn kft_equivalent(a: &AlgValue, b: &AlgValue) -> Result<EquivalenceDecision> {
    for v in [a, b] {
        if !v.is_in_family() {
            return Err(Error::Domain(format!(
                "lambda = {v} lies outside the family (singular set {{-2, -1, 2}})"
            )));
        }
    }
    let ea = exceptional_member(a);
    let eb = exceptional_member(b);
    let decision = match (ea, eb) {
        (Some(x), Some(y)) => {
            let same = x.curve_kind() == y.curve_kind();
            EquivalenceDecision {
                conformal: same,
                anticonformal: same,
                exceptional: (ea, eb),
                reason: if same {
                    format!("both parameters give {}'s curve, definable over the rationals", x.curve_kind())
                } else {
                    "one parameter gives Fermat's curve, the other Klein's".into()
                },
            }
        }
        (Some(x), None) | (None, Some(x)) => EquivalenceDecision {
            conformal: false,
            anticonformal: false,
            exceptional: (ea, eb),
            reason: format!(
                "exactly one member is exceptional ({}) and extra automorphisms are preserved by any equivalence",
                x.curve_kind()
            ),
        },
        (None, None) => {
            let conformal = a.eq_embedded(b)?;
            let anticonformal = a.eq_embedded(&b.conj())?;
            EquivalenceDecision {
                conformal,
                anticonformal,
                exceptional: (None, None),
                reason: if conformal {
                    "equal parameters".into()
                } else if anticonformal {
                    "conjugate parameters".into()
                } else {
                    "generic members are conformally equivalent only at equal parameters and anticonformally only at conjugate ones".into()
                },
            }
        }
    };
    Ok(decision)
}

/// Field-of-moduli descriptor for one member.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuliField {
    /// "Q", "Q(sqrt(d))" or "Q(lambda)" for a transcendental parameter.
    pub descriptor: String,
    /// Minimal polynomial of the parameter over Q, for algebraic irrational
    /// parameters.
    pub min_poly: Option<String>,
    pub note: String,
}

/// Field of moduli of a concrete member: the rationals on the exceptional
/// set, and `Q(lambda)` off it (i.e. Q itself for rational parameters and
/// the quadratic field for quadratic irrational ones).
pub fn kft_moduli_field(v: &AlgValue) -> Result<ModuliField> {
    if !v.is_in_family() {
        return Err(Error::Domain(format!(
            "lambda = {v} lies outside the family (singular set {{-2, -1, 2}})"
        )));
    }
    if let Some(e) = exceptional_member(v) {
        return Ok(ModuliField {
            descriptor: "Q".into(),
            min_poly: None,
            note: format!(
                "exceptional member: {}'s curve is definable over the rationals",
                e.curve_kind()
            ),
        });
    }
    Ok(match v {
        AlgValue::Rational(_) => ModuliField {
            descriptor: "Q".into(),
            min_poly: None,
            note: "generic member: the field of moduli is Q(lambda), here the rationals".into(),
        },
        AlgValue::Quadratic(q) if q.is_rational() => ModuliField {
            descriptor: "Q".into(),
            min_poly: None,
            note: "generic member: the field of moduli is Q(lambda), here the rationals".into(),
        },
        AlgValue::Quadratic(q) => {
            let coeffs = q.minimal_polynomial();
            let poly = UniPoly::from_coeffs(coeffs);
            ModuliField {
                descriptor: format!("Q(sqrt({}))", q.radicand()),
                min_poly: Some(format!("{}", WithVarX(&poly))),
                note: "generic member: the field of moduli is Q(lambda)".into(),
            }
        }
    })
}

struct WithVarX<'a>(&'a UniPoly<Rat>);
impl fmt::Display for WithVarX<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with_var(f, "X")
    }
}

/// Klein's extra automorphism of order seven on the member at `3 alpha`:
/// `C([x:y:z]) = [-x + y + conj(alpha) z : alpha (x + y) : -x + y - conj(alpha) z]`
/// with `alpha = (-1 + sqrt(-7))/2`. Certifies that `C` preserves the
/// quartic with a scalar cofactor, has projective order exactly seven, and
/// that adjoining it to the S4 generators enlarges the group.
pub fn klein_automorphism_check() -> Result<EvidenceRecord> {
    let alpha = QuadNumber::new(Rat::new(-1, 2).unwrap(), Rat::new(1, 2).unwrap(), -7)
        .expect("-7 squarefree");
    let alpha_bar = alpha.conj();
    let one = alpha.one_like();
    let zero = alpha.zero_like();
    let m = ProjMap::from_matrix(&[
        vec![one.neg(), one.clone(), alpha_bar.clone()],
        vec![alpha.clone(), alpha.clone(), zero.clone()],
        vec![one.neg(), one.clone(), alpha_bar.neg()],
    ])?;
    let lambda = klein_point();
    let curve = kft_quartic(&lambda);
    let mut rec = EvidenceRecord::new("Klein member extra automorphism");

    match m.preserves_curve(&curve)? {
        Some(cof) if cof.homogeneous_degree().map_or(true, |d| d == 0) => rec.push(
            Certificate::pass("C preserves the quartic", format!("scalar cofactor {cof}")),
        ),
        Some(cof) => rec.push(Certificate::fail(
            "C preserves the quartic",
            format!("non-scalar cofactor {cof}"),
        )),
        None => rec.push(Certificate::fail(
            "C preserves the quartic",
            "substituted form not divisible",
        )),
    }

    let id = ProjMap::identity(&one, 3);
    let c7 = m.iterate(7)?;
    rec.push(match c7.proj_equal(&id, None)? {
        ProjVerdict::StrictEqual => {
            Certificate::new("C^7 = identity", CertStatus::PassStrict, "projective identity")
        }
        v => Certificate::fail("C^7 = identity", format!("{v:?}")),
    });
    let mut all_lower_nontrivial = true;
    for k in 1..=6u32 {
        if m.iterate(k)?.proj_equal(&id, None)?.holds() {
            all_lower_nontrivial = false;
            rec.push(Certificate::fail(
                "C^k nontrivial for k = 1..6",
                format!("C^{k} is projectively the identity"),
            ));
            break;
        }
    }
    if all_lower_nontrivial {
        rec.push(Certificate::pass(
            "C^k nontrivial for k = 1..6",
            "projective order exactly 7",
        ));
    }

    // adjoining C leaves the 24-element group: the closure blows past 24
    let a = kft_map_a(&one);
    let b = kft_map_b(&one);
    match projective_closure(&[a, b, m], 200)? {
        Some(members) if members.len() > 24 => rec.push(Certificate::pass(
            "C enlarges the S4 action",
            format!("closure of <A, B, C> reaches {} elements", members.len()),
        )),
        Some(members) => rec.push(Certificate::fail(
            "C enlarges the S4 action",
            format!("closure stuck at {} elements", members.len()),
        )),
        None => rec.push(Certificate::pass(
            "C enlarges the S4 action",
            "closure exceeds the 200-element cap (order 168 expected)",
        )),
    }
    Ok(rec)
}

/// The Fermat member's extra automorphism `[x : i y : z]` over Q(i):
/// preserves the Fermat quartic, has projective order four, enlarges the
/// group to 96 elements, and fails to preserve a generic member.
pub fn fermat_check() -> Result<EvidenceRecord> {
    let i = QuadNumber::sqrt_d(-1).expect("-1 squarefree");
    let one = i.one_like();
    let zero = i.zero_like();
    let m = ProjMap::from_matrix(&[
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), i.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), one.clone()],
    ])?;
    let mut rec = EvidenceRecord::new("Fermat member extra automorphism");

    let fermat = kft_quartic(&i.zero_like());
    match m.preserves_curve(&fermat)? {
        Some(cof) if cof.homogeneous_degree().map_or(true, |d| d == 0) => rec.push(
            Certificate::pass("[x:iy:z] preserves the Fermat quartic", format!("scalar cofactor {cof}")),
        ),
        _ => rec.push(Certificate::fail(
            "[x:iy:z] preserves the Fermat quartic",
            "not preserved",
        )),
    }

    let id = ProjMap::identity(&one, 3);
    let order4 = m.iterate(4)?.proj_equal(&id, None)?.holds()
        && !m.iterate(2)?.proj_equal(&id, None)?.holds();
    rec.push(if order4 {
        Certificate::pass("[x:iy:z] has projective order 4", "i scales y")
    } else {
        Certificate::fail("[x:iy:z] has projective order 4", "unexpected order")
    });

    let a = kft_map_a(&one);
    let b = kft_map_b(&one);
    match projective_closure(&[a, b, m.clone()], 200)? {
        Some(members) if members.len() == 96 => rec.push(Certificate::pass(
            "Fermat group order",
            "closure of <A, B, [x:iy:z]> has exactly 96 elements",
        )),
        Some(members) => rec.push(Certificate::fail(
            "Fermat group order",
            format!("closure has {} elements, expected 96", members.len()),
        )),
        None => rec.push(Certificate::fail("Fermat group order", "cap exceeded")),
    }

    // a generic member is NOT preserved
    let generic = kft_quartic(&i.from_int_like(7));
    rec.push(match m.preserves_curve(&generic)? {
        None => Certificate::pass(
            "[x:iy:z] fails off the Fermat member",
            "lambda = 7 quartic not preserved",
        ),
        Some(_) => Certificate::fail(
            "[x:iy:z] fails off the Fermat member",
            "generic member unexpectedly preserved",
        ),
    });
    Ok(rec)
}

/// The hyperelliptic genus-3 curve with the same symmetry group that
/// bounds the family: recorded constants plus genus arithmetic.
#[derive(Clone, Debug)]
pub struct HyperellipticBoundary {
    pub curve: &'static str,
    pub genus: u64,
    pub signature: Signature,
    pub automorphism_order: u64,
}

/// `y^2 = x^8 + 14 x^4 + 1`, genus 3, full automorphism group of order 48
/// with quotient signature (0;2,4,6). The genus is checked two ways: from
/// the degree of the right-hand side and from the covering relation.
pub fn hyperelliptic_boundary() -> Result<HyperellipticBoundary> {
    let sig = Signature::new(0, vec![2, 4, 6])?;
    let genus_from_cover = rh_genus(&sig, 48)?;
    // y^2 = f(x) with deg f = 2g + 2 nonsingular: g = (8 - 2) / 2
    let genus_from_degree = (8 - 2) / 2;
    if genus_from_cover != genus_from_degree {
        return Err(Error::CertificateFailure(format!(
            "hyperelliptic genus mismatch: covering gives {genus_from_cover}, degree gives {genus_from_degree}"
        )));
    }
    Ok(HyperellipticBoundary {
        curve: "y^2 = x^8 + 14*x^4 + 1",
        genus: genus_from_cover,
        signature: sig,
        automorphism_order: 48,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> AlgValue {
        AlgValue::Rational(Rat::new(n, d).unwrap())
    }

    fn klein_plus() -> AlgValue {
        AlgValue::Quadratic(klein_point())
    }

    fn klein_minus() -> AlgValue {
        AlgValue::Quadratic(klein_point().conj())
    }

    // ---- equivalence ----

    #[test]
    fn equal_parameters_are_equivalent() {
        let d = kft_equivalent(&rat(1, 3), &rat(1, 3)).unwrap();
        assert!(d.conformal);
    }

    #[test]
    fn distinct_generic_parameters_are_not() {
        let d = kft_equivalent(&rat(1, 3), &rat(1, 4)).unwrap();
        assert!(!d.conformal);
        assert!(!d.anticonformal);
    }

    #[test]
    fn klein_points_are_equivalent() {
        let d = kft_equivalent(&klein_plus(), &klein_minus()).unwrap();
        assert!(d.conformal);
        assert!(d.anticonformal);
        assert_eq!(
            d.exceptional,
            (
                Some(ExceptionalMember::KleinPlus),
                Some(ExceptionalMember::KleinMinus)
            )
        );
    }

    #[test]
    fn fermat_vs_klein() {
        let d = kft_equivalent(&rat(0, 1), &klein_plus()).unwrap();
        assert!(!d.conformal);
    }

    #[test]
    fn conjugate_quadratic_parameters_anticonformal() {
        let q = QuadNumber::new(Rat::one(), Rat::one(), 2).unwrap();
        let a = AlgValue::Quadratic(q.clone());
        let b = AlgValue::Quadratic(q.conj());
        let d = kft_equivalent(&a, &b).unwrap();
        assert!(!d.conformal);
        assert!(d.anticonformal);
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = AlgValue::Quadratic(QuadNumber::new(Rat::one(), Rat::one(), 2).unwrap());
        let b = AlgValue::Quadratic(QuadNumber::new(Rat::one(), Rat::one(), 3).unwrap());
        assert!(matches!(
            kft_equivalent(&a, &b),
            Err(Error::MismatchedContext(_))
        ));
    }

    #[test]
    fn boundary_rejected() {
        assert!(kft_equivalent(&rat(-1, 1), &rat(1, 3)).is_err());
    }

    // ---- moduli fields ----

    #[test]
    fn rational_member_moduli() {
        let m = kft_moduli_field(&rat(1, 3)).unwrap();
        assert_eq!(m.descriptor, "Q");
        assert!(m.min_poly.is_none());
    }

    #[test]
    fn klein_member_moduli_is_q() {
        let m = kft_moduli_field(&klein_plus()).unwrap();
        assert_eq!(m.descriptor, "Q");
    }

    #[test]
    fn quadratic_member_moduli() {
        let v = AlgValue::Quadratic(QuadNumber::new(Rat::one(), Rat::one(), 2).unwrap());
        let m = kft_moduli_field(&v).unwrap();
        assert_eq!(m.descriptor, "Q(sqrt(2))");
        assert_eq!(m.min_poly.as_deref(), Some("X^2-2*X-1"));
    }

    // ---- exceptional members ----

    #[test]
    fn exceptional_set_membership() {
        assert_eq!(
            exceptional_member(&rat(0, 1)),
            Some(ExceptionalMember::Fermat)
        );
        assert_eq!(
            exceptional_member(&klein_plus()),
            Some(ExceptionalMember::KleinPlus)
        );
        assert_eq!(exceptional_member(&rat(1, 3)), None);
        let near = AlgValue::Quadratic(
            QuadNumber::new(Rat::new(-3, 2).unwrap(), Rat::one(), -7).unwrap(),
        );
        assert_eq!(exceptional_member(&near), None);
    }

    #[test]
    fn klein_certificates() {
        let rec = klein_automorphism_check().unwrap();
        assert!(rec.all_passed(), "{rec}");
    }

    #[test]
    fn klein_map_fails_off_the_exceptional_member() {
        // the order-7 map does not preserve a generic member of the family
        let alpha =
            QuadNumber::new(Rat::new(-1, 2).unwrap(), Rat::new(1, 2).unwrap(), -7).unwrap();
        let one = alpha.one_like();
        let m = ProjMap::from_matrix(&[
            vec![one.neg(), one.clone(), alpha.conj()],
            vec![alpha.clone(), alpha.clone(), alpha.zero_like()],
            vec![one.neg(), one.clone(), alpha.conj().neg()],
        ])
        .unwrap();
        let generic = kft_quartic(&one);
        assert!(m.preserves_curve(&generic).unwrap().is_none());
    }

    #[test]
    fn fermat_certificates() {
        let rec = fermat_check().unwrap();
        assert!(rec.all_passed(), "{rec}");
    }

    #[test]
    fn hyperelliptic_boundary_record() {
        let h = hyperelliptic_boundary().unwrap();
        assert_eq!(h.genus, 3);
        assert_eq!(h.automorphism_order, 48);
    }
}
