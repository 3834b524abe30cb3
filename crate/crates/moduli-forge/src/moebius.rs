//! Moebius transformations over an exact field, the anharmonic group, and
//! the elliptic j-invariant of the four-point cross-ratio parameter.

use crate::error::{Error, Result};
use crate::exact::Field;
use std::fmt;

/// A point of the projective line over `F`, in canonical form:
/// `(value : 1)` when finite, `(1 : 0)` for infinity.
#[derive(Clone, PartialEq)]
pub struct ProjPoint<F: Field> {
    num: F,
    den: F,
}

impl<F: Field> ProjPoint<F> {
    /// Builds `(p : q)`, normalizing. Fails when both coordinates vanish.
    pub fn new(p: F, q: F) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::Domain("(0 : 0) is not a projective point".into()));
        }
        match q.inv() {
            Some(qi) => Ok(ProjPoint {
                num: p.mul(&qi),
                den: q.one_like(),
            }),
            None if q.is_zero() => Ok(ProjPoint {
                num: p.one_like(),
                den: p.zero_like(),
            }),
            // non-invertible nonzero q can appear over degenerate rings;
            // keep the raw pair (equality still via cross-products)
            None => Ok(ProjPoint { num: p, den: q }),
        }
    }

    pub fn finite(v: F) -> Self {
        let den = v.one_like();
        ProjPoint { num: v, den }
    }

    pub fn infinity(ctx: &F) -> Self {
        ProjPoint {
            num: ctx.one_like(),
            den: ctx.zero_like(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    /// The value when finite.
    pub fn as_finite(&self) -> Option<&F> {
        (!self.den.is_zero()).then_some(&self.num)
    }

    /// Projective equality by cross-product.
    pub fn proj_eq(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == self.den.mul(&rhs.num)
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.num)
        }
    }
}

impl<F: Field> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Moebius transformation `z -> (a z + b) / (c z + d)`, stored as a 2x2
/// matrix up to scalar, with nonzero determinant.
#[derive(Clone)]
pub struct Moebius<F: Field> {
    a: F,
    b: F,
    c: F,
    d: F,
}

impl<F: Field> Moebius<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self> {
        let det = a.mul(&d).sub(&b.mul(&c));
        if det.is_zero() {
            return Err(Error::Domain("Moebius matrix with zero determinant".into()));
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn identity(ctx: &F) -> Self {
        Moebius {
            a: ctx.one_like(),
            b: ctx.zero_like(),
            c: ctx.zero_like(),
            d: ctx.one_like(),
        }
    }

    pub fn entries(&self) -> [&F; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Matrix action on homogeneous coordinates; total (infinity included).
    pub fn apply(&self, z: &ProjPoint<F>) -> ProjPoint<F> {
        let p = self.a.mul(&z.num).add(&self.b.mul(&z.den));
        let q = self.c.mul(&z.num).add(&self.d.mul(&z.den));
        ProjPoint::new(p, q).expect("nonsingular matrix maps points to points")
    }

    /// Applies to a finite field value, `None` when the image is infinite.
    pub fn apply_value(&self, z: &F) -> Option<F> {
        self.apply(&ProjPoint::finite(z.clone())).as_finite().cloned()
    }

    /// Composition: `(self o rhs)(z) = self(rhs(z))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        Moebius {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            c: self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            d: self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        }
    }

    pub fn inverse(&self) -> Self {
        Moebius {
            a: self.d.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.a.clone(),
        }
    }

    /// Equality up to a nonzero scalar.
    pub fn proj_eq(&self, rhs: &Self) -> bool {
        let s = self.entries();
        let r = rhs.entries();
        for i in 0..4 {
            for j in (i + 1)..4 {
                if s[i].mul(r[j]) != s[j].mul(r[i]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }
}

impl<F: Field> fmt::Display for Moebius<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl<F: Field> fmt::Debug for Moebius<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The involution `eta(z) = z/(z-1)`, the deck transformation of `F`.
pub fn eta_map<F: Field>(ctx: &F) -> Moebius<F> {
    Moebius {
        a: ctx.one_like(),
        b: ctx.zero_like(),
        c: ctx.one_like(),
        d: ctx.one_like().neg(),
    }
}

/// `eta(z) = z/(z-1)` on field values; pole at `z = 1`.
pub fn eta_value<F: Field>(z: &F) -> Result<F> {
    let den = z.sub(&z.one_like());
    z.div(&den)
        .ok_or_else(|| Error::Domain("eta has a pole at z = 1".into()))
}

/// The trace map `F(z) = z^2/(z-1)`; pole at `z = 1`. Satisfies
/// `F(eta(z)) = F(z)` and `z + eta(z) = F(z)`.
pub fn f_value<F: Field>(z: &F) -> Result<F> {
    let den = z.sub(&z.one_like());
    z.mul(z)
        .div(&den)
        .ok_or_else(|| Error::Domain("F has a pole at z = 1".into()))
}

/// The six substitutions of the anharmonic group as Moebius matrices, in
/// the order: z, 1/z, z/(z-1), (z-1)/z, 1/(1-z), 1-z.
pub fn anharmonic_maps<F: Field>(ctx: &F) -> Vec<Moebius<F>> {
    let o = ctx.one_like();
    let z = ctx.zero_like();
    let m = |a: &F, b: &F, c: &F, d: &F| {
        Moebius::new(a.clone(), b.clone(), c.clone(), d.clone()).expect("unit determinant")
    };
    let no = o.neg();
    vec![
        m(&o, &z, &z, &o),   // z
        m(&z, &o, &o, &z),   // 1/z
        m(&o, &z, &o, &no),  // z/(z-1)
        m(&o, &no, &o, &z),  // (z-1)/z
        m(&z, &o, &no, &o),  // 1/(1-z)
        m(&no, &o, &z, &o),  // 1-z
    ]
}

fn require_off_branch<F: Field>(lambda: &F) -> Result<()> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::Domain(
            "lambda must avoid the branch values 0 and 1".into(),
        ));
    }
    Ok(())
}

/// The orbit of `lambda` under the anharmonic group:
/// `{lambda, 1/lambda, lambda/(lambda-1), (lambda-1)/lambda, 1/(1-lambda),
/// 1-lambda}` with duplicates merged. Cardinality is 6, 3 or 2.
pub fn anharmonic_orbit<F: Field>(lambda: &F) -> Result<Vec<F>> {
    require_off_branch(lambda)?;
    let one = lambda.one_like();
    let lm1 = lambda.sub(&one);
    let vals = vec![
        lambda.clone(),
        lambda.inv().expect("lambda != 0"),
        lambda.div(&lm1).expect("lambda != 1"),
        lm1.div(lambda).expect("lambda != 0"),
        one.sub(lambda).inv().expect("lambda != 1"),
        one.sub(lambda),
    ];
    let mut orbit: Vec<F> = Vec::new();
    for v in vals {
        if !orbit.contains(&v) {
            orbit.push(v);
        }
    }
    Ok(orbit)
}

/// The elliptic j-invariant of the cross-ratio parameter:
/// `j(lambda) = (1 - lambda + lambda^2)^3 / (lambda^2 (lambda - 1)^2)`,
/// constant on anharmonic orbits.
pub fn j_invariant<F: Field>(lambda: &F) -> Result<F> {
    require_off_branch(lambda)?;
    let one = lambda.one_like();
    let num3 = one.sub(lambda).add(&lambda.mul(lambda));
    let num = num3.mul(&num3).mul(&num3);
    let lm1 = lambda.sub(&one);
    let den = lambda.mul(lambda).mul(&lm1).mul(&lm1);
    num.div(&den)
        .ok_or_else(|| Error::Domain("j has poles at lambda = 0, 1".into()))
}

/// The unique Moebius transformation with `M(p0) = 0`, `M(p1) = inf`,
/// `M(p2) = 1`. Fails on coincident points.
pub fn normalizing_map<F: Field>(
    p0: &ProjPoint<F>,
    p1: &ProjPoint<F>,
    p2: &ProjPoint<F>,
) -> Result<Moebius<F>> {
    if p0.proj_eq(p1) || p1.proj_eq(p2) || p0.proj_eq(p2) {
        return Err(Error::Domain(
            "normalizing map needs three pairwise distinct points".into(),
        ));
    }
    // rows: (q0, -n0) kills p0; (q1, -n1) kills p1; scale first row so that
    // p2 lands on 1.
    let r0 = (p0.den.clone(), p0.num.neg());
    let r1 = (p1.den.clone(), p1.num.neg());
    let at2_num = r0.0.mul(&p2.num).add(&r0.1.mul(&p2.den));
    let at2_den = r1.0.mul(&p2.num).add(&r1.1.mul(&p2.den));
    // distinctness makes both evaluations nonzero over a field; over a
    // degenerate ring the scaling may still fail to invert
    let scale = at2_den
        .div(&at2_num)
        .ok_or_else(|| Error::NotInvertible("normalizing-map scale factor".into()))?;
    Moebius::new(r0.0.mul(&scale), r0.1.mul(&scale), r1.0, r1.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{QuadNumber, Rat, RatFunc, Ring};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    // ---- apply ----

    #[test]
    fn eta_fixes_two() {
        let eta = eta_map(&Rat::one());
        assert_eq!(eta.apply_value(&r(2, 1)).unwrap(), r(2, 1));
    }

    #[test]
    fn reciprocal_sends_zero_to_infinity() {
        let a = Moebius::new(Rat::zero(), Rat::one(), Rat::one(), Rat::zero()).unwrap();
        assert!(a.apply(&ProjPoint::finite(Rat::zero())).is_infinity());
    }

    #[test]
    fn eta_is_an_involution() {
        let eta = eta_map(&Rat::one());
        assert!(eta.compose(&eta).is_identity());
    }

    // ---- the anharmonic group ----

    #[test]
    fn anharmonic_group_is_s3() {
        let maps = anharmonic_maps(&Rat::one());
        assert_eq!(maps.len(), 6);
        // closed under composition, and exactly two maps of order 3
        let mut order3 = 0;
        for m in &maps {
            for n in &maps {
                let prod = m.compose(n);
                assert!(
                    maps.iter().any(|k| k.proj_eq(&prod)),
                    "closure under composition"
                );
            }
            let m2 = m.compose(m);
            let m3 = m2.compose(m);
            if !m.is_identity() && m3.proj_eq(&Moebius::identity(&Rat::one())) && !m2.proj_eq(m) {
                order3 += 1;
            }
        }
        assert_eq!(order3, 2, "two 3-cycles as in S3");
    }

    #[test]
    fn orbit_of_minus_one() {
        let orbit = anharmonic_orbit(&r(-1, 1)).unwrap();
        let expect = [r(-1, 1), r(2, 1), r(1, 2)];
        assert_eq!(orbit.len(), 3);
        for e in expect {
            assert!(orbit.contains(&e));
        }
    }

    #[test]
    fn symbolic_orbit_has_six_elements() {
        let lam = RatFunc::var();
        assert_eq!(anharmonic_orbit(&lam).unwrap().len(), 6);
    }

    #[test]
    fn hexagonal_point_has_orbit_of_two() {
        // lambda = (1+sqrt(-3))/2 satisfies lambda^2 - lambda + 1 = 0
        let lam = QuadNumber::new(r(1, 2), r(1, 2), -3).unwrap();
        let orbit = anharmonic_orbit(&lam).unwrap();
        assert_eq!(orbit.len(), 2);
        // j vanishes there
        assert!(j_invariant(&lam).unwrap().is_zero());
    }

    #[test]
    fn orbit_rejects_branch_values() {
        assert!(anharmonic_orbit(&Rat::zero()).is_err());
        assert!(anharmonic_orbit(&Rat::one()).is_err());
        assert!(j_invariant(&Rat::one()).is_err());
    }

    // ---- j ----

    #[test]
    fn j_at_minus_one_and_two() {
        assert_eq!(j_invariant(&r(-1, 1)).unwrap(), r(27, 4));
        assert_eq!(j_invariant(&r(2, 1)).unwrap(), r(27, 4));
        assert_eq!(j_invariant(&r(1, 2)).unwrap(), r(27, 4));
    }

    #[test]
    fn j_is_anharmonic_invariant_symbolically() {
        let lam = RatFunc::var();
        let j = j_invariant(&lam).unwrap();
        for m in anharmonic_orbit(&lam).unwrap() {
            assert_eq!(j_invariant(&m).unwrap(), j);
        }
    }

    // ---- normalizing maps ----

    #[test]
    fn normalizing_map_postcondition() {
        let pts = [r(1, 1), r(0, 1), r(5, 3)];
        let p: Vec<_> = pts.iter().map(|v| ProjPoint::finite(v.clone())).collect();
        let m = normalizing_map(&p[0], &p[1], &p[2]).unwrap();
        assert!(m.apply(&p[0]).proj_eq(&ProjPoint::finite(Rat::zero())));
        assert!(m.apply(&p[1]).is_infinity());
        assert!(m.apply(&p[2]).proj_eq(&ProjPoint::finite(Rat::one())));
    }

    #[test]
    fn normalizing_standard_triple_is_identity() {
        let zero = ProjPoint::finite(Rat::zero());
        let inf = ProjPoint::infinity(&Rat::one());
        let one = ProjPoint::finite(Rat::one());
        let m = normalizing_map(&zero, &inf, &one).unwrap();
        assert!(m.proj_eq(&Moebius::identity(&Rat::one())));
    }

    #[test]
    fn normalizing_with_infinity_input() {
        // (1, 0, inf): z -> (z-1)/z maps 1->0, 0->inf, inf->1
        let m = normalizing_map(
            &ProjPoint::finite(Rat::one()),
            &ProjPoint::finite(Rat::zero()),
            &ProjPoint::infinity(&Rat::one()),
        )
        .unwrap();
        assert!(m.apply(&ProjPoint::finite(Rat::one())).proj_eq(&ProjPoint::finite(Rat::zero())));
        assert!(m.apply(&ProjPoint::finite(Rat::zero())).is_infinity());
        assert!(m.apply(&ProjPoint::infinity(&Rat::one())).proj_eq(&ProjPoint::finite(Rat::one())));
    }

    #[test]
    fn coincident_points_rejected() {
        let p = ProjPoint::finite(r(1, 1));
        let q = ProjPoint::finite(r(2, 1));
        assert!(normalizing_map(&p, &p, &q).is_err());
    }

    // ---- F ----

    #[test]
    fn f_values() {
        assert_eq!(f_value(&r(2, 1)).unwrap(), r(4, 1));
        assert_eq!(f_value(&r(0, 1)).unwrap(), r(0, 1));
        assert!(f_value(&r(1, 1)).is_err());
    }

    #[test]
    fn f_is_eta_invariant_symbolically() {
        let z = RatFunc::var();
        let ez = eta_value(&z).unwrap();
        assert_eq!(f_value(&ez).unwrap(), f_value(&z).unwrap());
        // z + eta(z) = F(z)
        assert_eq!(z.add(&ez), f_value(&z).unwrap());
    }
}
