//! Property tests for the structural invariants: field axioms across the
//! coefficient tower, canonical-form idempotence, homomorphism laws,
//! composition associativity, exact-division re-expansion and the
//! classification's permutation invariance.

use moduli_forge::exact::{cyclo_reduce, Field, QuadExt, QuadNumber, Rat, RatFunc, Ring, UniPoly};
use moduli_forge::moebius::{anharmonic_orbit, j_invariant, normalizing_map, ProjPoint};
use moduli_forge::polynomials::{perfect_square, MultiPoly, ProjMap};
use moduli_forge::signatures::{classify_quadrangular, Signature};
use proptest::prelude::*;

// ---- generators ----

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d).expect("nonzero denominator"))
}

fn quadnum(d: i64) -> impl Strategy<Value = QuadNumber> {
    (rat(), rat()).prop_map(move |(a, b)| QuadNumber::new(a, b, d).expect("squarefree d"))
}

fn unipoly() -> impl Strategy<Value = UniPoly<Rat>> {
    proptest::collection::vec(rat(), 0..4).prop_map(UniPoly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (unipoly(), unipoly())
        .prop_filter_map("nonzero denominator", |(n, d)| {
            if d.is_zero() {
                None
            } else {
                Some(RatFunc::new(n, d).expect("nonzero denominator"))
            }
        })
}

fn quadext() -> impl Strategy<Value = QuadExt<Rat>> {
    (rat(), rat()).prop_map(|(u, v)| QuadExt::new(u, v, Rat::from_int(5)))
}

fn field_axioms<F: Field>(a: &F, b: &F, c: &F) {
    // associativity and commutativity
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    // distributivity
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    // identities and inverses (all sampled fields are honest: the quadratic
    // extension below uses the non-square D = 5, so inversion fails only
    // at zero)
    assert_eq!(a.add(&a.zero_like()), a.clone());
    assert_eq!(a.mul(&a.one_like()), a.clone());
    assert!(a.sub(a).is_zero());
    match a.inv() {
        Some(ai) => assert!(a.mul(&ai).is_one()),
        None => assert!(a.is_zero()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    // ---- field axioms across the tower ----

    #[test]
    fn rat_field_axioms(a in rat(), b in rat(), c in rat()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn quadnum_field_axioms(a in quadnum(-7), b in quadnum(-7), c in quadnum(-7)) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn quadext_field_axioms(a in quadext(), b in quadext(), c in quadext()) {
        field_axioms(&a, &b, &c);
    }

    // ---- canonical forms ----

    #[test]
    fn rat_canonical_idempotent(a in rat()) {
        let again = Rat::new(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(&a, &again);
    }

    #[test]
    fn ratfunc_canonical_idempotent(a in ratfunc()) {
        let again = RatFunc::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&a, &again);
        prop_assert!(a.den().is_monic() || a.is_zero());
    }

    // ---- quadratic conjugation ----

    #[test]
    fn quadext_conjugation_homomorphism(a in quadext(), b in quadext()) {
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.mul(&b).norm(), a.norm().mul(&b.norm()));
    }

    // ---- cyclotomic bookkeeping ----

    #[test]
    fn cyclo_root_powers(a in 2usize..=8, k in 0usize..=16) {
        let t_k = cyclo_reduce(&UniPoly::monomial(Rat::one(), k), a).unwrap();
        let t_back = cyclo_reduce(
            &UniPoly::monomial(Rat::one(), (a - k % a) % a),
            a,
        ).unwrap();
        prop_assert!(t_k.mul(&t_back).is_one());
        let t_a = cyclo_reduce(&UniPoly::monomial(Rat::one(), a), a).unwrap();
        prop_assert!(t_a.is_one());
    }

    // ---- composition associativity ----

    #[test]
    fn projective_composition_associative(
        m1 in lin_map(), m2 in lin_map(), m3 in lin_map(),
    ) {
        let left = m1.compose(&m2).unwrap().compose(&m3).unwrap();
        let right = m1.compose(&m2.compose(&m3).unwrap()).unwrap();
        prop_assert_eq!(left.components(), right.components());
    }

    // ---- exact division ----

    #[test]
    fn divide_exact_reexpands(g in small_mp(), h in small_mp()) {
        prop_assume!(!g.is_zero());
        let f = g.mul(&h);
        let q = f.divide_exact(&g).unwrap().expect("constructed multiple divides");
        prop_assert_eq!(q.mul(&g), f);
        prop_assert_eq!(q, h);
    }

    // ---- perfect squares ----

    #[test]
    fn perfect_square_reexpands(q in unipoly(), c in rat()) {
        prop_assume!(!q.is_zero() && !c.is_zero());
        let q = q.make_monic().expect("nonzero");
        let p = q.mul(&q).scale(&c);
        let (c2, q2) = perfect_square(&p).expect("constructed square extracts");
        prop_assert_eq!(c2, c);
        prop_assert_eq!(q2, q);
    }

    // ---- classification invariance ----

    #[test]
    fn classification_permutation_invariant(
        orders in proptest::collection::vec(2u64..=9, 4),
        seed in 0usize..24,
    ) {
        let base = classify_quadrangular(&Signature::new(0, orders.clone()).unwrap()).unwrap();
        // walk to the seed-th permutation deterministically
        let mut rest: Vec<u64> = orders;
        let mut s = seed;
        let mut permuted = Vec::with_capacity(4);
        for k in (1..=4usize).rev() {
            permuted.push(rest.remove(s % k));
            s /= k;
        }
        let v = classify_quadrangular(&Signature::new(0, permuted).unwrap()).unwrap();
        prop_assert_eq!(v.case, base.case);
        prop_assert_eq!(v.extension_degree_bound, base.extension_degree_bound);
    }

    // ---- anharmonic orbits ----

    #[test]
    fn orbit_size_and_j_constancy(lam in rat()) {
        prop_assume!(!lam.is_zero() && !lam.is_one());
        let orbit = anharmonic_orbit(&lam).unwrap();
        prop_assert!(orbit.len() == 6 || orbit.len() == 3 || orbit.len() == 2);
        let j = j_invariant(&lam).unwrap();
        for m in &orbit {
            prop_assert_eq!(j_invariant(m).unwrap(), j.clone());
        }
    }

    // ---- normalizing maps ----

    #[test]
    fn normalizing_map_postcondition(a in rat(), b in rat(), c in rat()) {
        prop_assume!(a != b && b != c && a != c);
        let pts: Vec<ProjPoint<Rat>> =
            [a, b, c].into_iter().map(ProjPoint::finite).collect();
        let m = normalizing_map(&pts[0], &pts[1], &pts[2]).unwrap();
        prop_assert!(m.apply(&pts[0]).proj_eq(&ProjPoint::finite(Rat::zero())));
        prop_assert!(m.apply(&pts[1]).is_infinity());
        prop_assert!(m.apply(&pts[2]).proj_eq(&ProjPoint::finite(Rat::one())));
    }
}

/// Random invertible linear self-maps of the projective plane.
fn lin_map() -> impl Strategy<Value = ProjMap<Rat>> {
    proptest::collection::vec(-5i64..=5, 9)
        .prop_filter_map("nonsingular matrix", |v| {
            let det = v[0] * (v[4] * v[8] - v[5] * v[7]) - v[1] * (v[3] * v[8] - v[5] * v[6])
                + v[2] * (v[3] * v[7] - v[4] * v[6]);
            if det == 0 {
                return None;
            }
            let rows: Vec<Vec<Rat>> = v
                .chunks(3)
                .map(|r| r.iter().map(|&n| Rat::from_int(n)).collect())
                .collect();
            Some(ProjMap::from_matrix(&rows).expect("nonsingular rows"))
        })
}

/// Random small homogeneous-or-not polynomials in three variables.
fn small_mp() -> impl Strategy<Value = MultiPoly<Rat>> {
    proptest::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), -5i64..=5), 1..4).prop_map(
        |terms| {
            MultiPoly::from_terms(
                3,
                terms
                    .into_iter()
                    .map(|((a, b, c), n)| (vec![a, b, c], Rat::from_int(n)))
                    .collect(),
            )
            .expect("consistent arity")
        },
    )
}
