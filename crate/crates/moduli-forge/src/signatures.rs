//! Orbifold signatures, Riemann-Hurwitz genus arithmetic for smooth
//! quotients, and the classification of quadrangular genus-zero signatures
//! into field-of-moduli definability cases.

use crate::error::{Error, Result};
use crate::exact::{Rat, Ring};
use std::collections::BTreeMap;
use std::fmt;

/// An orbifold signature `(g; k_1, ..., k_n)`: quotient genus plus the
/// multiset of cone orders.
#[derive(Clone, PartialEq, Eq)]
pub struct Signature {
    genus: u32,
    orders: Vec<u64>,
}

impl Signature {
    /// Validates cone orders >= 2; a genus-zero signature with exactly two
    /// cone points must have equal orders (good orbifolds only).
    pub fn new(genus: u32, orders: Vec<u64>) -> Result<Self> {
        if let Some(&k) = orders.iter().find(|&&k| k < 2) {
            return Err(Error::Domain(format!("cone order {k} must be >= 2")));
        }
        if genus == 0 && orders.len() < 2 {
            return Err(Error::Domain(
                "a genus-zero orbifold needs at least two cone points".into(),
            ));
        }
        if genus == 0 && orders.len() == 2 && orders[0] != orders[1] {
            return Err(Error::Domain(
                "a genus-zero orbifold with two cone points needs equal orders".into(),
            ));
        }
        Ok(Signature { genus, orders })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Cone order multiplicities, keyed by order.
    pub fn multiplicities(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for &k in &self.orders {
            *m.entry(k).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.genus)?;
        for (i, k) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Definability case of a signature per the quadrangular classification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefinabilityCase {
    /// Triangle signature: definable over the field of moduli (Wolfart).
    Quasiplatonic,
    /// Four cone points, some order of multiplicity one: definable over the
    /// field of moduli.
    Case1,
    /// Orders pair up as a,b,a,b with a != b: definable over the field of
    /// moduli or a degree-two extension.
    Case2,
    /// All four orders equal: definable over an extension of degree at most
    /// four.
    Case3,
    /// Outside the classified shapes.
    Unclassified,
}

impl DefinabilityCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            DefinabilityCase::Quasiplatonic => "QUASIPLATONIC",
            DefinabilityCase::Case1 => "CASE1",
            DefinabilityCase::Case2 => "CASE2",
            DefinabilityCase::Case3 => "CASE3",
            DefinabilityCase::Unclassified => "UNCLASSIFIED",
        }
    }
}

/// Classification outcome: case tag, extension-degree bound and the
/// narrative citations backing the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinabilityVerdict {
    pub case: DefinabilityCase,
    /// 1, 2 or 4; `None` when unclassified.
    pub extension_degree_bound: Option<u32>,
    pub citations: Vec<String>,
}

/// Genus of a smooth `N`-fold quotient cover over a genus-zero orbifold:
/// `2g - 2 = N (n - 2 - sum 1/k_i)`, exact. Fails when the right-hand side
/// is not an even integer >= -2 (orders incompatible with the group order).
pub fn rh_genus(sig: &Signature, group_order: u64) -> Result<u64> {
    if sig.genus != 0 {
        return Err(Error::Domain(
            "genus formula implemented for genus-zero quotients".into(),
        ));
    }
    if group_order == 0 {
        return Err(Error::Domain("group order must be positive".into()));
    }
    let n = sig.orders.len() as i64;
    let mut sum = Rat::zero();
    for &k in &sig.orders {
        sum = sum.add(&Rat::new(1, k as i64).expect("k >= 2"));
    }
    let rhs = Rat::from_int(group_order as i64).mul(&Rat::from_int(n - 2).sub(&sum));
    // g = 1 + rhs/2
    let g = Rat::one().add(&rhs.mul(&Rat::new(1, 2).unwrap()));
    if !g.is_integer() || g.is_negative() {
        return Err(Error::Domain(format!(
            "orders incompatible with group order: genus would be {g}"
        )));
    }
    Ok(g.numer().try_into().map_err(|_| {
        Error::Domain("genus exceeds the representable range".into())
    })?)
}

/// Exact rational re-statement of the covering relation, used by
/// consistency checks: `2g - 2 = N (n - 2 - sum 1/k_i)` as `Rat`s.
pub fn rh_relation_holds(sig: &Signature, group_order: u64, genus: u64) -> bool {
    let n = sig.orders.len() as i64;
    let mut sum = Rat::zero();
    for &k in &sig.orders {
        sum = sum.add(&Rat::new(1, k as i64).expect("k >= 2"));
    }
    let rhs = Rat::from_int(group_order as i64).mul(&Rat::from_int(n - 2).sub(&sum));
    let lhs = Rat::from_int(2 * genus as i64 - 2);
    lhs == rhs
}

/// Classifies a four-cone-point genus-zero signature by the multiplicity
/// pattern of its orders. Labeling-free: a value of multiplicity one plays
/// the role of the distinguished order.
pub fn classify_quadrangular(sig: &Signature) -> Result<DefinabilityVerdict> {
    if sig.genus != 0 || sig.orders.len() != 4 {
        return Err(Error::Domain(format!(
            "quadrangular classification needs a genus-zero signature with four cone points, got {sig}"
        )));
    }
    let mut mult: Vec<usize> = sig.multiplicities().values().copied().collect();
    mult.sort_unstable_by(|a, b| b.cmp(a));
    let verdict = match mult.as_slice() {
        [4] => DefinabilityVerdict {
            case: DefinabilityCase::Case3,
            extension_degree_bound: Some(4),
            citations: vec![
                "all four cone orders equal: the surface is definable over an extension of degree at most four of its field of moduli".into(),
            ],
        },
        [2, 2] => DefinabilityVerdict {
            case: DefinabilityCase::Case2,
            extension_degree_bound: Some(2),
            citations: vec![
                "cone orders pair up as a,b,a,b with a != b: the surface is definable over its field of moduli or a degree-two extension of it".into(),
            ],
        },
        // [1,1,1,1], [2,1,1], [3,1]: some order has multiplicity one
        _ => DefinabilityVerdict {
            case: DefinabilityCase::Case1,
            extension_degree_bound: Some(1),
            citations: vec![
                "one cone order differs from the other three: the surface is definable over its field of moduli".into(),
                "the field of moduli is a finite extension of Q(j(lambda)), lambda the cross-ratio of the four branch points".into(),
            ],
        },
    };
    Ok(verdict)
}

/// Definability report for genus-zero signatures: triangle signatures are
/// quasiplatonic (Wolfart), four cone points go through the quadrangular
/// classification, anything else is reported unclassified (no error).
pub fn definability_report(sig: &Signature) -> DefinabilityVerdict {
    if sig.genus != 0 {
        return DefinabilityVerdict {
            case: DefinabilityCase::Unclassified,
            extension_degree_bound: None,
            citations: vec!["positive-genus quotients are out of scope".into()],
        };
    }
    match sig.orders.len() {
        3 => DefinabilityVerdict {
            case: DefinabilityCase::Quasiplatonic,
            extension_degree_bound: Some(1),
            citations: vec![
                "triangle signature: quasiplatonic surfaces are definable over their field of moduli (Wolfart), a number field by Belyi's theorem".into(),
            ],
        },
        4 => classify_quadrangular(sig).expect("validated arity"),
        _ => DefinabilityVerdict {
            case: DefinabilityCase::Unclassified,
            extension_degree_bound: None,
            citations: vec![format!(
                "{} cone points: outside the quadrangular classification",
                sig.orders.len()
            )],
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(orders: &[u64]) -> Signature {
        Signature::new(0, orders.to_vec()).unwrap()
    }

    // ---- Riemann-Hurwitz ----

    #[test]
    fn genus_table() {
        assert_eq!(rh_genus(&sig(&[2, 2, 2, 3]), 24).unwrap(), 3);
        assert_eq!(rh_genus(&sig(&[2, 3, 7]), 168).unwrap(), 3);
        assert_eq!(rh_genus(&sig(&[2, 3, 8]), 96).unwrap(), 3);
        assert_eq!(rh_genus(&sig(&[2, 4, 6]), 48).unwrap(), 3);
    }

    #[test]
    fn four_equal_orders_closed_form() {
        for a in 2..=12u64 {
            let g = rh_genus(&sig(&[a, a, a, a]), a * a * a).unwrap();
            assert_eq!(g, 1 + a * a * (a - 2));
            assert!(rh_relation_holds(&sig(&[a, a, a, a]), a * a * a, g));
        }
    }

    #[test]
    fn incompatible_orders_error() {
        // (0;2,3,7) with N=10: 2g-2 = 10/42, not an integer
        assert!(rh_genus(&sig(&[2, 3, 7]), 10).is_err());
    }

    #[test]
    fn sphere_double_cover() {
        assert_eq!(rh_genus(&sig(&[2, 2]), 2).unwrap(), 0);
    }

    // ---- classification ----

    #[test]
    fn classification_cases() {
        let v = classify_quadrangular(&sig(&[2, 2, 2, 3])).unwrap();
        assert_eq!(v.case, DefinabilityCase::Case1);
        assert_eq!(v.extension_degree_bound, Some(1));

        let v = classify_quadrangular(&sig(&[2, 2, 3, 3])).unwrap();
        assert_eq!(v.case, DefinabilityCase::Case2);
        assert_eq!(v.extension_degree_bound, Some(2));

        let v = classify_quadrangular(&sig(&[5, 5, 5, 5])).unwrap();
        assert_eq!(v.case, DefinabilityCase::Case3);
        assert_eq!(v.extension_degree_bound, Some(4));

        let v = classify_quadrangular(&sig(&[2, 3, 5, 7])).unwrap();
        assert_eq!(v.case, DefinabilityCase::Case1);
    }

    #[test]
    fn classification_is_permutation_invariant() {
        let perms4 = |v: &[u64; 4]| -> Vec<Vec<u64>> {
            let mut out = Vec::new();
            let idx = [0, 1, 2, 3];
            permute(&idx, &mut vec![], &mut out, v);
            out
        };
        fn permute(
            rest: &[usize],
            acc: &mut Vec<usize>,
            out: &mut Vec<Vec<u64>>,
            v: &[u64; 4],
        ) {
            if rest.is_empty() {
                out.push(acc.iter().map(|&i| v[i]).collect());
                return;
            }
            for (k, &i) in rest.iter().enumerate() {
                let mut next: Vec<usize> = rest.to_vec();
                next.remove(k);
                acc.push(i);
                permute(&next, acc, out, v);
                acc.pop();
            }
        }
        for tuple in [[2, 2, 2, 3], [2, 2, 3, 3], [4, 4, 4, 4], [2, 3, 5, 7], [2, 2, 5, 7]] {
            let orderings = perms4(&tuple);
            assert_eq!(orderings.len(), 24);
            let base = classify_quadrangular(&sig(&tuple)).unwrap();
            for o in orderings {
                assert_eq!(classify_quadrangular(&sig(&o)).unwrap(), base);
            }
        }
    }

    #[test]
    fn multiplicity_patterns_are_exhaustive_and_exclusive() {
        // every multiset of four orders falls in exactly one case
        let reps: [(&[u64], DefinabilityCase); 5] = [
            (&[2, 3, 5, 7], DefinabilityCase::Case1),  // {1,1,1,1}
            (&[2, 2, 3, 5], DefinabilityCase::Case1),  // {2,1,1}
            (&[2, 2, 3, 3], DefinabilityCase::Case2),  // {2,2}
            (&[2, 2, 2, 3], DefinabilityCase::Case1),  // {3,1}
            (&[3, 3, 3, 3], DefinabilityCase::Case3),  // {4}
        ];
        for (orders, case) in reps {
            assert_eq!(classify_quadrangular(&sig(orders)).unwrap().case, case);
        }
    }

    #[test]
    fn wrong_arity_rejected() {
        assert!(classify_quadrangular(&sig(&[2, 3, 7])).is_err());
    }

    // ---- reports ----

    #[test]
    fn triangle_is_quasiplatonic() {
        let v = definability_report(&sig(&[2, 3, 8]));
        assert_eq!(v.case, DefinabilityCase::Quasiplatonic);
        assert_eq!(v.extension_degree_bound, Some(1));
    }

    #[test]
    fn quadrangular_report_cites_j() {
        let v = definability_report(&sig(&[2, 2, 2, 3]));
        assert_eq!(v.case, DefinabilityCase::Case1);
        assert!(v.citations.iter().any(|c| c.contains("j(lambda)")));
    }

    #[test]
    fn five_orders_unclassified() {
        let v = definability_report(&sig(&[3, 3, 3, 3, 3]));
        assert_eq!(v.case, DefinabilityCase::Unclassified);
        assert_eq!(v.extension_degree_bound, None);
    }

    #[test]
    fn bad_signatures_rejected() {
        assert!(Signature::new(0, vec![1, 2, 3]).is_err());
        assert!(Signature::new(0, vec![2, 3]).is_err());
        assert!(Signature::new(0, vec![3, 3]).is_ok());
        assert!(Signature::new(0, vec![2]).is_err());
    }
}
