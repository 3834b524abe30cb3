//! Generating-vector censuses for genus-zero signatures onto small
//! symmetric groups, with braid-type moves on four-point vectors.
//!
//! A generating vector for `(0; k_1, ..., k_n)` onto a group G is a tuple
//! `(t_1, ..., t_n)` with `order(t_i) = k_i` exactly (torsion-free kernel),
//! trivial left-to-right product and `<t_1, ..., t_n> = G`. Censuses are
//! taken up to simultaneous conjugation; for symmetric groups of degree
//! <= 5 every automorphism is inner, so this is reduction modulo the full
//! automorphism group.

use crate::error::{Error, Result};
use crate::finite_groups::perm::{s4_standard_generators, Perm};
use crate::signatures::Signature;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// A generating vector: prescribed orders plus the permutation tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GenVector {
    orders: Vec<u64>,
    tuple: Vec<Perm>,
}

impl GenVector {
    /// Validates the three invariants: exact orders, trivial product,
    /// generation of the full symmetric group of the tuple's degree.
    pub fn new(orders: Vec<u64>, tuple: Vec<Perm>) -> Result<Self> {
        if orders.len() != tuple.len() {
            return Err(Error::ArityMismatch(format!(
                "{} orders for {} permutations",
                orders.len(),
                tuple.len()
            )));
        }
        let v = GenVector { orders, tuple };
        v.check_invariants()?;
        Ok(v)
    }

    fn check_invariants(&self) -> Result<()> {
        for (t, &k) in self.tuple.iter().zip(&self.orders) {
            if t.order() as u64 != k {
                return Err(Error::Domain(format!(
                    "entry {t} has order {}, signature asks for {k}",
                    t.order()
                )));
            }
        }
        let mut prod = Perm::identity(self.degree());
        for t in &self.tuple {
            prod = prod.compose(t);
        }
        if !prod.is_identity() {
            return Err(Error::Domain("tuple product is not the identity".into()));
        }
        if !generates_full_symmetric(&self.tuple) {
            return Err(Error::Domain(
                "tuple does not generate the full symmetric group".into(),
            ));
        }
        Ok(())
    }

    pub fn tuple(&self) -> &[Perm] {
        &self.tuple
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn degree(&self) -> usize {
        self.tuple.first().map_or(0, Perm::degree)
    }

    /// Multiset of cycle types across the tuple (a move invariant).
    pub fn cycle_type_multiset(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.tuple.iter().map(Perm::cycle_type).collect();
        v.sort();
        v
    }

    /// Simultaneous conjugation by `g`.
    pub fn conjugate_by(&self, g: &Perm) -> Self {
        GenVector {
            orders: self.orders.clone(),
            tuple: self.tuple.iter().map(|t| t.conjugate_by(g)).collect(),
        }
    }

    /// Lexicographically least representative of the conjugation class.
    pub fn canonical(&self) -> Self {
        Perm::all(self.degree())
            .iter()
            .map(|g| self.conjugate_by(g))
            .min()
            .expect("nonempty symmetric group")
    }

    /// Same conjugation class?
    pub fn same_class_as(&self, other: &Self) -> bool {
        self.orders == other.orders && self.canonical().tuple == other.canonical().tuple
    }
}

impl std::fmt::Display for GenVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.tuple.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for GenVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

fn generates_full_symmetric(gens: &[Perm]) -> bool {
    let m = gens.first().map_or(0, Perm::degree);
    let target: usize = (1..=m).product();
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Perm::identity(m)];
    seen.insert(Perm::identity(m));
    while let Some(g) = frontier.pop() {
        for h in gens {
            let next = g.compose(h);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
        if seen.len() == target {
            return true;
        }
    }
    seen.len() == target
}

/// Census options.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusMode {
    /// All classes up to simultaneous conjugation; canonical representatives.
    UpToConjugation,
    /// Only vectors normalized as in the two-generator S4 presentation:
    /// third entry `A^2`, product of the first three equal to `(BA)^-1`.
    /// Valid for the signature (0;2,2,2,3) onto S4; returns literal tuples.
    NormalizedS4,
}

/// Enumerates smooth epimorphisms from the genus-zero group of `sig` onto
/// the symmetric group of degree `m`, exhaustively. Deterministic: the
/// result is sorted.
///
/// Degree is capped at 5 (desk scale; every automorphism of these symmetric
/// groups is inner, so conjugation classes are automorphism classes).
pub fn enumerate_smooth_epis(
    sig: &Signature,
    m: usize,
    mode: CensusMode,
) -> Result<Vec<GenVector>> {
    if sig.genus() != 0 {
        return Err(Error::Domain("census needs a genus-zero signature".into()));
    }
    let orders = sig.orders();
    if orders.len() < 3 {
        return Err(Error::Domain("census needs at least three cone points".into()));
    }
    if !(2..=5).contains(&m) {
        return Err(Error::Domain(format!(
            "symmetric group degree {m} outside the supported range 2..=5"
        )));
    }
    if mode == CensusMode::NormalizedS4 && (m != 4 || orders != [2, 2, 2, 3]) {
        return Err(Error::Domain(
            "the normalized census is defined for signature (0;2,2,2,3) onto S4".into(),
        ));
    }

    let all = Perm::all(m);
    let of_order = |k: u64| -> Vec<Perm> {
        all.iter().filter(|p| p.order() as u64 == k).cloned().collect()
    };
    let slots: Vec<Vec<Perm>> = orders[..orders.len() - 1]
        .iter()
        .map(|&k| of_order(k))
        .collect();
    let last_order = *orders.last().expect("nonempty orders");

    // scan candidates for the first n-1 slots; the last entry is forced
    let first = match slots.first() {
        Some(s) if !s.is_empty() => s.clone(),
        _ => return Ok(Vec::new()),
    };
    let raw: Vec<GenVector> = pool().install(|| {
        first
            .par_iter()
            .map(|t1| {
                let mut found = Vec::new();
                let mut partial = vec![t1.clone()];
                scan(&slots, 1, &mut partial, last_order, orders, &mut found);
                found
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
    });

    let mut out: Vec<GenVector> = match mode {
        CensusMode::NormalizedS4 => {
            let (a, b) = s4_standard_generators();
            let a2 = a.pow(2);
            let ba = b.compose(&a);
            raw.into_iter()
                .filter(|v| v.tuple[2] == a2 && v.tuple[3] == ba)
                .collect()
        }
        CensusMode::UpToConjugation => {
            let classes: BTreeSet<Vec<Perm>> =
                raw.iter().map(|v| v.canonical().tuple).collect();
            classes
                .into_iter()
                .map(|tuple| GenVector {
                    orders: orders.to_vec(),
                    tuple,
                })
                .collect()
        }
    };
    out.sort();
    Ok(out)
}

fn scan(
    slots: &[Vec<Perm>],
    depth: usize,
    partial: &mut Vec<Perm>,
    last_order: u64,
    orders: &[u64],
    found: &mut Vec<GenVector>,
) {
    if depth == slots.len() {
        let mut prod = Perm::identity(partial[0].degree());
        for t in partial.iter() {
            prod = prod.compose(t);
        }
        let last = prod.inverse();
        if last.order() as u64 != last_order {
            return;
        }
        let mut tuple = partial.clone();
        tuple.push(last);
        if generates_full_symmetric(&tuple) {
            found.push(GenVector {
                orders: orders.to_vec(),
                tuple,
            });
        }
        return;
    }
    for t in &slots[depth] {
        partial.push(t.clone());
        scan(slots, depth + 1, partial, last_order, orders, found);
        partial.pop();
    }
}

/// Rayon pool honoring the `MODULI_FORGE_THREADS` cap.
fn pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("MODULI_FORGE_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                builder = builder.num_threads(n);
            }
        }
    }
    builder.build().expect("thread pool")
}

/// The three braid-type substitutions on a four-point genus-zero vector
/// `(x1, x2, x3)` with `x4` determined.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HurwitzMove {
    /// `y1 = x2, y2 = (x1 x2 x3)^-1 x1 (x1 x2 x3), y3 = x3`.
    Y,
    /// `z1 = x1 x2 x1, z2 = x1, z3 = x3`.
    Z,
    /// `w1 = x2, w2 = x3 x1 x3, w3 = x3`.
    W,
}

impl HurwitzMove {
    pub fn as_str(self) -> &'static str {
        match self {
            HurwitzMove::Y => "Y",
            HurwitzMove::Z => "Z",
            HurwitzMove::W => "W",
        }
    }
}

/// Applies a move to a four-entry genus-zero vector. The image is
/// re-validated; a violation would be an internal error (the moves are
/// mapping-class substitutions and preserve all invariants).
pub fn hurwitz_move(v: &GenVector, mv: HurwitzMove) -> Result<GenVector> {
    if v.tuple.len() != 4 {
        return Err(Error::Domain(
            "moves are defined on four-point generating vectors".into(),
        ));
    }
    let (x1, x2, x3) = (&v.tuple[0], &v.tuple[1], &v.tuple[2]);
    let (n1, n2, n3) = match mv {
        HurwitzMove::Y => {
            let g = x1.compose(x2).compose(x3);
            (
                x2.clone(),
                g.inverse().compose(x1).compose(&g),
                x3.clone(),
            )
        }
        HurwitzMove::Z => (x1.compose(x2).compose(x1), x1.clone(), x3.clone()),
        HurwitzMove::W => (x2.clone(), x3.compose(x1).compose(x3), x3.clone()),
    };
    let n4 = n1.compose(&n2).compose(&n3).inverse();
    GenVector::new(v.orders.clone(), vec![n1, n2, n3, n4]).map_err(|e| {
        Error::CertificateFailure(format!("move {} broke the vector invariants: {e}", mv.as_str()))
    })
}

/// Partition of census classes into orbits under the move closure
/// (composed with conjugation reduction). Returns index sets into
/// `classes`, sorted.
pub fn classes_connected(classes: &[GenVector]) -> Result<Vec<Vec<usize>>> {
    let canon: Vec<Vec<Perm>> = classes.iter().map(|v| v.canonical().tuple).collect();
    let find = |t: &GenVector| -> Option<usize> {
        let c = t.canonical().tuple;
        canon.iter().position(|k| *k == c)
    };
    let mut orbit_of: Vec<Option<usize>> = vec![None; classes.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..classes.len() {
        if orbit_of[start].is_some() {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = Some(id);
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for mv in [HurwitzMove::Y, HurwitzMove::Z, HurwitzMove::W] {
                let image = hurwitz_move(&classes[i], mv)?;
                if let Some(j) = find(&image) {
                    if orbit_of[j].is_none() {
                        orbit_of[j] = Some(id);
                        members.push(j);
                        frontier.push(j);
                    }
                } else {
                    // the image leaves the provided class list; record
                    // nothing (caller passed a partial census)
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// Counts the pairs `(a, b)` in the symmetric group of degree `m`
/// satisfying `a^4 = b^2 = (ba)^3 = 1` and generating; each such pair is an
/// epimorphism from the two-generator presentation, so for degree 4 the
/// count is the order of the automorphism group. Also reports how many are
/// realized by conjugation of the standard pair (inner).
pub fn presentation_pair_count(m: usize) -> (usize, usize) {
    let all = Perm::all(m);
    let (sa, sb) = s4_standard_generators();
    let mut count = 0;
    let mut inner = 0;
    for a in &all {
        if a.order() != 4 {
            continue;
        }
        for b in &all {
            if b.order() != 2 || b.compose(a).order() != 3 {
                continue;
            }
            if !generates_full_symmetric(&[a.clone(), b.clone()]) {
                continue;
            }
            count += 1;
            if m == 4
                && all
                    .iter()
                    .any(|g| sa.conjugate_by(g) == *a && sb.conjugate_by(g) == *b)
            {
                inner += 1;
            }
        }
    }
    (count, inner)
}
