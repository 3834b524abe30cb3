//! The anharmonic group acting on the cross-ratio line, its orbits, the
//! elliptic j-invariant, and three-point normalizing maps.
//!
//! Run with: cargo run --example anharmonic_j

use moduli_forge::exact::{QuadNumber, Rat, RatFunc};
use moduli_forge::moebius::{
    anharmonic_orbit, j_invariant, normalizing_map, ProjPoint,
};

fn main() {
    // generic symbolic parameter: six orbit elements, one canonical j
    let lam = RatFunc::var();
    let orbit = anharmonic_orbit(&lam).expect("lambda is transcendental");
    println!("orbit of the symbolic parameter ({} elements):", orbit.len());
    for m in &orbit {
        println!("  {m}");
    }
    println!("j(lambda) = {}", j_invariant(&lam).expect("no pole"));
    println!();

    // the orbit of -1 collapses to three points, all with j = 27/4
    let orbit = anharmonic_orbit(&Rat::from_int(-1)).expect("-1 is admissible");
    println!("orbit of -1: {orbit:?}");
    for v in &orbit {
        println!("  j({v}) = {}", j_invariant(v).expect("no pole"));
    }
    println!();

    // a hexagonal point: orbit of size two, j = 0
    let hex = QuadNumber::new(Rat::new(1, 2).unwrap(), Rat::new(1, 2).unwrap(), -3)
        .expect("squarefree radicand");
    let orbit = anharmonic_orbit(&hex).expect("admissible");
    println!("orbit of (1+sqrt(-3))/2 has size {}", orbit.len());
    println!("  j = {}", j_invariant(&hex).expect("no pole"));
    println!();

    // normalizing three points to (0, infinity, 1)
    let pts = [
        ProjPoint::finite(Rat::from_int(1)),
        ProjPoint::finite(Rat::from_int(0)),
        ProjPoint::infinity(&Rat::one()),
    ];
    let m = normalizing_map(&pts[0], &pts[1], &pts[2]).expect("distinct points");
    println!("normalizing (1, 0, inf) -> (0, inf, 1): matrix {m}");
    for (p, name) in pts.iter().zip(["1", "0", "inf"]) {
        println!("  {name} maps to {}", m.apply(p));
    }
}
