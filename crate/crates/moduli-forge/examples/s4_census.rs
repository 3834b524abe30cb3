//! The census of smooth epimorphisms from the (0;2,2,2,3) quadrilateral
//! group onto the symmetric group S4, the braid-type moves relating its
//! classes, and their orbit structure.
//!
//! Run with: cargo run --example s4_census

use moduli_forge::finite_groups::{
    classes_connected, enumerate_smooth_epis, hurwitz_move, presentation_pair_count,
    CensusMode, HurwitzMove,
};
use moduli_forge::signatures::Signature;

fn main() {
    let sig = Signature::new(0, vec![2, 2, 2, 3]).expect("valid signature");

    // the normalized census: third entry (1 3)(2 4), first-three product
    // of order three; exactly the three printed solutions
    let normalized = enumerate_smooth_epis(&sig, 4, CensusMode::NormalizedS4)
        .expect("supported signature");
    println!("normalized census for {sig} onto S4:");
    for (i, v) in normalized.iter().enumerate() {
        println!("  ({}) {v}", i + 1);
    }
    println!();

    // moves act on the tuples; Y and Z connect the three solutions
    println!("move actions on the normalized solutions:");
    for (i, v) in normalized.iter().enumerate() {
        for mv in [HurwitzMove::Y, HurwitzMove::Z, HurwitzMove::W] {
            let image = hurwitz_move(v, mv).expect("moves preserve invariants");
            let target = normalized
                .iter()
                .position(|w| w.same_class_as(&image))
                .map_or_else(|| "outside".to_string(), |j| format!("({})", j + 1));
            println!("  {} on ({}) -> {target}", mv.as_str(), i + 1);
        }
    }
    let orbits = classes_connected(&normalized).expect("moves close up");
    println!("orbit partition: {orbits:?} (one orbit = one topological class)");
    println!();

    // the unnormalized census has more classes: the double transposition
    // may sit in any of the three order-2 slots
    let classes = enumerate_smooth_epis(&sig, 4, CensusMode::UpToConjugation)
        .expect("supported signature");
    println!("unnormalized census: {} conjugation classes", classes.len());
    let orbits = classes_connected(&classes).expect("moves close up");
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    println!("move-orbit sizes: {sizes:?}");
    println!();

    // sanity: S4 has only inner automorphisms, so conjugation classes are
    // automorphism classes
    let (pairs, inner) = presentation_pair_count(4);
    println!(
        "presentation pairs (a, b) with a^4 = b^2 = (ba)^3 = 1 generating: {pairs}, all inner: {}",
        pairs == inner
    );
}
