//! Companion parameters on the G-fiber, the cubic fiber identity, and the
//! separation of the invariant tuple along the fiber.
//!
//! Run with: cargo run --example kft_companions

use moduli_forge::exact::{Rat, RatFunc, Ring};
use moduli_forge::kft::{
    hyperelliptic_boundary, kft_companions, kft_invariants, kft_separation_record,
};

fn main() {
    // symbolic fiber identity
    let lam = RatFunc::var();
    let comps = kft_companions(&lam).expect("symbolic member");
    println!("lambda2 = {}", comps.lambda2);
    println!();
    println!("lambda3 = {}", comps.lambda3);
    println!();
    print!("{}", comps.record);
    println!();

    // the invariants separate lambda from both companions
    print!("{}", kft_separation_record().expect("symbolic member"));
    println!();

    // the special fiber G = 4: lambda = -5/2 is a double point of G and
    // its third fiber point lands on the boundary
    let special = Rat::new(-5, 2).unwrap();
    let inv = kft_invariants(&special).expect("smooth member");
    println!("G(-5/2) = {}", inv.g);
    let comps = kft_companions(&special).expect("smooth member");
    // the discriminant 25/4 - 4 = 9/4 is a rational square; specialize s
    let s = Rat::new(3, 2).unwrap();
    let value = |x: &moduli_forge::exact::QuadExt<Rat>| {
        x.base_part().add(&x.radical_part().mul(&s))
    };
    println!(
        "companion values at -5/2: {} and {}",
        value(&comps.lambda2),
        value(&comps.lambda3)
    );
    let h = hyperelliptic_boundary().expect("consistent record");
    println!(
        "the value 2 is a boundary point: it belongs to the hyperelliptic genus-{} curve {} with {} automorphisms and quotient signature {}",
        h.genus, h.curve, h.automorphism_order, h.signature
    );
}
