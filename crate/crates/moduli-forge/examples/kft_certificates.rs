//! Certificates for the quartic family: the S4 action, the invariant
//! quotient map, and the singular boundary.
//!
//! Run with: cargo run --example kft_certificates

use moduli_forge::exact::{Rat, RatFunc};
use moduli_forge::kft::{
    kft_curve, kft_group_check, q_invariance_check, singular_witness, smooth_candidate_record,
};

fn main() {
    // symbolic lambda: the strongest form of every identity
    let lam = RatFunc::var();
    let curve = kft_curve(lam.clone());
    println!("family member: {} = 0", curve.quartic);
    println!();

    print!("{}", kft_group_check(&lam).expect("arity checks pass"));
    println!();
    print!("{}", q_invariance_check(&lam).expect("arity checks pass"));
    println!();

    // the three boundary parameters are honestly singular
    for boundary in [-2, -1, 2] {
        print!("{}", singular_witness(boundary).expect("catalogued boundary"));
    }
    println!();

    // and a sample smooth member passes the candidate-family check
    print!("{}", smooth_candidate_record(&Rat::from_int(1)));
}
