//! Branch data of the degree-24 quotient of a family member: the order-2
//! branch values l1, l2, the normalized order-3 value mu, and the
//! branch-choice coherence mu + eta(mu) = G(lambda).
//!
//! Run with: cargo run --example kft_branch_data

use moduli_forge::exact::{Rat, RatFunc};
use moduli_forge::kft::{branch_sign_flip_record, kft_branch_data, BranchSign};

fn main() {
    // symbolic lambda in Q(lambda)[s]/(s^2 - (lambda^2 - lambda - 2))
    let lam = RatFunc::var();
    let data = kft_branch_data(&lam, BranchSign::Plus).expect("smooth symbolic member");
    println!("l1 = {}", data.l1);
    println!();
    println!("l2 = {}", data.l2);
    println!();
    println!("mu = {}", data.mu);
    println!();
    print!("{}", data.record);
    println!();
    print!("{}", branch_sign_flip_record(&lam).expect("smooth symbolic member"));
    println!();

    // a concrete member; lambda = 3 even makes the extension degenerate
    // (s^2 = 4) and the identities still hold as ring identities
    for lambda in [Rat::from_int(1), Rat::from_int(3)] {
        let data = kft_branch_data(&lambda, BranchSign::Plus).expect("smooth member");
        println!("lambda = {lambda}: s^2 = {}", data.l1.ext_constant());
        print!("{}", data.record);
        println!();
    }
}
