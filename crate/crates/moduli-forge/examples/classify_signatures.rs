//! Classify genus-zero signatures into field-of-moduli definability cases
//! and tabulate smooth-quotient genera by exact Riemann-Hurwitz arithmetic.
//!
//! Run with: cargo run --example classify_signatures

use moduli_forge::signatures::{definability_report, rh_genus, Signature};

fn main() {
    println!("definability classification");
    println!("---------------------------");
    for orders in [
        vec![2, 3, 8],
        vec![2, 2, 2, 3],
        vec![2, 2, 3, 3],
        vec![5, 5, 5, 5],
        vec![2, 3, 5, 7],
        vec![3, 3, 3, 3, 3],
    ] {
        let sig = Signature::new(0, orders).expect("valid signature");
        let verdict = definability_report(&sig);
        let bound = verdict
            .extension_degree_bound
            .map_or_else(|| "unknown".to_string(), |b| b.to_string());
        println!(
            "{:>16}  {:>14}  extension degree bound {}",
            sig.to_string(),
            verdict.case.as_str(),
            bound
        );
        for c in &verdict.citations {
            println!("{:18}- {c}", "");
        }
    }

    println!();
    println!("smooth quotient genera (2g - 2 = N (n - 2 - sum 1/k_i))");
    println!("--------------------------------------------------------");
    for (orders, n) in [
        (vec![2, 2, 2, 3], 24),
        (vec![2, 3, 7], 168),
        (vec![2, 3, 8], 96),
        (vec![2, 4, 6], 48),
    ] {
        let sig = Signature::new(0, orders).expect("valid signature");
        let g = rh_genus(&sig, n).expect("compatible orders");
        println!("{:>16}  group order {n:>4}  ->  genus {g}", sig.to_string());
    }
    println!();
    println!("four equal cone orders a, group order a^3:");
    for a in 2..=8u64 {
        let sig = Signature::new(0, vec![a, a, a, a]).expect("valid signature");
        let g = rh_genus(&sig, a * a * a).expect("compatible orders");
        println!("  a = {a:>2}  ->  genus {g}  (closed form 1 + a^2(a-2) = {})", 1 + a * a * (a - 2));
    }
}
