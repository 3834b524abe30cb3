//! Equivalence decisions and fields of moduli for concrete family members,
//! including the exceptional Fermat and Klein points.
//!
//! Run with: cargo run --example kft_moduli

use moduli_forge::exact::{QuadNumber, Rat};
use moduli_forge::kft::{
    fermat_check, kft_equivalent, kft_moduli_field, klein_automorphism_check, klein_point,
    AlgValue,
};

fn main() {
    let third = AlgValue::Rational(Rat::new(1, 3).unwrap());
    let quarter = AlgValue::Rational(Rat::new(1, 4).unwrap());
    let klein_plus = AlgValue::Quadratic(klein_point());
    let klein_minus = AlgValue::Quadratic(klein_point().conj());
    let sqrt2 = AlgValue::Quadratic(QuadNumber::new(Rat::from_int(1), Rat::from_int(1), 2).unwrap());

    println!("equivalence decisions");
    println!("---------------------");
    for (a, b) in [
        (&third, &third),
        (&third, &quarter),
        (&klein_plus, &klein_minus),
        (&sqrt2, &AlgValue::Quadratic(QuadNumber::new(Rat::from_int(1), Rat::from_int(-1), 2).unwrap())),
    ] {
        let d = kft_equivalent(a, b).expect("members of the family");
        println!(
            "  {a} vs {b}: conformal {}, anticonformal {}\n    ({})",
            d.conformal, d.anticonformal, d.reason
        );
    }
    println!();

    println!("fields of moduli");
    println!("----------------");
    for v in [&third, &klein_plus, &sqrt2, &AlgValue::Rational(Rat::from_int(0))] {
        let m = kft_moduli_field(v).expect("member of the family");
        match &m.min_poly {
            Some(p) => println!("  lambda = {v}: {} (minimal polynomial {p})", m.descriptor),
            None => println!("  lambda = {v}: {}", m.descriptor),
        }
        println!("    {}", m.note);
    }
    println!();

    println!("exceptional members");
    println!("-------------------");
    print!("{}", klein_automorphism_check().expect("fixed exact data"));
    println!();
    print!("{}", fermat_check().expect("fixed exact data"));
}
