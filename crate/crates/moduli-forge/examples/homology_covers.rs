//! Homology covers: genus arithmetic, the (Z/a)^3 coordinate-scaling
//! action, the Legendre form of the a = 2 cover with its full certificate
//! bundle, and the field-of-moduli report Q(j(lambda)).
//!
//! Run with: cargo run --example homology_covers

use moduli_forge::exact::{QuadNumber, Rat, RatFunc};
use moduli_forge::homology::{
    classify_quadratic, classify_rational, classify_symbolic, homology_genus,
    homology_group_check, homology_moduli_report, legendre_cover_check, HomologyCurve,
    LegendreCurve,
};

fn main() {
    println!("genus of the homology cover of (0;a,a,a,a):");
    for a in 2..=6u64 {
        println!("  a = {a}  ->  genus {}", homology_genus(a).expect("a >= 2"));
    }
    println!();

    let curve = HomologyCurve::new(3, RatFunc::var()).expect("admissible parameter");
    println!("the a = 3 cover in projective 3-space:");
    println!("  {} = 0", curve.eq1);
    println!("  {} = 0", curve.eq2);
    print!("{}", homology_group_check(3).expect("desk scale"));
    println!();

    let legendre = LegendreCurve::new(RatFunc::var()).expect("admissible parameter");
    println!("the a = 2 cover in Legendre form: {} = 0", legendre.cubic);
    print!("{}", legendre_cover_check().expect("symbolic identities"));
    println!();

    println!("field-of-moduli reports");
    println!("-----------------------");
    let rep = homology_moduli_report(&Rat::from_int(-1), &|j| classify_rational(j))
        .expect("admissible parameter");
    println!("  lambda = -1: j = {}, M = {}", rep.j, rep.descriptor);

    let lam = QuadNumber::new(Rat::from_int(1), Rat::from_int(1), 2).unwrap();
    let rep = homology_moduli_report(&lam, &|j| classify_quadratic(j))
        .expect("admissible parameter");
    println!(
        "  lambda = 1+sqrt(2): j = {}, M = {} (j minimal polynomial {})",
        rep.j,
        rep.descriptor,
        rep.j_min_poly.as_deref().unwrap_or("-")
    );

    let rep = homology_moduli_report(&RatFunc::var(), &|j| classify_symbolic(j))
        .expect("admissible parameter");
    println!("  symbolic lambda: M = {}", rep.descriptor);
    println!("  orbit of lambda has {} elements", rep.orbit.len());
}
