//! A tour of the exact coefficient tower and the element grammar used by
//! the command-line front end.
//!
//! Run with: cargo run --example exact_tower

use moduli_forge::cli::{parse_element, Element};
use moduli_forge::exact::{
    cyclo_reduce, QuadExt, QuadNumber, Rat, RatFunc, Ring, UniPoly,
};

fn main() {
    // rationals are always canonical: reduced, positive denominator
    let r = Rat::new(6, -4).expect("nonzero denominator");
    println!("6/-4 canonicalizes to {r}");

    // Q(sqrt(-7)): alpha times its conjugate is the norm
    let alpha = QuadNumber::new(Rat::new(-1, 2).unwrap(), Rat::new(1, 2).unwrap(), -7).unwrap();
    println!(
        "alpha = {alpha}, alpha * conj(alpha) = {}",
        alpha.mul(&alpha.conj())
    );

    // the rational function field Q(lambda), canonical form
    let lam = RatFunc::var();
    let f = RatFunc::new(
        UniPoly::from_ints(&[-1, 0, 1]), // lambda^2 - 1
        UniPoly::from_ints(&[-1, 1]),    // lambda - 1
    )
    .expect("nonzero denominator");
    println!("(lambda^2-1)/(lambda-1) cancels to {f}");

    // a quadratic extension of Q(lambda): s^2 = lambda^2 - lambda - 2
    let d = lam.mul(&lam).sub(&lam).sub(&lam.from_int_like(2));
    let s = QuadExt::gen(d);
    println!("s * s = {}", s.mul(&s));

    // the quotient ring Q[t]/(t^a - 1): t^3 + t reduces mod t^2 - 1
    let red = cyclo_reduce(&UniPoly::from_ints(&[0, 1, 0, 1]), 2).expect("a >= 2");
    println!("t^3 + t = {red}");

    // the CLI grammar reaches the whole tower
    println!();
    for src in [
        "3*(-1+sqrt(-7))/2",
        "-5/2",
        "lambda^2-lambda-2",
        "sqrt(12)",
        "(lambda+1)*sqrt(2)",
    ] {
        let e: Element = parse_element(src).expect("well-formed expression");
        println!("{src:>22}  parses into {:>28}  [{}]", e.canonical(), e.field_tag());
    }
}
