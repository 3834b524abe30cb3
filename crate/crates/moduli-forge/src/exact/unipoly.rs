//! Dense univariate polynomials over a coefficient ring.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: empty vector for the zero polynomial, nonzero leading
//! coefficient otherwise.

use crate::exact::{Field, Rat, Ring};
use std::fmt;

/// A univariate polynomial with coefficients in `R`, ascending order.
#[derive(Clone, PartialEq)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    /// Builds a polynomial, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// Constant polynomial; the zero constant gives the zero polynomial.
    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        UniPoly { coeffs }
    }

    /// The variable itself, in the context of `ctx`.
    pub fn var_like(ctx: &R) -> Self {
        Self::monomial(ctx.one_like(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `x^k` (zero beyond the stored range needs a context).
    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    fn ctx(&self) -> Option<&R> {
        self.coeffs.first()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let zero = match self.ctx().or_else(|| rhs.ctx()) {
            Some(c) => c.zero_like(),
            None => return Self::zero(),
        };
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = rhs.coeffs.get(k).unwrap_or(&zero);
            out.push(a.add(b));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = match self.ctx() {
            Some(c) => Self::constant(c.one_like()),
            None => {
                // 0^0 = 1 has no context to build from; treat as zero poly
                // only for positive exponents.
                if e == 0 {
                    panic!("pow of zero polynomial with exponent 0 has no context");
                }
                return Self::zero();
            }
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation at a point of the same ring.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Formats with a chosen variable name, descending powers, `*` between
    /// coefficient and variable so the output re-parses.
    pub fn fmt_with_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            // Composite coefficients (anything that is not a plain number)
            // get parenthesized so precedence survives re-parsing.
            let atomic = mag.chars().all(|ch| ch.is_ascii_digit() || ch == '/');
            let mag = if atomic { mag } else { format!("({mag})") };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    let unit = c.is_one() || *c == c.one_like().neg();
                    if unit {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{mag}*{var}")?;
                    }
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> UniPoly<F> {
    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// Scales to leading coefficient one. `None` when the leading
    /// coefficient is not invertible (or the polynomial is zero).
    pub fn make_monic(&self) -> Option<Self> {
        let inv = self.leading()?.inv()?;
        Some(self.scale(&inv))
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    /// `None` when `rhs` is zero or its leading coefficient is not
    /// invertible.
    pub fn divrem(&self, rhs: &Self) -> Option<(Self, Self)> {
        let dl = rhs.degree()?;
        let lead_inv = rhs.leading()?.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = rem.degree() {
            if dr < dl {
                break;
            }
            let c = rem.leading().expect("nonzero remainder").mul(&lead_inv);
            let term = Self::monomial(c, dr - dl);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(rhs));
        }
        Some((quot, rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Option<Self> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Some(a)
        } else {
            a.make_monic()
        }
    }

    /// Horner evaluation in a larger field, embedding the coefficients.
    pub fn eval_in<G: Field>(&self, x: &G, embed: &dyn Fn(&F) -> G) -> G {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&embed(c));
        }
        acc
    }
}

impl UniPoly<Rat> {
    /// Integer-coefficient convenience constructor, ascending order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&n| Rat::from_int(n)).collect())
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with_var(f, "x")
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn canonical_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        // (x+1)(x-1) = x^2 - 1
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 1]).sub(&p(&[1, 1])), UniPoly::zero());
        assert_eq!(p(&[1, 2, 3]).eval(&Rat::from_int(2)), Rat::from_int(17));
    }

    #[test]
    fn divrem_and_gcd() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let g = p(&[-1, 1]); // x - 1
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&g).unwrap(), g);
        // gcd is monic
        let a = p(&[-2, 0, 2]);
        assert_eq!(a.gcd(&p(&[-2, 2])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn display_descending_with_star() {
        assert_eq!(p(&[2, 0, -3, 1]).to_string(), "x^3-3*x^2+2");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[-1, -1]).to_string(), "-x-1");
        assert_eq!(UniPoly::<Rat>::zero().to_string(), "0");
    }
}
