//! Sparse multivariate polynomials.
//!
//! Terms are kept in a `BTreeMap` ordered by graded-lexicographic monomial
//! order (fixed globally; it only affects internal division steps, never
//! results). No zero coefficients are ever stored.

use crate::error::{Error, Result};
use crate::exact::{Field, Ring};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector with graded-lexicographic `Ord`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, by: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&by.0).map(|(a, b)| a - b).collect())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A sparse multivariate polynomial over `R` in a fixed number of variables.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<R: Ring> {
    nvars: usize,
    terms: BTreeMap<Monomial, R>,
}

/// Default print names; arities beyond four fall back to x0, x1, ...
const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

impl<R: Ring> MultiPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates and
    /// dropping zeros. All exponent vectors must have length `nvars`.
    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, R)>) -> Result<Self> {
        let mut map: BTreeMap<Monomial, R> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::ArityMismatch(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    exps.len(),
                    nvars
                )));
            }
            let m = Monomial(exps);
            let merged = match map.remove(&m) {
                Some(old) => old.add(&c),
                None => c,
            };
            if !merged.is_zero() {
                map.insert(m, merged);
            }
        }
        Ok(MultiPoly { nvars, terms: map })
    }

    /// Single term `c * x^exps`.
    pub fn term(c: R, exps: Vec<u32>) -> Self {
        let nvars = exps.len();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), c);
        MultiPoly { nvars, terms }
    }

    /// The variable `x_i` in `nvars` variables, with context from `ctx`.
    pub fn variable(ctx: &R, i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::term(ctx.one_like(), exps)
    }

    pub fn constant(c: R, nvars: usize) -> Self {
        Self::term(c, vec![0; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&R> {
        self.terms.get(&Monomial(exps.to_vec()))
    }

    fn ctx(&self) -> Option<&R> {
        self.terms.values().next()
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    /// Total degree of the polynomial (max over terms).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// `Some(d)` when every stored term has total degree exactly `d`.
    /// The zero polynomial is homogeneous of indeterminate degree -> `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.total_degree();
        it.all(|m| m.total_degree() == d).then_some(d)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "mismatched variable counts");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let merged = match terms.remove(m) {
                Some(old) => old.add(c),
                None => c.clone(),
            };
            if !merged.is_zero() {
                terms.insert(m.clone(), merged);
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "mismatched variable counts");
        let mut terms: BTreeMap<Monomial, R> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.product(m2);
                let c = c1.mul(c2);
                let merged = match terms.remove(&m) {
                    Some(old) => old.add(&c),
                    None => c,
                };
                if !merged.is_zero() {
                    terms.insert(m, merged);
                }
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            let v = a.mul(c);
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = match self.ctx() {
            Some(c) => Self::constant(c.one_like(), self.nvars),
            None => return Self::zero(self.nvars),
        };
        let mut acc = one;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            let coeff = c.mul(&c.from_int_like(e as i64));
            if !coeff.is_zero() {
                terms.insert(Monomial(exps), coeff);
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Evaluates at a point given by one ring element per variable.
    pub fn eval_point(&self, point: &[R]) -> Result<R> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch(format!(
                "{} coordinates for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let zero = match self.ctx().or_else(|| point.first()) {
            Some(c) => c.zero_like(),
            None => return Err(Error::Domain("no context for evaluation".into())),
        };
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitutes `args[i]` for variable `i`. All `args` must share a
    /// variable count, which becomes the result's.
    pub fn substitute(&self, args: &[Self]) -> Result<Self> {
        if args.len() != self.nvars {
            return Err(Error::ArityMismatch(format!(
                "{} substitution arguments for {} variables",
                args.len(),
                self.nvars
            )));
        }
        let out_vars = args.first().map_or(self.nvars, |a| a.nvars);
        if args.iter().any(|a| a.nvars != out_vars) {
            return Err(Error::ArityMismatch(
                "substitution arguments with mixed variable counts".into(),
            ));
        }
        // cache powers of each argument up to the max exponent used
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let pow_cache: Vec<Vec<Self>> = args
            .iter()
            .zip(&max_exp)
            .map(|(a, &top)| {
                let mut v = Vec::with_capacity(top as usize + 1);
                for e in 0..=top {
                    if e == 0 {
                        v.push(match a.ctx().or_else(|| self.ctx()) {
                            Some(c) => Self::constant(c.one_like(), out_vars),
                            None => Self::zero(out_vars),
                        });
                    } else {
                        let prev = v.last().expect("previous power").clone();
                        v.push(prev.mul(a));
                    }
                }
                v
            })
            .collect();
        let mut acc = Self::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone(), out_vars);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pow_cache[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Formats with explicit `*` and `^` so that simple cases re-parse.
    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let name = |i: usize| -> String {
            if self.nvars <= VAR_NAMES.len() {
                VAR_NAMES[i].to_string()
            } else {
                format!("x{i}")
            }
        };
        // descending graded-lex reads conventionally
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
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
            let is_const = m.0.iter().all(|&e| e == 0);
            if is_const {
                write!(f, "{mag}")?;
                continue;
            }
            let mut lead = true;
            if !c.is_one() {
                let minus_one = c.one_like().neg();
                if *c != minus_one || sign == "+" {
                    write!(f, "{mag}")?;
                    lead = false;
                }
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{}", name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> MultiPoly<F> {
    /// Exact division by a single nonzero divisor: returns `q` with
    /// `self = q * g` when the remainder of multivariate division (graded
    /// lex) vanishes, `None` otherwise. For a single divisor a zero
    /// remainder is exactly membership in the principal ideal (g).
    pub fn divide_exact(&self, g: &Self) -> Result<Option<Self>> {
        if g.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        if self.nvars != g.nvars {
            return Err(Error::ArityMismatch(format!(
                "dividend in {} variables, divisor in {}",
                self.nvars, g.nvars
            )));
        }
        let (gm, gc) = g.leading_term().expect("nonzero divisor");
        let gc_inv = match gc.inv() {
            Some(i) => i,
            None => {
                return Err(Error::NotInvertible(
                    "leading coefficient of divisor".into(),
                ))
            }
        };
        let gm = gm.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        loop {
            let Some((rm, rc)) = rem.leading_term() else {
                return Ok(Some(quot));
            };
            if !gm.divides(rm) {
                // leading term can never be cancelled later: not divisible
                return Ok(None);
            }
            let t = Self::term(rc.mul(&gc_inv), rm.quotient(&gm).0);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(g));
        }
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;

    fn mp(terms: &[(i64, [u32; 3])]) -> MultiPoly<Rat> {
        MultiPoly::from_terms(
            3,
            terms
                .iter()
                .map(|&(c, e)| (e.to_vec(), Rat::from_int(c)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = mp(&[(1, [1, 0, 0]), (-1, [1, 0, 0])]);
        assert!(p.is_zero());
        let q = mp(&[(2, [1, 0, 0]), (3, [0, 1, 0]), (-3, [0, 1, 0])]);
        assert_eq!(q.num_terms(), 1);
    }

    #[test]
    fn grlex_order() {
        // degree first, then lex
        assert!(Monomial(vec![0, 0, 2]) > Monomial(vec![1, 0, 0]));
        assert!(Monomial(vec![1, 1, 0]) > Monomial(vec![1, 0, 1]));
        assert!(Monomial(vec![2, 0, 0]) > Monomial(vec![1, 1, 0]));
    }

    #[test]
    fn simple_division() {
        // x divides x^2 y -> x y
        let g = mp(&[(1, [1, 0, 0])]);
        let f = mp(&[(1, [2, 1, 0])]);
        assert_eq!(f.divide_exact(&g).unwrap().unwrap(), mp(&[(1, [1, 1, 0])]));
    }

    #[test]
    fn membership_and_non_membership() {
        // x+y | x^2 - y^2, but not x^2 + y^2
        let g = mp(&[(1, [1, 0, 0]), (1, [0, 1, 0])]);
        let f1 = mp(&[(1, [2, 0, 0]), (-1, [0, 2, 0])]);
        let f2 = mp(&[(1, [2, 0, 0]), (1, [0, 2, 0])]);
        let q = f1.divide_exact(&g).unwrap().unwrap();
        assert_eq!(q.mul(&g), f1);
        assert!(f2.divide_exact(&g).unwrap().is_none());
    }

    #[test]
    fn division_by_zero_rejected() {
        let f = mp(&[(1, [1, 0, 0])]);
        assert!(f.divide_exact(&MultiPoly::zero(3)).is_err());
    }

    #[test]
    fn quotient_reexpands() {
        let g = mp(&[(1, [1, 1, 0]), (2, [0, 0, 2]), (-1, [0, 1, 1])]);
        let h = mp(&[(3, [1, 0, 0]), (1, [0, 2, 0]), (5, [0, 0, 0])]);
        let f = g.mul(&h);
        let q = f.divide_exact(&g).unwrap().unwrap();
        assert_eq!(q, h);
        assert_eq!(q.mul(&g), f);
    }

    #[test]
    fn homogeneity() {
        let p = mp(&[(1, [4, 0, 0]), (1, [0, 4, 0]), (2, [2, 2, 0])]);
        assert_eq!(p.homogeneous_degree(), Some(4));
        let q = mp(&[(1, [1, 0, 0]), (1, [0, 2, 0])]);
        assert_eq!(q.homogeneous_degree(), None);
        // products of homogeneous are homogeneous
        assert_eq!(p.mul(&p).homogeneous_degree(), Some(8));
        // and so are exact quotients of homogeneous pairs
        let g = mp(&[(1, [1, 1, 0]), (1, [0, 0, 2])]);
        let f = p.mul(&g);
        let quot = f.divide_exact(&g).unwrap().unwrap();
        assert_eq!(quot.homogeneous_degree(), Some(4));
        assert_eq!(quot, p);
    }

    #[test]
    fn substitution() {
        // f(x,y,z) = x^2 y at (y, -x, -z): y^2 * (-x) = -x y^2
        let f = mp(&[(1, [2, 1, 0])]);
        let args = vec![
            mp(&[(1, [0, 1, 0])]),
            mp(&[(-1, [1, 0, 0])]),
            mp(&[(-1, [0, 0, 1])]),
        ];
        assert_eq!(f.substitute(&args).unwrap(), mp(&[(-1, [1, 2, 0])]));
    }

    #[test]
    fn display() {
        let p = mp(&[(1, [2, 0, 0]), (-3, [1, 1, 0]), (1, [0, 0, 0])]);
        assert_eq!(p.to_string(), "x^2-3*x*y+1");
    }
}
