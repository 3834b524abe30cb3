//! Projective maps: tuples of homogeneous forms of a common degree.
//!
//! Projective identity testing is done with cross-products, never with
//! multivariate gcd extraction: two maps agree projectively iff all
//! `m1[i]*m2[j] - m1[j]*m2[i]` vanish, and agree on a curve iff each
//! cross-product is divisible by the curve form (single-divisor exact
//! division is principal-ideal membership). Maps are not reduced modulo any
//! curve on construction; reduction happens only inside equality tests.

use crate::error::{Error, Result};
use crate::exact::{Field, Ring};
use crate::polynomials::MultiPoly;
use std::fmt;

/// A tuple of `n` homogeneous forms in `n` variables of common degree >= 1,
/// considered up to a common scalar (or common polynomial) factor.
#[derive(Clone, PartialEq)]
pub struct ProjMap<R: Ring> {
    comps: Vec<MultiPoly<R>>,
    degree: u32,
}

/// Outcome of a projective equality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjVerdict {
    /// All cross-products vanish identically.
    StrictEqual,
    /// Cross-products vanish modulo the supplied curve form.
    EqualOnCurve,
    /// Witnessed inequality: indices of the first nonvanishing
    /// cross-product and its rendered form.
    NotEqual {
        i: usize,
        j: usize,
        witness: String,
    },
}

impl ProjVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, ProjVerdict::NotEqual { .. })
    }
}

impl<R: Ring> ProjMap<R> {
    /// Validates: at least one nonzero component, every nonzero component
    /// homogeneous of the same degree >= 1, consistent variable counts.
    pub fn new(comps: Vec<MultiPoly<R>>) -> Result<Self> {
        let nvars = comps
            .first()
            .map(MultiPoly::nvars)
            .ok_or_else(|| Error::ArityMismatch("empty component tuple".into()))?;
        if comps.iter().any(|c| c.nvars() != nvars) {
            return Err(Error::ArityMismatch(
                "components with mixed variable counts".into(),
            ));
        }
        let mut degree = None;
        for c in &comps {
            if c.is_zero() {
                continue;
            }
            match (degree, c.homogeneous_degree()) {
                (_, None) => {
                    return Err(Error::Domain(format!(
                        "component {c} is not homogeneous"
                    )))
                }
                (None, Some(d)) => degree = Some(d),
                (Some(d0), Some(d)) if d0 == d => {}
                (Some(d0), Some(d)) => {
                    return Err(Error::Domain(format!(
                        "components of mixed degrees {d0} and {d}"
                    )))
                }
            }
        }
        let degree = degree.ok_or_else(|| Error::Domain("all components are zero".into()))?;
        if degree == 0 {
            return Err(Error::Domain("constant tuple is not a projective map".into()));
        }
        Ok(ProjMap { comps, degree })
    }

    /// The identity on projective space of `nvars - 1` dimensions.
    pub fn identity(ctx: &R, nvars: usize) -> Self {
        let comps = (0..nvars)
            .map(|i| MultiPoly::variable(ctx, i, nvars))
            .collect();
        ProjMap { comps, degree: 1 }
    }

    /// Linear map from a square matrix: row i gives component i.
    pub fn from_matrix(rows: &[Vec<R>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ArityMismatch("non-square matrix".into()));
        }
        let mut comps = Vec::with_capacity(n);
        for row in rows {
            let mut p = MultiPoly::zero(n);
            for (j, c) in row.iter().enumerate() {
                let mut exps = vec![0; n];
                exps[j] = 1;
                p = p.add(&MultiPoly::term(c.clone(), exps));
            }
            comps.push(p);
        }
        Self::new(comps)
    }

    pub fn components(&self) -> &[MultiPoly<R>] {
        &self.comps
    }

    pub fn arity(&self) -> usize {
        self.comps.len()
    }

    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Composition `self` after `inner`: componentwise substitution; the
    /// degree multiplies.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.nvars() != inner.arity() {
            return Err(Error::ArityMismatch(format!(
                "outer map in {} variables, inner map with {} components",
                self.nvars(),
                inner.arity()
            )));
        }
        let comps = self
            .comps
            .iter()
            .map(|c| c.substitute(inner.components()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    /// `self` composed with itself `e` times; `e = 0` gives the identity.
    pub fn iterate(&self, e: u32) -> Result<Self> {
        let ctx = self
            .comps
            .iter()
            .find_map(|c| c.terms().next().map(|(_, c)| c.clone()))
            .expect("validated maps have a nonzero component");
        let mut acc = Self::identity(&ctx, self.nvars());
        for _ in 0..e {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// All cross-products `self[i]*rhs[j] - self[j]*rhs[i]` for i < j.
    fn cross_products(&self, rhs: &Self) -> Vec<(usize, usize, MultiPoly<R>)> {
        let n = self.comps.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                out.push((
                    i,
                    j,
                    self.comps[i]
                        .mul(&rhs.comps[j])
                        .sub(&self.comps[j].mul(&rhs.comps[i])),
                ));
            }
        }
        out
    }

    /// Strict projective equality (cross-products vanish identically).
    /// Sound over any commutative ring.
    pub fn strict_equal(&self, rhs: &Self) -> Result<bool> {
        if self.arity() != rhs.arity() {
            return Err(Error::ArityMismatch(format!(
                "maps with {} and {} components",
                self.arity(),
                rhs.arity()
            )));
        }
        Ok(self
            .cross_products(rhs)
            .into_iter()
            .all(|(_, _, p)| p.is_zero()))
    }
}

impl<F: Field> ProjMap<F> {
    /// Projective equality, strictly or modulo a curve form.
    pub fn proj_equal(&self, rhs: &Self, curve: Option<&MultiPoly<F>>) -> Result<ProjVerdict> {
        if self.arity() != rhs.arity() {
            return Err(Error::ArityMismatch(format!(
                "maps with {} and {} components",
                self.arity(),
                rhs.arity()
            )));
        }
        let crosses = self.cross_products(rhs);
        if crosses.iter().all(|(_, _, p)| p.is_zero()) {
            return Ok(ProjVerdict::StrictEqual);
        }
        if let Some(c) = curve {
            for (i, j, p) in &crosses {
                if p.is_zero() {
                    continue;
                }
                if p.divide_exact(c)?.is_none() {
                    return Ok(ProjVerdict::NotEqual {
                        i: *i,
                        j: *j,
                        witness: p.to_string(),
                    });
                }
            }
            return Ok(ProjVerdict::EqualOnCurve);
        }
        let (i, j, p) = crosses
            .into_iter()
            .find(|(_, _, p)| !p.is_zero())
            .expect("some cross-product is nonzero");
        Ok(ProjVerdict::NotEqual {
            i,
            j,
            witness: p.to_string(),
        })
    }

    /// Does the map carry the curve to itself? Returns the cofactor `q`
    /// with `curve o m = q * curve` when the substituted form is divisible,
    /// `None` otherwise. For a linear map `q` is a scalar.
    pub fn preserves_curve(&self, curve: &MultiPoly<F>) -> Result<Option<MultiPoly<F>>> {
        if curve.homogeneous_degree().is_none() {
            return Err(Error::Domain("curve form must be homogeneous".into()));
        }
        let pulled = curve.substitute(self.components())?;
        pulled.divide_exact(curve)
    }

    /// Canonical representative of the scalar class: scales so that the
    /// first nonzero coefficient (component order, then graded-lex term
    /// order) is 1. Used to deduplicate group elements.
    pub fn scalar_canonical(&self) -> Option<Self> {
        let lead = self
            .comps
            .iter()
            .find_map(|c| c.terms().next().map(|(_, coeff)| coeff.clone()))?;
        let inv = lead.inv()?;
        Some(ProjMap {
            comps: self.comps.iter().map(|c| c.scale(&inv)).collect(),
            degree: self.degree,
        })
    }
}

impl<R: Ring> fmt::Display for ProjMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> fmt::Debug for ProjMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Enumerates the group generated by projective maps under composition,
/// deduplicating by scalar-canonical form. Caps the closure at `max_order`
/// and returns `None` if the cap is exceeded.
pub fn projective_closure<F: Field>(
    gens: &[ProjMap<F>],
    max_order: usize,
) -> Result<Option<Vec<ProjMap<F>>>> {
    let mut members: Vec<ProjMap<F>> = Vec::new();
    let mut frontier: Vec<ProjMap<F>> = Vec::new();
    let first = gens
        .first()
        .ok_or_else(|| Error::Domain("no generators".into()))?;
    let ctx = first
        .components()
        .iter()
        .find_map(|c| c.terms().next().map(|(_, c)| c.clone()))
        .expect("validated map");
    let id = ProjMap::identity(&ctx, first.nvars());
    let idc = id
        .scalar_canonical()
        .ok_or_else(|| Error::NotInvertible("identity scaling".into()))?;
    members.push(idc.clone());
    frontier.push(idc);
    while let Some(g) = frontier.pop() {
        for h in gens {
            let prod = g.compose(h)?;
            let canon = prod
                .scalar_canonical()
                .ok_or_else(|| Error::NotInvertible("leading coefficient scaling".into()))?;
            if !members.contains(&canon) {
                if members.len() >= max_order {
                    return Ok(None);
                }
                members.push(canon.clone());
                frontier.push(canon);
            }
        }
    }
    Ok(Some(members))
}
