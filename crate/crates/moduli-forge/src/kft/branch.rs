//! Branch data of the degree-24 quotient map.
//!
//! For a family member the quotient map `Q` is branched over infinity (order
//! 3), zero (order 2) and two further order-2 values `l1`, `l2` living in
//! the quadratic extension by `s = sqrt(lambda^2 - lambda - 2)`. Moving the
//! order-2 triple to `(infinity, 0, 1)` by the normalizing transformation
//! puts the order-3 value at `mu`; the trace `F(mu) = mu^2/(mu - 1)` does
//! not depend on the branch choice and equals `G(lambda)`.

use crate::error::{Error, Result};
use crate::evidence::{Certificate, EvidenceRecord};
use crate::exact::{Field, QuadExt, Ring};
use crate::kft::curve::in_smooth_family;
use crate::kft::invariants::{eval_formula, g_formula};
use crate::moebius::{self, normalizing_map, ProjPoint};

/// Which square root of `lambda^2 - lambda - 2` the formulas use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BranchSign {
    Plus,
    Minus,
}

impl BranchSign {
    pub fn as_str(self) -> &'static str {
        match self {
            BranchSign::Plus => "plus",
            BranchSign::Minus => "minus",
        }
    }
}

/// Branch data for one member and one branch choice, together with its
/// consistency certificates.
#[derive(Clone, Debug)]
pub struct KftBranchData<F: Field> {
    pub sign: BranchSign,
    /// Order-2 branch value sent to infinity by the normalizing map.
    pub l1: QuadExt<F>,
    /// Order-2 branch value sent to 1.
    pub l2: QuadExt<F>,
    /// The order-3 branch value after normalization.
    pub mu: QuadExt<F>,
    pub record: EvidenceRecord,
}

/// The extension constant `lambda^2 - lambda - 2`.
pub fn branch_ext_constant<F: Field>(lambda: &F) -> F {
    lambda
        .mul(lambda)
        .sub(lambda)
        .sub(&lambda.from_int_like(2))
}

fn branch_values<F: Field>(
    lambda: &F,
    sign: BranchSign,
) -> Result<(QuadExt<F>, QuadExt<F>, QuadExt<F>)> {
    let d = branch_ext_constant(lambda);
    let s = match sign {
        BranchSign::Plus => QuadExt::gen(d.clone()),
        BranchSign::Minus => QuadExt::gen(d.clone()).neg(),
    };
    let c = |v: F| QuadExt::from_base(v, d.clone());
    let two_plus = c(lambda.from_int_like(2).add(lambda));
    let lam = c(lambda.clone());
    let two = c(lambda.from_int_like(2));

    // l1 = (2+lambda)(lambda + s)^2 / (2 - lambda - 2 s)^3
    let lam_plus_s = lam.add(&s);
    let lam_minus_s = lam.sub(&s);
    let two_minus_lam = two.sub(&lam);
    let two_s = s.add(&s);
    let l1 = two_plus
        .mul(&lam_plus_s.mul(&lam_plus_s))
        .checked_div(&cube(&two_minus_lam.sub(&two_s)))?;
    // l2 = (2+lambda)(lambda - s)^2 / (2 - lambda + 2 s)^3
    let l2 = two_plus
        .mul(&lam_minus_s.mul(&lam_minus_s))
        .checked_div(&cube(&two_minus_lam.add(&two_s)))?;
    // mu = 4 (2+lambda)^2 s^3 / ((lambda - s)^2 (lambda - 2 + 2 s)^3)
    let four = c(lambda.from_int_like(4));
    let mu_num = four.mul(&two_plus.mul(&two_plus)).mul(&cube(&s));
    let mu_den = lam_minus_s
        .mul(&lam_minus_s)
        .mul(&cube(&lam.sub(&two).add(&two_s)));
    let mu = mu_num.checked_div(&mu_den)?;
    Ok((l1, l2, mu))
}

fn cube<F: Field>(x: &QuadExt<F>) -> QuadExt<F> {
    x.mul(x).mul(x)
}

/// Computes `(l1, l2, mu)` for the chosen branch and certifies:
/// the normalizing transformation sending `(0, l1, l2)` to `(0, inf, 1)`
/// sends infinity to `mu`, and `F(mu) = G(lambda)`.
pub fn kft_branch_data<F: Field>(lambda: &F, sign: BranchSign) -> Result<KftBranchData<F>> {
    if !in_smooth_family(lambda) {
        return Err(Error::Domain(format!(
            "lambda = {lambda} lies outside the smooth family (singular set {{-2, -1, 2}})"
        )));
    }
    let (l1, l2, mu) = branch_values(lambda, sign)?;
    let mut record = EvidenceRecord::new(format!("branch data, {} branch", sign.as_str()));

    if l1.mul(&l2).is_zero() {
        record.push(Certificate::fail("l1 * l2 nonzero", "product vanishes"));
    } else {
        record.push(Certificate::pass("l1 * l2 nonzero", "both branch values nonzero"));
    }
    let one = mu.one_like();
    if mu.is_zero() || mu == one {
        record.push(Certificate::fail("mu avoids 0 and 1", format!("mu = {mu}")));
    } else {
        record.push(Certificate::pass("mu avoids 0 and 1", "order-3 value in general position"));
    }

    // T(infinity) = mu for T = normalizing_map(0, l1, l2)
    let zero_pt = ProjPoint::finite(l1.zero_like());
    let t = normalizing_map(&zero_pt, &ProjPoint::finite(l1.clone()), &ProjPoint::finite(l2.clone()))?;
    let t_inf = t.apply(&ProjPoint::infinity(&l1));
    let mu_pt = ProjPoint::finite(mu.clone());
    record.push(if t_inf.proj_eq(&mu_pt) {
        Certificate::pass(
            "normalizing map sends infinity to mu",
            "T(inf) = (l2 - l1)/l2 = mu",
        )
    } else {
        Certificate::fail(
            "normalizing map sends infinity to mu",
            format!("T(inf) = {t_inf}, mu = {mu}"),
        )
    });

    // F(mu) = G(lambda), computed in the extension
    let g = eval_formula("G", &g_formula(), lambda)?;
    let g_ext = QuadExt::from_base(g, l1.ext_constant().clone());
    let f_mu = moebius::f_value(&mu)?;
    record.push(if f_mu == g_ext {
        Certificate::pass("F(mu) = G(lambda)", "trace of the branch pair")
    } else {
        Certificate::fail("F(mu) = G(lambda)", format!("F(mu) = {f_mu}"))
    });

    Ok(KftBranchData {
        sign,
        l1,
        l2,
        mu,
        record,
    })
}

/// Certifies the branch-flip coherence: flipping the square root swaps
/// `l1` and `l2` and replaces `mu` by `eta(mu) = mu/(mu-1)`, and the two
/// choices satisfy `mu + eta(mu) = G(lambda)` exactly.
pub fn branch_sign_flip_record<F: Field>(lambda: &F) -> Result<EvidenceRecord> {
    let plus = kft_branch_data(lambda, BranchSign::Plus)?;
    let minus = kft_branch_data(lambda, BranchSign::Minus)?;
    let mut rec = EvidenceRecord::new("branch choice coherence");

    rec.push(if plus.l1 == minus.l2 && plus.l2 == minus.l1 {
        Certificate::pass("sign flip swaps l1 and l2", "roles interchange")
    } else {
        Certificate::fail("sign flip swaps l1 and l2", "values do not interchange")
    });

    let eta_mu = moebius::eta_value(&plus.mu)?;
    rec.push(if minus.mu == eta_mu {
        Certificate::pass("sign flip sends mu to eta(mu)", "mu/(mu-1)")
    } else {
        Certificate::fail(
            "sign flip sends mu to eta(mu)",
            format!("flipped mu = {}, eta(mu) = {eta_mu}", minus.mu),
        )
    });

    let g = eval_formula("G", &g_formula(), lambda)?;
    let g_ext = QuadExt::from_base(g, plus.mu.ext_constant().clone());
    rec.push(if plus.mu.add(&eta_mu) == g_ext {
        Certificate::pass("mu + eta(mu) = G(lambda)", "branch-independent trace")
    } else {
        Certificate::fail("mu + eta(mu) = G(lambda)", "trace mismatch")
    });
    Ok(rec)
}
