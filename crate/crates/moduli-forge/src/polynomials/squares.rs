//! Perfect-square extraction for univariate polynomials.

use crate::exact::{Field, UniPoly};

/// Writes `p = c * q^2` with `c` a scalar and `q` monic, when possible.
///
/// The candidate `q` is solved coefficientwise from the top (characteristic
/// zero, so the divisions by 2 are exact) and the factorization is verified
/// by re-expansion before being returned. Returns `None` for the zero
/// polynomial, odd degrees and non-squares.
pub fn perfect_square<F: Field>(p: &UniPoly<F>) -> Option<(F, UniPoly<F>)> {
    let deg = p.degree()?;
    if deg % 2 != 0 {
        return None;
    }
    let m = deg / 2;
    let c = p.leading().expect("nonzero polynomial").clone();
    let c_inv = c.inv()?;
    let two_inv = c.from_int_like(2).inv().expect("characteristic zero");

    // q = x^m + a_{m-1} x^{m-1} + ... + a_0, solved from
    //   p_{m+k}/c = sum_{i+j = m+k} a_i a_j  (a_m = 1), k = m-1 down to 0.
    // The pair (m, k) contributes 2 a_k; every other pair on that
    // antidiagonal has both indices in (k, m) and is already known.
    let zero = c.zero_like();
    let mut q = vec![zero.clone(); m + 1];
    q[m] = c.one_like();
    for k in (0..m).rev() {
        let mut acc = zero.clone();
        let mut i = k + 1;
        loop {
            let j = m + k - i;
            if j < i {
                break;
            }
            if j < m {
                let prod = q[i].mul(&q[j]);
                acc = if i == j {
                    acc.add(&prod)
                } else {
                    acc.add(&prod).add(&prod)
                };
            }
            i += 1;
        }
        let target = p.coeff(m + k).cloned().unwrap_or_else(|| zero.clone());
        q[k] = target.mul(&c_inv).sub(&acc).mul(&two_inv);
    }
    let q = UniPoly::from_coeffs(q);
    let check = q.mul(&q).scale(&c);
    (&check == p).then_some((c, q))
}
