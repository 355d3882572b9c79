use crate::characters::CharacterSpec;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::perm::{Permutation, XSetIter};
use crate::scalar::GaussianRational;

use super::{GmfResult, Method};

/// `d(a P_theta + b P_tau)` summed over `X(theta, tau) ∩ G` only:
///
/// `(a+b)^F * sum_{s} conj(chi)(s) a^(n - t_s - F) b^(t_s)`
///
/// where `F` counts the fixed points of `theta^-1 tau` and `t_s` the points
/// on which `s` follows `tau` rather than `theta`. `term_count` is the number
/// of elements of `X(theta, tau) ∩ G` accumulated.
pub fn gmf_linear_sum(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
    group: &GroupSpec,
    chi: &CharacterSpec,
) -> Result<GmfResult> {
    let n = theta.degree();
    for d in [tau.degree(), group.degree()] {
        if d != n {
            return Err(Error::DegreeMismatch { expected: n, found: d });
        }
    }
    let xs = XSetIter::new(theta, tau)?;
    let fixed = n - xs.cycles().iter().map(Vec::len).sum::<usize>();
    let overlap = a + b;
    if fixed > 0 && overlap.is_zero() {
        return Ok(GmfResult::new(GaussianRational::zero(), Method::Formula, 0));
    }
    let a_pows = powers(a, n - fixed);
    let b_pows = powers(b, n - fixed);
    let mut sum = GaussianRational::zero();
    let mut terms = 0;
    for e in xs {
        if !group.contains(&e.sigma)? {
            continue;
        }
        terms += 1;
        let weight = &a_pows[n - e.t_sigma - fixed] * &b_pows[e.t_sigma];
        if weight.is_zero() {
            continue;
        }
        let coeff = chi.conjugate_evaluate(&e.sigma)?;
        sum += &coeff * &weight;
    }
    Ok(GmfResult::new(&overlap.pow(fixed as u64) * &sum, Method::Formula, terms))
}

/// `[x^0, x^1, ..., x^max]`.
pub(crate) fn powers(x: &GaussianRational, max: usize) -> Vec<GaussianRational> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(GaussianRational::one());
    for k in 1..=max {
        out.push(&out[k - 1] * x);
    }
    out
}
