use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::scalar::GaussianRational;

use super::{GmfResult, Method};

// Summing a^(n - F - sum_I l) b^(sum_I l) over all cycle subsets I factors
// into one binomial per cycle, so both values are products over the cycle
// type [l_1, ..., l_r, 1^F] of theta^-1 tau.

/// `det(a P_theta + b P_tau) = sgn(theta) (a+b)^F prod_i (a^l_i - (-b)^l_i)`.
pub fn det_linear_sum(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
) -> Result<GmfResult> {
    closed_form(a, b, theta, tau, true)
}

/// `per(a P_theta + b P_tau) = (a+b)^F prod_i (a^l_i + b^l_i)`.
pub fn per_linear_sum(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
) -> Result<GmfResult> {
    closed_form(a, b, theta, tau, false)
}

fn closed_form(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
    signed: bool,
) -> Result<GmfResult> {
    if theta.degree() != tau.degree() {
        return Err(Error::DegreeMismatch { expected: theta.degree(), found: tau.degree() });
    }
    let cs = theta.inverse().compose(tau)?.cycle_structure();
    let mut value = (a + b).pow(cs.fixed_count as u64);
    for &l in &cs.lengths {
        let al = a.pow(l as u64);
        let bl = b.pow(l as u64);
        // (-1)^(l+1) b^l
        let factor = if signed && l % 2 == 0 { &al - &bl } else { &al + &bl };
        value = &value * &factor;
    }
    if signed && theta.sign() < 0 {
        value = -value;
    }
    Ok(GmfResult::new(value, Method::ClosedForm, cs.lengths.len()))
}
