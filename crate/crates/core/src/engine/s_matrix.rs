use num_bigint::BigInt;
use num_rational::BigRational;

use crate::characters::CharacterSpec;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::matrix::{s_matrix, Matrix};
use crate::perm::Permutation;
use crate::scalar::GaussianRational;

use super::{gmf_linear_sum, GmfResult};

/// Cycle counts of `theta` that drive the determinant of `S_theta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SCycleCounts {
    /// Fixed points.
    pub fixed: usize,
    /// Odd cycles of length at least 3.
    pub odd: usize,
    /// Cycles of length `4k + 2` with `k >= 1`.
    pub twice_odd: usize,
    /// Transpositions.
    pub transpositions: usize,
    /// Cycles of length divisible by 4.
    pub multiple_of_four: usize,
}

impl SCycleCounts {
    pub fn of(theta: &Permutation) -> Self {
        let mut c = SCycleCounts { fixed: theta.fixed_count(), odd: 0, twice_odd: 0, transpositions: 0, multiple_of_four: 0 };
        for l in theta.cycle_lengths().into_iter().filter(|&l| l > 1) {
            match l % 4 {
                0 => c.multiple_of_four += 1,
                2 if l == 2 => c.transpositions += 1,
                2 => c.twice_odd += 1,
                _ => c.odd += 1,
            }
        }
        c
    }
}

fn signed_power_of_two(negative: bool, exp: usize) -> GaussianRational {
    let v = GaussianRational::from_real(BigRational::from_integer(BigInt::from(1) << exp));
    if negative {
        -v
    } else {
        v
    }
}

/// `det(S_theta)`: zero when `theta` has a cycle of length divisible by 4,
/// otherwise `(-1)^(s+t) 2^(r+2s)` with `r` odd cycles of length `>= 3`,
/// `s` cycles of length `4k+2 > 2` and `t` transpositions.
pub fn det_s_closed(theta: &Permutation) -> GaussianRational {
    let c = SCycleCounts::of(theta);
    if c.multiple_of_four > 0 {
        return GaussianRational::zero();
    }
    signed_power_of_two((c.twice_odd + c.transpositions) % 2 == 1, c.odd + 2 * c.twice_odd)
}

/// `det(P_theta + P_theta^-1) = 2^(F+2t) det(S_theta)`, i.e.
/// `(-1)^(s+t) 2^(F+r+2(s+t))` unless a cycle length is divisible by 4.
pub fn det_p_plus_pinv_closed(theta: &Permutation) -> GaussianRational {
    let c = SCycleCounts::of(theta);
    if c.multiple_of_four > 0 {
        return GaussianRational::zero();
    }
    signed_power_of_two(
        (c.twice_odd + c.transpositions) % 2 == 1,
        c.fixed + c.odd + 2 * (c.twice_odd + c.transpositions),
    )
}

/// `d(S_theta) = d(P_theta + P_theta^-1) / 2^(F+2t)`.
pub fn gmf_s_matrix(theta: &Permutation, group: &GroupSpec, chi: &CharacterSpec) -> Result<GmfResult> {
    let c = SCycleCounts::of(theta);
    let one = GaussianRational::one();
    let full = gmf_linear_sum(&one, &one, theta, &theta.inverse(), group, chi)?;
    let scale = signed_power_of_two(false, c.fixed + 2 * c.transpositions);
    Ok(GmfResult::new(full.value.checked_div(&scale)?, full.method, full.term_count))
}

/// `S_theta S_tau`, which equals `S_{theta tau}` when the supports are disjoint.
pub fn s_product(theta: &Permutation, tau: &Permutation) -> Result<Matrix> {
    if theta.degree() != tau.degree() {
        return Err(Error::DegreeMismatch { expected: theta.degree(), found: tau.degree() });
    }
    let support = theta.support();
    if let Some(p) = tau.support().into_iter().find(|p| support.binary_search(p).is_ok()) {
        return Err(Error::NotDisjoint(format!("{theta} and {tau} both move {p}")));
    }
    let product = s_matrix(theta).mul(&s_matrix(tau))?;
    if product != s_matrix(&theta.compose(tau)?) {
        return Err(Error::Numerical(format!("S_theta S_tau differs from S_theta*tau for {theta}, {tau}")));
    }
    Ok(product)
}
