use std::f64::consts::PI;

use num_complex::Complex64;

use crate::characters::CharacterSpec;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::perm::{Permutation, XSetIter};
use crate::scalar::{ratio_to_f64, GaussianRational};

use super::gmf_linear_sum;

/// Singular values of `a P_theta + b P_tau`, sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularSpectrum {
    pub values: Vec<f64>,
}

impl SingularSpectrum {
    /// `(1/n) sum_j sigma_j^(2n)`.
    pub fn power_mean(&self) -> f64 {
        let n = self.values.len();
        self.values.iter().map(|s| (s * s).powi(n as i32)).sum::<f64>() / n as f64
    }
}

/// Squared singular values `|a|^2 + |b|^2 + 2 Re(conj(a) b w)` for every
/// `l`-th root of unity `w`, one block per cycle of `theta^-1 tau` (fixed
/// points count as cycles of length 1).
fn squared_singular_values(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
) -> Result<Vec<f64>> {
    if theta.degree() != tau.degree() {
        return Err(Error::DegreeMismatch { expected: theta.degree(), found: tau.degree() });
    }
    let base = ratio_to_f64(&(a.norm_sqr() + b.norm_sqr()));
    let (p, q) = (a.conj() * b).to_f64();
    let mut out = Vec::with_capacity(theta.degree());
    for l in theta.inverse().compose(tau)?.cycle_lengths() {
        for k in 0..l {
            let phi = 2.0 * PI * k as f64 / l as f64;
            let v = base + 2.0 * (p * phi.cos() - q * phi.sin());
            if v < -1e-9 * base.max(1.0) {
                return Err(Error::Numerical(format!("negative squared singular value {v}")));
            }
            out.push(v.max(0.0));
        }
    }
    out.sort_by(|x, y| y.total_cmp(x));
    Ok(out)
}

pub fn singular_values(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
) -> Result<SingularSpectrum> {
    let values = squared_singular_values(a, b, theta, tau)?.into_iter().map(f64::sqrt).collect();
    Ok(SingularSpectrum { values })
}

/// `|d(a P_theta + b P_tau)|^2` against `(1/n) sum_j sigma_j^(2n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Checks the singular value bound for a linear character.
///
/// `lhs` is exact before conversion when `chi` takes Gaussian rational
/// values, and evaluated in floating point otherwise. The comparison allows
/// a relative slack of `1e-9`.
pub fn check_singular_bound(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
    group: &GroupSpec,
    chi: &CharacterSpec,
) -> Result<BoundReport> {
    if !chi.is_linear() {
        return Err(Error::Precondition(format!("{chi} is not a linear character")));
    }
    let n = theta.degree();
    let lhs = if chi.is_exact() {
        ratio_to_f64(&gmf_linear_sum(a, b, theta, tau, group, chi)?.value.norm_sqr())
    } else {
        float_linear_sum(a, b, theta, tau, group, chi)?.norm_sqr()
    };
    let squares = squared_singular_values(a, b, theta, tau)?;
    let rhs = squares.iter().map(|s| s.powi(n as i32)).sum::<f64>() / n as f64;
    let holds = lhs - rhs <= 1e-9 * rhs.max(1.0);
    Ok(BoundReport { lhs, rhs, holds })
}

fn float_linear_sum(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
    group: &GroupSpec,
    chi: &CharacterSpec,
) -> Result<Complex64> {
    let n = theta.degree();
    if group.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: group.degree() });
    }
    let to_c = |z: &GaussianRational| {
        let (re, im) = z.to_f64();
        Complex64::new(re, im)
    };
    let (ac, bc) = (to_c(a), to_c(b));
    let xs = XSetIter::new(theta, tau)?;
    let fixed = n - xs.cycles().iter().map(Vec::len).sum::<usize>();
    let mut sum = Complex64::new(0.0, 0.0);
    for e in xs {
        if group.contains(&e.sigma)? {
            let w = ac.powu((n - e.t_sigma - fixed) as u32) * bc.powu(e.t_sigma as u32);
            sum += chi.conjugate_evaluate_complex(&e.sigma)? * w;
        }
    }
    Ok((ac + bc).powu(fixed as u32) * sum)
}
