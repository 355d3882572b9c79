use num_rational::BigRational;
use num_traits::Signed;

use crate::characters::{CharacterSpec, Partition};
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::matrix::linear_sum;
use crate::perm::Permutation;
use crate::scalar::GaussianRational;

use super::{gmf_linear_sum, gmf_naive, per_linear_sum};

/// Outcome of an inequality check `lhs <= rhs` (dominance) or
/// `lhs >= rhs` (superadditivity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub lhs: GaussianRational,
    pub rhs: GaussianRational,
    pub holds: bool,
}

fn check_psd_pair(k: &BigRational, m: &BigRational, pi: &Permutation, n: usize) -> Result<()> {
    if pi.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: pi.degree() });
    }
    if !pi.is_involution() {
        return Err(Error::Precondition(format!("{pi} is not an involution")));
    }
    if k < &m.abs() {
        return Err(Error::Precondition(format!("k = {k} is smaller than |m| = {}", m.abs())));
    }
    Ok(())
}

fn real_le(x: &GaussianRational, y: &GaussianRational) -> bool {
    x.is_real() && y.is_real() && x.re() <= y.re()
}

/// `d(N) / chi(id) <= per(N)` for `N = k I + m P_pi` over `S_n`.
pub fn check_dominance(
    k: &BigRational,
    m: &BigRational,
    pi: &Permutation,
    n: usize,
    chi: &CharacterSpec,
) -> Result<ComparisonReport> {
    check_psd_pair(k, m, pi, n)?;
    let (kk, mm) = (GaussianRational::from_real(k.clone()), GaussianRational::from_real(m.clone()));
    let id = Permutation::identity(n);
    let d = gmf_linear_sum(&kk, &mm, &id, pi, &GroupSpec::symmetric(n), chi)?.value;
    let lhs = d.checked_div(&GaussianRational::from_integer(chi.degree() as i64))?;
    let rhs = per_linear_sum(&kk, &mm, &id, pi)?.value;
    let holds = real_le(&lhs, &rhs);
    Ok(ComparisonReport { lhs, rhs, holds })
}

/// `d(A + B) >= d(A) + d(B)` for the irreducible character of `lambda`,
/// with `A = k1 I + m1 P_pi1` and `B = k2 I + m2 P_pi2`.
pub fn check_superadditivity(
    first: (&BigRational, &BigRational, &Permutation),
    second: (&BigRational, &BigRational, &Permutation),
    n: usize,
    lambda: &Partition,
) -> Result<ComparisonReport> {
    if lambda.size() != n {
        return Err(Error::DegreeMismatch { expected: n, found: lambda.size() });
    }
    let chi = CharacterSpec::Irreducible(lambda.clone());
    let group = GroupSpec::symmetric(n);
    let id = Permutation::identity(n);
    let mut parts = Vec::new();
    let mut matrices = Vec::new();
    for (k, m, pi) in [first, second] {
        check_psd_pair(k, m, pi, n)?;
        let (kk, mm) = (GaussianRational::from_real(k.clone()), GaussianRational::from_real(m.clone()));
        parts.push(gmf_linear_sum(&kk, &mm, &id, pi, &group, &chi)?.value);
        matrices.push(linear_sum(&kk, &mm, &id, pi)?);
    }
    let lhs = gmf_naive(&matrices[0].add(&matrices[1])?, &group, &chi)?.value;
    let rhs = &parts[0] + &parts[1];
    let holds = real_le(&rhs, &lhs);
    Ok(ComparisonReport { lhs, rhs, holds })
}
