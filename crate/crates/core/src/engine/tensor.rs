use num_rational::BigRational;

use crate::characters::CharacterSpec;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::matrix::linear_sum;
use crate::perm::Permutation;
use crate::scalar::GaussianRational;

/// Largest degree accepted by [`tensor_oracle`]; the tensors have `n^n`
/// coordinates.
pub const MAX_TENSOR_DEGREE: usize = 4;

/// `<T x, T y> / |G|` with `T = sum_{s in G} chi(s) P(s)` acting on
/// `(C^n)^{⊗n}`, where `x = e_1 ⊗ ... ⊗ e_n` and `y = y_1 ⊗ ... ⊗ y_n` with
/// `y_j` the `j`-th column of `a P_theta + b P_tau`, so that
/// `<e_i, y_j> = A[i][j]`.
///
/// For an irreducible `chi`, `<T x, T y> = (|G| / chi(id)) d(A)`, so the
/// returned value is `d(A) / chi(id)`.
pub fn tensor_oracle(
    a: &BigRational,
    b: &BigRational,
    theta: &Permutation,
    tau: &Permutation,
    group: &GroupSpec,
    chi: &CharacterSpec,
) -> Result<GaussianRational> {
    let n = theta.degree();
    if n > MAX_TENSOR_DEGREE {
        return Err(Error::Precondition(format!("tensor check limited to n <= {MAX_TENSOR_DEGREE}, got {n}")));
    }
    if group.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: group.degree() });
    }
    let m = linear_sum(&GaussianRational::from_real(a.clone()), &GaussianRational::from_real(b.clone()), theta, tau)?;
    let columns: Vec<Vec<GaussianRational>> = (0..n).map(|j| (0..n).map(|i| m.get(i, j).clone()).collect()).collect();
    let elements = group.enumerate_default()?;

    let dim = n.pow(n as u32);
    let mut tx = vec![GaussianRational::zero(); dim];
    let mut ty = vec![GaussianRational::zero(); dim];
    for sigma in elements.iter() {
        let c = chi.evaluate(sigma)?;
        if c.is_zero() {
            continue;
        }
        let inv = sigma.inverse();
        // slot k of P(s)(v_1 ⊗ ... ⊗ v_n) holds v_{s^-1(k)}
        let source: Vec<usize> = (1..=n).map(|k| inv.apply(k) - 1).collect();
        let basis = source.iter().fold(0, |acc, &s| acc * n + s);
        tx[basis] += c.clone();
        for (idx, slot) in ty.iter_mut().enumerate() {
            let mut prod = c.clone();
            let mut rest = idx;
            for k in (0..n).rev() {
                let coord = rest % n;
                rest /= n;
                let v = &columns[source[k]][coord];
                if v.is_zero() {
                    prod = GaussianRational::zero();
                    break;
                }
                prod = &prod * v;
            }
            if !prod.is_zero() {
                *slot += prod;
            }
        }
    }
    let inner: GaussianRational = tx.iter().zip(&ty).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * &y.conj()).sum();
    inner.checked_div(&GaussianRational::from_integer(elements.order as i64))
}
