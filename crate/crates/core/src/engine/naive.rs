use rayon::prelude::*;

use crate::characters::CharacterSpec;
use crate::error::{Error, Result};
use crate::groups::{FiniteSubgroup, GroupSpec};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::scalar::GaussianRational;

use super::{GmfResult, Method};

/// `sum_{s in G} chi(s) prod_i A[i][s(i)]` over the enumerated group.
///
/// `term_count` is `|G|`. Products stop at the first zero factor, so sparse
/// matrices cost little per element.
pub fn gmf_naive(a: &Matrix, group: &GroupSpec, chi: &CharacterSpec) -> Result<GmfResult> {
    let elements = group.enumerate_default()?;
    gmf_naive_enumerated(a, &elements, chi)
}

/// As [`gmf_naive`] for an already enumerated group.
pub fn gmf_naive_enumerated(a: &Matrix, group: &FiniteSubgroup, chi: &CharacterSpec) -> Result<GmfResult> {
    let n = group.spec.degree();
    if !a.is_square() || a.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for a subgroup of S{n}",
            a.rows(),
            a.cols()
        )));
    }
    let value = group
        .elements
        .par_iter()
        .map(|sigma| -> Result<GaussianRational> {
            match diagonal_product(a, sigma) {
                Some(prod) => Ok(&chi.evaluate(sigma)? * &prod),
                None => Ok(GaussianRational::zero()),
            }
        })
        .try_reduce(GaussianRational::zero, |x, y| Ok(x + y))?;
    Ok(GmfResult::new(value, Method::Naive, group.order))
}

/// `prod_i A[i][sigma(i)]`, or `None` as soon as a factor vanishes.
fn diagonal_product(a: &Matrix, sigma: &Permutation) -> Option<GaussianRational> {
    let mut acc = GaussianRational::one();
    for (i, &j) in sigma.zero_based().iter().enumerate() {
        let x = a.get(i, j);
        if x.is_zero() {
            return None;
        }
        if !x.is_one() {
            acc = &acc * x;
        }
    }
    Some(acc)
}
