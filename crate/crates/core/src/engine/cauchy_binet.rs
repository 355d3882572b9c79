use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matrix::{bareiss, Matrix};
use crate::scalar::GaussianRational;

use super::{GmfResult, Method};

/// A strictly increasing tuple of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    indices: Vec<usize>,
}

impl IndexTuple {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(format!("{indices:?} is not strictly increasing and 1-based")));
        }
        Ok(IndexTuple { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `r(alpha) = sum_i alpha_i`.
    pub fn index_sum(&self) -> usize {
        self.indices.iter().sum()
    }

    /// The increasing tuple of `[n]` not in `self`.
    pub fn complement(&self, n: usize) -> IndexTuple {
        IndexTuple { indices: (1..=n).filter(|i| self.indices.binary_search(i).is_err()).collect() }
    }

    /// All `C(n, k)` tuples of length `k` from `[n]`, lexicographically.
    pub fn all(n: usize, k: usize) -> Vec<IndexTuple> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut cur: Vec<usize> = (1..=k).collect();
        loop {
            out.push(IndexTuple { indices: cur.clone() });
            let Some(pos) = (0..k).rev().find(|&i| cur[i] < n - k + i + 1) else {
                return out;
            };
            cur[pos] += 1;
            for i in pos + 1..k {
                cur[i] = cur[i - 1] + 1;
            }
        }
    }
}

fn minor(m: &Matrix, rows: &IndexTuple, cols: &IndexTuple) -> GaussianRational {
    bareiss(
        rows.indices
            .iter()
            .map(|&r| cols.indices.iter().map(|&c| m.get(r - 1, c - 1).clone()).collect())
            .collect(),
    )
}

/// `det(A + B) = sum_k sum_{|alpha|=|beta|=k} (-1)^(r(alpha)+r(beta)) det A[alpha|beta] det B(alpha|beta)`,
/// where `B(alpha|beta)` deletes the rows `alpha` and columns `beta`.
///
/// `term_count` is the number of `(alpha, beta)` pairs, `sum_k C(n,k)^2`.
pub fn det_cauchy_binet_sum(a: &Matrix, b: &Matrix) -> Result<GmfResult> {
    let n = a.rows();
    if !a.is_square() || !b.is_square() || b.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} and {}x{} are not square of equal size",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut total = GaussianRational::zero();
    let mut pairs = 0usize;
    for k in 0..=n {
        let tuples = IndexTuple::all(n, k);
        for alpha in &tuples {
            let alpha_c = alpha.complement(n);
            for beta in &tuples {
                pairs += 1;
                let ma = minor(a, alpha, beta);
                if ma.is_zero() {
                    continue;
                }
                let mb = minor(b, &alpha_c, &beta.complement(n));
                if mb.is_zero() {
                    continue;
                }
                let term = &ma * &mb;
                if (alpha.index_sum() + beta.index_sum()) % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
        }
    }
    Ok(GmfResult::new(total, Method::CauchyBinet, pairs))
}

/// `sum_{k=0}^{n} C(n,k)^2`.
pub(crate) fn pair_count(n: usize) -> BigUint {
    let mut binom = BigUint::from(1u32);
    let mut total = BigUint::from(0u32);
    for k in 0..=n {
        total += &binom * &binom;
        binom = binom * BigUint::from(n - k) / BigUint::from(k + 1);
    }
    total
}
