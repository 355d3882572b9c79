//! Evaluation routes for generalized matrix functions.
//!
//! | route | summation range |
//! |---|---|
//! | [`gmf_naive`] | every element of `G` |
//! | [`gmf_linear_sum`] | `X(theta, tau) ∩ G`, at most `2^r` terms |
//! | [`det_linear_sum`], [`per_linear_sum`] | product over the cycles of `theta^-1 tau` |
//! | [`det_cauchy_binet_sum`] | all `sum_k C(n,k)^2` complementary minor pairs |
//! | [`gmf_block`] | `X(alpha, beta) ∩ G` for block matrices |

mod block;
mod cauchy_binet;
mod checks;
mod closed;
mod counts;
mod formula;
mod naive;
mod s_matrix;
mod spectrum;
mod tensor;

use serde::{Deserialize, Serialize};

use crate::scalar::GaussianRational;

pub use block::{block_exponents, gmf_block, BlockExponents};
pub use cauchy_binet::{det_cauchy_binet_sum, IndexTuple};
pub use checks::{check_dominance, check_superadditivity, ComparisonReport};
pub use closed::{det_linear_sum, per_linear_sum};
pub use counts::{term_counts, TermCounts};
pub use formula::gmf_linear_sum;
pub use naive::{gmf_naive, gmf_naive_enumerated};
pub use s_matrix::{det_p_plus_pinv_closed, det_s_closed, gmf_s_matrix, s_product, SCycleCounts};
pub use spectrum::{check_singular_bound, singular_values, BoundReport, SingularSpectrum};
pub use tensor::{tensor_oracle, MAX_TENSOR_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Naive,
    Formula,
    #[serde(rename = "closed")]
    ClosedForm,
    CauchyBinet,
    Block,
    Tensor,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Naive => "naive",
            Method::Formula => "formula",
            Method::ClosedForm => "closed",
            Method::CauchyBinet => "cauchy-binet",
            Method::Block => "block",
            Method::Tensor => "tensor",
        })
    }
}

/// An exact value together with the route that produced it and the number
/// of summands that route enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmfResult {
    pub value: GaussianRational,
    pub method: Method,
    pub term_count: usize,
}

impl GmfResult {
    pub(crate) fn new(value: GaussianRational, method: Method, term_count: usize) -> Self {
        GmfResult { value, method, term_count }
    }
}
