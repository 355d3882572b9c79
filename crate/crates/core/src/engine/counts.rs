use num_bigint::BigUint;

use crate::error::Result;
use crate::groups::GroupSpec;
use crate::perm::{Permutation, XSetIter};

use super::cauchy_binet::pair_count;

/// Summands enumerated by each route for `d(a P_theta + b P_tau)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermCounts {
    /// `|G|`.
    pub naive: BigUint,
    /// `|X(theta, tau) ∩ G|`.
    pub formula: usize,
    /// `sum_k C(n,k)^2`.
    pub cauchy_binet: BigUint,
}

pub fn term_counts(theta: &Permutation, tau: &Permutation, group: &GroupSpec) -> Result<TermCounts> {
    let mut formula = 0;
    for e in XSetIter::new(theta, tau)? {
        if group.contains(&e.sigma)? {
            formula += 1;
        }
    }
    Ok(TermCounts { naive: group.order()?, formula, cauchy_binet: pair_count(theta.degree()) })
}
