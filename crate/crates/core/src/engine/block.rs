use crate::characters::CharacterSpec;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::matrix::BlockSpec;
use crate::perm::XSetIter;
use crate::scalar::GaussianRational;

use super::{GmfResult, Method};

/// Row-block occupancy of the cycles of `alpha^-1 beta`.
///
/// `cycle_rows[i][j]` counts the points of `alpha(C_i)` lying in row block
/// `j + 1`, and `fixed_rows[j]` the images under `alpha` of fixed points of
/// `alpha^-1 beta` lying there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockExponents {
    pub cycles: Vec<Vec<usize>>,
    pub cycle_rows: Vec<Vec<usize>>,
    pub fixed_rows: Vec<usize>,
}

pub fn block_exponents(spec: &BlockSpec) -> Result<BlockExponents> {
    let alpha = spec.alpha()?;
    let beta = spec.beta()?;
    let dec = alpha.inverse().compose(&beta)?.disjoint_cycles();
    let count = |points: &mut dyn Iterator<Item = usize>| {
        let mut rows = vec![0; spec.n];
        for p in points {
            rows[spec.block_of(alpha.apply(p)) - 1] += 1;
        }
        rows
    };
    let cycle_rows = dec.cycles.iter().map(|c| count(&mut c.iter().copied())).collect();
    let fixed_rows = count(&mut dec.fixed_points.iter().copied());
    Ok(BlockExponents { cycles: dec.cycles, cycle_rows, fixed_rows })
}

/// `d(M)` for the block matrix `M` of `spec`, summed over `X(alpha, beta) ∩ G`.
///
/// Each cycle `C_i` contributes `prod_j a_j^l_ij` when `sigma` follows `alpha`
/// on it and `prod_j b_j^l_ij` when it follows `beta`; the fixed points
/// contribute `prod_j (a_j + b_j)^F_j` once.
pub fn gmf_block(spec: &BlockSpec, group: &GroupSpec, chi: &CharacterSpec) -> Result<GmfResult> {
    let size = spec.m * spec.n;
    if group.degree() != size {
        return Err(Error::DegreeMismatch { expected: size, found: group.degree() });
    }
    let exps = block_exponents(spec)?;
    let weight = |coeffs: &[GaussianRational], rows: &[usize]| -> GaussianRational {
        coeffs.iter().zip(rows).map(|(c, &k)| c.pow(k as u64)).product()
    };
    let sums: Vec<GaussianRational> = spec.a.iter().zip(&spec.b).map(|(a, b)| a + b).collect();
    let prefactor = weight(&sums, &exps.fixed_rows);
    if prefactor.is_zero() {
        return Ok(GmfResult::new(GaussianRational::zero(), Method::Block, 0));
    }
    let a_weights: Vec<_> = exps.cycle_rows.iter().map(|rows| weight(&spec.a, rows)).collect();
    let b_weights: Vec<_> = exps.cycle_rows.iter().map(|rows| weight(&spec.b, rows)).collect();

    let mut sum = GaussianRational::zero();
    let mut terms = 0;
    for e in XSetIter::new(&spec.alpha()?, &spec.beta()?)? {
        if !group.contains(&e.sigma)? {
            continue;
        }
        terms += 1;
        let mut w = GaussianRational::one();
        for i in 0..a_weights.len() {
            let factor = if e.mask >> i & 1 == 1 { &b_weights[i] } else { &a_weights[i] };
            w = &w * factor;
            if w.is_zero() {
                break;
            }
        }
        if !w.is_zero() {
            sum += &chi.conjugate_evaluate(&e.sigma)? * &w;
        }
    }
    Ok(GmfResult::new(&prefactor * &sum, Method::Block, terms))
}
