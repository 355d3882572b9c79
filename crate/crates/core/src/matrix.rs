//! Dense matrices over the Gaussian rationals and the structured matrices
//! built from permutations.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::{disjoint_union, shift_embed, Permutation};
use crate::scalar::GaussianRational;

/// Row-major dense matrix. Entry indices are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("matrix must be non-empty".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &GaussianRational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn conjugate_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conjugate_transpose()
    }

    /// Submatrix keeping the listed (0-based, increasing) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        Matrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting.
    pub fn determinant(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        Ok(bareiss(self.to_rows()))
    }
}

/// Determinant of a square grid; the empty grid has determinant 1.
pub(crate) fn bareiss(mut a: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = a.len();
    if n == 0 {
        return GaussianRational::one();
    }
    let mut sign_flip = false;
    let mut prev = GaussianRational::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return GaussianRational::zero();
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &v * &prev_inv;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", row.join("  "))?;
        }
        Ok(())
    }
}

/// `P_theta` with `(P_theta)[theta(j)][j] = 1`.
pub fn perm_matrix(theta: &Permutation) -> Matrix {
    let n = theta.degree();
    let mut m = Matrix::zeros(n, n);
    for j in 1..=n {
        m.set(theta.apply(j) - 1, j - 1, GaussianRational::one());
    }
    m
}

/// `a P_theta + b P_tau`.
pub fn linear_sum(a: &GaussianRational, b: &GaussianRational, theta: &Permutation, tau: &Permutation) -> Result<Matrix> {
    if theta.degree() != tau.degree() {
        return Err(Error::DegreeMismatch { expected: theta.degree(), found: tau.degree() });
    }
    perm_matrix(theta).scale(a).add(&perm_matrix(tau).scale(b))
}

/// Symmetric 0/1 matrix with `S[i][j] = 1` iff `theta(i) = j` or
/// `theta^-1(i) = j`.
pub fn s_matrix(theta: &Permutation) -> Matrix {
    let n = theta.degree();
    let inv = theta.inverse();
    let mut m = Matrix::zeros(n, n);
    for i in 1..=n {
        m.set(i - 1, theta.apply(i) - 1, GaussianRational::one());
        m.set(i - 1, inv.apply(i) - 1, GaussianRational::one());
    }
    m
}

/// An `n x n` grid of `m x m` blocks: block `(i, theta(i))` holds
/// `a_i P_{theta_i}` and block `(i, tau(i))` holds `b_i P_{tau_i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockSpec {
    pub m: usize,
    pub n: usize,
    pub theta: Permutation,
    pub tau: Permutation,
    pub inner_thetas: Vec<Permutation>,
    pub inner_taus: Vec<Permutation>,
    pub a: Vec<GaussianRational>,
    pub b: Vec<GaussianRational>,
}

impl BlockSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidBlockSpec(m));
        if self.m == 0 || self.n == 0 {
            return bad("block size and count must be positive".into());
        }
        if self.theta.degree() != self.n || self.tau.degree() != self.n {
            return bad(format!("outer permutations must have degree {}", self.n));
        }
        if self.inner_thetas.len() != self.n || self.inner_taus.len() != self.n {
            return bad(format!("need {} inner permutations of each kind", self.n));
        }
        if self.a.len() != self.n || self.b.len() != self.n {
            return bad(format!("need {} coefficients of each kind", self.n));
        }
        if let Some(p) = self.inner_thetas.iter().chain(&self.inner_taus).find(|p| p.degree() != self.m) {
            return bad(format!("inner permutation {p} does not have degree {}", self.m));
        }
        Ok(())
    }

    fn glue(&self, outer: &Permutation, inner: &[Permutation]) -> Result<Permutation> {
        // block (i, outer(i)) maps column block outer(i) onto row block i
        let maps: Vec<_> = inner
            .iter()
            .enumerate()
            .map(|(i, p)| shift_embed(p, (outer.apply(i + 1) - 1) * self.m, i * self.m))
            .collect();
        disjoint_union(&maps)
    }

    /// The permutation of `[mn]` whose (weighted) matrix is the `a`-part.
    pub fn alpha(&self) -> Result<Permutation> {
        self.validate()?;
        self.glue(&self.theta, &self.inner_thetas)
    }

    /// The permutation of `[mn]` whose (weighted) matrix is the `b`-part.
    pub fn beta(&self) -> Result<Permutation> {
        self.validate()?;
        self.glue(&self.tau, &self.inner_taus)
    }

    /// Block index (1-based) of a 1-based point of `[mn]`.
    pub fn block_of(&self, point: usize) -> usize {
        (point - 1) / self.m + 1
    }
}

/// Assembles the `mn x mn` matrix described by `spec`.
pub fn block_matrix(spec: &BlockSpec) -> Result<Matrix> {
    spec.validate()?;
    let size = spec.m * spec.n;
    let mut out = Matrix::zeros(size, size);
    let mut place = |i: usize, j: usize, coeff: &GaussianRational, inner: &Permutation| {
        let block = perm_matrix(inner).scale(coeff);
        for r in 0..spec.m {
            for c in 0..spec.m {
                let (row, col) = (i * spec.m + r, j * spec.m + c);
                let v = out.get(row, col) + block.get(r, c);
                out.set(row, col, v);
            }
        }
    };
    for i in 0..spec.n {
        place(i, spec.theta.apply(i + 1) - 1, &spec.a[i], &spec.inner_thetas[i]);
        place(i, spec.tau.apply(i + 1) - 1, &spec.b[i], &spec.inner_taus[i]);
    }
    Ok(out)
}

/// Verdict of the structural PSD test for `a P_theta + b P_tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdClassification {
    /// The matrix equals `k I + m P_pi` with `k >= |m|` and `pi` an involution.
    Psd { k: BigRational, m: BigRational, pi: Permutation, condition: u8 },
    NotPsd,
}

impl PsdClassification {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdClassification::Psd { .. })
    }
}

/// Decides positive semidefiniteness of `a P_theta + b P_tau` from its shape
/// alone. Conditions, tried in order:
/// 1. the matrix is `cI` with real `c >= 0`;
/// 2. `theta = id`, `tau` an involution, real `a >= |b|`;
/// 3. `theta` an involution, `tau = id`, real `b >= |a|`;
/// 4. `theta != tau` both nontrivial involutions whose fixed sets cover
///    `[n]`, real `a = b >= 0`;
/// 5. any other matrix whose entries read off as `k I + m P_pi` with real
///    `k >= |m|` and `pi` an involution, such as `-2 P_(1 4)(2 3) + 2 P_(1 4)`
///    where the rows of 1 and 4 cancel.
pub fn psd_classify(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
) -> Result<PsdClassification> {
    if theta.degree() != tau.degree() {
        return Err(Error::DegreeMismatch { expected: theta.degree(), found: tau.degree() });
    }
    let n = theta.degree();
    let id = Permutation::identity(n);
    if let Some(c) = scalar_multiple_of_identity(a, b, theta, tau) {
        if !c.is_negative() {
            return Ok(PsdClassification::Psd { k: c, m: BigRational::zero(), pi: id, condition: 1 });
        }
    }
    let (Some(ra), Some(rb)) = (a.as_real(), b.as_real()) else {
        return Ok(PsdClassification::NotPsd);
    };
    if theta.is_identity() && tau.is_involution() && *ra >= rb.abs() {
        return Ok(PsdClassification::Psd { k: ra.clone(), m: rb.clone(), pi: tau.clone(), condition: 2 });
    }
    if theta.is_involution() && tau.is_identity() && *rb >= ra.abs() {
        return Ok(PsdClassification::Psd { k: rb.clone(), m: ra.clone(), pi: theta.clone(), condition: 3 });
    }
    if theta != tau
        && !theta.is_identity()
        && !tau.is_identity()
        && theta.is_involution()
        && tau.is_involution()
        && (1..=n).all(|i| theta.apply(i) == i || tau.apply(i) == i)
        && ra == rb
        && !ra.is_negative()
    {
        let pi = theta.compose(tau)?;
        return Ok(PsdClassification::Psd { k: ra.clone(), m: ra.clone(), pi, condition: 4 });
    }
    match read_identity_plus_involution(&linear_sum(a, b, theta, tau)?) {
        Some((k, m, pi)) if k >= m.abs() => Ok(PsdClassification::Psd { k, m, pi, condition: 5 }),
        _ => Ok(PsdClassification::NotPsd),
    }
}

// Some((k, m, pi)) iff the matrix is k I + m P_pi with real k, m, nonzero m
// and pi a nontrivial involution.
fn read_identity_plus_involution(mat: &Matrix) -> Option<(BigRational, BigRational, Permutation)> {
    let n = mat.rows();
    let mut images: Vec<usize> = (0..n).collect();
    let mut off: Option<&GaussianRational> = None;
    for (i, image) in images.iter_mut().enumerate() {
        let mut cols = (0..n).filter(|&j| j != i && !mat.get(i, j).is_zero());
        if let Some(j) = cols.next() {
            if cols.next().is_some() || off.is_some_and(|v| v != mat.get(i, j)) {
                return None;
            }
            off = Some(mat.get(i, j));
            *image = j;
        }
    }
    let m = off?.as_real()?.clone();
    if (0..n).any(|i| images[images[i]] != i) {
        return None;
    }
    let moved = images.iter().enumerate().find(|(i, j)| i != *j).map(|(i, _)| i)?;
    let k = mat.get(moved, moved).as_real()?.clone();
    let fixed_diag = GaussianRational::from_real(&k + &m);
    let moved_diag = GaussianRational::from_real(k.clone());
    for (i, &j) in images.iter().enumerate() {
        let expected = if i == j { &fixed_diag } else { &moved_diag };
        if mat.get(i, i) != expected {
            return None;
        }
    }
    Some((k, m, Permutation::from_zero_based_unchecked(images)))
}

// Some(c) iff a P_theta + b P_tau = c I with c real.
fn scalar_multiple_of_identity(
    a: &GaussianRational,
    b: &GaussianRational,
    theta: &Permutation,
    tau: &Permutation,
) -> Option<BigRational> {
    let coefficient = if theta == tau {
        let s = a + b;
        if s.is_zero() {
            return Some(BigRational::zero());
        }
        theta.is_identity().then_some(s)?
    } else if a.is_zero() && b.is_zero() {
        return Some(BigRational::zero());
    } else if b.is_zero() {
        theta.is_identity().then(|| a.clone())?
    } else if a.is_zero() {
        tau.is_identity().then(|| b.clone())?
    } else {
        return None;
    };
    coefficient.as_real().cloned()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn permutation_matrices() {
        assert_eq!(perm_matrix(&Permutation::identity(3)), Matrix::identity(3));
        assert_eq!(perm_matrix(&p("(1 2)", 2)), Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap());
        // (P_theta)[i][j] = 1 iff theta^-1(i) = j
        let theta = p("(1 5 3)(2 6)", 6);
        let pm = perm_matrix(&theta);
        for i in 1..=6 {
            for j in 1..=6 {
                let expect = if theta.inverse().apply(i) == j { 1 } else { 0 };
                assert_eq!(*pm.get(i - 1, j - 1), int(expect));
            }
        }
    }

    #[test]
    fn six_point_matrix() {
        let m = linear_sum(&int(2), &g("-i"), &p("(1 5 3)(2 6)", 6), &p("(2 4 6)", 6)).unwrap();
        let z = GaussianRational::zero;
        let rows = vec![
            vec![g("-i"), z(), int(2), z(), z(), z()],
            vec![z(), z(), z(), z(), z(), g("2-i")],
            vec![z(), z(), g("-i"), z(), int(2), z()],
            vec![z(), g("-i"), z(), int(2), z(), z()],
            vec![int(2), z(), z(), z(), g("-i"), z()],
            vec![z(), int(2), z(), g("-i"), z(), z()],
        ];
        assert_eq!(m, Matrix::from_rows(rows).unwrap());
    }

    #[test]
    fn linear_sum_degenerate() {
        let theta = p("(1 2 3)", 4);
        let tau = p("(3 4)", 4);
        assert_eq!(linear_sum(&int(1), &int(0), &theta, &tau).unwrap(), perm_matrix(&theta));
        assert_eq!(linear_sum(&int(1), &int(1), &theta, &theta).unwrap(), perm_matrix(&theta).scale(&int(2)));
        assert!(linear_sum(&int(1), &int(1), &theta, &p("(1 2)", 3)).is_err());
    }

    #[test]
    fn s_matrices() {
        assert_eq!(s_matrix(&Permutation::identity(4)), Matrix::identity(4));
        let s12 = s_matrix(&p("(1 2)", 2));
        assert_eq!(s12, Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap());
        assert_eq!(s12.determinant().unwrap(), int(-1));
        let s123 = s_matrix(&p("(1 2 3)", 3));
        assert_eq!(s123, Matrix::from_int_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap());
        assert_eq!(s123.determinant().unwrap(), int(2));
    }

    #[test]
    fn two_block_matrix() {
        let spec = two_block_spec();
        let expected = Matrix::from_rows(
            [
                ["0", "0", "-i", "0", "0", "-2", "0", "0"],
                ["0", "-i", "0", "0", "0", "0", "-2", "0"],
                ["0", "0", "0", "-i", "-2", "0", "0", "0"],
                ["-i", "0", "0", "0", "0", "0", "0", "-2"],
                ["3", "0", "0", "0", "0", "0", "0", "2"],
                ["0", "3", "0", "0", "0", "0", "2", "0"],
                ["0", "0", "3", "0", "0", "2", "0", "0"],
                ["0", "0", "0", "3", "2", "0", "0", "0"],
            ]
            .iter()
            .map(|r| r.iter().map(|s| g(s)).collect())
            .collect(),
        )
        .unwrap();
        assert_eq!(block_matrix(&spec).unwrap(), expected);
        assert_eq!(spec.alpha().unwrap(), p("(1 4 3)(5 8)(6 7)", 8));
        assert_eq!(spec.beta().unwrap(), p("(1 5 3 7 2 6)(4 8)", 8));
    }

    pub(crate) fn two_block_spec() -> BlockSpec {
        BlockSpec {
            m: 4,
            n: 2,
            theta: Permutation::identity(2),
            tau: p("(1 2)", 2),
            inner_thetas: vec![p("(1 4 3)", 4), p("(1 4)(2 3)", 4)],
            inner_taus: vec![p("(1 3 2)", 4), Permutation::identity(4)],
            a: vec![g("-i"), int(2)],
            b: vec![int(-2), int(3)],
        }
    }

    #[test]
    fn single_block_is_linear_sum() {
        let theta = p("(1 3)(2 4)", 4);
        let tau = p("(1 2 3)", 4);
        let spec = BlockSpec {
            m: 4,
            n: 1,
            theta: Permutation::identity(1),
            tau: Permutation::identity(1),
            inner_thetas: vec![theta.clone()],
            inner_taus: vec![tau.clone()],
            a: vec![g("1+i")],
            b: vec![int(3)],
        };
        assert_eq!(block_matrix(&spec).unwrap(), linear_sum(&g("1+i"), &int(3), &theta, &tau).unwrap());

        // m = 1 with trivial inner permutations
        let outer_theta = p("(1 2 3)", 3);
        let outer_tau = p("(2 3)", 3);
        let spec = BlockSpec {
            m: 1,
            n: 3,
            theta: outer_theta.clone(),
            tau: outer_tau.clone(),
            inner_thetas: vec![Permutation::identity(1); 3],
            inner_taus: vec![Permutation::identity(1); 3],
            a: vec![int(5); 3],
            b: vec![int(-7); 3],
        };
        // block (i, theta(i)) holds a: entry (i, theta(i)) which is P_{theta^-1}
        assert_eq!(
            block_matrix(&spec).unwrap(),
            linear_sum(&int(5), &int(-7), &outer_theta.inverse(), &outer_tau.inverse()).unwrap()
        );
        assert_eq!(spec.alpha().unwrap(), outer_theta.inverse());
    }

    #[test]
    fn invalid_block_specs() {
        let mut spec = two_block_spec();
        spec.a.pop();
        assert!(matches!(block_matrix(&spec), Err(Error::InvalidBlockSpec(_))));
        let mut spec = two_block_spec();
        spec.inner_taus[1] = Permutation::identity(3);
        assert!(matches!(spec.beta(), Err(Error::InvalidBlockSpec(_))));
    }

    #[test]
    fn adjoint_and_products() {
        let theta = p("(1 2 3)(4 5)", 5);
        let tau = p("(1 4)", 5);
        let (a, b) = (g("2-3i"), g("1/2+i"));
        let m = linear_sum(&a, &b, &theta, &tau).unwrap();
        assert_eq!(
            m.conjugate_transpose(),
            linear_sum(&a.conj(), &b.conj(), &theta.inverse(), &tau.inverse()).unwrap()
        );
        assert_eq!(
            perm_matrix(&theta).mul(&perm_matrix(&tau)).unwrap(),
            perm_matrix(&theta.compose(&tau).unwrap())
        );
        assert_eq!(Matrix::identity(7).trace().unwrap(), int(7));
        assert!(Matrix::identity(2).mul(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn bareiss_determinants() {
        let m = Matrix::from_int_rows(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]).unwrap();
        // cofactor along row 2: -3 * (2*1 - 1*1) = -3
        assert_eq!(m.determinant().unwrap(), int(-3));
        let sing = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(sing.determinant().unwrap(), int(0));
        assert!(Matrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn psd_examples() {
        let id2 = Permutation::identity(2);
        let t = p("(1 2)", 2);
        match psd_classify(&int(1), &int(1), &id2, &t).unwrap() {
            PsdClassification::Psd { k, m, pi, condition } => {
                assert_eq!((k, m, pi, condition), (BigRational::from_integer(1.into()), BigRational::from_integer(1.into()), t.clone(), 2));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(psd_classify(&int(1), &int(2), &id2, &t).unwrap(), PsdClassification::NotPsd);
        match psd_classify(&int(3), &int(0), &id2, &t).unwrap() {
            PsdClassification::Psd { k, m, condition, .. } => {
                assert_eq!(k, BigRational::from_integer(3.into()));
                assert!(m.is_zero());
                assert_eq!(condition, 1);
            }
            other => panic!("{other:?}"),
        }
        // complex coefficients only survive as c I
        assert_eq!(psd_classify(&g("1+i"), &int(0), &id2, &t).unwrap(), PsdClassification::NotPsd);
        assert!(psd_classify(&g("1+i"), &g("-i"), &id2, &id2).unwrap().is_psd());
        // condition 4: disjoint transpositions
        let c4 = psd_classify(&int(2), &int(2), &p("(1 2)", 4), &p("(3 4)", 4)).unwrap();
        assert_eq!(
            c4,
            PsdClassification::Psd {
                k: BigRational::from_integer(2.into()),
                m: BigRational::from_integer(2.into()),
                pi: p("(1 2)(3 4)", 4),
                condition: 4
            }
        );
    }

    #[test]
    fn psd_outside_proof_cases() {
        // rows 1 and 4 cancel, leaving 2 I - 2 P_(2 3) on {2, 3}
        let r = psd_classify(&int(-2), &int(2), &p("(1 4)(2 3)", 4), &p("(1 4)", 4)).unwrap();
        assert_eq!(
            r,
            PsdClassification::Psd {
                k: BigRational::from_integer(2.into()),
                m: BigRational::from_integer((-2).into()),
                pi: p("(2 3)", 4),
                condition: 5
            }
        );
        let flipped = psd_classify(&int(2), &int(-2), &p("(1 4)(2 3)", 4), &p("(1 4)", 4)).unwrap();
        assert_eq!(flipped, PsdClassification::NotPsd);
        let r = psd_classify(&int(1), &int(-1), &p("(1 2)", 4), &p("(1 2)(3 4)", 4)).unwrap();
        assert!(matches!(r, PsdClassification::Psd { condition: 5, .. }));
    }
}
