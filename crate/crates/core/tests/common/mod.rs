//! Reference implementations that share no code with the library beyond
//! the scalar type and the data containers.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use permfunc_core::{GaussianRational, Matrix, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Grid = Vec<Vec<GaussianRational>>;

pub fn grid(m: &Matrix) -> Grid {
    m.to_rows()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &Grid) -> GaussianRational {
    let n = a.len();
    if n == 0 {
        return GaussianRational::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = GaussianRational::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Grid = a[1..].iter().map(|row| [&row[..j], &row[j + 1..]].concat()).collect();
        let term = &a[0][j] * &cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// All permutations of `0..n` as image vectors, by recursion.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Sign by counting inversions.
pub fn inversion_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn to_perm(images0: &[usize]) -> Permutation {
    Permutation::from_images(&images0.iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap()
}

/// `(P)_{i,j} = 1` iff `p(j) = i`, 0-based.
pub fn perm_grid(p: &Permutation) -> Grid {
    let n = p.degree();
    let mut g = vec![vec![GaussianRational::zero(); n]; n];
    for j in 1..=n {
        g[p.apply(j) - 1][j - 1] = GaussianRational::one();
    }
    g
}

pub fn add(a: &Grid, b: &Grid) -> Grid {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn scale(c: &GaussianRational, a: &Grid) -> Grid {
    a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
}

pub fn mul(a: &Grid, b: &Grid) -> Grid {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

pub fn linear_sum_grid(a: &GaussianRational, b: &GaussianRational, theta: &Permutation, tau: &Permutation) -> Grid {
    add(&scale(a, &perm_grid(theta)), &scale(b, &perm_grid(tau)))
}

/// `(S)_{i,j} = 1` iff `theta(i) = j` or `theta^-1(i) = j`.
pub fn s_grid(theta: &Permutation) -> Grid {
    let n = theta.degree();
    let inv = theta.inverse();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| if theta.apply(i) == j || inv.apply(i) == j { GaussianRational::one() } else { GaussianRational::zero() })
                .collect()
        })
        .collect()
}

/// `sum_{s in elems} chi(s) prod_i A[i][s(i)]`.
pub fn gmf_brute<F>(a: &Grid, elems: &[Vec<usize>], mut chi: F) -> GaussianRational
where
    F: FnMut(&[usize]) -> GaussianRational,
{
    let mut total = GaussianRational::zero();
    for s in elems {
        let mut prod = GaussianRational::one();
        for (i, &j) in s.iter().enumerate() {
            prod = &prod * &a[i][j];
            if prod.is_zero() {
                break;
            }
        }
        if !prod.is_zero() {
            total += &chi(s) * &prod;
        }
    }
    total
}

/// PSD test for a Hermitian matrix: all principal minors are nonnegative.
pub fn psd_by_minors(a: &Grid) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            if a[i][j] != a[j][i].conj() {
                return false;
            }
        }
    }
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Grid = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect()).collect();
        let d = cofactor_det(&sub);
        if !d.is_real() || d.re().is_negative() {
            return false;
        }
    }
    true
}

/// `n! / prod hooks`.
pub fn hook_length_degree(lambda: &[usize]) -> u64 {
    let n: usize = lambda.iter().sum();
    let mut conj = vec![0usize; lambda.first().copied().unwrap_or(0)];
    for &l in lambda {
        for c in conj.iter_mut().take(l) {
            *c += 1;
        }
    }
    let mut num: u128 = (1..=n as u128).product();
    let mut den: u128 = 1;
    for (i, &l) in lambda.iter().enumerate() {
        for j in 0..l {
            den *= ((l - j - 1) + (conj[j] - i - 1) + 1) as u128;
        }
    }
    num /= den;
    num as u64
}

/// Frobenius' formula: `chi^lambda(mu)` is the coefficient of
/// `x^(lambda + delta)` in `a_delta * p_mu`, in `k = len(lambda)` variables.
pub fn frobenius_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let k = lambda.len();
    let mut total = 0i64;
    for w in all_perms(k) {
        // exponent still needed in variable j after a_delta contributes k-1-w(j)
        let mut need = Vec::with_capacity(k);
        let mut ok = true;
        for j in 0..k {
            let v = lambda[j] as i64 + (k - 1 - j) as i64 - (k - 1 - w[j]) as i64;
            if v < 0 {
                ok = false;
                break;
            }
            need.push(v as usize);
        }
        if ok {
            total += inversion_sign(&w) * count_assignments(mu, &mut need);
        }
    }
    total
}

// number of ways to hand every part of mu to a variable so that variable j
// receives exactly need[j]
fn count_assignments(mu: &[usize], need: &mut [usize]) -> i64 {
    let Some((&first, rest)) = mu.split_first() else {
        return need.iter().all(|&x| x == 0) as i64;
    };
    let mut total = 0;
    for j in 0..need.len() {
        if need[j] >= first {
            need[j] -= first;
            total += count_assignments(rest, need);
            need[j] += first;
        }
    }
    total
}

/// Partitions of `n` in any order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle type (all lengths, including 1s), descending.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    to_perm(&v)
}

pub fn random_involution<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    let pairs = rng.gen_range(0..=n / 2);
    let mut images: Vec<usize> = (0..n).collect();
    for k in 0..pairs {
        let (x, y) = (v[2 * k], v[2 * k + 1]);
        images[x] = y;
        images[y] = x;
    }
    to_perm(&images)
}

pub fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-6..=6);
    let den: i64 = rng.gen_range(1..=3);
    BigRational::new(num.into(), den.into())
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> GaussianRational {
    let im = if rng.gen_bool(0.5) { small_rational(rng) } else { BigRational::zero() };
    GaussianRational::new(small_rational(rng), im)
}

pub fn int(n: i64) -> GaussianRational {
    GaussianRational::from_integer(n)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn is_one(x: &BigRational) -> bool {
    x.is_one()
}
