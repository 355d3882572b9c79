//! Permutations of `[n] = {1, ..., n}`, disjoint-cycle decompositions and the
//! set of permutations agreeing pointwise with one of two given permutations.
//!
//! Points are 1-based at every public interface; storage is 0-based.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Maximum number of cycles whose subsets can be enumerated by bitmask.
pub const MAX_CYCLES: usize = 62;

/// A bijection on `[n]`. The degree is part of the value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = sigma(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    /// # Panics
    /// If `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "permutation degree must be positive");
        Permutation { images: (0..n).collect() }
    }

    /// Builds from the 1-based image sequence `[sigma(1), ..., sigma(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on [{n}]")));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(&images.iter().map(|x| x + 1).collect::<Vec<_>>()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of degree `n` from a product of disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!("point {p} outside [{n}]")));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!("point {p} appears twice")));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 5 3)(2 6)"` or `"id"`.
    ///
    /// Points may be separated by whitespace or commas. Cycles need not be
    /// disjoint; they are multiplied right to left.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if n == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        if t == "id" || t == "()" || t.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut acc = Self::identity(n);
        let mut rest = t;
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            rest = rest.trim_start();
            let Some(after_open) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(close) = after_open.find(')') else {
                return Err(Error::Parse(format!("unbalanced parenthesis in {text:?}")));
            };
            let body = &after_open[..close];
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(points);
            rest = after_open[close + 1..].trim_start();
        }
        for cycle in cycles.iter().rev() {
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("repeated point in cycle {cycle:?}")));
            }
            let c = Self::from_cycles(n, &[cycle]).map_err(|e| Error::Parse(e.to_string()))?;
            acc = c.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `sigma(point)` for a 1-based point.
    ///
    /// # Panics
    /// If `point` is outside `[n]`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    pub(crate) fn apply0(&self, point: usize) -> usize {
        self.images[point]
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(())
    }

    /// `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = base.compose(&acc).expect("same degree");
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base).expect("same degree");
            }
        }
        acc
    }

    /// `h ∘ self ∘ h^-1`.
    pub fn conjugate_by(&self, h: &Permutation) -> Result<Permutation> {
        h.compose(self)?.compose(&h.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| self.images[j] == i)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images.iter().enumerate().filter(|(i, j)| i == *j).map(|(i, _)| i + 1).collect()
    }

    pub fn fixed_count(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, j)| i == *j).count()
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.images.iter().enumerate().filter(|(i, j)| i != *j).map(|(i, _)| i + 1).collect()
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycle_lengths().iter().fold(1u64, |acc, &l| acc.lcm(&(l as u64)))
    }

    /// Lengths of all cycles, including 1-cycles, in order of minimal element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Canonical disjoint-cycle decomposition.
    pub fn disjoint_cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            if self.images[start] == start {
                seen[start] = true;
                fixed_points.push(start + 1);
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles, fixed_points }
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let d = self.disjoint_cycles();
        let mut lengths: Vec<usize> = d.cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleStructure { lengths, fixed_count: d.fixed_points.len() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.disjoint_cycles();
        if d.cycles.is_empty() {
            return f.write_str("id");
        }
        for cycle in &d.cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in S{}", self, self.degree())
    }
}

/// Disjoint cycles (length >= 2), each starting at its minimal element and
/// sorted by that element, plus the fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    pub fn r(&self) -> usize {
        self.cycles.len()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles).expect("decomposition is valid")
    }
}

/// Cycle type `[l_1, ..., l_r, 1^F]` with `l_i >= 2` sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleStructure {
    pub lengths: Vec<usize>,
    pub fixed_count: usize,
}

impl CycleStructure {
    pub fn degree(&self) -> usize {
        self.lengths.iter().sum::<usize>() + self.fixed_count
    }

    /// All part sizes including the 1-parts, descending.
    pub fn as_partition(&self) -> Vec<usize> {
        let mut parts = self.lengths.clone();
        parts.extend(std::iter::repeat_n(1, self.fixed_count));
        parts
    }
}

/// One element `sigma = theta * prod_{i in I} C_i` of the set of permutations
/// agreeing pointwise with `theta` or `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSetElement {
    pub sigma: Permutation,
    /// Bit `i` set iff cycle `C_{i+1}` of `theta^-1 tau` is chosen.
    pub mask: u64,
    /// Number of points where `sigma` follows `tau` but not `theta`.
    pub t_sigma: usize,
}

impl XSetElement {
    /// Chosen cycle indices, 1-based into the canonical cycle list.
    pub fn chosen(&self) -> Vec<usize> {
        (0..64).filter(|b| self.mask >> b & 1 == 1).map(|b| b + 1).collect()
    }
}

/// Lazy enumeration of the `2^r` permutations `sigma` with
/// `sigma(i) ∈ {theta(i), tau(i)}` for all `i`, in increasing bitmask order
/// over the canonical cycles of `theta^-1 tau`.
pub struct XSetIter {
    theta: Permutation,
    tau: Permutation,
    cycles: Vec<Vec<usize>>,
    next_mask: u64,
    end_mask: u64,
}

impl XSetIter {
    pub fn new(theta: &Permutation, tau: &Permutation) -> Result<Self> {
        let quotient = theta.inverse().compose(tau)?;
        let cycles = quotient.disjoint_cycles().cycles;
        if cycles.len() > MAX_CYCLES {
            return Err(Error::TooManyCycles(cycles.len()));
        }
        Ok(XSetIter {
            theta: theta.clone(),
            tau: tau.clone(),
            end_mask: 1u64 << cycles.len(),
            cycles,
            next_mask: 0,
        })
    }

    /// Canonical cycles of `theta^-1 tau`.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Builds the element for one subset of cycles.
    pub fn element(&self, mask: u64) -> XSetElement {
        let mut images = self.theta.zero_based().to_vec();
        let mut t_sigma = 0;
        for (idx, cycle) in self.cycles.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                t_sigma += cycle.len();
                for &p in cycle {
                    images[p - 1] = self.tau.apply0(p - 1);
                }
            }
        }
        XSetElement { sigma: Permutation::from_zero_based_unchecked(images), mask, t_sigma }
    }
}

impl Iterator for XSetIter {
    type Item = XSetElement;

    fn next(&mut self) -> Option<XSetElement> {
        if self.next_mask >= self.end_mask {
            return None;
        }
        let e = self.element(self.next_mask);
        self.next_mask += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end_mask - self.next_mask) as usize;
        (left, Some(left))
    }
}

/// All permutations agreeing pointwise with `theta` or `tau`.
pub fn x_set(theta: &Permutation, tau: &Permutation) -> Result<Vec<XSetElement>> {
    Ok(XSetIter::new(theta, tau)?.collect())
}

/// A finite injective map between sets of 1-based points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    pairs: BTreeMap<usize, usize>,
}

impl PartialMap {
    pub fn get(&self, x: usize) -> Option<usize> {
        self.pairs.get(&x).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `f_{x,y}: x + [n] -> y + [n]` with `f_{x,y}(x + i) = y + f(i)`.
pub fn shift_embed(f: &Permutation, x: usize, y: usize) -> PartialMap {
    PartialMap { pairs: (1..=f.degree()).map(|i| (x + i, y + f.apply(i))).collect() }
}

/// Glues maps with pairwise disjoint domains and codomains into a
/// permutation of `[N]`, where `N` is the total number of points.
pub fn disjoint_union(maps: &[PartialMap]) -> Result<Permutation> {
    let total: usize = maps.iter().map(PartialMap::len).sum();
    if total == 0 {
        return Err(Error::NotABijection("no points".into()));
    }
    let mut images = vec![usize::MAX; total];
    let mut hit = vec![false; total];
    for (x, y) in maps.iter().flat_map(PartialMap::pairs) {
        if x == 0 || x > total || y == 0 || y > total {
            return Err(Error::NotABijection(format!("pair {x} -> {y} outside [{total}]")));
        }
        if images[x - 1] != usize::MAX {
            return Err(Error::NotABijection(format!("domains overlap at {x}")));
        }
        if hit[y - 1] {
            return Err(Error::NotABijection(format!("codomains overlap at {y}")));
        }
        images[x - 1] = y - 1;
        hit[y - 1] = true;
    }
    Ok(Permutation { images })
}
