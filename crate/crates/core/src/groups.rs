//! Subgroups of `S_n` described symbolically, with membership predicates that
//! avoid enumeration wherever the description allows it.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `10!`
pub const DEFAULT_ENUMERATION_CAP: usize = 3_628_800;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupVariant {
    Symmetric,
    Alternating,
    CyclicGeneratedBy(Permutation),
    /// Permutations fixing every listed point.
    PointwiseStabilizer(BTreeSet<usize>),
    GeneratedBy(Vec<Permutation>),
}

/// A subgroup `G <= S_n`.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    degree: usize,
    variant: GroupVariant,
    cap: usize,
    // closure of GeneratedBy, computed on first membership query
    closure: OnceLock<std::result::Result<Arc<HashSet<Permutation>>, Error>>,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.variant == other.variant
    }
}

impl GroupSpec {
    fn with_variant(degree: usize, variant: GroupVariant) -> Self {
        GroupSpec { degree, variant, cap: DEFAULT_ENUMERATION_CAP, closure: OnceLock::new() }
    }

    pub fn symmetric(n: usize) -> Self {
        Self::with_variant(n, GroupVariant::Symmetric)
    }

    pub fn alternating(n: usize) -> Self {
        Self::with_variant(n, GroupVariant::Alternating)
    }

    pub fn cyclic(generator: Permutation) -> Self {
        Self::with_variant(generator.degree(), GroupVariant::CyclicGeneratedBy(generator))
    }

    pub fn stabilizer(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Self> {
        let points: BTreeSet<usize> = points.into_iter().collect();
        if let Some(&p) = points.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::InvalidPermutation(format!("stabilized point {p} outside [{n}]")));
        }
        Ok(Self::with_variant(n, GroupVariant::PointwiseStabilizer(points)))
    }

    pub fn generated_by(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch { expected: n, found: g.degree() });
        }
        Ok(Self::with_variant(n, GroupVariant::GeneratedBy(generators)))
    }

    /// Replaces the enumeration cap used by `enumerate_default` and by the
    /// memoized closure of `GeneratedBy`.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.closure = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn variant(&self) -> &GroupVariant {
        &self.variant
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Parses `S6`, `A6`, `cyclic:(1 2 3 4)`, `stab:1,3,5@6`,
    /// `gens:(1 2),(1 2 3)@3`. A trailing `@n` fixes the degree; otherwise
    /// `default_degree` is used for the forms that need one.
    pub fn parse(text: &str, default_degree: Option<usize>) -> Result<Self> {
        let t = text.trim();
        let (body, degree) = match t.rsplit_once('@') {
            Some((b, d)) => {
                let n = d.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad degree in {text:?}")))?;
                (b.trim(), Some(n))
            }
            None => (t, None),
        };
        let need_degree = || {
            degree.or(default_degree).filter(|&n| n > 0).ok_or_else(|| Error::Parse(format!("group {text:?} needs a degree")))
        };
        let check = |n: usize| -> Result<usize> {
            match (degree, default_degree) {
                (Some(a), _) if a != n => Err(Error::Parse(format!("degree suffix disagrees with {text:?}"))),
                _ if n == 0 => Err(Error::Parse("degree must be positive".into())),
                _ => Ok(n),
            }
        };
        if let Some(rest) = body.strip_prefix("cyclic:") {
            let n = need_degree()?;
            return Ok(Self::cyclic(Permutation::parse(rest, n)?));
        }
        if let Some(rest) = body.strip_prefix("stab:") {
            let n = need_degree()?;
            let pts = rest
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            return Self::stabilizer(n, pts).map_err(|e| Error::Parse(e.to_string()));
        }
        if let Some(rest) = body.strip_prefix("gens:") {
            let n = need_degree()?;
            let mut gens = Vec::new();
            // split "(1 2),(1 2 3)" at top-level commas
            let mut depth = 0usize;
            let mut start = 0;
            for (i, c) in rest.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        gens.push(Permutation::parse(&rest[start..i], n)?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            if !rest[start..].trim().is_empty() {
                gens.push(Permutation::parse(&rest[start..], n)?);
            }
            return Self::generated_by(n, gens);
        }
        let parse_n = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("unknown group {text:?}")));
        if let Some(rest) = body.strip_prefix('S') {
            return Ok(Self::symmetric(check(parse_n(rest)?)?));
        }
        if let Some(rest) = body.strip_prefix('A') {
            return Ok(Self::alternating(check(parse_n(rest)?)?));
        }
        Err(Error::Parse(format!("unknown group {text:?}")))
    }

    /// Membership test. Only `GeneratedBy` ever enumerates, and then only
    /// once.
    pub fn contains(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: sigma.degree() });
        }
        Ok(match &self.variant {
            GroupVariant::Symmetric => true,
            GroupVariant::Alternating => sigma.sign() == 1,
            GroupVariant::CyclicGeneratedBy(g) => cyclic_exponent(g, sigma).is_some(),
            GroupVariant::PointwiseStabilizer(points) => points.iter().all(|&p| sigma.apply(p) == p),
            GroupVariant::GeneratedBy(_) => self.memoized_closure()?.contains(sigma),
        })
    }

    fn memoized_closure(&self) -> Result<Arc<HashSet<Permutation>>> {
        self.closure
            .get_or_init(|| {
                let GroupVariant::GeneratedBy(gens) = &self.variant else {
                    unreachable!("closure requested for a predicate variant")
                };
                closure(self.degree, gens, self.cap).map(Arc::new)
            })
            .clone()
    }

    /// Group order, computed without enumeration except for `GeneratedBy`.
    pub fn order(&self) -> Result<BigUint> {
        Ok(match &self.variant {
            GroupVariant::Symmetric => factorial(self.degree),
            GroupVariant::Alternating => {
                let f = factorial(self.degree);
                if self.degree >= 2 {
                    f / 2u32
                } else {
                    f
                }
            }
            GroupVariant::CyclicGeneratedBy(g) => BigUint::from(g.order()),
            GroupVariant::PointwiseStabilizer(points) => factorial(self.degree - points.len()),
            GroupVariant::GeneratedBy(_) => BigUint::from(self.memoized_closure()?.len()),
        })
    }

    /// Full element list in lexicographic order of image sequences.
    pub fn enumerate(&self, cap: usize) -> Result<FiniteSubgroup> {
        let n = self.degree;
        let too_big = |order: BigUint| Error::CapacityExceeded { order: order.to_string(), cap };
        let elements = match &self.variant {
            GroupVariant::GeneratedBy(gens) => {
                let set = match self.closure.get() {
                    Some(Ok(set)) if set.len() <= cap => set.as_ref().clone(),
                    _ => closure(n, gens, cap)?,
                };
                let mut v: Vec<_> = set.into_iter().collect();
                v.sort();
                v
            }
            GroupVariant::CyclicGeneratedBy(g) => {
                let order = g.order();
                if BigUint::from(order) > BigUint::from(cap) {
                    return Err(too_big(BigUint::from(order)));
                }
                let mut v = Vec::with_capacity(order as usize);
                let mut x = Permutation::identity(n);
                for _ in 0..order {
                    v.push(x.clone());
                    x = g.compose(&x)?;
                }
                v.sort();
                v
            }
            GroupVariant::Symmetric | GroupVariant::Alternating | GroupVariant::PointwiseStabilizer(_) => {
                let order = self.order()?;
                if order > BigUint::from(cap) {
                    return Err(too_big(order));
                }
                let fixed: BTreeSet<usize> = match &self.variant {
                    GroupVariant::PointwiseStabilizer(p) => p.iter().map(|x| x - 1).collect(),
                    _ => BTreeSet::new(),
                };
                let free: Vec<usize> = (0..n).filter(|i| !fixed.contains(i)).collect();
                let even_only = matches!(self.variant, GroupVariant::Alternating);
                let mut out = Vec::new();
                let mut values = free.clone();
                loop {
                    let mut images: Vec<usize> = (0..n).collect();
                    for (slot, &v) in free.iter().zip(&values) {
                        images[*slot] = v;
                    }
                    let sigma = Permutation::from_zero_based_unchecked(images);
                    if !even_only || sigma.sign() == 1 {
                        out.push(sigma);
                    }
                    if !next_permutation(&mut values) {
                        break;
                    }
                }
                out
            }
        };
        Ok(FiniteSubgroup { spec: self.clone(), order: elements.len(), elements })
    }

    /// `enumerate` with this spec's own cap.
    pub fn enumerate_default(&self) -> Result<FiniteSubgroup> {
        self.enumerate(self.cap)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.variant {
            GroupVariant::Symmetric => write!(f, "S{}", self.degree),
            GroupVariant::Alternating => write!(f, "A{}", self.degree),
            GroupVariant::CyclicGeneratedBy(g) => write!(f, "cyclic:{g}@{}", self.degree),
            GroupVariant::PointwiseStabilizer(points) => {
                let pts: Vec<String> = points.iter().map(usize::to_string).collect();
                write!(f, "stab:{}@{}", pts.join(","), self.degree)
            }
            GroupVariant::GeneratedBy(gens) => {
                let gs: Vec<String> = gens.iter().map(Permutation::to_string).collect();
                write!(f, "gens:{}@{}", gs.join(","), self.degree)
            }
        }
    }
}

/// An enumerated subgroup.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    pub spec: GroupSpec,
    pub elements: Vec<Permutation>,
    pub order: usize,
}

impl FiniteSubgroup {
    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }
}

/// Exponent `j` in `[0, ord(g))` with `g^j = sigma`, found cycle by cycle and
/// merged by the Chinese remainder theorem.
pub fn cyclic_exponent(g: &Permutation, sigma: &Permutation) -> Option<u64> {
    if g.degree() != sigma.degree() {
        return None;
    }
    let d = g.disjoint_cycles();
    for &p in &d.fixed_points {
        if sigma.apply(p) != p {
            return None;
        }
    }
    // x ≡ residue (mod modulus)
    let (mut residue, mut modulus) = (0i128, 1i128);
    for cycle in &d.cycles {
        let l = cycle.len();
        let target = sigma.apply(cycle[0]);
        let k = cycle.iter().position(|&q| q == target)?;
        if (0..l).any(|j| sigma.apply(cycle[j]) != cycle[(j + k) % l]) {
            return None;
        }
        (residue, modulus) = crt_merge(residue, modulus, k as i128, l as i128)?;
    }
    Some(residue as u64)
}

fn crt_merge(r1: i128, m1: i128, r2: i128, m2: i128) -> Option<(i128, i128)> {
    let (g, p, _) = ext_gcd(m1, m2);
    if (r2 - r1) % g != 0 {
        return None;
    }
    let lcm = m1 / g * m2;
    let step = ((r2 - r1) / g * p).rem_euclid(m2 / g);
    Some(((r1 + m1 * step).rem_euclid(lcm), lcm))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn closure(n: usize, gens: &[Permutation], cap: usize) -> Result<HashSet<Permutation>> {
    let id = Permutation::identity(n);
    let mut set = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x)?;
            if set.insert(y.clone()) {
                if set.len() > cap {
                    return Err(Error::CapacityExceeded { order: format!("> {cap}"), cap });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(set)
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Advances to the next lexicographic arrangement; false at the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
