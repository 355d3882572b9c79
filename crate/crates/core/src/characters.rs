//! Characters of subgroups of `S_n` as evaluable class functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::groups::cyclic_exponent;
use crate::perm::{CycleStructure, Permutation};
use crate::scalar::GaussianRational;

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Every partition of `n`, in reverse lexicographic order (`[n]` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Parses `[3,1]` (brackets optional).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = t
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {text:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_memo() -> &'static Mutex<HashMap<MnKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<MnKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Irreducible character value `chi^lambda` on the class with cycle type `mu`.
pub fn mn_value(lambda: &Partition, mu: &CycleStructure) -> Result<i64> {
    if lambda.size() != mu.degree() {
        return Err(Error::DegreeMismatch { expected: lambda.size(), found: mu.degree() });
    }
    Ok(mn_rec(lambda.parts.clone(), mu.as_partition()))
}

// Removes rim hooks of length mu[0] via the beta-set (abacus) picture: a hook
// of length r is a bead moved from b to b - r onto an empty position, with
// sign (-1)^(beads strictly between).
fn mn_rec(lambda: Vec<usize>, mu: Vec<usize>) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda, mu);
    if let Some(&v) = mn_memo().lock().expect("memo poisoned").get(&key) {
        return v;
    }
    let (lambda, mu) = key;
    let r = mu[0];
    let rest = mu[1..].to_vec();
    let k = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> =
            moved.iter().enumerate().map(|(i, &x)| x - (k - 1 - i)).filter(|&p| p > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(shape, rest.clone());
    }
    mn_memo().lock().expect("memo poisoned").insert((lambda, mu), total);
    total
}

/// A character given by an explicit value table over an enumerated subgroup.
#[derive(Clone, Debug, PartialEq)]
pub struct TableCharacter {
    n: usize,
    values: BTreeMap<Permutation, GaussianRational>,
    degree: u64,
}

impl TableCharacter {
    /// With `validate`, checks that the domain is a subgroup, that the table
    /// is a class function on it, and that `|chi(s)| <= chi(id)`.
    pub fn new(n: usize, values: BTreeMap<Permutation, GaussianRational>, validate: bool) -> Result<Self> {
        if let Some(p) = values.keys().find(|p| p.degree() != n) {
            return Err(Error::DegreeMismatch { expected: n, found: p.degree() });
        }
        let id = Permutation::identity(n);
        let at_id = values
            .get(&id)
            .ok_or_else(|| Error::InvalidCharacter("table has no value at the identity".into()))?;
        let degree = at_id
            .as_real()
            .filter(|r| r.is_integer() && r.is_positive())
            .and_then(|r| num_traits::ToPrimitive::to_u64(r.numer()))
            .ok_or_else(|| Error::InvalidCharacter(format!("chi(id) = {at_id} is not a positive integer")))?;
        let table = TableCharacter { n, values, degree };
        if validate {
            table.validate()?;
        }
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidCharacter(m));
        let dom: Vec<&Permutation> = self.values.keys().collect();
        for g in &dom {
            if !self.values.contains_key(&g.inverse()) {
                return bad(format!("domain not closed under inverse at {g}"));
            }
            for h in &dom {
                if !self.values.contains_key(&g.compose(h)?) {
                    return bad(format!("domain not closed under composition at {g}, {h}"));
                }
                let conj = g.conjugate_by(h)?;
                if self.values[&conj] != self.values[*g] {
                    return bad(format!("not a class function: chi({g}) != chi({conj})"));
                }
            }
        }
        let bound = GaussianRational::from_integer(self.degree as i64).norm_sqr();
        for (g, v) in &self.values {
            if v.norm_sqr() > bound {
                return bad(format!("|chi({g})| exceeds chi(id)"));
            }
        }
        Ok(())
    }

    pub fn degree_n(&self) -> usize {
        self.n
    }

    pub fn get(&self, sigma: &Permutation) -> Option<&GaussianRational> {
        self.values.get(sigma)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Permutation, &GaussianRational)> {
        self.values.iter()
    }

    /// Reads `{"(1 2)": {"re": "p/q", "im": "p/q"}, "id": ..., ...}`.
    pub fn from_json(text: &str, n: usize, validate: bool) -> Result<Self> {
        let raw: BTreeMap<String, GaussianRational> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("character table: {e}")))?;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            let p = Permutation::parse(&k, n)?;
            if values.insert(p, v).is_some() {
                return Err(Error::Parse(format!("duplicate table entry for {k}")));
            }
        }
        Self::new(n, values, validate)
    }
}

/// An evaluable character.
#[derive(Clone, Debug, PartialEq)]
pub enum CharacterSpec {
    Trivial,
    Sign,
    Irreducible(Partition),
    Table(TableCharacter),
    /// `g^j -> zeta^(j*index)` on the cyclic group generated by `g`, where
    /// `zeta` is a primitive `ord(g)`-th root of unity.
    LinearOfCyclic { generator: Permutation, index: u64 },
}

impl CharacterSpec {
    pub fn irreducible(parts: Vec<usize>) -> Result<Self> {
        Ok(CharacterSpec::Irreducible(Partition::new(parts)?))
    }

    /// Parses `trivial`, `sign`, `irr:[3,1]`, `table:<path>` or
    /// `linear:<k>:<cycle notation>`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        match t {
            "trivial" => return Ok(CharacterSpec::Trivial),
            "sign" => return Ok(CharacterSpec::Sign),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("irr:") {
            let lambda = Partition::parse(rest)?;
            if lambda.size() != n {
                return Err(Error::Parse(format!("partition {lambda} is not a partition of {n}")));
            }
            return Ok(CharacterSpec::Irreducible(lambda));
        }
        if let Some(path) = t.strip_prefix("table:") {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            return Ok(CharacterSpec::Table(TableCharacter::from_json(&text, n, true)?));
        }
        if let Some(rest) = t.strip_prefix("linear:") {
            let (k, gen) = rest.split_once(':').ok_or_else(|| Error::Parse(format!("expected linear:<k>:<cycle>, got {t:?}")))?;
            let index = k.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad index {k:?}")))?;
            return Ok(CharacterSpec::LinearOfCyclic { generator: Permutation::parse(gen, n)?, index });
        }
        Err(Error::Parse(format!("unknown character {t:?}")))
    }

    /// `chi(id)`.
    pub fn degree(&self) -> u64 {
        match self {
            CharacterSpec::Trivial | CharacterSpec::Sign | CharacterSpec::LinearOfCyclic { .. } => 1,
            CharacterSpec::Irreducible(lambda) => {
                let id = CycleStructure { lengths: vec![], fixed_count: lambda.size() };
                mn_value(lambda, &id).expect("sizes agree") as u64
            }
            CharacterSpec::Table(t) => t.degree,
        }
    }

    pub fn is_linear(&self) -> bool {
        self.degree() == 1
    }

    /// Whether every value lies in `Q[i]`.
    pub fn is_exact(&self) -> bool {
        match self {
            CharacterSpec::LinearOfCyclic { generator, index } => {
                let ord = generator.order();
                matches!(ord / ord.gcd(&(index % ord)), 1 | 2 | 4)
            }
            _ => true,
        }
    }

    fn check_degree(&self, sigma: &Permutation) -> Result<()> {
        let expected = match self {
            CharacterSpec::Irreducible(l) => l.size(),
            CharacterSpec::Table(t) => t.n,
            CharacterSpec::LinearOfCyclic { generator, .. } => generator.degree(),
            CharacterSpec::Trivial | CharacterSpec::Sign => return Ok(()),
        };
        if expected != sigma.degree() {
            return Err(Error::DegreeMismatch { expected, found: sigma.degree() });
        }
        Ok(())
    }

    /// Exact value `chi(sigma)`.
    pub fn evaluate(&self, sigma: &Permutation) -> Result<GaussianRational> {
        self.check_degree(sigma)?;
        match self {
            CharacterSpec::Trivial => Ok(GaussianRational::one()),
            CharacterSpec::Sign => Ok(GaussianRational::from_integer(sigma.sign())),
            CharacterSpec::Irreducible(lambda) => {
                Ok(GaussianRational::from_integer(mn_value(lambda, &sigma.cycle_structure())?))
            }
            CharacterSpec::Table(t) => t.get(sigma).cloned().ok_or_else(|| Error::OutsideDomain(sigma.to_string())),
            CharacterSpec::LinearOfCyclic { generator, index } => {
                if !self.is_exact() {
                    return Err(Error::InexactCharacter(format!(
                        "root of unity of order {} for generator {generator}",
                        generator.order() / generator.order().gcd(&(index % generator.order()))
                    )));
                }
                let j = cyclic_exponent(generator, sigma).ok_or_else(|| Error::OutsideDomain(sigma.to_string()))?;
                let ord = generator.order();
                let e = (j as u128 * *index as u128 % ord as u128) as u64;
                Ok(GaussianRational::i_pow((4 * e / ord) as i64))
            }
        }
    }

    /// Floating value, available for every variant.
    pub fn evaluate_complex(&self, sigma: &Permutation) -> Result<Complex64> {
        if let CharacterSpec::LinearOfCyclic { generator, index } = self {
            self.check_degree(sigma)?;
            let j = cyclic_exponent(generator, sigma).ok_or_else(|| Error::OutsideDomain(sigma.to_string()))?;
            let ord = generator.order();
            let e = (j as u128 * *index as u128 % ord as u128) as f64;
            return Ok(Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e / ord as f64));
        }
        let (re, im) = self.evaluate(sigma)?.to_f64();
        Ok(Complex64::new(re, im))
    }

    /// `conj(chi)(sigma) = chi(sigma^-1)`.
    pub fn conjugate_evaluate(&self, sigma: &Permutation) -> Result<GaussianRational> {
        self.evaluate(&sigma.inverse())
    }

    pub fn conjugate_evaluate_complex(&self, sigma: &Permutation) -> Result<Complex64> {
        self.evaluate_complex(&sigma.inverse())
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::Trivial => f.write_str("trivial"),
            CharacterSpec::Sign => f.write_str("sign"),
            CharacterSpec::Irreducible(l) => write!(f, "irr:{l}"),
            CharacterSpec::Table(t) => write!(f, "table({} entries)", t.values.len()),
            CharacterSpec::LinearOfCyclic { generator, index } => write!(f, "linear:{index}:{generator}"),
        }
    }
}
