//! JSON encodings.
//!
//! Scalars are `{"re": "p/q", "im": "p/q"}` (a literal string such as
//! `"2-1i"` is also accepted on input), permutations are cycle notation
//! strings and results are `{"value": .., "method": .., "terms": ..}`.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::engine::GmfResult;
use crate::error::{Error, Result};
use crate::matrix::{BlockSpec, Matrix};
use crate::perm::Permutation;
use crate::scalar::{format_rational, parse_rational, GaussianRational};

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &format_rational(self.re()))?;
        st.serialize_field("im", &format_rational(self.im()))?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPart {
    Text(String),
    Int(i64),
}

impl RawPart {
    fn parse<E: de::Error>(self) -> std::result::Result<num_rational::BigRational, E> {
        match self {
            RawPart::Text(t) => parse_rational(&t).map_err(E::custom),
            RawPart::Int(i) => Ok(num_rational::BigRational::from_integer(i.into())),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Parts { re: RawPart, #[serde(default)] im: Option<RawPart> },
    Literal(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RawScalar::deserialize(d)? {
            RawScalar::Parts { re, im } => {
                let im = match im {
                    Some(p) => p.parse()?,
                    None => num_rational::BigRational::from_integer(0.into()),
                };
                Ok(GaussianRational::new(re.parse()?, im))
            }
            RawScalar::Literal(t) => t.parse().map_err(de::Error::custom),
            RawScalar::Int(i) => Ok(GaussianRational::from_integer(i)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<GaussianRational>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawMatrix { rows: self.rows(), cols: self.cols(), entries: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(de::Error::custom(format!("entries do not form a {}x{} grid", raw.rows, raw.cols)));
        }
        Matrix::from_rows(raw.entries).map_err(de::Error::custom)
    }
}

impl Serialize for GmfResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GmfResult", 3)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("terms", &self.term_count)?;
        st.end()
    }
}

#[derive(Serialize, Deserialize)]
struct RawBlockSpec {
    m: usize,
    n: usize,
    theta: String,
    tau: String,
    inner_thetas: Vec<String>,
    inner_taus: Vec<String>,
    a: Vec<GaussianRational>,
    b: Vec<GaussianRational>,
}

impl Serialize for BlockSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings = |ps: &[Permutation]| ps.iter().map(ToString::to_string).collect();
        RawBlockSpec {
            m: self.m,
            n: self.n,
            theta: self.theta.to_string(),
            tau: self.tau.to_string(),
            inner_thetas: strings(&self.inner_thetas),
            inner_taus: strings(&self.inner_taus),
            a: self.a.clone(),
            b: self.b.clone(),
        }
        .serialize(s)
    }
}

impl BlockSpec {
    /// Parses and validates a block specification. Outer permutations have
    /// degree `n`, inner ones degree `m`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawBlockSpec = serde_json::from_str(text).map_err(|e| Error::Parse(format!("block spec: {e}")))?;
        let inner = |ps: &[String]| ps.iter().map(|p| Permutation::parse(p, raw.m)).collect::<Result<Vec<_>>>();
        if raw.m == 0 || raw.n == 0 {
            return Err(Error::InvalidBlockSpec("block size and count must be positive".into()));
        }
        let spec = BlockSpec {
            m: raw.m,
            n: raw.n,
            theta: Permutation::parse(&raw.theta, raw.n)?,
            tau: Permutation::parse(&raw.tau, raw.n)?,
            inner_thetas: inner(&raw.inner_thetas)?,
            inner_taus: inner(&raw.inner_taus)?,
            a: raw.a,
            b: raw.b,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("block spec serializes")
    }
}
