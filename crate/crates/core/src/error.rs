use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group of order {order} exceeds enumeration cap {cap}")]
    CapacityExceeded { order: String, cap: usize },

    #[error("{0} is not in the domain of the character")]
    OutsideDomain(String),

    #[error("character value is not a Gaussian rational: {0}")]
    InexactCharacter(String),

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid block spec: {0}")]
    InvalidBlockSpec(String),

    #[error("maps do not form a permutation: {0}")]
    NotABijection(String),

    #[error("permutations are not disjoint: {0}")]
    NotDisjoint(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("too many cycles: {0} (at most 62 supported)")]
    TooManyCycles(usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("numerical error: {0}")]
    Numerical(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_))
    }
}
