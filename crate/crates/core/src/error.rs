use thiserror::Error;

/// Errors produced by the canonizer, the invariant machinery and the parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pair ({i}, {j}) for n = {n}: need 1 <= i < j <= n")]
    InvalidPair { i: usize, j: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex count {n} is below the minimum of 3")]
    DegenerateSize { n: usize },

    #[error("vertex count {n} exceeds the enumeration limit max_n = {max}")]
    SizeLimit { n: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph6 needs a simple graph, edge {position} has weight {weight}")]
    NotSimple { position: usize, weight: String },

    #[error("invalid monomial or polynomial: {0}")]
    Polynomial(String),

    #[error("degree {k} out of range 1..={n}")]
    DegreeOutOfRange { k: usize, n: usize },

    #[error("invalid weight literal {0:?}")]
    Literal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
