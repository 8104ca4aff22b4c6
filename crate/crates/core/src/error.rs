use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} columns, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The polynomial is not in the image of the free Lie algebra.
    #[error("polynomial is not a Lie element (offending monomial {monomial})")]
    NotLieElement { monomial: String },

    #[error("generator {0} is not homogeneous")]
    Inhomogeneous(String),

    #[error("series has constant term {0}, expected 1")]
    NonUnit(i64),

    #[error("letter x{letter} out of range for rank {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("invalid generator indices {0:?} for rank {1}")]
    IndexViolation(Vec<usize>, usize),

    #[error("parameter mismatch: (n={n1}, D={d1}) vs (n={n2}, D={d2})")]
    ParameterMismatch { n1: usize, d1: usize, n2: usize, d2: usize },

    #[error("series is trivial up to truncation degree {0}")]
    IdentityAtTruncation(usize),

    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),

    #[error("commutator {word} has Johnson depth {depth}, expected at least {expected}")]
    DepthViolation { word: String, depth: usize, expected: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
