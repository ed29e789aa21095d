use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in F_{q}")]
    DivisionByZero { q: u64 },

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("element is not in the prime subfield")]
    NotInPrimeSubfield,

    #[error("log table for q = {q} exceeds the budget of {budget} entries")]
    TableBudget { q: u64, budget: u64 },

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("expected length {expected}, found {found}")]
    InvalidLength { expected: usize, found: usize },

    #[error("sigma_{index} is not an automorphism of Z[zeta_{l}]")]
    InvalidConjugation { index: usize, l: usize },

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integrity failure: {0}")]
    Integrity(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("syndrome {syndrome:?} is beyond the single-error correction radius")]
    BeyondCorrectionRadius { syndrome: Vec<u64> },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}
