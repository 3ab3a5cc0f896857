use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("exponent or degree overflow: {0}")]
    Overflow(String),

    /// A configured resource cap was hit; the computation was abandoned.
    #[error("truncated: {what} exceeded cap {cap} (reached {reached})")]
    Truncation { what: String, cap: u64, reached: u64 },

    #[error("zero module: {0}")]
    ZeroModule(String),

    #[error("not a prime candidate: {0}")]
    NotPrime(String),

    #[error("module is not 1-torsionfree (does not embed in a free module)")]
    NotTorsionfree,

    #[error("not semidualizing: {0}")]
    NotSemidualizing(String),

    #[error("ring is not Cohen-Macaulay: {0}")]
    NotCohenMacaulay(String),

    #[error("non-monomial input: {0}")]
    NonMonomial(String),

    #[error("empty candidate list with non-monomial data")]
    EmptyCandidates,

    #[error("G-dimension is not certified finite: {0}")]
    InfiniteDimension(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("undefined name {0}")]
    UndefinedName(String),

    #[error("arity mismatch for `{name}`: expected {expected}, got {got}")]
    Arity {
        name: String,
        expected: String,
        got: usize,
    },
}

impl Error {
    pub fn is_truncation(&self) -> bool {
        matches!(self, Error::Truncation { .. })
    }
}
