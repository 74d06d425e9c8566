use thiserror::Error;

/// Errors surfaced by the library API.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different rings")]
    RingMismatch,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("inhomogeneous polynomial: term {term} has degree {found}, expected {expected}")]
    Inhomogeneous {
        term: String,
        found: u64,
        expected: u64,
    },
    #[error("exponent overflow: degree exceeds 16-bit bound")]
    ExponentOverflow,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("ideal must be proper and nonzero for this operation")]
    NotProperNonzero,
    #[error("inner ideal is not contained in the outer ideal")]
    NotContained,
    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("matrix is not homogeneous for the declared twists at entry ({row},{col})")]
    InhomogeneousMatrix { row: usize, col: usize },
    #[error("resolution rank cap exceeded: rank {rank} > {cap} at step {step}")]
    RankCapExceeded { rank: usize, cap: usize, step: usize },
    #[error("graded-piece degree bound {0} exceeded")]
    DegreeBoundExceeded(i64),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
