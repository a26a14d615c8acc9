use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("infinite-dimensional {what} (exceeded {cap} basis vectors)")]
    InfiniteDimension { what: String, cap: usize },

    #[error("module is not maximal Cohen-Macaulay: Ext^{degree}(M, R) != 0")]
    NotMcm { degree: usize },

    #[error("no periodic tail within {0} resolution steps")]
    NotPeriodic(usize),

    #[error("variable `{0}` already present in the ring")]
    VariableCollision(String),

    #[error("homogeneous input required: {0}")]
    NotHomogeneous(String),

    #[error("fan error: {0}")]
    Fan(String),

    #[error("inconsistent annotation at degree {degree}: {msg}")]
    Annotation { degree: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
