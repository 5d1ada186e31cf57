use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("numerator and denominator vanish to ε-degree {0} (raise the ε-degree)")]
    InsufficientEpsDegree(usize),
    #[error("truncation exhausted: {0}")]
    TruncationExhausted(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("underdetermined linear system: {0}")]
    Underdetermined(String),
    #[error("not rational: {0}")]
    NotRational(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, MathError>;
