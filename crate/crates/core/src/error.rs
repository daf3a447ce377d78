use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("size {n} exceeds the configured limit {limit}")]
    OverLimit { n: u32, limit: u32 },
    #[error("truncation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("inner series of a plethysm has a nonzero constant term")]
    NonzeroConstant,
    #[error("no antiderivative cycle index available for {0}")]
    MissingAntiderivative(String),
    #[error("fixed-point iteration did not stabilise: {0}")]
    NotWellFounded(String),
    #[error("linear coefficient is not invertible")]
    NonInvertible,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("species {0} has no explicit structures")]
    NotEnumerable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
