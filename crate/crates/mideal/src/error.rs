use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the zero ideal is not representable")]
    EmptyIdeal,
    #[error("the unit ideal is not representable")]
    UnitIdeal,
    #[error("{0} is not in the ideal")]
    NotInIdeal(String),
    #[error("invalid generator order: {0}")]
    InvalidOrder(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("ideal is not stable: {0}")]
    NotStable(String),
    #[error("decomposition function is not regular at u = {u}, s = {s}")]
    NotRegular { u: String, s: usize },
    #[error("classification does not apply: {0}")]
    Classification(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
