use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rank {rank} is below the minimum {min} for type {type_label}")]
    RankTooSmall {
        type_label: char,
        rank: usize,
        min: usize,
    },

    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not monomial: {0}")]
    NotMonomial(String),

    #[error("closure cap of {cap} elements exceeded ({partial} found so far)")]
    CapExceeded { cap: usize, partial: usize },

    #[error("closed-form exponential unavailable: {0}")]
    NoClosedForm(String),

    #[error("lift identification failed: {0}")]
    Identification(String),

    #[error("element is not in the Clifford group: {0}")]
    NotInCliffordGroup(String),

    #[error("x * bar(x) is not a scalar")]
    NonScalarNorm,

    #[error("quaternion norm is {0}, expected 1")]
    NotUnit(String),

    #[error("no rational quaternion lift: {0}")]
    NoRationalLift(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
