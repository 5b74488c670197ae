use thiserror::Error;

/// Errors raised by the exact-arithmetic, symmetric-function and Hall-algebra
/// layers. Every fallible public operation in the crate returns this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched variables: {0} and {1}")]
    VariableMismatch(char, char),

    #[error("pole at {var} = {value}")]
    Pole { var: char, value: String },

    #[error("multinomial parts sum to {got}, expected {expected}")]
    MultinomialMismatch { expected: u64, got: u64 },

    #[error("no composition with these multiplicities ends in a part equal to {0}")]
    EmptyMultiplicity(usize),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("total dimension {dim} exceeds the cap {cap} for {what}")]
    DimensionCap {
        what: &'static str,
        dim: usize,
        cap: usize,
    },

    #[error("enumeration of {size} elements exceeds the cap {cap}")]
    EnumerationCap { size: String, cap: u64 },

    #[error("unsupported field size q = {0} (supported: 2, 3, 5)")]
    UnsupportedField(u32),

    #[error("module is not nilpotent")]
    NotNilpotent,

    #[error("result has an odd power of v = sqrt(q) where a rational was required")]
    OddHalfPower,

    #[error("vertex counts differ: {0} and {1}")]
    VertexMismatch(u32, u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
