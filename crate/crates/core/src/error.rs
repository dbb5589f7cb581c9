use std::fmt;

use thiserror::Error;

use crate::formula::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("duplicate variable `{0}` in variable order")]
    DuplicateVariable(String),

    #[error("arity {arity} exceeds the cap of {cap}")]
    ArityCapExceeded { arity: usize, cap: usize },

    #[error("dense export of arity {arity} exceeds the dense cap of {cap}")]
    DenseCapExceeded { arity: usize, cap: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (must be below {bound})")]
    IndexOutOfRange { index: String, bound: String },

    #[error("{kind} expects {expected} operands, found {found}")]
    OperandCount {
        kind: &'static str,
        expected: &'static str,
        found: usize,
    },

    #[error("connective {kind} has no {what} form for arity {arity}")]
    UnsupportedConnective {
        kind: &'static str,
        what: &'static str,
        arity: usize,
    },

    #[error("polynomial is not interpretable: value {value} at interpretation {interpretation}")]
    NotInterpretable { interpretation: String, value: i64 },

    #[error("operator is not a projector: diagonal entry {value} at row {row}")]
    NotProjector { row: usize, value: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("duplicate interpolation point {0}")]
    DuplicatePoint(String),

    #[error("amplitude vector has zero norm")]
    ZeroNorm,

    #[error("amplitude {index} is not finite")]
    NonFiniteAmplitude { index: usize },

    #[error("invalid {what}: {detail}")]
    InvalidInput { what: &'static str, detail: String },

    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, detail: impl fmt::Display) -> Self {
        Error::InvalidInput {
            what,
            detail: detail.to_string(),
        }
    }
}
