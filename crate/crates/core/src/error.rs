//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown function `{name}` at position {pos}")]
    UnknownFunction { pos: usize, name: String },

    #[error("unknown named element `{0}`")]
    UnknownName(String),

    #[error("duplicate variable x{0}")]
    DuplicateVariable(u32),

    #[error("composition has total {got}, expected degree {expected}")]
    DegreeMismatch { expected: u32, got: u32 },

    #[error("polynomial is not multihomogeneous")]
    NotMultihomogeneous,

    #[error("polynomial multidegree does not match: {0}")]
    WrongMultidegree(String),

    #[error("substitution point has {got} entries, need at least {need}")]
    ArityMismatch { need: usize, got: usize },

    #[error("evaluation point does not cover symbol {0}")]
    MissingSymbol(String),

    #[error("negative x-exponent with nonzero coefficient: {0}")]
    NegativeExponent(String),

    #[error("empty composition")]
    EmptyComposition,
}

pub type Result<T> = std::result::Result<T, Error>;
