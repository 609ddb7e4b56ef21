//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("no default modulus for GF({p}^{e}); field exceeds the supported range")]
    NoDefaultModulus { p: u64, e: u32 },
    #[error("field size {q} exceeds the supported limit {limit}")]
    FieldTooLarge { q: u128, limit: u128 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a subcode chain: {0}")]
    NotSubchain(String),
    #[error("enumeration budget exceeded: needed {needed}, cap {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("greedy search stopped at dimension {achieved}, below target {target}")]
    GvSearchExhausted { achieved: usize, target: usize },
    #[error("outer alphabet infeasible: need an extension with at least {needed} elements, have {available}")]
    InfeasibleOuter { needed: u64, available: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
