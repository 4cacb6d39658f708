//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by exact-arithmetic kernels and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arithmetic between cyclotomic scalars of different field orders.
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    /// Exact division left a nonzero remainder.
    #[error("polynomial is not divisible by the given linear form")]
    NotDivisible,

    /// The divisor passed to linear division is zero or not homogeneous of degree 1.
    #[error("divisor must be a nonzero homogeneous polynomial of degree 1")]
    InvalidLinearDivisor,

    /// A linear substitution was applied to a polynomial mentioning variables
    /// outside the v-basis it acts on.
    #[error("polynomial uses variable {var} outside the substituted basis v1..v{dim}")]
    VariableOutsideBasis { var: String, dim: usize },

    #[error("brute-force budget exceeded: {required} terms > budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("invalid digit tuple: {0}")]
    InvalidDigitTuple(String),

    #[error("invalid sequence spec: {0}")]
    InvalidSpec(String),

    /// The requested root of unity order does not divide k or equals 1.
    #[error("root order {d} must divide k = {k} and exceed 1")]
    InvalidRootOrder { k: u32, d: u32 },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
