use thiserror::Error;

use crate::monomial::Monomial;

/// Failures of the polynomial kernel and its text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for ambient dimension {nvars}")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("ambient dimension {0} exceeds the supported maximum of 64")]
    TooManyVariables(usize),
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible: remainder leading term {witness} is not a multiple of the divisor's leading monomial")]
    NotDivisible { monomial: Monomial, witness: String },
    #[error("not a perfect square")]
    NotSquare,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable x{index} at position {pos} (ambient dimension {nvars})")]
    UnknownVariable { index: usize, pos: usize, nvars: usize },
}
