//! Exact scalars for ordered subfields of ℝ: rationals and quadratic surds
//! `a + b√d`, with total ordering, truncated decimals, base-4 digit extraction
//! and the c-spec text format.

mod certificate;
mod cspec;
mod digits;
mod element;
mod json;

pub use certificate::IrrationalityCertificate;
pub use cspec::{parse_cspec, parse_rational, ParseError, ParseErrorKind};
pub(crate) use digits::pow4_neg;
pub use digits::{
    check_window, digits_to_value, extract_digits, window_hi, window_lo, DigitPrefix,
};
pub use element::{
    compare, field_arith, format_rational, in_rationals, ArithOp, FieldElement, RATIONAL_SENTINEL,
};
pub use json::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("radicand mismatch: sqrt({0}) and sqrt({1}) generate different fields")]
    RadicandMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is a perfect square")]
    PerfectSquare(u64),
    #[error("c = {0} lies outside the window (3/8, 5/8)")]
    OutOfWindow(String),
    #[error("digit count must be positive")]
    ZeroCount,
    #[error("invalid digit prefix: {0}")]
    InvalidPrefix(String),
    #[error("c-spec {0}")]
    Parse(#[from] ParseError),
}
