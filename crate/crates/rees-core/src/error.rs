//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0} is not a usable odd prime modulus")]
    InvalidModulus(u64),

    #[error("unsupported variable count n = {0}")]
    InvalidRing(usize),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("denominator {den} is not invertible modulo {modulus}")]
    NonInvertibleDenominator { den: String, modulus: u64 },

    #[error(
        "reduction step budget exceeded after {steps} steps \
         (basis size {basis_len}, {pending} pairs pending)"
    )]
    BudgetExceeded {
        steps: u64,
        basis_len: usize,
        pending: usize,
    },

    #[error("colon division was not exact; intersection output is inconsistent")]
    NonExactDivision,

    #[error("operation requires bihomogeneous generators")]
    NotBihomogeneous,

    #[error("operation requires generators homogeneous in the total grading")]
    NotHomogeneous,

    #[error("colon iteration cap {cap} exceeded without stabilizing")]
    SaturationCapExceeded { cap: usize },

    #[error("colon by the zero ideal")]
    ColonByZeroIdeal,

    #[error("invalid setup: {0}")]
    InvalidSetup(String),

    #[error("THEOREM-VIOLATION [{check}]: {detail}")]
    TheoremViolation { check: &'static str, detail: String },

    #[error("depth probe trials disagree: per-trial depths {depths:?} (seeds {seeds:?})")]
    DepthDisagreement { depths: Vec<usize>, seeds: Vec<u64> },
}

pub type Result<T> = std::result::Result<T, Error>;
