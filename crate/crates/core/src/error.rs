use thiserror::Error;

use crate::complex2::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("boundary maps do not compose to zero modulo {0}")]
    InconsistentChain(u64),

    #[error("stabilizer group contains a nontrivial scalar; the code space is {{0}}")]
    ScalarViolation,

    #[error("search budget of {0} candidates exceeded")]
    BudgetExceeded(u64),

    #[error("size {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("invalid 2-complex: {} violation(s)", .0.len())]
    InvalidComplex(Vec<Violation>),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid special darts: {0}")]
    InvalidSpecialDarts(String),

    #[error("index {index} out of range (size {size})")]
    OutOfRange { index: usize, size: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("invalid document: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
