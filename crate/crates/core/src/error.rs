use crate::complex::ComplexError;
use crate::linalg::LinalgError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A differential failed to square to zero or two differentials failed
    /// to anticommute; always a bug in sign bookkeeping.
    #[error("sign convention fault: {0}")]
    SignConventionFault(String),
    #[error("maps do not commute: {0}")]
    CommutationFailure(String),
    #[error("coefficient mismatch: {0}")]
    MixedCoefficients(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
