use mincyc_core::CoreError;
use mincyc_cycles::CycleError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum QuotientError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    /// Parameters outside the supported range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A named cycle that should be homogeneous was not.
    #[error("block is not homogeneous: {0}")]
    NotHomogeneous(String),
    /// A tuple passed to a divisibility check is not in the filtration piece.
    #[error("precondition failed: {0}")]
    Precondition(String),
}
