use thiserror::Error;

use crate::mpoly::MPoly;

#[derive(Debug, Clone, Error)]
pub enum CoreError {
    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("not divisible, remainder {remainder}")]
    NotDivisible { remainder: MPoly },
    #[error("cannot invert a series whose leading coefficient is zero")]
    ZeroLeading,
    #[error("an exact polynomial needs an explicit order to be inverted")]
    ExactInverse,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
}
