use mincyc_core::CoreError;
use mincyc_cycles::CycleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FermionError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    /// A denominator that was expected to cancel did not.
    #[error("denominator {0} does not clear")]
    NotPolynomial(String),
    /// `cmap` was applied to an element mixing fermion numbers.
    #[error("element mixes fermion numbers {0} and {1}")]
    MixedWeight(u32, u32),
}
