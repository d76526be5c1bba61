use mincyc_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CycleError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("Gamma1 needs r = N mod 2, got N = {n}, r = {r}")]
    Parity { n: usize, r: i64 },
    #[error("index {m} outside 1..={n}")]
    IndexOutOfRange { m: usize, n: usize },
    #[error("no cycle space with l = {l} > N = {n}")]
    TooManyX { l: usize, n: usize },
    #[error("wedge of cycles with different N ({left} vs {right})")]
    MixedN { left: usize, right: usize },
    #[error("evaluation point is not generic: {factor} vanishes")]
    NotGeneric { factor: String },
    #[error("not a cycle: {0}")]
    NotCycle(String),
    #[error("Bethe image is not proportional to the cycle map: {0}")]
    NotProportional(String),
}
