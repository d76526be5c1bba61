use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PathError {
    #[error("q-integer [{0}] vanishes in a denominator")]
    VanishingDenominator(String),
    #[error("label 2j = {twice_j} is not admissible at level r = {r}")]
    Inadmissible { twice_j: i64, r: usize },
    #[error("not a face: heights {0:?} do not differ by 1/2 around the face")]
    NotAFace([i64; 4]),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}
