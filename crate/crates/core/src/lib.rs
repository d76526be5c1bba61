//! Exact arithmetic foundation: Gaussian rationals, sparse multivariate
//! polynomials, truncated q-series and exact elimination.

pub mod context;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod linalg;
pub mod mpoly;
pub mod perm;
pub mod qseries;
pub mod verify;

pub use context::{Role, VarContext};
pub use error::CoreError;
pub use field::Field;
pub use gaussian::GaussianRational;
pub use linalg::{nullspace_rank, rank, Echelon, SparseMatrix, SparseVec};
pub use mpoly::{MPoly, Mono};
pub use qseries::QSeries;
pub use verify::{Status, VerificationOutcome};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`.
pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
