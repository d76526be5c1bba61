//! Graded linear algebra on minimal cycles.
//!
//! The degree-`d` component of each cycle space is finite dimensional, so
//! characters are verified degree by degree: `W_{N,l}` is the solution
//! space of the minimality constraints, `M_{N,l}` and `M^{(r)}_{N,l}` are
//! its quotients by wedge images of the named null cycles. The crate also
//! evaluates the quotients at a generic point, builds the dual functional
//! spaces and runs the divisibility checks on them.

pub mod character;
pub mod dual;
pub mod ec;
pub mod error;
pub mod factor;
pub mod space;

pub use character::{
    char_m_restricted_truncated, char_m_truncated, char_w_truncated, gamma_blocks, restriction_mu, sigma_blocks,
    CharTable, Space,
};
pub use dual::{dual_space, dual_space_dims, expected_dual, DualMode, DualSpace, DualTable, DualTuple};
pub use ec::dim_ec_m;
pub use error::QuotientError;
pub use factor::{
    delta_plus, factor_divisibility_check, factor_divisor, filtration_piece, free_generators, specialize_tuple,
    verify_free_determinant,
};
pub use space::{graded_basis_w, min_degree, Ambient, Block, GradedBasis, QuotientEngine};
