//! The polynomial cycle layer.
//!
//! A cycle of type `(N, l)` is a polynomial in `X1..Xl, z1..zN` that is
//! skew-symmetric in the `X` block, symmetric in the `z` block and of degree
//! below `N` in each `X_p`. This crate builds the named null cycles, the
//! wedge product, the minimality predicate, the map from fermionic monomials
//! to cycles and its Bethe-ansatz counterpart at `q = i`.

pub mod bethe;
pub mod cmap;
pub mod cycle;
pub mod error;
pub mod named;

pub use bethe::{bethe_cmap, predicted_bethe_phase, verify_bethe_cmap, BetheImage};
pub use cmap::{cmap, det_poly, g_matrix, g_poly};
pub use cycle::{default_generic_point, evaluate_ec, is_minimal, wedge, wedge_all, CyclePoly, GradedCycle};
pub use error::CycleError;
pub use named::{named_cycle, theta_factor, NamedCycle};
