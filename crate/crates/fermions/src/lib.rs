//! The fermionic realization of the current algebra at `q = i`: Grassmann
//! elements and currents, the kernel relations, the map to cycles, the
//! bigraded quotient of the free current algebra and the recursions solved
//! by the fermionic coefficients.

pub mod appb;
pub mod correspondence;
pub mod current;
pub mod error;
pub mod grassmann;
pub mod rho;
pub mod zbar;

pub use appb::verify_appb_recursions;
pub use correspondence::{cmap_elem, rho_image, verify_correspondence, RhoImage, Word};
pub use current::{current_context, Den, GrassmannCurrent, RatFn};
pub use error::FermionError;
pub use grassmann::{mask_to_indices, reorder_sign, GrassmannElem};
pub use rho::{
    c_pair, c_single, c_subset, current_i, rho_current_j, rho_generator, verify_kernel_relations,
    verify_polynomial_rep, Generator,
};
pub use zbar::{expected_zbar_table, verify_zbar_character, zbar_character, ZElem, ZMono};
