//! Univariate q-objects: Gaussian binomials, Kostka polynomials (fermionic,
//! closed and alternating-sum forms), Virasoro minimal characters and their
//! finitizations, and exact checks of the identities relating them.

pub mod iden;
pub mod kostka;
pub mod qbinom;
pub mod virasoro;

pub use iden::verify_lemma_iden;
pub use kostka::{
    fermionic_configs, kostka_closed, kostka_fermionic, restricted_kostka, restricted_kostka_altsum,
    restricted_kostka_nu, FermionicConfig,
};
pub use qbinom::{gaussian_binomial, gaussian_binomial_quotient, int_coeffs, inv_qpoch, QPoly};
pub use virasoro::{
    abf_finitized, rsg_sector_char, verify_vir_identity, verify_vir_single_term, vir_identity_sides,
    virasoro_char, VirasoroParams,
};
