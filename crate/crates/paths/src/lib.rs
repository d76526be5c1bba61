//! Path combinatorics and numeric representation checks at roots of unity.
//!
//! Path counts are exact integers. Everything involving 3j symbols, RSOS
//! weights or module matrices is floating point and compared against a
//! tolerance.

pub mod error;
pub mod goodbad;
pub mod modules;
pub mod path;
pub mod q3j;
pub mod qnum;
pub mod rsos;
pub mod tensor;

pub use error::PathError;
pub use goodbad::{goodbad_dims, verify_goodbad, GoodBad};
pub use modules::{build_module, root_module, verify_all_modules, ModuleKind, RootModule};
pub use path::{
    classical_closed_form, count_paths, count_restricted, enumerate_paths, special_path, verify_classical_count, Path,
    Restriction,
};
pub use q3j::{coeff_cjm, path_vector, path_vector_uj, q3j, verify_highest_weight, verify_orthonormal, verify_special_coefficients,
    Branch,
};
pub use qnum::{generic_q, root_of_unity, Scalar, DEFAULT_TOLERANCE};
pub use rsos::{rsos_weight, verify_face_ybe, verify_identity_at_zero, ybe_residual, ybe_residual_for, FaceType};
pub use tensor::{omega_basis, pi_operator, rplus, rplus_pi, tensor_generators, Coproduct};
