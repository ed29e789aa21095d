//! Codes read off the orientation congruences.

pub mod congruence;
pub mod determinants;
pub mod linear;

pub use congruence::{build_congruence_system, check_row_subsets, CongruenceSystem};
pub use determinants::{determinant_suite, DeterminantSuite};
pub use linear::{build_generator_matrix, is_mds, to_standard_form, Decoded, LinearCode, MdsReport};
