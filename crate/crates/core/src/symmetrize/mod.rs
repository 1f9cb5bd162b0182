//! Steiner symmetrization, Schwarz rounding and isotropic position.

pub mod isotropic;
pub mod reduction;
pub mod schwarz;
pub mod steiner;

pub use isotropic::{isotropic_normalize, IsotropicReport};
pub use schwarz::schwarz_round;
pub use steiner::steiner;
pub use reduction::{full_reduction, planar_double_steiner, rounding_pipeline};
