//! Symmetry and distance functionals.

pub mod asa;
pub mod bm;
pub mod bonnesen;
pub mod minksym;
pub mod q;

pub use asa::{affine_ratios, affine_surface_area, AffineRatios};
pub use bm::{bm_about_origin, bm_distance_ball, bm_polygon, bm_symmetric, BmFit};
pub use bonnesen::{bonnesen_report, BonnesenReport};
pub use minksym::{minksym_bound_check, MinksymReport};
pub use q::{difference_body_gap, minkowski_q, q_section, SymmetryReport};
