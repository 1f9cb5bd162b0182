//! Convex bodies in dimensions 2 to 4: polarity and volume products,
//! Steiner and Schwarz symmetrization, isotropic position, symmetry
//! measures and a small experiment lab.

pub mod bodies;
pub mod directions;
pub mod error;
pub mod lab;
pub mod linalg;
pub mod lp;
pub mod measures;
pub mod optim;
pub mod polar;
pub mod quad;
pub mod symmetrize;

pub use bodies::{
    AffineMap, Body, Direction, Hyperplane, Meridian, ObliqueSection, Polygon, Polytope, Profile, RevolutionBody,
    Section,
};
pub use error::{GeomError, Result};
pub use linalg::{kappa, Point};
