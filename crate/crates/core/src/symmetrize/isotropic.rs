//! Weak isotropic position.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::bodies::{AffineMap, Body};
use crate::error::{GeomError, Result};
use crate::linalg::{inverse_sqrt_spd, kappa, Point};
use crate::quad::golden_max;

#[derive(Debug, Clone, Serialize)]
pub struct IsotropicReport {
    pub map: AffineMap,
    /// Isotropic constant `L_K`, `∫⟨θ,x⟩² = L_K² V^{(n+2)/n}`.
    pub l_k: f64,
    /// Smallest `R` with `T·K ⊂ R·Bⁿ`.
    pub inclusion_radius: f64,
    /// Largest off-diagonal over smallest diagonal entry of the normalised covariance.
    pub off_diagonal_ratio: f64,
    pub volume: f64,
    pub centroid_norm: f64,
}

/// `L_Bⁿ`: `L² = κ_n^{-2/n} / (n+2)`.
pub fn ball_isotropic_constant(n: usize) -> f64 {
    (kappa(n).powf(-2.0 / n as f64) / (n + 2) as f64).sqrt()
}

/// Translates the centroid to `o`, whitens the covariance and rescales to
/// volume `κ_n`. Bodies of revolution stay bodies of revolution: their
/// covariance is diagonal in any frame containing the axis.
pub fn isotropic_normalize(body: &Body) -> Result<(IsotropicReport, Body)> {
    let n = body.dim();
    let v = body.volume();
    let c = body.centroid();
    let cov = body.second_moment_about(&c) / v;
    let w = inverse_sqrt_spd(&cov).ok_or_else(|| GeomError::invalid("body.nondegenerate", "singular covariance"))?;
    let det_w = w.determinant();
    let s = (kappa(n) / (det_w * v)).powf(1.0 / n as f64);
    let a = w * s;
    let b = -(&a * &c);
    let map = AffineMap::new(a, b)?;
    let out = body.apply_affine(&map)?;
    let vol = out.volume();
    let centroid_norm = out.centroid().norm();
    let m = out.second_moment_about(&Point::zeros(n));
    let diag_min = (0..n).map(|i| m[(i, i)]).fold(f64::INFINITY, f64::min);
    let mut off: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off = off.max(m[(i, j)].abs());
            }
        }
    }
    let lambda = m.trace() / n as f64;
    let l_k = (lambda / vol.powf((n + 2) as f64 / n as f64)).sqrt();
    let report = IsotropicReport {
        map,
        l_k,
        inclusion_radius: circumradius_about_origin(&out),
        off_diagonal_ratio: off / diag_min,
        volume: vol,
        centroid_norm,
    };
    Ok((report, out))
}

/// `max_{x ∈ K} |x|`.
pub fn circumradius_about_origin(body: &Body) -> f64 {
    match body {
        Body::Polygon(p) => p.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max),
        Body::Polytope(p) => p.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max),
        Body::Revolution(r) => {
            // max_φ h(cos φ, sin φ) in a meridian plane.
            let m = r.meridian();
            let f = |phi: f64| m.support(phi.cos(), phi.sin());
            let grid = 512;
            let h = std::f64::consts::PI / grid as f64;
            let (k, best) = (0..=grid).map(|k| (k, f(k as f64 * h))).fold((0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
            let lo = (k as f64 - 1.0).max(0.0) * h;
            let hi = ((k + 1) as f64 * h).min(std::f64::consts::PI);
            best.max(golden_max(&f, lo, hi, 1e-12).1)
        }
    }
}

/// Covariance matrix `∫ (x - c)(x - c)ᵀ / V`.
pub fn covariance(body: &Body) -> DMatrix<f64> {
    body.second_moment_about(&body.centroid()) / body.volume()
}
