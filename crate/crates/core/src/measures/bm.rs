//! Banach–Mazur distance to the Euclidean ball.
//!
//! `d(K, B) = min λ` over centred ellipses `E` and centres `x` with
//! `E ⊂ K - x ⊂ λ E`. For a fixed ellipse this is the ratio of the largest to
//! the smallest value of its gauge on `∂K`, so only the shape is searched.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bodies::{Body, Meridian, Polygon, P2};
use crate::error::{GeomError, Result};
use crate::optim::nelder_mead;
use crate::quad::{golden_max, grid_golden_max};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BmFit {
    pub distance: f64,
    /// Rotation angle and axis ratio of the optimal ellipse (planar inputs),
    /// or radial over axial semi-axis ratio (bodies of revolution).
    pub angle: f64,
    pub ratio: f64,
}

const SHAPE_GRID: usize = 64;
const PHI_GRID: usize = 96;

/// `max_v |A (v - c)| / min_e dist(o, A (e - c))` with `A = diag(1, 1/s) R(-θ)`.
fn polygon_ratio(p: &Polygon, theta: f64, log_s: f64, c: P2) -> f64 {
    let (sn, cs) = theta.sin_cos();
    let inv = (-log_s).exp();
    let map = |v: &P2| {
        let w = v - c;
        P2::new(cs * w.x + sn * w.y, inv * (-sn * w.x + cs * w.y))
    };
    let vs: Vec<P2> = p.vertices().iter().map(map).collect();
    let outer = vs.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut inner = f64::INFINITY;
    for i in 0..vs.len() {
        let a = vs[i];
        let b = vs[(i + 1) % vs.len()];
        let e = b - a;
        // Signed distance from o to the supporting line (positive inside for ccw order).
        let d = (e.x * a.y - e.y * a.x) / e.norm();
        inner = inner.min(-d);
    }
    if inner <= 0.0 {
        return f64::INFINITY;
    }
    outer / inner
}

fn shape_search<F: Fn(f64, f64) -> f64>(f: &F) -> (f64, f64, f64) {
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..SHAPE_GRID {
        let th = PI * i as f64 / SHAPE_GRID as f64;
        for j in 0..=SHAPE_GRID {
            let ls = -3.0 + 6.0 * j as f64 / SHAPE_GRID as f64;
            let v = f(th, ls);
            if v < best.0 {
                best = (v, th, ls);
            }
        }
    }
    let (x, v) = nelder_mead(&|x: &[f64]| f(x[0], x[1]), &[best.1, best.2], 0.05, 1e-12, 4000);
    if v < best.0 {
        (v, x[0], x[1])
    } else {
        best
    }
}

/// Distance of an o-symmetric polygon to the disc.
pub fn bm_polygon_symmetric(p: &Polygon) -> Result<BmFit> {
    let scale = p.diameter();
    let neg = p.neg();
    if p.hausdorff(&neg) > 1e-8 * scale {
        return Err(GeomError::Precondition("polygon is not o-symmetric".into()));
    }
    let (d, th, ls) = shape_search(&|th, ls| polygon_ratio(p, th, ls, P2::zeros()));
    Ok(BmFit { distance: d, angle: th, ratio: ls.exp() })
}

/// Distance of an arbitrary polygon to the disc, centre free.
pub fn bm_polygon(p: &Polygon) -> Result<BmFit> {
    let c0 = p.centroid();
    let scale = p.diameter();
    let (_, th, ls) = shape_search(&|th, ls| polygon_ratio(p, th, ls, c0));
    let f = |x: &[f64]| polygon_ratio(p, x[0], x[1], P2::new(x[2], x[3]));
    let (x, v) = nelder_mead(&f, &[th, ls, c0.x, c0.y], 0.02 * scale.max(1.0), 1e-13, 20000);
    // Restart once from the optimum to escape a collapsed simplex.
    let (x, v) = {
        let (y, w) = nelder_mead(&f, &x, 0.005 * scale.max(1.0), 1e-14, 20000);
        if w < v {
            (y, w)
        } else {
            (x, v)
        }
    };
    Ok(BmFit { distance: v, angle: x[0], ratio: x[1].exp() })
}

/// `max_φ h / min_φ h` of the meridian after scaling the radial direction by `1/k`.
fn meridian_ratio(m: &Meridian, k: f64, phi_hi: f64) -> f64 {
    let h = |phi: f64| m.support(phi.cos(), phi.sin() / k);
    let xtol = 1e-12;
    let (_, hmax) = grid_golden_max(&h, 0.0, phi_hi, PHI_GRID, xtol);
    let (_, neg_min) = grid_golden_max(&|p| -h(p), 0.0, phi_hi, PHI_GRID, xtol);
    hmax / -neg_min
}

/// Distance to the ball of a body of revolution whose meridian contains `o`
/// in its interior, with the ellipsoid centred at `o`: the optimal ellipsoid
/// shares the body's symmetries, so only the axis ratio is searched.
pub fn bm_meridian_about_origin(m: &Meridian) -> Result<BmFit> {
    let (lo, hi) = m.domain();
    if !(lo < 0.0 && hi > 0.0 && m.radius(0.0) > 0.0) {
        return Err(GeomError::Precondition("origin must be interior".into()));
    }
    let even = m.is_even(1e-10 * (hi - lo));
    let phi_hi = if even { 0.5 * PI } else { PI };
    let k0 = m.radius(0.0) / (0.5 * (hi - lo));
    let f = |x: f64| -meridian_ratio(m, k0 * x.exp(), phi_hi);
    let steps = 32;
    let (a, b) = (-2.0, 2.0);
    let dx = (b - a) / steps as f64;
    let (j, _) = (0..=steps).map(|j| (j, f(a + j as f64 * dx))).fold((0, f64::NEG_INFINITY), |acc, v| if v.1 > acc.1 { v } else { acc });
    let (x, v) = golden_max(&f, a + (j as f64 - 1.0) * dx, a + (j as f64 + 1.0) * dx, 1e-10);
    Ok(BmFit { distance: -v, angle: 0.0, ratio: k0 * x.exp() })
}

/// Distance to the ball of an o-symmetric body.
pub fn bm_symmetric(body: &Body) -> Result<BmFit> {
    if !body.is_o_symmetric(1e-8 * body.diameter()) {
        return Err(GeomError::Precondition("body is not o-symmetric".into()));
    }
    match body {
        Body::Polygon(p) => bm_polygon_symmetric(p),
        Body::Revolution(r) => bm_meridian_about_origin(r.meridian()),
        Body::Polytope(_) => Err(GeomError::Representation("Banach–Mazur distance of polytopes in dimension >= 3".into())),
    }
}

/// Distance to the ball of an o-symmetric polygon or body of revolution.
pub fn bm_distance_ball(body: &Body) -> Result<f64> {
    bm_symmetric(body).map(|f| f.distance)
}

/// Distance with the ellipsoid centre fixed at `o` (used to compare rounded bodies).
pub fn bm_about_origin(body: &Body) -> Result<BmFit> {
    match body {
        Body::Polygon(p) => {
            let (d, th, ls) = shape_search(&|th, ls| polygon_ratio(p, th, ls, P2::zeros()));
            Ok(BmFit { distance: d, angle: th, ratio: ls.exp() })
        }
        Body::Revolution(r) => bm_meridian_about_origin(r.meridian()),
        Body::Polytope(_) => Err(GeomError::Representation("Banach–Mazur distance of polytopes in dimension >= 3".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::RevolutionBody;

    #[test]
    fn square_is_sqrt_two() {
        let sq = Polygon::from_coords(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap();
        let fit = bm_polygon_symmetric(&sq).unwrap();
        assert!((fit.distance - 2f64.sqrt()).abs() < 1e-9, "{}", fit.distance);
    }

    #[test]
    fn hexagon() {
        let h = Polygon::regular(6, 1.0, P2::zeros());
        let fit = bm_polygon_symmetric(&h).unwrap();
        assert!((fit.distance - 2.0 / 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn ellipsoid_is_one() {
        let e = RevolutionBody::ellipsoid(crate::bodies::Direction::basis(3, 0).unwrap(), 3.0, 0.5).unwrap();
        let fit = bm_symmetric(&Body::Revolution(e)).unwrap();
        assert!((fit.distance - 1.0).abs() < 1e-8, "{}", fit.distance);
        assert!((fit.ratio - 0.5 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn triangle_general() {
        let t = Polygon::regular(3, 1.0, P2::new(0.3, -0.2));
        let fit = bm_polygon(&t).unwrap();
        assert!((fit.distance - 2.0).abs() < 1e-6, "{}", fit.distance);
    }
}
