//! Steiner symmetrization about a hyperplane.

use nalgebra::DMatrix;

use crate::bodies::{to_p2, Body, Hyperplane, Meridian, Polytope, Profile, RevolutionBody};
use crate::error::{GeomError, Result};
use crate::linalg::{complement_basis, Point};
use crate::quad::{bisect, grid_golden_max};

/// Number of radius levels used for the boundary of a symmetrized revolution body.
pub const REVOLUTION_LEVELS: usize = 8193;

/// Steiner symmetral `K_H`: every chord orthogonal to `H` is translated so its
/// midpoint lies in `H`.
pub fn steiner(body: &Body, h: &Hyperplane) -> Result<Body> {
    body.check_dim(h.normal.dim())?;
    let u = h.normal.as_point();
    let (lo, hi) = (-body.support(&-u), body.support(u));
    let tol = 1e-12 * (hi - lo);
    if h.offset < lo - tol || h.offset > hi + tol {
        return Err(GeomError::Domain("hyperplane misses the body".into()));
    }
    match body {
        Body::Polygon(p) => Ok(Body::Polygon(p.steiner(&to_p2(u), h.offset)?)),
        Body::Polytope(p) => Ok(Body::Polytope(steiner_polytope(p, u, h.offset)?)),
        Body::Revolution(r) => Ok(Body::Revolution(steiner_revolution(r, h)?)),
    }
}

/// Exact symmetral of a polytope. The polytope
/// `Q = {(y, s₁, s₂) : B y + s₁ u ∈ K, B y + s₂ u ∈ K}` in one dimension more
/// maps onto `K_H` under `(y, s₁, s₂) ↦ B y + (c + (s₁ - s₂)/2) u`, so the
/// symmetral is the hull of the images of the vertices of `Q`.
fn steiner_polytope(k: &Polytope, u: &Point, c: f64) -> Result<Polytope> {
    let n = k.dim();
    let basis = complement_basis(u);
    let mut rows = Vec::with_capacity(2 * k.facets().len());
    for f in k.facets() {
        let ay = basis.transpose() * &f.normal;
        let au = f.normal.dot(u);
        for slot in 0..2 {
            let mut a = Point::zeros(n + 1);
            a.rows_mut(0, n - 1).copy_from(&ay);
            a[n - 1 + slot] = au;
            rows.push((a, f.offset));
        }
    }
    let q = Polytope::from_halfspaces(n + 1, rows)?;
    let mut lift = DMatrix::<f64>::zeros(n, n + 1);
    lift.view_mut((0, 0), (n, n - 1)).copy_from(&basis);
    for i in 0..n {
        lift[(i, n - 1)] = 0.5 * u[i];
        lift[(i, n)] = -0.5 * u[i];
    }
    let shift = u * c;
    let images: Vec<Point> = q.vertices().iter().map(|v| &lift * v + &shift).collect();
    Polytope::from_vertices(images).map(|p| p.with_source(k.source()))
}

fn steiner_revolution(body: &RevolutionBody, h: &Hyperplane) -> Result<RevolutionBody> {
    let u = body.axis().as_point();
    let cos = h.normal.as_point().dot(u);
    if cos.abs() < 1e-12 {
        // Hyperplanes containing the axis are symmetry planes already.
        if h.offset.abs() > 1e-12 {
            return Err(GeomError::Representation("hyperplane parallel to the axis must contain it".into()));
        }
        return Ok(body.clone());
    }
    if (cos.abs() - 1.0).abs() > 1e-12 {
        return Err(GeomError::Representation("hyperplane must contain or be orthogonal to the axis".into()));
    }
    let c = h.offset * cos.signum();
    let m = body.meridian();
    let (lo, hi) = m.domain();
    // A meridian even about its own midpoint only moves.
    let mid = 0.5 * (lo + hi);
    if m.mapped(1.0, -mid, 1.0).is_even(1e-14 * (hi - lo)) {
        return body.with_meridian(m.mapped(1.0, c - mid, 1.0));
    }
    let (tmax, rmax) = grid_golden_max(&|t| m.radius(t), lo, hi, 256, 1e-15 * (hi - lo));
    let xtol = 1e-15 * (hi - lo);
    let mut pts = Vec::with_capacity(2 * REVOLUTION_LEVELS + 2);
    for k in 0..REVOLUTION_LEVELS {
        let theta = std::f64::consts::FRAC_PI_2 * k as f64 / (REVOLUTION_LEVELS - 1) as f64;
        let rho = rmax * (1.0 - theta.cos());
        let a = if m.radius(lo) >= rho { lo } else { bisect(&|t| m.radius(t) - rho, lo, tmax, xtol) };
        let b = if m.radius(hi) >= rho { hi } else { bisect(&|t| m.radius(t) - rho, tmax, hi, xtol) };
        let w = 0.5 * (b - a);
        pts.push((c - w, rho));
        pts.push((c + w, rho));
    }
    let w0 = 0.5 * (hi - lo);
    pts.push((c - w0, 0.0));
    pts.push((c + w0, 0.0));
    body.with_meridian(Meridian::Sampled(Profile::upper_hull(pts)?))
}
