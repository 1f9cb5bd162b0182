//! Reduction of a convex body to an o-symmetric body of revolution by
//! isotropic normalisation, Schwarz rounding, axial dilation and Steiner
//! symmetrization.

use serde::Serialize;

use crate::bodies::{from_p2, Body, Direction, Hyperplane, Polygon, RevolutionBody, P2};
use crate::directions::sphere_grid;
use crate::error::{GeomError, Result};
use crate::linalg::{complement_basis, Point};
use crate::measures::bm::{bm_about_origin, bm_polygon, bm_polygon_symmetric};
use crate::measures::q::meridian_polygon;
use crate::symmetrize::isotropic::isotropic_normalize;
use crate::symmetrize::schwarz::schwarz_round;
use crate::symmetrize::steiner::steiner;

/// Directions scanned for the extremes of the support function.
pub const DIRECTION_GRID: usize = 4096;
/// Branch-switch constant of the planar double symmetrization.
pub const SWITCH_CONSTANT: f64 = 0.001;

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub u: Vec<f64>,
    /// `"max"` or `"min"` of `h` over the grid.
    pub kind: &'static str,
    pub h: f64,
    pub bm: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundingReport {
    pub l_k: f64,
    pub candidates: Vec<Candidate>,
    pub chosen: usize,
    pub volume: f64,
    /// `h_C(u) - 1`.
    pub support_residual: f64,
    pub centroid_norm: f64,
}

/// Local maximisation of `sign · h(u)` on the sphere by pattern search.
fn refine(body: &Body, u0: &Point, sign: f64, step0: f64) -> Point {
    let n = u0.len();
    let f = |u: &Point| sign * body.support(u);
    let mut u = u0.clone();
    let mut fu = f(&u);
    let mut step = step0;
    while step > 1e-11 {
        let basis = complement_basis(&u);
        let mut moved = false;
        for i in 0..n - 1 {
            for s in [-1.0, 1.0] {
                let v = (&u + basis.column(i) * (s * step)).normalize();
                let fv = f(&v);
                if fv > fu {
                    u = v;
                    fu = fv;
                    moved = true;
                }
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    u
}

fn extreme_directions(body: &Body) -> Vec<(Point, &'static str)> {
    if let Body::Revolution(r) = body {
        let u = r.axis().as_point().clone();
        return vec![(u.clone(), "max"), (-u, "min")];
    }
    let n = body.dim();
    let grid = sphere_grid(n, DIRECTION_GRID, 11);
    let h: Vec<f64> = grid.iter().map(|d| body.support(d)).collect();
    let imax = (0..h.len()).max_by(|&a, &b| h[a].partial_cmp(&h[b]).unwrap()).unwrap();
    let imin = (0..h.len()).min_by(|&a, &b| h[a].partial_cmp(&h[b]).unwrap()).unwrap();
    let step = (4.0 / DIRECTION_GRID as f64).powf(1.0 / (n - 1) as f64);
    vec![(refine(body, &grid[imax], 1.0, step), "max"), (refine(body, &grid[imin], -1.0, step), "min")]
}

/// Rounds an isotropic body about `u` and dilates so that `u ∈ ∂C`.
fn round_about(k: &Body, u: &Point) -> Result<(RevolutionBody, f64)> {
    let dir = Direction::normalized(u.clone())?;
    let h = k.support(u);
    let c = schwarz_round(k, &dir)?;
    Ok((c.axial_dilation(1.0 / h), h))
}

pub fn rounding_pipeline(body: &Body) -> Result<(RoundingReport, RevolutionBody)> {
    let (iso, k) = isotropic_normalize(body)?;
    let mut candidates = Vec::new();
    let mut bodies = Vec::new();
    for (u, kind) in extreme_directions(&k) {
        let (c, h) = round_about(&k, &u)?;
        let bm = bm_about_origin(&Body::Revolution(c.clone()))?.distance;
        candidates.push(Candidate { u: u.as_slice().to_vec(), kind, h, bm });
        bodies.push(c);
    }
    let chosen = (0..candidates.len()).max_by(|&a, &b| candidates[a].bm.partial_cmp(&candidates[b].bm).unwrap()).unwrap();
    let c = bodies.swap_remove(chosen);
    let report = RoundingReport {
        l_k: iso.l_k,
        chosen,
        volume: c.volume(),
        support_residual: c.support(c.axis().as_point()) - 1.0,
        centroid_norm: c.centroid().norm(),
        candidates,
    };
    Ok((report, c))
}

#[derive(Debug, Clone, Serialize)]
pub struct PlanarReport {
    /// `"axis"` or `"diameter"`.
    pub branch: &'static str,
    pub axis: [f64; 2],
    /// `δ_BM(K, B²) - 1` of the normalised input.
    pub eps: f64,
    pub bm_axis_branch: f64,
    pub bm_result: f64,
    pub area: f64,
}

fn reflect(p: &Polygon, c: P2, d: P2) -> Polygon {
    let pts: Vec<P2> = p
        .vertices()
        .iter()
        .map(|v| {
            let w = v - c;
            c + d * (2.0 * w.dot(&d)) - w
        })
        .collect();
    Polygon::hull(&pts).unwrap_or_else(|_| p.clone())
}

/// A symmetry axis through the centroid, tried along vertices and edge midpoints.
pub fn symmetry_axis(p: &Polygon) -> Option<P2> {
    let c = p.centroid();
    let tol = 1e-8 * p.diameter();
    let m = p.len();
    let vs = p.vertices();
    let tries = vs.iter().copied().chain((0..m).map(|i| (vs[i] + vs[(i + 1) % m]) * 0.5));
    for target in tries {
        let d = target - c;
        if d.norm() < tol {
            continue;
        }
        let d = d.normalize();
        if p.hausdorff(&reflect(p, c, d)) <= tol {
            return Some(d);
        }
    }
    None
}

fn line_steiner(p: &Polygon, along: P2, through: P2) -> Result<Polygon> {
    let normal = P2::new(-along.y, along.x).normalize();
    let h = Hyperplane::new(Direction::normalized(from_p2(&normal))?, normal.dot(&through));
    match steiner(&Body::Polygon(p.clone()), &h)? {
        Body::Polygon(q) => Ok(q),
        _ => unreachable!(),
    }
}

/// Two Steiner symmetrizations about orthogonal lines turning an
/// axis-symmetric polygon into an o-symmetric one.
pub fn planar_double_steiner(p: &Polygon) -> Result<(PlanarReport, Polygon)> {
    let axis = symmetry_axis(p).ok_or_else(|| GeomError::Precondition("no symmetry axis found".into()))?;
    let c = p.centroid();
    let k = p.translate(&-c).scale((std::f64::consts::PI / p.area()).sqrt());
    let eps = bm_polygon(&k)?.distance - 1.0;
    let o = P2::zeros();
    let first = line_steiner(&line_steiner(&k, axis, o)?, P2::new(-axis.y, axis.x), o)?;
    let bm_axis = bm_polygon_symmetric(&first)?.distance;
    let (branch, out) = if bm_axis - 1.0 <= SWITCH_CONSTANT * eps * eps && eps > 1e-6 {
        let (i, j) = k.diameter_pair();
        let (x1, x2) = (k.vertices()[i], k.vertices()[j]);
        let d = (x2 - x1).normalize();
        let mid = (x1 + x2) * 0.5;
        let q = line_steiner(&line_steiner(&k, d, x1)?, P2::new(-d.y, d.x), mid)?;
        let shift = q.centroid();
        ("diameter", q.translate(&-shift))
    } else {
        ("axis", first)
    };
    let report = PlanarReport {
        branch,
        axis: [axis.x, axis.y],
        eps,
        bm_axis_branch: bm_axis,
        bm_result: bm_polygon_symmetric(&out)?.distance,
        area: out.area(),
    };
    Ok((report, out))
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub first: RoundingReport,
    pub branch: &'static str,
    pub eps: f64,
    pub second: RoundingReport,
    pub volume: f64,
    /// `max |r(t) - r(-t)|` over a grid.
    pub evenness: f64,
    pub bm: f64,
}

/// Nodes of the polygonal meridian region used for branch selection.
const REGION_NODES: usize = 257;

pub fn full_reduction(body: &Body) -> Result<(ReductionReport, RevolutionBody)> {
    let (first, c) = rounding_pipeline(body)?;
    let m = c.meridian();
    let (lo, hi) = m.domain();
    let region = meridian_polygon(|t| m.radius(t), lo, hi, REGION_NODES, 1.0)?.translate(&P2::new(0.5 * (lo + hi), 0.0));
    // Both sides of the branch test come from the same polygonal meridian region.
    let eps = bm_polygon(&region)?.distance - 1.0;
    let region_sym = line_steiner(&region, P2::new(0.0, 1.0), P2::zeros())?;
    let bm_axis = bm_polygon_symmetric(&region_sym)?.distance;
    let u = c.axis().clone();
    let sym = match steiner(&Body::Revolution(c.clone()), &Hyperplane::through_origin(u))? {
        Body::Revolution(r) => r,
        _ => unreachable!(),
    };
    let mut branch = "axis";
    if bm_axis - 1.0 <= SWITCH_CONSTANT * eps * eps && eps > 1e-6 {
        let (i, j) = region.diameter_pair();
        let d = (region.vertices()[j] - region.vertices()[i]).normalize();
        if d.x.abs() > 1e-6 && d.y.abs() > 1e-6 {
            return Err(GeomError::Representation("oblique diameter: the symmetral is not a body of revolution".into()));
        }
        // A diameter along or across the axis gives the same symmetral up to translation.
        branch = "diameter";
    }
    let (second, out) = rounding_pipeline(&Body::Revolution(sym))?;
    let (lo, hi) = out.meridian().domain();
    let half = 0.5 * (hi - lo);
    let evenness = (0..=64)
        .map(|k| {
            let t = half * k as f64 / 64.0;
            (out.meridian().radius(t) - out.meridian().radius(-t)).abs()
        })
        .fold((lo + hi).abs(), f64::max);
    let report = ReductionReport {
        first,
        branch,
        eps,
        volume: out.volume(),
        evenness,
        bm: bm_about_origin(&Body::Revolution(out.clone()))?.distance,
        second,
    };
    Ok((report, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::Polytope;
    use crate::linalg::{kappa, point};

    #[test]
    fn ellipsoid_rounds_to_ball() {
        let e = RevolutionBody::ellipsoid(Direction::basis(3, 1).unwrap(), 2.0, 0.7).unwrap();
        let (rep, c) = rounding_pipeline(&Body::Revolution(e)).unwrap();
        assert!((rep.volume - kappa(3)).abs() < 1e-8);
        assert!(rep.support_residual.abs() < 1e-8);
        assert!((c.meridian().radius(0.0) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn cube_rounding_certificates() {
        let (rep, c) = rounding_pipeline(&Body::Polytope(Polytope::cube(3))).unwrap();
        assert!((rep.volume - kappa(3)).abs() < 1e-6);
        assert!(rep.support_residual.abs() < 1e-8);
        assert!(rep.centroid_norm < 1e-6);
        assert!(c.volume() > 0.0);
    }

    #[test]
    fn kite_double_steiner() {
        let kite = Polygon::from_coords(&[[0.0, -1.0], [2.0, 0.0], [0.0, 1.0], [-0.5, 0.0]]).unwrap();
        let (rep, q) = planar_double_steiner(&kite).unwrap();
        assert!((rep.area - std::f64::consts::PI).abs() < 1e-9);
        assert!(Body::Polygon(q).is_o_symmetric(1e-9));
    }

    #[test]
    fn random_polytope_reduction() {
        let pts = vec![
            point(&[0.0, 0.0, 0.0]),
            point(&[2.0, 0.1, 0.0]),
            point(&[0.3, 1.5, 0.2]),
            point(&[0.1, 0.4, 1.7]),
            point(&[1.1, 1.2, 0.9]),
        ];
        let k = Body::Polytope(Polytope::from_vertices(pts).unwrap());
        let (rep, out) = full_reduction(&k).unwrap();
        assert!((rep.volume - kappa(3)).abs() < 1e-6, "{}", rep.volume);
        assert!(rep.evenness < 1e-8, "{}", rep.evenness);
        assert!(out.is_o_symmetric(1e-8));
    }
}
