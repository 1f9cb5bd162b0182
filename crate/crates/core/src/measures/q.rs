//! Minkowski measure of symmetry `q(M) = min{λ >= 1 : -(M - x) ⊂ λ (M - x)}`.

use serde::{Deserialize, Serialize};

use crate::bodies::{from_p2, Body, Meridian, ObliqueSection, Polygon, Polytope, P2};
use crate::error::{GeomError, Result};
use crate::linalg::Point;
use crate::lp::LinearProgram;
use crate::quad::chebyshev_nodes;

/// Nodes used to polygonise a meridian for `q`.
pub const MERIDIAN_NODES: usize = 1025;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub q: f64,
    pub center: Vec<f64>,
    /// Largest violation of `-(M - x) ⊂ q (M - x)` over vertices and facets.
    pub lambda_certificate: f64,
}

/// For fixed `λ`, `-(M - x) ⊂ λ (M - x)` reads
/// `h_M(-aᵢ) + ⟨aᵢ, x⟩ <= λ (bᵢ - ⟨aᵢ, x⟩)` for every facet `(aᵢ, bᵢ)`.
/// With `w = (1 + λ) x` this is linear in `(w, λ)`, so `q` is one LP.
/// `axis`, when given, constrains the centre to the line `ℝ·axis`.
fn q_lp(halfspaces: &[(Point, f64)], vertices: &[Point], axis: Option<&Point>) -> Result<SymmetryReport> {
    let n = vertices[0].len();
    let support = |d: &Point| vertices.iter().map(|v| v.dot(d)).fold(f64::NEG_INFINITY, f64::max);
    let free = axis.map_or(n, |_| 1);
    let mut objective = vec![0.0; free + 1];
    objective[free] = 1.0;
    let mut lp = LinearProgram::new(objective);
    lp.bounds[free] = (1.0, f64::INFINITY);
    for (a, b) in halfspaces {
        let mut row: Vec<f64> = match axis {
            Some(e) => vec![a.dot(e)],
            None => a.iter().copied().collect(),
        };
        row.push(-b);
        lp.le(row, -support(&-a));
    }
    let (sol, lambda) = lp.minimize().map_err(|e| GeomError::Internal(format!("q linear program failed: {e}")))?;
    let w = match axis {
        Some(e) => e * sol[0],
        None => Point::from_column_slice(&sol[..n]),
    };
    let x = w / (1.0 + lambda);
    if lambda > n as f64 + 1e-6 {
        return Err(GeomError::Internal(format!("q = {lambda} exceeds the dimension bound {n}")));
    }
    let mut cert: f64 = 0.0;
    for v in vertices {
        for (a, b) in halfspaces {
            cert = cert.max(a.dot(&(&x - v)) - lambda * (b - a.dot(&x)));
        }
    }
    Ok(SymmetryReport { q: lambda, center: x.as_slice().to_vec(), lambda_certificate: cert })
}

pub fn q_polygon(p: &Polygon, axis: Option<P2>) -> Result<SymmetryReport> {
    let hs: Vec<(Point, f64)> = p.halfplanes().into_iter().map(|(a, b)| (from_p2(&a), b)).collect();
    let vs: Vec<Point> = p.vertices().iter().map(from_p2).collect();
    q_lp(&hs, &vs, axis.map(|e| from_p2(&e)).as_ref())
}

pub fn q_polytope(p: &Polytope) -> Result<SymmetryReport> {
    q_lp(&p.halfspaces(), p.vertices(), None)
}

/// Polygon `{(t, s) : |s| <= r(t)}` on nodes symmetric about the midpoint of
/// `[lo, hi]`, so meridians even about their midpoint give symmetric polygons.
pub fn meridian_polygon<F: Fn(f64) -> f64>(r: F, lo: f64, hi: f64, count: usize, stretch: f64) -> Result<Polygon> {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let nodes = chebyshev_nodes(-1.0, 1.0, count);
    let mut pts = Vec::with_capacity(2 * count);
    for &c in &nodes {
        let t = mid + half * c;
        let y = r(t);
        pts.push(P2::new(stretch * half * c, y));
        pts.push(P2::new(stretch * half * c, -y));
    }
    Polygon::hull(&pts)
}

/// `q` of a body of revolution, centre on the axis. Containment of bodies of
/// revolution about a common axis is containment of their meridian regions,
/// so this is the planar `q` of the meridian region with an axial centre.
pub fn q_meridian(m: &Meridian) -> Result<SymmetryReport> {
    let poly = match m {
        Meridian::Sampled(p) => {
            let mut pts = Vec::with_capacity(2 * p.t().len());
            for (&t, &r) in p.t().iter().zip(p.r()) {
                pts.push(P2::new(t, r));
                pts.push(P2::new(t, -r));
            }
            Polygon::hull(&pts)?
        }
        _ => {
            let (lo, hi) = m.domain();
            meridian_polygon(|t| m.radius(t), lo, hi, MERIDIAN_NODES, 1.0)?.translate(&P2::new(0.5 * (lo + hi), 0.0))
        }
    };
    q_polygon(&poly, Some(P2::new(1.0, 0.0)))
}

/// `q` of an oblique section of a body of revolution (centre on the section's axis),
/// in arc-length coordinates along that axis.
pub fn q_section(s: &ObliqueSection, nodes: usize) -> Result<SymmetryReport> {
    if s.ambient_dim() == 2 {
        return Ok(SymmetryReport { q: 1.0, center: vec![0.0], lambda_certificate: 0.0 });
    }
    let (lo, hi) = s.range();
    let poly = meridian_polygon(|t| s.chord_radius(t), lo, hi, nodes, s.stretch())?;
    q_polygon(&poly, Some(P2::new(1.0, 0.0)))
}

pub fn minkowski_q(body: &Body) -> Result<SymmetryReport> {
    match body {
        Body::Polygon(p) => q_polygon(p, None),
        Body::Polytope(p) => q_polytope(p),
        Body::Revolution(r) => {
            let mut rep = q_meridian(r.meridian())?;
            rep.center = (r.axis().as_point() * rep.center[0]).as_slice().to_vec();
            Ok(rep)
        }
    }
}

/// `|½(M - M)| / |M| - 1`, non-negative by Brunn–Minkowski.
pub fn difference_body_gap(body: &Body) -> Result<f64> {
    match body {
        Body::Polygon(p) => Ok(p.minkowski_sum(&p.neg())?.area() / (4.0 * p.area()) - 1.0),
        Body::Polytope(p) => {
            let v = p.vertices();
            let mut pts = Vec::with_capacity(v.len() * v.len());
            for a in v {
                for b in v {
                    pts.push((a - b) * 0.5);
                }
            }
            Ok(Polytope::from_vertices(pts)?.volume() / p.volume() - 1.0)
        }
        Body::Revolution(_) => Err(GeomError::Representation("difference body needs a piecewise-linear body".into())),
    }
}
