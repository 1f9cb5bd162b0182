//! Bound on the asymmetry of a concave profile by the Minkowski measure of
//! the region between its graph and its reflection.

use serde::{Deserialize, Serialize};

use crate::bodies::{Polygon, Profile, P2};
use crate::error::{GeomError, Result};
use crate::measures::q::q_polygon;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinksymReport {
    pub rho: f64,
    pub eps: f64,
    pub q: f64,
    /// Smallest distance of `g(-t)/g(t)` inside its admissible interval over the grid.
    pub worst_margin: f64,
    pub grid_points: usize,
}

/// `M = conv(graph g ∪ graph -g)` for `g` on a domain symmetric about `0`.
pub fn graph_hull(g: &Profile) -> Result<Polygon> {
    let mut pts = Vec::with_capacity(2 * g.t().len());
    for (&t, &r) in g.t().iter().zip(g.r()) {
        pts.push(P2::new(t, r));
        pts.push(P2::new(t, -r));
    }
    Polygon::hull(&pts)
}

/// Checks `(1 + 2ρε/(ρ-t))^{-1} <= g(-t)/g(t) <= 1 + 2ρε/(ρ-t)` at every node
/// `t ∈ (0, ρ)` of `g` and of its reflection.
pub fn minksym_bound_check(g: &Profile, eps: f64) -> Result<MinksymReport> {
    let (lo, hi) = g.domain();
    let rho = 0.5 * (hi - lo);
    if (lo + hi).abs() > 1e-12 * rho {
        return Err(GeomError::Precondition("profile domain must be symmetric about 0".into()));
    }
    let q = q_polygon(&graph_hull(g)?, None)?.q;
    if q - 1.0 > eps + 1e-9 {
        return Err(GeomError::Precondition(format!("q(M) - 1 = {} exceeds ε = {eps}", q - 1.0)));
    }
    let mut ts: Vec<f64> = g.t().iter().map(|t| t.abs()).filter(|&t| t > 0.0 && t < rho).collect();
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts.dedup();
    let mut worst = f64::INFINITY;
    for &t in &ts {
        let ratio = g.eval(-t) / g.eval(t);
        let b = 1.0 + 2.0 * rho * eps / (rho - t);
        worst = worst.min(ratio - 1.0 / b).min(b - ratio);
    }
    Ok(MinksymReport { rho, eps, q, worst_margin: worst, grid_points: ts.len() })
}
