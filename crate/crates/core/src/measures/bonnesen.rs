//! Bonnesen's inequality `W² - (4/π) A >= (R - r)²` for convex polygons.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bodies::{Polygon, P2};
use crate::error::{GeomError, Result};
use crate::lp::LinearProgram;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BonnesenReport {
    /// Mean width, perimeter over π.
    pub w: f64,
    pub a: f64,
    pub r_circ: f64,
    pub r_in: f64,
    pub slack: f64,
}

pub fn bonnesen_report(p: &Polygon) -> Result<BonnesenReport> {
    let a = p.area();
    if a <= 0.0 {
        return Err(GeomError::invalid("polygon.nondegenerate", "zero area"));
    }
    let w = p.perimeter() / PI;
    let (_, r_circ) = min_enclosing_circle(p.vertices());
    let (_, r_in) = max_inscribed_circle(p)?;
    let slack = w * w - 4.0 / PI * a - (r_circ - r_in).powi(2);
    Ok(BonnesenReport { w, a, r_circ, r_in, slack })
}

fn circle2(a: P2, b: P2) -> (P2, f64) {
    let c = (a + b) * 0.5;
    (c, (a - c).norm())
}

fn circle3(a: P2, b: P2, c: P2) -> Option<(P2, f64)> {
    let bx = b - a;
    let cx = c - a;
    let d = 2.0 * (bx.x * cx.y - bx.y * cx.x);
    if d.abs() < 1e-300 {
        return None;
    }
    let b2 = bx.norm_squared();
    let c2 = cx.norm_squared();
    let u = P2::new(cx.y * b2 - bx.y * c2, bx.x * c2 - cx.x * b2) / d;
    Some((a + u, u.norm()))
}

/// Incremental minimal enclosing circle (Welzl's algorithm without recursion).
pub fn min_enclosing_circle(points: &[P2]) -> (P2, f64) {
    let eps = 1e-12 * points.iter().map(|p| p.norm()).fold(1.0, f64::max);
    let inside = |c: &(P2, f64), p: &P2| (p - c.0).norm() <= c.1 + eps;
    let mut c = (points[0], 0.0);
    for i in 1..points.len() {
        if inside(&c, &points[i]) {
            continue;
        }
        c = (points[i], 0.0);
        for j in 0..i {
            if inside(&c, &points[j]) {
                continue;
            }
            c = circle2(points[i], points[j]);
            for k in 0..j {
                if !inside(&c, &points[k]) {
                    c = circle3(points[i], points[j], points[k]).unwrap_or(c);
                }
            }
        }
    }
    c
}

/// Chebyshev centre: maximise `s` subject to `⟨aᵢ, x⟩ + s <= bᵢ` with unit `aᵢ`.
pub fn max_inscribed_circle(p: &Polygon) -> Result<(P2, f64)> {
    let mut lp = LinearProgram::new(vec![0.0, 0.0, -1.0]);
    for (a, b) in p.halfplanes() {
        let n = a.norm();
        lp.le(vec![a.x / n, a.y / n, 1.0], b / n);
    }
    let (x, v) = lp.minimize()?;
    Ok((P2::new(x[0], x[1]), -v))
}
