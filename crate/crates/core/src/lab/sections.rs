//! Section diagnostics: containment of polar sections under Steiner
//! symmetrization, and the asymmetry of sections through a boundary point.

use serde::Serialize;

use crate::bodies::{to_p2, Body, Direction, Hyperplane, Meridian, Polygon, Polytope, RevolutionBody};
use crate::error::{GeomError, Result};
use crate::linalg::{complement_basis, Point};
use crate::measures::q::q_section;
use crate::quad::chebyshev_nodes;
use crate::symmetrize::steiner;

#[derive(Debug, Clone, Serialize)]
pub struct ContainmentReport {
    pub grid: Vec<f64>,
    /// Largest violation of `½(S - S) ⊂ K̃^o(u, t) - tu` per grid point (NaN when skipped).
    pub violations: Vec<f64>,
    pub worst: f64,
    pub failures: usize,
    pub vol_polar: f64,
    pub vol_polar_symmetral: f64,
}

fn section_polygon(p: &Polytope, u: &Point, t: f64) -> Option<Polygon> {
    let basis = complement_basis(u);
    let s = p.section(u, t, &basis)?;
    let pts: Vec<_> = s.vertices().iter().map(to_p2).collect();
    Polygon::hull(&pts).ok()
}

/// Checks `½(K^o(u,t) - K^o(u,t)) ⊂ K̃^o(u,t) - tu` with `K̃ = K_{u^⊥}` for an
/// o-symmetric polytope in ℝ³, on `count` levels spread over `(-h, h)`, `h = h_{K^o}(u)`.
pub fn section_containment_check(k: &Polytope, u: &Direction, count: usize) -> Result<ContainmentReport> {
    if k.dim() != 3 {
        return Err(GeomError::Precondition("containment check needs n = 3".into()));
    }
    let body = Body::Polytope(k.clone());
    if !body.is_o_symmetric(1e-9 * k.diameter()) {
        return Err(GeomError::Precondition("body is not o-symmetric".into()));
    }
    let o = Point::zeros(3);
    let Body::Polytope(sym) = steiner(&body, &Hyperplane::through_origin(u.clone()))? else {
        unreachable!()
    };
    let kp = k.polar(&o)?;
    let sp = sym.polar(&o)?;
    let uu = u.as_point();
    let h = kp.support(uu);
    let tol = 1e-7 * kp.diameter();
    let grid: Vec<f64> = (0..count).map(|j| h * (-1.0 + 2.0 * (j as f64 + 0.5) / count as f64)).collect();
    let mut violations = Vec::with_capacity(count);
    for &t in &grid {
        let (Some(s), Some(outer)) = (section_polygon(&kp, uu, t), section_polygon(&sp, uu, t)) else {
            violations.push(f64::NAN);
            continue;
        };
        let diff = s.minkowski_sum(&s.neg())?.scale(0.5);
        violations.push(outer.containment_violation(&diff));
    }
    let worst = violations.iter().cloned().filter(|v| v.is_finite()).fold(f64::NEG_INFINITY, f64::max);
    let failures = violations.iter().filter(|&&v| v > tol).count();
    Ok(ContainmentReport { grid, violations, worst, failures, vol_polar: kp.volume(), vol_polar_symmetral: sp.volume() })
}

#[derive(Debug, Clone, Serialize)]
pub struct FalseCentreReport {
    pub q_max: f64,
    pub m_at_max: f64,
    /// `(m, q)` for every scanned hyperplane.
    pub scan: Vec<(f64, f64)>,
    /// `(t, f(t))` with `f(t) = (1 - r(t)²)/t²`.
    pub f_profile: Vec<(f64, f64)>,
    pub f_spread: f64,
}

/// Hyperplane slopes `m ∈ (0, 1/4]` scanned by [`false_centre_scan`].
pub const FALSE_CENTRE_STEPS: usize = 64;
/// Nodes of each section meridian.
pub const SECTION_NODES: usize = 513;
/// Smallest `t` at which `f(t)` is evaluated.
pub const F_PROFILE_START: f64 = 0.05;

/// Normalises `C` to `h_C(u) = 1`, `r(0) = 1`; scans the sections by the
/// hyperplanes through `-u` and `(1-m)u + r(1-m)v`, and evaluates `f`.
pub fn false_centre_scan(c: &RevolutionBody) -> Result<FalseCentreReport> {
    let m = c.meridian();
    let (lo, hi) = m.domain();
    if !c.is_o_symmetric(1e-9 * (hi - lo)) {
        return Err(GeomError::Precondition("body is not o-symmetric".into()));
    }
    let r0 = m.radius(0.0);
    if !(hi > 0.0 && r0 > 0.0) {
        return Err(GeomError::Domain("normalisation failed".into()));
    }
    let merid = m.mapped(1.0 / hi, 0.0, 1.0 / r0);
    let body = c.with_meridian(merid.clone())?;
    let mut scan = Vec::with_capacity(FALSE_CENTRE_STEPS);
    for k in 1..=FALSE_CENTRE_STEPS {
        let mm = 0.25 * k as f64 / FALSE_CENTRE_STEPS as f64;
        let eta = merid.radius(1.0 - mm) / (2.0 - mm);
        let q = match body.oblique_section(eta, eta) {
            Some(s) => q_section(&s, SECTION_NODES)?.q,
            None => continue,
        };
        scan.push((mm, q));
    }
    let (m_at_max, q_max) = scan.iter().cloned().fold((0.0, 1.0), |a, b| if b.1 > a.1 { b } else { a });
    let smooth = match &merid {
        Meridian::Sampled(p) => Meridian::Sampled(p.smoothed()),
        other => other.clone(),
    };
    let ts: Vec<f64> = match &smooth {
        Meridian::Sampled(p) => p.t().iter().cloned().filter(|&t| t >= F_PROFILE_START && t < 1.0).collect(),
        _ => chebyshev_nodes(F_PROFILE_START, 1.0, 257).into_iter().filter(|&t| t < 1.0).collect(),
    };
    let f_profile: Vec<(f64, f64)> = ts.iter().map(|&t| (t, (1.0 - smooth.radius(t).powi(2)) / (t * t))).collect();
    let fmax = f_profile.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let fmin = f_profile.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    Ok(FalseCentreReport { q_max, m_at_max, scan, f_profile, f_spread: fmax - fmin })
}
