//! Schwarz rounding: every section orthogonal to `u` becomes a centred ball
//! of the same `(n-1)`-volume.

use std::sync::Arc;

use rayon::prelude::*;

use crate::bodies::{Body, Direction, Meridian, Profile, RevolutionBody, SectionProfile};
use crate::error::{GeomError, Result};
use crate::linalg::{complement_basis, kappa};
use crate::quad::chebyshev_nodes;

/// Grid on which the concavity of the rounded meridian is checked (and on
/// which non-polytopal inputs are sampled).
pub const SCHWARZ_GRID: usize = 513;

pub fn schwarz_round(body: &Body, u: &Direction) -> Result<RevolutionBody> {
    body.check_dim(u.dim())?;
    let n = body.dim();
    let meridian = match body {
        Body::Revolution(r) if (r.axis().as_point().dot(u.as_point()).abs() - 1.0).abs() < 1e-12 => {
            let flip = r.axis().as_point().dot(u.as_point()).signum();
            r.meridian().mapped(flip, 0.0, 1.0)
        }
        Body::Polygon(_) | Body::Polytope(_) => {
            // Section volume is a polynomial of degree n-1 between vertex heights.
            let mut breaks: Vec<f64> = match body {
                Body::Polygon(p) => p.vertices().iter().map(|v| v.x * u.as_point()[0] + v.y * u.as_point()[1]).collect(),
                Body::Polytope(p) => p.vertices().iter().map(|v| v.dot(u.as_point())).collect(),
                Body::Revolution(_) => unreachable!(),
            };
            breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let span = breaks[breaks.len() - 1] - breaks[0];
            breaks.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * span);
            let basis = complement_basis(u.as_point());
            let area = |t: f64| match body {
                Body::Polytope(p) => p.section_volume(u.as_point(), t, &basis),
                _ => body.section(u, t).map(|s| s.measure()).unwrap_or(0.0),
            };
            Meridian::Sections(Arc::new(SectionProfile::from_area_fn(n, breaks, area)))
        }
        Body::Revolution(_) => {
            let lo = -body.support(&-u.as_point());
            let hi = body.support(u.as_point());
            let t = chebyshev_nodes(lo, hi, SCHWARZ_GRID);
            let r: Vec<f64> = t
                .par_iter()
                .map(|&x| {
                    let a = body.section(u, x).map(|s| s.measure()).unwrap_or(0.0);
                    section_radius(n, a)
                })
                .collect();
            Meridian::Sampled(Profile::upper_hull(t.into_iter().zip(r).collect())?)
        }
    };
    check_concavity(&meridian, n)?;
    RevolutionBody::new(u.clone(), meridian)
}

/// Radius of the `(n-1)`-ball of volume `a`.
pub fn section_radius(n: usize, a: f64) -> f64 {
    if n == 2 {
        0.5 * a
    } else {
        (a.max(0.0) / kappa(n - 1)).powf(1.0 / (n - 1) as f64)
    }
}

/// Radius error caused by an absolute error `da` in the section volume `a`.
fn radius_noise(n: usize, r: f64, da: f64) -> f64 {
    if n == 2 {
        return 0.5 * da;
    }
    let a = kappa(n - 1) * r.powi(n as i32 - 1);
    let floor = (da / kappa(n - 1)).powf(1.0 / (n - 1) as f64);
    if a <= da {
        floor
    } else {
        (r * da / ((n - 1) as f64 * a)).min(floor)
    }
}

/// Fails when a grid node lies below the chord of its neighbours by more than
/// `1e-9 rmax` plus the radius error of a relative section-volume error `1e-12`.
fn check_concavity(m: &Meridian, n: usize) -> Result<()> {
    let (lo, hi) = m.domain();
    let t = chebyshev_nodes(lo, hi, SCHWARZ_GRID);
    let r: Vec<f64> = t.iter().map(|&x| m.radius(x)).collect();
    let rmax = r.iter().cloned().fold(0.0, f64::max);
    let da = 1e-12 * if n == 2 { 2.0 * rmax } else { kappa(n - 1) * rmax.powi(n as i32 - 1) };
    for j in 1..t.len() - 1 {
        let w = (t[j] - t[j - 1]) / (t[j + 1] - t[j - 1]);
        let chord = r[j - 1] * (1.0 - w) + r[j + 1] * w;
        let noise = (j - 1..=j + 1).map(|i| radius_noise(n, r[i], da)).fold(0.0, f64::max);
        if chord - r[j] > 1e-9 * rmax + 2.0 * noise {
            return Err(GeomError::invalid("schwarz.concavity", format!("meridian dips {:.3e} below its chord at t = {}", chord - r[j], t[j])));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::Polytope;

    #[test]
    fn cube_rounds_to_cylinder() {
        let cube = Body::Polytope(Polytope::cube(3));
        let c = schwarz_round(&cube, &Direction::basis(3, 0).unwrap()).unwrap();
        assert!((c.volume() - 8.0).abs() < 1e-12);
        assert!((c.meridian().radius(0.3) - 2.0 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn oblique_cube_volume() {
        let cube = Body::Polytope(Polytope::cube(3));
        let u = Direction::normalized(crate::linalg::point(&[1.0, 1.0, 1.0])).unwrap();
        let c = schwarz_round(&cube, &u).unwrap();
        assert!((c.volume() - 8.0).abs() < 1e-11, "{}", c.volume());
    }

    #[test]
    fn ball_about_other_axis() {
        let b = Body::Revolution(RevolutionBody::ball(3, 1.0).unwrap());
        let c = schwarz_round(&b, &Direction::basis(3, 2).unwrap()).unwrap();
        assert!((c.volume() - b.volume()).abs() < 1e-4 * b.volume());
    }
}
