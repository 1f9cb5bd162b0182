//! Body families and seeded random generators.

use std::sync::Arc;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::bodies::{Body, Direction, Meridian, Polygon, Polytope, Profile, RevolutionBody, P2};
use crate::directions::random_direction;
use crate::error::{GeomError, Result};
use crate::linalg::{kappa, Point};
use crate::quad::{bisect, integrate_cos};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    CapsCutBall { n: usize, eps: Vec<f64> },
    LpRevolution { n: usize, p: Vec<f64> },
    RandomPolytope { n: usize, count: usize, seed: u64 },
    Ellipsoid { n: usize, ratios: Vec<f64> },
}

#[derive(Debug, Clone)]
pub struct Member {
    pub param: f64,
    pub body: Body,
}

impl FamilySpec {
    /// Family from its CLI name and a parameter list.
    pub fn from_name(name: &str, n: usize, params: Vec<f64>, seed: u64) -> Result<Self> {
        Ok(match name {
            "caps" | "caps_cut_ball" => FamilySpec::CapsCutBall { n, eps: params },
            "lp" | "lp_revolution" => FamilySpec::LpRevolution { n, p: params },
            "random" | "random_polytope" => FamilySpec::RandomPolytope { n, count: params.len().max(1), seed },
            "ellipsoid" => FamilySpec::Ellipsoid { n, ratios: params },
            other => return Err(GeomError::Precondition(format!("unknown family `{other}`"))),
        })
    }
}

/// Volume of the cap `{x ∈ Bⁿ : x₁ >= 1 - h}`.
pub fn cap_volume(n: usize, h: f64) -> f64 {
    if h <= 0.0 {
        return 0.0;
    }
    let e = (n - 1) as f64 / 2.0;
    kappa(n - 1) * integrate_cos(&|t: f64| (1.0 - t * t).max(0.0).powf(e), 1.0 - h, 1.0, 1e-14)
}

/// Height of the cap of volume `eps`.
pub fn cap_height(n: usize, eps: f64) -> Result<f64> {
    if !(0.0..0.5 * kappa(n)).contains(&eps) {
        return Err(GeomError::Domain(format!("cap volume {eps} outside [0, κ_n/2)")));
    }
    if eps == 0.0 {
        return Ok(0.0);
    }
    Ok(bisect(&|h| cap_volume(n, h) - eps, 0.0, 1.0, 1e-16))
}

/// Unit ball with two opposite caps of volume `eps` cut off along `e₁`.
pub fn caps_cut_ball(n: usize, eps: f64) -> Result<RevolutionBody> {
    let h = cap_height(n, eps)?;
    let ball = Meridian::ball(1.0);
    let meridian = if h == 0.0 { ball } else { Meridian::Truncated { inner: Arc::new(ball), lo: h - 1.0, hi: 1.0 - h } };
    RevolutionBody::new(Direction::basis(n, 0)?, meridian)
}

pub fn lp_revolution(n: usize, p: f64) -> Result<RevolutionBody> {
    if (p - 2.0).abs() < 1e-15 {
        return RevolutionBody::ball(n, 1.0);
    }
    RevolutionBody::new(Direction::basis(n, 0)?, Meridian::Lp { center: 0.0, half_len: 1.0, radius: 1.0, p })
}

/// Hull of `m` Gaussian points, resampled until full-dimensional.
pub fn random_polytope<R: Rng>(n: usize, m: usize, rng: &mut R) -> Polytope {
    loop {
        let pts: Vec<Point> = (0..m).map(|_| Point::from_fn(n, |_, _| StandardNormal.sample(rng))).collect();
        if let Ok(p) = Polytope::from_vertices(pts) {
            return p;
        }
    }
}

/// Hull of `±p₁, …, ±p_m` for Gaussian `pᵢ`.
pub fn random_symmetric_polytope<R: Rng>(n: usize, m: usize, rng: &mut R) -> Polytope {
    loop {
        let half: Vec<Point> = (0..m).map(|_| Point::from_fn(n, |_, _| StandardNormal.sample(rng))).collect();
        let pts = half.iter().flat_map(|p| [p.clone(), -p]).collect();
        if let Ok(p) = Polytope::from_vertices(pts) {
            return p;
        }
    }
}

/// Hull of `m` Gaussian points in the plane, optionally stretched.
pub fn random_polygon<R: Rng>(m: usize, rng: &mut R) -> Polygon {
    loop {
        let sx = rng.random_range(0.3..3.0);
        let pts: Vec<P2> = (0..m)
            .map(|_| {
                let x: f64 = StandardNormal.sample(rng);
                let y: f64 = StandardNormal.sample(rng);
                P2::new(sx * x, y)
            })
            .collect();
        if let Ok(p) = Polygon::hull(&pts) {
            if p.len() >= 3 {
                return p;
            }
        }
    }
}

/// Random positive concave profile on `[-1, 1]`: minimum of a few random
/// affine functions and a random concave quadratic, shifted positive.
pub fn random_concave_profile<R: Rng>(nodes: usize, rng: &mut R) -> Result<Profile> {
    let t: Vec<f64> = (0..nodes).map(|k| -1.0 + 2.0 * k as f64 / (nodes - 1) as f64).collect();
    let lines: Vec<(f64, f64)> = (0..rng.random_range(1..5)).map(|_| (rng.random_range(-1.0..1.0), rng.random_range(1.0..2.0))).collect();
    let curv = rng.random_range(0.0..1.0);
    let tilt = rng.random_range(-0.5..0.5);
    let r: Vec<f64> = t
        .iter()
        .map(|&x| {
            let l = lines.iter().map(|(a, b)| a * x + b).fold(f64::INFINITY, f64::min);
            l.min(1.5 + tilt * x - curv * x * x) + 0.1
        })
        .collect();
    Profile::upper_hull(t.into_iter().zip(r).collect())
}

pub fn make_family(spec: &FamilySpec) -> Result<Vec<Member>> {
    let mut out = Vec::new();
    match spec {
        FamilySpec::CapsCutBall { n, eps } => {
            for &e in eps {
                out.push(Member { param: e, body: Body::Revolution(caps_cut_ball(*n, e)?) });
            }
        }
        FamilySpec::LpRevolution { n, p } => {
            for &q in p {
                out.push(Member { param: q, body: Body::Revolution(lp_revolution(*n, q)?) });
            }
        }
        FamilySpec::RandomPolytope { n, count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for k in 0..*count {
                let m = rng.random_range(n + 1..n + 9);
                out.push(Member { param: k as f64, body: Body::Polytope(random_polytope(*n, m, &mut rng)) });
            }
        }
        FamilySpec::Ellipsoid { n, ratios } => {
            for &a in ratios {
                out.push(Member { param: a, body: Body::Revolution(RevolutionBody::ellipsoid(Direction::basis(*n, 0)?, a, 1.0)?) });
            }
        }
    }
    out.sort_by(|a, b| a.param.partial_cmp(&b.param).unwrap());
    Ok(out)
}

/// A random direction as a [`Direction`].
pub fn random_unit<R: Rng>(n: usize, rng: &mut R) -> Direction {
    Direction::normalized(random_direction(n, rng)).expect("nonzero direction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_volume() {
        let b = caps_cut_ball(3, 0.05).unwrap();
        assert!((b.volume() - (kappa(3) - 0.1)).abs() < 1e-10);
        assert!(b.is_o_symmetric(1e-14));
        assert!((caps_cut_ball(3, 0.0).unwrap().volume() - kappa(3)).abs() < 1e-12);
        // A cap of height 1 is half the ball.
        assert!((cap_volume(4, 1.0) - 0.5 * kappa(4)).abs() < 1e-12);
    }

    #[test]
    fn families_are_deterministic() {
        let spec = FamilySpec::RandomPolytope { n: 3, count: 3, seed: 5 };
        let a = make_family(&spec).unwrap();
        let b = make_family(&spec).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.body.volume(), y.body.volume());
        }
        assert!(FamilySpec::from_name("torus", 3, vec![], 0).is_err());
    }
}
