//! Polar bodies, the Santaló point and volume products.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bodies::{from_p2, to_p2, Body, RevolutionBody};
use crate::error::{GeomError, Result};
use crate::linalg::{kappa, solve, Point};
use crate::quad::integrate_pieces;

/// Polar body `K^z = {x : ⟨x - z, y - z⟩ <= 1 for all y ∈ K}`.
pub fn polar(body: &Body, z: &Point) -> Result<Body> {
    body.check_dim(z.len())?;
    Ok(match body {
        Body::Polygon(p) => Body::Polygon(p.polar(&to_p2(z))?),
        Body::Polytope(p) => Body::Polytope(p.polar(z)?),
        Body::Revolution(r) => Body::Revolution(r.polar(z)?),
    })
}

/// `(V(K^z), centroid(K^z))`.
pub fn polar_volume_centroid(body: &Body, z: &Point) -> Result<(f64, Point)> {
    body.check_dim(z.len())?;
    match body {
        Body::Polygon(p) => {
            let q = p.polar(&to_p2(z))?;
            Ok((q.area(), from_p2(&q.centroid())))
        }
        Body::Polytope(p) => Ok(p.polar(z)?.volume_centroid()),
        Body::Revolution(r) => {
            let q = r.polar(z)?;
            Ok((q.volume(), q.centroid()))
        }
    }
}

/// Result of the Santaló point search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SantaloPoint {
    pub z: Vec<f64>,
    pub polar_volume: f64,
    /// `|centroid(K^z) - z|`.
    pub residual: f64,
    pub iterations: usize,
}

const MAX_ITER: usize = 200;

/// Minimiser of `z ↦ V(K^z)`, by damped Newton.
///
/// The gradient is exact, `∇V(K^z) = (n+1) V(K^z) (centroid(K^z) - z)`; the
/// Hessian is a central difference of the gradient. The returned point
/// carries the fixed-point certificate `|centroid(K^z) - z| <= 1e-6 · diam`.
pub fn santalo_point(body: &Body) -> Result<SantaloPoint> {
    if let Body::Revolution(r) = body {
        return santalo_axis(r);
    }
    let n = body.dim();
    let diam = body.diameter();
    let grad = |z: &Point| -> Result<(f64, Point, f64)> {
        let (v, c) = polar_volume_centroid(body, z)?;
        let d = &c - z;
        let res = d.norm();
        Ok((v, d * ((n + 1) as f64 * v), res))
    };
    let mut z = body.centroid();
    let (mut v, mut g, mut res) = grad(&z)?;
    for it in 0..MAX_ITER {
        if res <= 1e-13 * diam {
            return Ok(SantaloPoint { z: z.as_slice().to_vec(), polar_volume: v, residual: res, iterations: it });
        }
        let mut h = 1e-5 * diam;
        let hess = loop {
            let mut m = DMatrix::zeros(n, n);
            let mut ok = true;
            for k in 0..n {
                let mut e = Point::zeros(n);
                e[k] = h;
                match (grad(&(&z + &e)), grad(&(&z - &e))) {
                    (Ok((_, gp, _)), Ok((_, gm, _))) => m.set_column(k, &((gp - gm) / (2.0 * h))),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                break (&m + m.transpose()) * 0.5;
            }
            h *= 0.5;
            if h < 1e-12 * diam {
                return Err(GeomError::Convergence { iterations: it, best: z.as_slice().to_vec(), residual: res });
            }
        };
        let mut step = solve(hess, &(-&g)).filter(|s| s.dot(&g) < 0.0).unwrap_or_else(|| -&g * (res / g.norm()));
        let mut accepted = false;
        for _ in 0..60 {
            let cand = &z + &step;
            if let Ok((vc, gc, rc)) = grad(&cand) {
                if vc < v || (vc <= v * (1.0 + 1e-14) && rc < res) {
                    z = cand;
                    (v, g, res) = (vc, gc, rc);
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if res <= 1e-6 * diam {
        return Ok(SantaloPoint { z: z.as_slice().to_vec(), polar_volume: v, residual: res, iterations: MAX_ITER });
    }
    Err(GeomError::Convergence { iterations: MAX_ITER, best: z.as_slice().to_vec(), residual: res })
}

/// Santaló point of a body of revolution: by symmetry it lies on the axis,
/// so the search is one-dimensional.
fn santalo_axis(body: &RevolutionBody) -> Result<SantaloPoint> {
    let n = body.dim();
    let u = body.axis().as_point().clone();
    let (lo, hi) = body.meridian().domain();
    let diam = hi - lo;
    let eval = |s: f64| -> Result<(f64, f64)> {
        let q = body.polar(&(&u * s))?;
        let v = q.volume();
        Ok((v, q.axial_centroid() - s))
    };
    let mut s = body.axial_centroid();
    let (mut v, mut d) = eval(s)?;
    for it in 0..MAX_ITER {
        if d.abs() <= 1e-13 * diam {
            return Ok(SantaloPoint { z: (&u * s).as_slice().to_vec(), polar_volume: v, residual: d.abs(), iterations: it });
        }
        let g = (n + 1) as f64 * v * d;
        let mut h = 1e-5 * diam;
        let curv = loop {
            if let (Ok((vp, dp)), Ok((vm, dm))) = (eval(s + h), eval(s - h)) {
                break (n + 1) as f64 * (vp * dp - vm * dm) / (2.0 * h);
            }
            h *= 0.5;
            if h < 1e-12 * diam {
                return Err(GeomError::Convergence { iterations: it, best: (&u * s).as_slice().to_vec(), residual: d.abs() });
            }
        };
        let mut step = if curv > 0.0 { -g / curv } else { -d };
        let mut accepted = false;
        for _ in 0..60 {
            if let Ok((vc, dc)) = eval(s + step) {
                if vc < v || (vc <= v * (1.0 + 1e-14) && dc.abs() < d.abs()) {
                    s += step;
                    (v, d) = (vc, dc);
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if d.abs() <= 1e-6 * diam {
        return Ok(SantaloPoint { z: (&u * s).as_slice().to_vec(), polar_volume: v, residual: d.abs(), iterations: MAX_ITER });
    }
    Err(GeomError::Convergence { iterations: MAX_ITER, best: (&u * s).as_slice().to_vec(), residual: d.abs() })
}

/// Volume product at the Santaló point, with the classical bounds checked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductReport {
    pub z: Vec<f64>,
    pub vol_k: f64,
    pub vol_polar: f64,
    pub product: f64,
    /// `1 - product / κ_n²`.
    pub deficit: f64,
    pub o_symmetric: bool,
    /// `product <= κ_n² (1 + 1e-7)`.
    pub santalo_ok: bool,
    /// `product > 2^{-n} κ_n²` (only asserted for o-symmetric bodies).
    pub kuperberg_symmetric_ok: bool,
    /// `product > 4^{-n} κ_n²`.
    pub kuperberg_general_ok: bool,
    pub certificate_residual: f64,
}

pub fn volume_product_report(body: &Body) -> Result<ProductReport> {
    let n = body.dim();
    let sp = santalo_point(body)?;
    let vol_k = body.volume();
    let product = vol_k * sp.polar_volume;
    let k2 = kappa(n) * kappa(n);
    let o_symmetric = body.is_o_symmetric(1e-9 * body.diameter());
    let deficit = 1.0 - product / k2;
    Ok(ProductReport {
        z: sp.z,
        vol_k,
        vol_polar: sp.polar_volume,
        product,
        deficit,
        o_symmetric,
        santalo_ok: product <= k2 * (1.0 + 1e-7),
        kuperberg_symmetric_ok: !o_symmetric || product > k2 / 2f64.powi(n as i32),
        kuperberg_general_ok: product > k2 / 4f64.powi(n as i32),
        certificate_residual: sp.residual,
    })
}

/// Mixed volume `V₁(K, M) = (1/n) ∫_{∂K} h_M(ν)`, exact over the facets of a
/// piecewise-linear `K`; for a body of revolution `K` the boundary integral
/// is taken along the meridian (`M` must then share the axis or be rotation
/// invariant about it for the meridian reduction to apply).
pub fn mixed_volume_v1(k: &Body, m: &Body) -> Result<f64> {
    k.check_dim(m.dim())?;
    let n = k.dim() as f64;
    match k {
        Body::Polygon(p) => Ok(p.edges_with_normals().iter().map(|(nu, len)| m.support(&from_p2(nu)) * len).sum::<f64>() / n),
        Body::Polytope(p) => Ok(p
            .facets()
            .iter()
            .zip(p.facet_areas())
            .map(|(f, a)| m.support(&f.normal) * a)
            .sum::<f64>()
            / n),
        Body::Revolution(r) => {
            let Body::Revolution(mr) = m else {
                return Err(GeomError::Representation("V₁ of a body of revolution needs a revolution partner".into()));
            };
            if mr.axis() != r.axis() {
                return Err(GeomError::Representation("V₁ of bodies of revolution needs a common axis".into()));
            }
            Ok(revolution_v1(r, mr))
        }
    }
}

fn revolution_v1(k: &RevolutionBody, m: &RevolutionBody) -> f64 {
    let dim = k.dim();
    let mer = k.meridian();
    let hm = m.meridian();
    let (lo, hi) = mer.domain();
    // Lateral surface: dS = (n-1) κ_{n-1} r^{n-2} sqrt(1+r'²) dt, and
    // sqrt(1+r'²) h_M(ν) = h_M(-r', 1) by homogeneity.
    let lateral = |t: f64| {
        let r = mer.radius(t);
        if r <= 0.0 {
            return 0.0;
        }
        let d = 0.5 * (mer.slope(t, true) + mer.slope(t, false));
        if !d.is_finite() {
            return 0.0;
        }
        r.powi(dim as i32 - 2) * hm.support(-d, 1.0)
    };
    let side = (dim - 1) as f64 * kappa(dim - 1) * integrate_pieces(&lateral, &mer.breakpoints(), 1e-11);
    let cap = |t: f64, sign: f64| kappa(dim - 1) * mer.radius(t).powi(dim as i32 - 1) * hm.support(sign, 0.0);
    (side + cap(hi, 1.0) + cap(lo, -1.0)) / dim as f64
}

/// Upper bound for the geominimal surface area from the candidate
/// `M = K^z - z` at the Santaló point `z`:
/// `κ_n^{-1/n} n V₁(K - z, K - z) V(K^z)^{1/n}`.
pub fn geominimal_upper(body: &Body) -> Result<f64> {
    let n = body.dim();
    let sp = santalo_point(body)?;
    let z = Point::from_vec(sp.z.clone());
    let centred = body.translate(&(-&z))?;
    let v1 = mixed_volume_v1(&centred, &centred)?;
    Ok(kappa(n).powf(-1.0 / n as f64) * n as f64 * v1 * sp.polar_volume.powf(1.0 / n as f64))
}

/// `κ_n^{1/n} n V(K)^{(n-1)/n}`: the ellipsoid value of the geominimal surface area.
pub fn geominimal_ellipsoid_bound(body: &Body) -> f64 {
    let n = body.dim() as f64;
    kappa(body.dim()).powf(1.0 / n) * n * body.volume().powf((n - 1.0) / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{Polygon, Polytope};
    use crate::linalg::point;

    #[test]
    fn square_product_is_eight() {
        let sq = Body::Polygon(Polygon::from_coords(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap());
        let r = volume_product_report(&sq).unwrap();
        assert!((r.product - 8.0).abs() < 1e-12);
        assert!(r.kuperberg_symmetric_ok && r.kuperberg_general_ok && r.santalo_ok);
    }

    #[test]
    fn triangle_santalo_point_is_barycentre() {
        let t = Body::Polygon(Polygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap());
        let sp = santalo_point(&t).unwrap();
        assert!((sp.z[0] - 1.0 / 3.0).abs() < 1e-9 && (sp.z[1] - 1.0 / 3.0).abs() < 1e-9);
        // Triangle product: 27/4 at the barycentre.
        assert!((t.volume() * sp.polar_volume - 6.75).abs() < 1e-9);
    }

    #[test]
    fn shifted_ball_product() {
        let b = RevolutionBody::ball(3, 2.0).unwrap().translate_axis(0.7);
        let r = volume_product_report(&Body::Revolution(b)).unwrap();
        assert!(r.deficit.abs() < 1e-9, "deficit {}", r.deficit);
        assert!((r.z[0] - 0.7).abs() < 1e-9);
    }

    #[test]
    fn v1_of_cube() {
        let cube = Body::Polytope(Polytope::cube(3));
        assert!((mixed_volume_v1(&cube, &cube).unwrap() - 8.0).abs() < 1e-12);
        let ball = Body::Revolution(RevolutionBody::ball(3, 1.0).unwrap());
        assert!((mixed_volume_v1(&cube, &ball).unwrap() - 8.0).abs() < 1e-12);
        let ball3 = RevolutionBody::ball(3, 1.0).unwrap();
        let v = revolution_v1(&ball3, &ball3);
        assert!((v - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-9, "{v}");
    }

    #[test]
    fn polar_of_translated_square() {
        let sq = Body::Polygon(Polygon::from_coords(&[[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]).unwrap());
        let z = point(&[1.0, 1.0]);
        let p = polar(&sq, &z).unwrap();
        assert!((p.volume() - 2.0).abs() < 1e-14);
        assert!(polar(&sq, &point(&[0.0, 1.0])).is_err());
    }
}
