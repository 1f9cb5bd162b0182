//! Affine surface area `Ω(K) = ∫_∂K κ^{1/(n+1)}` of bodies of revolution.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bodies::{Body, Meridian, RevolutionBody};
use crate::error::{GeomError, Result};
use crate::linalg::kappa;
use crate::polar::santalo_point;

/// Total number of angular nodes shared among the smooth pieces of a meridian.
pub const ASA_NODES: usize = 16384;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineRatios {
    pub omega: f64,
    /// `Ω^{n+1} / (κ_n² n^{n+1} V^{n-1})`.
    pub isoperimetric: f64,
    /// `Ω^{n+1} / (n^{n+1} V^n V(K^z))`.
    pub lutwak: f64,
}

/// Integrand of Ω in a parameter `s`, from the meridian point `(x, y)` and
/// its first and second derivatives in `s`. `y2_noise` bounds the rounding
/// error of the differenced `y2`; curvatures below the resulting floor are 0.
#[allow(clippy::too_many_arguments)]
fn density(n: usize, x1: f64, x2: f64, y: f64, y1: f64, y2: f64, y2_noise: f64, scale: f64) -> Result<f64> {
    let speed = (x1 * x1 + y1 * y1).sqrt();
    if speed == 0.0 || y <= 0.0 {
        return Ok(0.0);
    }
    let k1 = (y1 * x2 - y2 * x1) / speed.powi(3);
    let floor = 8.0 * y2_noise * x1.abs() / speed.powi(3);
    if k1 <= floor {
        if k1 < -floor && k1 * scale < -1e-8 {
            return Err(GeomError::invalid("asa.curvature", format!("negative curvature {k1:.3e}")));
        }
        return Ok(0.0);
    }
    let k2 = x1.abs() / (y * speed);
    let kappa_g = k1 * k2.powi(n as i32 - 2);
    Ok(kappa_g.powf(1.0 / (n + 1) as f64) * y.powi(n as i32 - 2) * speed)
}

pub fn affine_surface_area(body: &RevolutionBody) -> Result<f64> {
    let n = body.dim();
    let m = body.meridian();
    let (lo, hi) = m.domain();
    let scale = hi - lo;
    let eps = f64::EPSILON;
    let mut total = 0.0;
    match m {
        Meridian::Sampled(p) => {
            // Differences in the node index; a concave polygon has
            // non-negative discrete curvature at every node.
            let (t, r) = (p.t(), p.r());
            let noise = 4.0 * eps * r.iter().cloned().fold(0.0, f64::max);
            for j in 1..t.len() - 1 {
                let x1 = 0.5 * (t[j + 1] - t[j - 1]);
                let x2 = t[j + 1] - 2.0 * t[j] + t[j - 1];
                let y1 = 0.5 * (r[j + 1] - r[j - 1]);
                let y2 = r[j + 1] - 2.0 * r[j] + r[j - 1];
                total += density(n, x1, x2, r[j], y1, y2, noise, scale)?;
            }
        }
        _ => {
            let mut breaks = m.breakpoints();
            breaks.retain(|&b| b > lo && b < hi);
            breaks.insert(0, lo);
            breaks.push(hi);
            let pieces = breaks.len() - 1;
            let count = (ASA_NODES / pieces).max(256);
            // Midpoint rule in θ: at the poles κ^{1/(n+1)} ds need not vanish.
            let h = PI / count as f64;
            let d = 0.25 * h;
            for w in breaks.windows(2) {
                let (mid, half) = (0.5 * (w[0] + w[1]), 0.5 * (w[1] - w[0]));
                let y = |th: f64| m.radius(mid - half * th.cos());
                let ymax = (0..=16).map(|k| y(PI * k as f64 / 16.0)).fold(0.0, f64::max);
                let noise = 4.0 * eps * ymax / (d * d);
                let mut sum = 0.0;
                for j in 0..count {
                    let th = (j as f64 + 0.5) * h;
                    let (ym, y0, yp) = (y(th - d), y(th), y(th + d));
                    let y1 = (yp - ym) / (2.0 * d);
                    let y2 = (yp - 2.0 * y0 + ym) / (d * d);
                    sum += density(n, half * th.sin(), half * th.cos(), y0, y1, y2, noise, scale)?;
                }
                total += sum * h;
            }
        }
    }
    Ok((n - 1) as f64 * kappa(n - 1) * total)
}

pub fn affine_ratios(body: &Body) -> Result<AffineRatios> {
    let n = body.dim();
    let omega = match body {
        Body::Revolution(r) => affine_surface_area(r)?,
        _ => 0.0,
    };
    let v = body.volume();
    let vz = santalo_point(body)?.polar_volume;
    let nf = n as f64;
    let p = omega.powi(n as i32 + 1);
    Ok(AffineRatios {
        omega,
        isoperimetric: p / (kappa(n).powi(2) * nf.powi(n as i32 + 1) * v.powi(n as i32 - 1)),
        lutwak: p / (nf.powi(n as i32 + 1) * v.powi(n as i32) * vz),
    })
}
