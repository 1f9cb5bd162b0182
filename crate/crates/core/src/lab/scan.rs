//! Stability scans: volume-product deficit against distance to the ball.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bodies::Body;
use crate::error::Result;
use crate::lab::families::Member;
use crate::lab::sections::false_centre_scan;
use crate::measures::bm::bm_distance_ball;
use crate::polar::volume_product_report;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityRecord {
    pub param: f64,
    pub deficit: f64,
    pub bm_minus_1: f64,
    /// Largest section asymmetry from the false-centre scan (NaN unless a body of revolution).
    pub q_max: f64,
    pub seconds: f64,
}

/// Deficit window of the exponent fit.
pub const FIT_WINDOW: (f64, f64) = (1e-4, 1e-2);

/// One record per member, sorted by parameter. `timing` fills the runtime column.
pub fn stability_scan(members: &[Member], timing: bool) -> Result<(Vec<StabilityRecord>, Option<f64>)> {
    let mut records = members
        .par_iter()
        .map(|m| {
            let start = Instant::now();
            let product = volume_product_report(&m.body)?;
            let bm = bm_distance_ball(&m.body)?;
            let q_max = match &m.body {
                Body::Revolution(r) => false_centre_scan(r)?.q_max,
                _ => f64::NAN,
            };
            let seconds = if timing { start.elapsed().as_secs_f64() } else { 0.0 };
            Ok(StabilityRecord { param: m.param, deficit: product.deficit, bm_minus_1: bm - 1.0, q_max, seconds })
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.param.partial_cmp(&b.param).unwrap());
    let slope = fit_exponent(&records);
    Ok((records, slope))
}

/// Least-squares slope of `log(bm - 1)` against `log(deficit)` over the fit
/// window, using records where both exceed `1e-6`; `None` below three points.
pub fn fit_exponent(records: &[StabilityRecord]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.deficit >= FIT_WINDOW.0 && r.deficit <= FIT_WINDOW.1 && r.deficit > 1e-6 && r.bm_minus_1 > 1e-6)
        .map(|r| (r.deficit.ln(), r.bm_minus_1.ln()))
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `a:b:geometric:k` or `a:b:linear:k`, or a comma-separated list.
pub fn parse_range(spec: &str) -> std::result::Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() == 4 {
        let a: f64 = parts[0].parse().map_err(|_| format!("bad start `{}`", parts[0]))?;
        let b: f64 = parts[1].parse().map_err(|_| format!("bad end `{}`", parts[1]))?;
        let k: usize = parts[3].parse().map_err(|_| format!("bad count `{}`", parts[3]))?;
        if k < 2 {
            return Ok(vec![a]);
        }
        let step = |j: usize| j as f64 / (k - 1) as f64;
        return match parts[2] {
            "geometric" if a > 0.0 && b > 0.0 => Ok((0..k).map(|j| a * (b / a).powf(step(j))).collect()),
            "linear" => Ok((0..k).map(|j| a + (b - a) * step(j)).collect()),
            other => Err(format!("unknown spacing `{other}`")),
        };
    }
    spec.split(',').map(|s| s.trim().parse::<f64>().map_err(|_| format!("bad number `{s}`"))).collect()
}
