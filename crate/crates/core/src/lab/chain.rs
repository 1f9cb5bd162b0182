//! The volume-product chain `V(K)V(K^z) <= V(C)V(C^o) <= V(C̃)V(C̃^o) <= κ_n²`.

use serde::Serialize;

use crate::bodies::{Body, Hyperplane};
use crate::error::Result;
use crate::linalg::kappa;
use crate::polar::volume_product_report;
use crate::symmetrize::reduction::full_reduction;
use crate::symmetrize::steiner;

/// Relative slack allowed between consecutive chain values.
pub const CHAIN_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    /// `V(K)V(K^z)`, `V(C)V(C^o)`, `V(C̃)V(C̃^o)`, `κ_n²`.
    pub values: [f64; 4],
    pub steps_ok: [bool; 3],
    pub monotone: bool,
    pub branch: &'static str,
}

pub fn bs_chain_check(body: &Body) -> Result<ChainReport> {
    let n = body.dim();
    let p0 = volume_product_report(body)?.product;
    let (rep, c) = full_reduction(body)?;
    let p1 = c.volume() * c.polar_volume_at(0.0)?;
    let Body::Revolution(ct) = steiner(&Body::Revolution(c.clone()), &Hyperplane::through_origin(c.axis().clone()))? else {
        unreachable!()
    };
    let p2 = ct.volume() * ct.polar_volume_at(0.0)?;
    let values = [p0, p1, p2, kappa(n) * kappa(n)];
    let steps_ok = [0, 1, 2].map(|i| values[i] <= values[i + 1] * (1.0 + CHAIN_SLACK));
    Ok(ChainReport { values, steps_ok, monotone: steps_ok.iter().all(|&b| b), branch: rep.branch })
}
