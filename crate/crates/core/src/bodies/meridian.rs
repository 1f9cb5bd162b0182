//! Meridian radius functions `r(t)` of bodies of revolution.
//!
//! A body of revolution with axis `u` is `{t u + y : y ⊥ u, |y| <= r(t)}`;
//! convexity of the body is equivalent to concavity of `r`. Closed-form
//! meridians are kept symbolic so volumes and polar volumes are exact up to
//! quadrature error; everything else is a validated piecewise-linear
//! [`Profile`].

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::linalg::kappa;
use crate::quad::{chebyshev_nodes, golden_max, grid_golden_max, integrate_pieces};

/// Relative quadrature tolerance used for meridian integrals.
pub const QUAD_TOL: f64 = 1e-12;

/// Sampled concave meridian `r(t)` on an increasing grid, interpolated linearly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    t: Vec<f64>,
    r: Vec<f64>,
}

impl Profile {
    /// Validates grid monotonicity, non-negativity and discrete concavity
    /// (turning sine at every node at most `1e-12`).
    pub fn new(t: Vec<f64>, r: Vec<f64>) -> Result<Self> {
        if t.len() != r.len() {
            return Err(GeomError::invalid("profile.lengths", format!("{} nodes, {} radii", t.len(), r.len())));
        }
        if t.len() < 2 {
            return Err(GeomError::invalid("profile.nodes", "fewer than two nodes"));
        }
        if t.iter().chain(&r).any(|v| !v.is_finite()) {
            return Err(GeomError::invalid("profile.finite", "non-finite value"));
        }
        if let Some(j) = t.windows(2).position(|w| w[1] <= w[0]) {
            return Err(GeomError::invalid("profile.increasing_grid", format!("t[{}] >= t[{}]", j, j + 1)));
        }
        if let Some(j) = r.iter().position(|&v| v < 0.0) {
            return Err(GeomError::invalid("profile.nonnegative", format!("r[{j}] = {}", r[j])));
        }
        for j in 1..t.len() - 1 {
            let (ax, ay) = (t[j] - t[j - 1], r[j] - r[j - 1]);
            let (bx, by) = (t[j + 1] - t[j], r[j + 1] - r[j]);
            let turn = ax * by - ay * bx;
            let scale = (ax * ax + ay * ay).sqrt() * (bx * bx + by * by).sqrt();
            if turn > 1e-12 * scale {
                return Err(GeomError::invalid("profile.concavity", format!("convex turn at node {j}")));
            }
        }
        if r.iter().all(|&v| v == 0.0) {
            return Err(GeomError::invalid("profile.positive_interior", "radius vanishes identically"));
        }
        Ok(Self { t, r })
    }

    /// Concave majorant-free cleanup: the upper hull of the given points,
    /// clipped to `r >= 0`. Used for profiles assembled from exact boundary
    /// points, where rounding can create spurious tiny convex turns.
    pub fn upper_hull(mut points: Vec<(f64, f64)>) -> Result<Self> {
        points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(b.1.partial_cmp(&a.1).unwrap()));
        points.dedup_by(|a, b| a.0 == b.0);
        let mut hull: Vec<(f64, f64)> = Vec::with_capacity(points.len());
        for p in points {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                let turn = (b.0 - a.0) * (p.1 - b.1) - (b.1 - a.1) * (p.0 - b.0);
                if turn >= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let (t, r): (Vec<f64>, Vec<f64>) = hull.into_iter().map(|(t, r)| (t, r.max(0.0))).unzip();
        Self::new(t, r)
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn r(&self) -> &[f64] {
        &self.r
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.t[0], self.t[self.t.len() - 1])
    }

    /// Linear interpolation; zero outside the grid.
    pub fn eval(&self, x: f64) -> f64 {
        let (lo, hi) = self.domain();
        if x < lo || x > hi {
            return 0.0;
        }
        let j = match self.t.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(j) => return self.r[j],
            Err(j) => j,
        };
        let (t0, t1) = (self.t[j - 1], self.t[j]);
        let w = (x - t0) / (t1 - t0);
        self.r[j - 1] * (1.0 - w) + self.r[j] * w
    }

    /// `r(t) = r(-t)` on the grid, within `tol`.
    pub fn is_even(&self, tol: f64) -> bool {
        let (lo, hi) = self.domain();
        (lo + hi).abs() <= tol && self.t.iter().all(|&x| (self.eval(x) - self.eval(-x)).abs() <= tol)
    }

    /// All interior nodes carry positive radius.
    pub fn is_positive_interior(&self) -> bool {
        self.r[1..self.r.len() - 1].iter().all(|&v| v > 0.0)
    }

    /// Three-point moving average of the interior radii (end values kept).
    pub fn smoothed(&self) -> Self {
        let m = self.r.len();
        let mut r = self.r.clone();
        for j in 1..m - 1 {
            r[j] = (self.r[j - 1] + self.r[j] + self.r[j + 1]) / 3.0;
        }
        Self { t: self.t.clone(), r }
    }

    fn map(&self, scale_t: f64, shift_t: f64, scale_r: f64) -> Self {
        let mut pts: Vec<(f64, f64)> = self.t.iter().zip(&self.r).map(|(&t, &r)| (scale_t * t + shift_t, scale_r * r)).collect();
        if scale_t < 0.0 {
            pts.reverse();
        }
        let (t, r) = pts.into_iter().unzip();
        Self { t, r }
    }

    /// Exact polar of the planar region `{(t, s) : |s| <= r(t)}` about the origin,
    /// returned as the meridian of the polar body.
    fn polar(&self) -> Result<Self> {
        let (lo, hi) = self.domain();
        if !(lo < 0.0 && hi > 0.0 && self.eval(0.0) > 0.0) {
            return Err(GeomError::Domain("polar centre is not interior to the meridian".into()));
        }
        // Upper boundary chain of the region, including the flat end faces.
        let mut chain: Vec<(f64, f64)> = Vec::with_capacity(self.t.len() + 2);
        chain.push((lo, 0.0));
        chain.extend(self.t.iter().zip(&self.r).map(|(&t, &r)| (t, r)));
        chain.push((hi, 0.0));
        let mut pts = Vec::with_capacity(chain.len());
        for w in chain.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (ex, ey) = (b.0 - a.0, b.1 - a.1);
            if ex == 0.0 && ey == 0.0 {
                continue;
            }
            // Clockwise traversal of the upper chain: outward normal is (-ey, ex).
            let (nx, ny) = (-ey, ex);
            let off = nx * a.0 + ny * a.1;
            if off <= 0.0 {
                return Err(GeomError::Domain("polar centre is on the meridian boundary".into()));
            }
            pts.push((nx / off, ny / off));
        }
        Self::upper_hull(pts)
    }

    /// `∫ f(t, r(t)) dt` by 5-point Gauss-Legendre on each linear piece,
    /// exact for integrands polynomial of degree <= 9 in `(t, r)`.
    fn integrate<F: Fn(f64, f64) -> f64>(&self, f: &F) -> f64 {
        const X: [f64; 5] = [0.0, -0.538_469_310_105_683_1, 0.538_469_310_105_683_1, -0.906_179_845_938_664, 0.906_179_845_938_664];
        const W: [f64; 5] = [0.568_888_888_888_888_9, 0.478_628_670_499_366_5, 0.478_628_670_499_366_5, 0.236_926_885_056_189_1, 0.236_926_885_056_189_1];
        let mut acc = 0.0;
        for j in 0..self.t.len() - 1 {
            let (t0, t1, r0, r1) = (self.t[j], self.t[j + 1], self.r[j], self.r[j + 1]);
            let half = 0.5 * (t1 - t0);
            let mut piece = 0.0;
            for k in 0..5 {
                let w = 0.5 * (1.0 + X[k]);
                piece += W[k] * f(t0 + w * (t1 - t0), r0 + w * (r1 - r0));
            }
            acc += piece * half;
        }
        acc
    }
}

/// Schwarz meridian of a polytope: `r(t) = (A(t)/κ_{n-1})^{1/(n-1)}` where the
/// section volume `A` is a polynomial of degree `n-1` between consecutive
/// vertex heights, stored by its values at Chebyshev nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionProfile {
    dim: usize,
    breaks: Vec<f64>,
    nodes: Vec<Vec<f64>>,
    values: Vec<Vec<f64>>,
}

impl SectionProfile {
    /// Samples `area` at `dim` interior Chebyshev-Gauss nodes of every
    /// interval between consecutive `breaks` (sorted, distinct).
    pub fn from_area_fn<F: Fn(f64) -> f64 + Sync>(dim: usize, breaks: Vec<f64>, area: F) -> Self {
        let k = dim; // polynomial degree dim-1 needs dim nodes
        let per_interval: Vec<(Vec<f64>, Vec<f64>)> = breaks
            .par_windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                let nodes: Vec<f64> = (0..k)
                    .map(|j| {
                        let c = (std::f64::consts::PI * (2 * j + 1) as f64 / (2 * k) as f64).cos();
                        0.5 * (a + b) - 0.5 * (b - a) * c
                    })
                    .collect();
                let values = nodes.iter().map(|&x| area(x).max(0.0)).collect();
                (nodes, values)
            })
            .collect();
        let (nodes, values) = per_interval.into_iter().unzip();
        Self { dim, breaks, nodes, values }
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    /// Section volume `A(t)` by Lagrange interpolation inside the interval.
    pub fn area(&self, t: f64) -> f64 {
        let (lo, hi) = (self.breaks[0], self.breaks[self.breaks.len() - 1]);
        if t < lo || t > hi {
            return 0.0;
        }
        let i = match self.breaks.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(i) => i.min(self.breaks.len() - 2),
            Err(i) => i - 1,
        };
        let (xs, ys) = (&self.nodes[i], &self.values[i]);
        let mut acc = 0.0;
        for j in 0..xs.len() {
            let mut l = 1.0;
            for m in 0..xs.len() {
                if m != j {
                    l *= (t - xs[m]) / (xs[j] - xs[m]);
                }
            }
            acc += l * ys[j];
        }
        acc.max(0.0)
    }

    pub fn radius(&self, t: f64) -> f64 {
        let a = self.area(t);
        if self.dim == 2 {
            return 0.5 * a;
        }
        (a / kappa(self.dim - 1)).powf(1.0 / (self.dim - 1) as f64)
    }
}

/// Radius function of a body of revolution.
#[derive(Debug, Clone)]
pub enum Meridian {
    /// `radius · sqrt(1 - ((t - center)/half_len)²)`: balls and ellipsoids.
    Ellipse { center: f64, half_len: f64, radius: f64 },
    /// `radius · (1 - |(t - center)/half_len|^p)^{1/p}`, `p >= 1`.
    Lp { center: f64, half_len: f64, radius: f64, p: f64 },
    /// `inner` restricted to `[lo, hi]` (flat end faces where `r > 0`).
    Truncated { inner: Arc<Meridian>, lo: f64, hi: f64 },
    Sampled(Profile),
    Sections(Arc<SectionProfile>),
    /// `scale_r · inner((t - shift_t) / scale_t)`.
    Mapped { inner: Arc<Meridian>, scale_t: f64, shift_t: f64, scale_r: f64 },
    /// Meridian of the polar body about `t = 0` of `inner`.
    Polar { inner: Arc<Meridian> },
}

impl Meridian {
    pub fn ball(radius: f64) -> Self {
        Meridian::Ellipse { center: 0.0, half_len: radius, radius }
    }

    pub fn domain(&self) -> (f64, f64) {
        match self {
            Meridian::Ellipse { center, half_len, .. } | Meridian::Lp { center, half_len, .. } => {
                (center - half_len, center + half_len)
            }
            Meridian::Truncated { lo, hi, .. } => (*lo, *hi),
            Meridian::Sampled(p) => p.domain(),
            Meridian::Sections(s) => (s.breaks[0], s.breaks[s.breaks.len() - 1]),
            Meridian::Mapped { inner, scale_t, shift_t, .. } => {
                let (a, b) = inner.domain();
                let (x, y) = (scale_t * a + shift_t, scale_t * b + shift_t);
                (x.min(y), x.max(y))
            }
            Meridian::Polar { inner } => {
                let (a, b) = inner.domain();
                (1.0 / a, 1.0 / b)
            }
        }
    }

    pub fn radius(&self, t: f64) -> f64 {
        let (lo, hi) = self.domain();
        if !(t >= lo && t <= hi) {
            return 0.0;
        }
        match self {
            Meridian::Ellipse { center, half_len, radius } => {
                let x = (t - center) / half_len;
                radius * (1.0 - x * x).max(0.0).sqrt()
            }
            Meridian::Lp { center, half_len, radius, p } => {
                let x = ((t - center) / half_len).abs().min(1.0);
                radius * (1.0 - x.powf(*p)).max(0.0).powf(1.0 / p)
            }
            Meridian::Truncated { inner, .. } => inner.radius(t),
            Meridian::Sampled(p) => p.eval(t),
            Meridian::Sections(s) => s.radius(t),
            Meridian::Mapped { inner, scale_t, shift_t, scale_r } => scale_r * inner.radius((t - shift_t) / scale_t),
            Meridian::Polar { inner } => polar_radius(inner, t),
        }
    }

    /// Sorted abscissae where the radius may fail to be smooth, domain ends included.
    pub fn breakpoints(&self) -> Vec<f64> {
        let (lo, hi) = self.domain();
        let mut b = match self {
            Meridian::Sampled(p) => p.t.clone(),
            Meridian::Sections(s) => s.breaks.clone(),
            Meridian::Mapped { inner, scale_t, shift_t, .. } => {
                inner.breakpoints().into_iter().map(|x| scale_t * x + shift_t).collect()
            }
            Meridian::Truncated { inner, lo, hi } => {
                let mut v: Vec<f64> = inner.breakpoints().into_iter().filter(|x| x > lo && x < hi).collect();
                v.push(*lo);
                v.push(*hi);
                v
            }
            Meridian::Polar { inner } => {
                // Kinks of the polar meridian are the dual images of the
                // one-sided tangents at the kinks of the inner meridian.
                let mut v = vec![lo, hi];
                for t in inner.breakpoints() {
                    let r = inner.radius(t);
                    if r <= 0.0 {
                        continue;
                    }
                    for left in [true, false] {
                        let d = inner.slope(t, left);
                        let h = r - d * t;
                        if d.is_finite() && h > 0.0 {
                            v.push(-d / h);
                        }
                    }
                }
                v.retain(|x| *x >= lo && *x <= hi);
                v
            }
            _ => vec![lo, hi],
        };
        b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        b.dedup();
        b
    }

    /// `∫ f(t, r(t)) dt` over the domain.
    pub fn integrate<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        if let Meridian::Sampled(p) = self {
            return p.integrate(&f);
        }
        integrate_pieces(&|t| f(t, self.radius(t)), &self.breakpoints(), QUAD_TOL)
    }

    /// Samples the meridian on Chebyshev-Lobatto nodes (clustered at the poles).
    pub fn sample(&self, count: usize) -> Result<Profile> {
        if let Meridian::Sampled(p) = self {
            return Ok(p.clone());
        }
        let (lo, hi) = self.domain();
        let mut t = chebyshev_nodes(lo, hi, count);
        // Keep kinks as nodes so the sampled profile stays inscribed.
        t.extend(self.breakpoints());
        t.sort_by(|a, b| a.partial_cmp(b).unwrap());
        t.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * (hi - lo));
        let pts = t.iter().map(|&x| (x, self.radius(x))).collect();
        Profile::upper_hull(pts)
    }

    /// `r'(t) = scale_r · r((t - shift_t)/scale_t)`, simplified where a
    /// closed form exists.
    pub fn mapped(&self, scale_t: f64, shift_t: f64, scale_r: f64) -> Meridian {
        match self {
            Meridian::Ellipse { center, half_len, radius } => Meridian::Ellipse {
                center: scale_t * center + shift_t,
                half_len: half_len * scale_t.abs(),
                radius: radius * scale_r,
            },
            Meridian::Lp { center, half_len, radius, p } => Meridian::Lp {
                center: scale_t * center + shift_t,
                half_len: half_len * scale_t.abs(),
                radius: radius * scale_r,
                p: *p,
            },
            Meridian::Sampled(p) => Meridian::Sampled(p.map(scale_t, shift_t, scale_r)),
            Meridian::Truncated { inner, lo, hi } => {
                let (a, b) = (scale_t * lo + shift_t, scale_t * hi + shift_t);
                Meridian::Truncated { inner: Arc::new(inner.mapped(scale_t, shift_t, scale_r)), lo: a.min(b), hi: a.max(b) }
            }
            Meridian::Mapped { inner, scale_t: s0, shift_t: h0, scale_r: r0 } => {
                Meridian::Mapped { inner: inner.clone(), scale_t: scale_t * s0, shift_t: scale_t * h0 + shift_t, scale_r: scale_r * r0 }
            }
            _ => Meridian::Mapped { inner: Arc::new(self.clone()), scale_t, shift_t, scale_r },
        }
    }

    /// Meridian of the polar body about the axis point `t = 0`.
    pub fn polar(&self) -> Result<Meridian> {
        let (lo, hi) = self.domain();
        if !(lo < 0.0 && hi > 0.0) || self.radius(0.0) <= 0.0 {
            return Err(GeomError::Domain("polar centre is not interior".into()));
        }
        match self {
            Meridian::Ellipse { center, half_len, radius } if *center == 0.0 => {
                Ok(Meridian::Ellipse { center: 0.0, half_len: 1.0 / half_len, radius: 1.0 / radius })
            }
            Meridian::Sampled(p) => Ok(Meridian::Sampled(p.polar()?)),
            Meridian::Polar { inner } => Ok((**inner).clone()),
            _ => Ok(Meridian::Polar { inner: Arc::new(self.clone()) }),
        }
    }

    /// Maximum of `α t + β r(t)` over the meridian region (support function
    /// of the planar region in direction `(α, β)`, `β >= 0`).
    pub fn support(&self, alpha: f64, beta: f64) -> f64 {
        let (lo, hi) = self.domain();
        if beta <= 0.0 {
            return (alpha * lo).max(alpha * hi);
        }
        if let Meridian::Sampled(p) = self {
            // Values at the vertices of a concave chain are unimodal.
            let g = |k: usize| alpha * p.t[k] + beta * p.r[k];
            let (mut a, mut b) = (0, p.t.len() - 1);
            while a < b {
                let m = (a + b) / 2;
                if g(m) < g(m + 1) {
                    a = m + 1;
                } else {
                    b = m;
                }
            }
            return g(a);
        }
        let f = |t: f64| alpha * t + beta * self.radius(t);
        let mut best = f(lo).max(f(hi));
        // Concave objective on each smooth piece; refine around the best breakpoint interval.
        let breaks = self.breakpoints();
        if breaks.len() > 64 {
            let (k, _) = breaks.iter().enumerate().map(|(k, &t)| (k, f(t))).fold((0, f64::NEG_INFINITY), |b, c| if c.1 > b.1 { c } else { b });
            let a = breaks[k.saturating_sub(1)];
            let b = breaks[(k + 1).min(breaks.len() - 1)];
            best = best.max(golden_max(&f, a, b, 1e-13 * (hi - lo)).1);
        } else {
            best = best.max(grid_golden_max(&f, lo, hi, 64, 1e-13 * (hi - lo)).1);
        }
        best
    }

    /// One-sided derivative `r'(t∓)`; infinite at vertical boundary pieces.
    pub fn slope(&self, t: f64, left: bool) -> f64 {
        let (lo, hi) = self.domain();
        match self {
            Meridian::Ellipse { center, half_len, radius } => {
                let x = (t - center) / half_len;
                let s = (1.0 - x * x).max(0.0).sqrt();
                if s == 0.0 {
                    return if x > 0.0 { f64::NEG_INFINITY } else { f64::INFINITY };
                }
                -radius * x / (half_len * s)
            }
            Meridian::Lp { center, half_len, radius, p } => {
                let x = (t - center) / half_len;
                let ax = x.abs();
                let base = 1.0 - ax.powf(*p);
                if base <= 0.0 {
                    return if x > 0.0 { f64::NEG_INFINITY } else { f64::INFINITY };
                }
                -radius / half_len * x.signum() * ax.powf(p - 1.0) * base.powf(1.0 / p - 1.0)
            }
            Meridian::Truncated { inner, .. } => inner.slope(t, left),
            Meridian::Sampled(prof) => {
                let j = match prof.t.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
                    Ok(j) if left => j.max(1),
                    Ok(j) => (j + 1).min(prof.t.len() - 1),
                    Err(j) => j.clamp(1, prof.t.len() - 1),
                };
                (prof.r[j] - prof.r[j - 1]) / (prof.t[j] - prof.t[j - 1])
            }
            Meridian::Mapped { inner, scale_t, shift_t, scale_r } => {
                let x = (t - shift_t) / scale_t;
                scale_r / scale_t * inner.slope(x, left != (*scale_t < 0.0))
            }
            _ => {
                let h = 1e-7 * (hi - lo);
                if left {
                    let a = (t - h).max(lo);
                    (self.radius(t) - self.radius(a)) / (t - a)
                } else {
                    let b = (t + h).min(hi);
                    (self.radius(b) - self.radius(t)) / (b - t)
                }
            }
        }
    }

    /// `r(t) = r(-t)` within `tol`, checked on breakpoints and a fixed grid.
    pub fn is_even(&self, tol: f64) -> bool {
        let (lo, hi) = self.domain();
        if (lo + hi).abs() > tol {
            return false;
        }
        let mut pts = chebyshev_nodes(lo, hi, 257);
        pts.extend(self.breakpoints());
        pts.iter().all(|&x| (self.radius(x) - self.radius(-x)).abs() <= tol)
    }

    /// Validates concavity and positivity on a sampling grid.
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.domain();
        if !(lo.is_finite() && hi.is_finite() && hi > lo) {
            return Err(GeomError::invalid("meridian.domain", format!("[{lo}, {hi}]")));
        }
        match self {
            Meridian::Ellipse { half_len, radius, .. } if *half_len <= 0.0 || *radius <= 0.0 => {
                Err(GeomError::invalid("meridian.positive_axes", "non-positive semi-axis"))
            }
            Meridian::Lp { p, .. } if *p < 1.0 => Err(GeomError::invalid("meridian.concavity", "p < 1")),
            Meridian::Sampled(_) => Ok(()),
            _ => self.sample(513).map(|_| ()),
        }
    }
}

/// `ρ(s) = min_t (1 - s t) / r(t)` over the meridian of `inner`.
fn polar_radius(inner: &Meridian, s: f64) -> f64 {
    let (lo, hi) = inner.domain();
    let g = |t: f64| {
        let r = inner.radius(t);
        let num = 1.0 - s * t;
        if r <= 0.0 {
            if num <= 0.0 { 0.0 } else { f64::NEG_INFINITY }
        } else {
            -(num / r).max(0.0)
        }
    };
    let (_, v) = grid_golden_max(&g, lo, hi, 48, 1e-14 * (hi - lo));
    (-v).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_rejects_convex_turn() {
        let e = Profile::new(vec![-1.0, 0.0, 1.0], vec![1.0, 0.5, 1.0]).unwrap_err();
        assert_eq!(e.invariant(), Some("profile.concavity"));
        assert!(Profile::new(vec![-1.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]).is_ok());
    }

    #[test]
    fn ball_polar_is_reciprocal_ball() {
        let p = Meridian::ball(2.0).polar().unwrap();
        assert!((p.radius(0.0) - 0.5).abs() < 1e-15);
        assert_eq!(p.domain(), (-0.5, 0.5));
    }

    #[test]
    fn generic_polar_of_shifted_ball() {
        // Ball of radius 1 centred at t = 0.3, polar about 0 via the min formula.
        let m = Meridian::Mapped { inner: Arc::new(Meridian::ball(1.0)), scale_t: 1.0, shift_t: 0.3, scale_r: 1.0 };
        let generic = m.polar().unwrap();
        for k in 0..20 {
            let (a, b) = generic.domain();
            let s = a + (b - a) * (k as f64 + 0.5) / 20.0;
            // Polar of a ball B(c, 1) about o: support h(θ) = ⟨c,θ⟩ + 1, so ρ(s) solves h(s, ρ) = 1.
            let rho = generic.radius(s);
            let h = 0.3 * s + (s * s + rho * rho).sqrt();
            assert!((h - 1.0).abs() < 1e-9, "s={s} rho={rho} h={h}");
        }
    }

    #[test]
    fn sampled_polar_round_trip() {
        let p = Meridian::ball(1.0).sample(101).unwrap();
        let m = Meridian::Sampled(p.clone());
        let back = m.polar().unwrap().polar().unwrap();
        if let Meridian::Sampled(q) = back {
            for &x in p.t() {
                assert!((q.eval(x) - p.eval(x)).abs() < 1e-12);
            }
        } else {
            panic!("sampled polar must stay sampled");
        }
    }

    #[test]
    fn gauss_legendre_is_exact_for_cones() {
        // Cone of height 1 and base radius 1 in 3-D: ∫ r² dt = 1/3.
        let p = Profile::new(vec![0.0, 1.0], vec![1.0, 0.0]).unwrap();
        let v = Meridian::Sampled(p).integrate(|_, r| r * r);
        assert!((v - 1.0 / 3.0).abs() < 1e-15);
    }
}
