//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use convexlab::bodies::P2;
use convexlab::{Body, Meridian, Point, Polygon};

/// Vertices and halfspaces `⟨a, x⟩ <= b` of a piecewise-linear body.
pub fn hv(body: &Body) -> (Vec<Point>, Vec<(Point, f64)>) {
    match body {
        Body::Polygon(p) => (
            p.vertices().iter().map(|v| Point::from_vec(vec![v.x, v.y])).collect(),
            p.halfplanes().into_iter().map(|(a, b)| (Point::from_vec(vec![a.x, a.y]), b)).collect(),
        ),
        Body::Polytope(p) => (p.vertices().to_vec(), p.halfspaces()),
        Body::Revolution(_) => panic!("not piecewise linear"),
    }
}

pub fn support(vs: &[Point], d: &Point) -> f64 {
    vs.iter().map(|v| v.dot(d)).fold(f64::NEG_INFINITY, f64::max)
}

/// Gauge of `K - z` at `v` from the halfspaces of `K`.
pub fn gauge(hs: &[(Point, f64)], z: &Point, v: &Point) -> f64 {
    hs.iter().map(|(a, b)| a.dot(v) / (b - a.dot(z))).fold(0.0, f64::max)
}

/// Chord `{s : p + s u ∈ K}`.
pub fn chord(hs: &[(Point, f64)], p: &Point, u: &Point) -> Option<(f64, f64)> {
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (a, b) in hs {
        let au = a.dot(u);
        let r = b - a.dot(p);
        if au.abs() < 1e-14 {
            if r < 0.0 {
                return None;
            }
        } else if au > 0.0 {
            hi = hi.min(r / au);
        } else {
            lo = lo.max(r / au);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Minimises a function of `dim` variables by repeated grid zooming; each
/// round keeps `keep` grid steps on either side of the best point.
pub fn zoom_min<F: Fn(&[f64]) -> f64>(
    f: F,
    mut lo: Vec<f64>,
    mut hi: Vec<f64>,
    grid: usize,
    rounds: usize,
    keep: f64,
) -> (Vec<f64>, f64) {
    let dim = lo.len();
    let mut best = (lo.clone(), f64::INFINITY);
    for _ in 0..rounds {
        let total = (grid + 1).pow(dim as u32);
        for k in 0..total {
            let mut idx = k;
            let x: Vec<f64> = (0..dim)
                .map(|d| {
                    let j = idx % (grid + 1);
                    idx /= grid + 1;
                    lo[d] + (hi[d] - lo[d]) * j as f64 / grid as f64
                })
                .collect();
            let v = f(&x);
            if v < best.1 {
                best = (x, v);
            }
        }
        for d in 0..dim {
            let w = keep * (hi[d] - lo[d]) / grid as f64;
            lo[d] = best.0[d] - w;
            hi[d] = best.0[d] + w;
        }
    }
    best
}

/// `q` by a dense grid over centres `x`; for fixed `x` the best `λ` is a maximum over facets.
pub fn q_oracle(p: &Polygon) -> f64 {
    let (vs, hs) = hv(&Body::Polygon(p.clone()));
    let neg: Vec<f64> = hs.iter().map(|(a, _)| support(&vs, &-a)).collect();
    let lambda = |x: &[f64]| {
        let x = Point::from_vec(x.to_vec());
        let mut l: f64 = 1.0;
        for ((a, b), h) in hs.iter().zip(&neg) {
            let gap = b - a.dot(&x);
            if gap <= 0.0 {
                return f64::INFINITY;
            }
            l = l.max((h + a.dot(&x)) / gap);
        }
        l
    };
    let xs: Vec<f64> = p.vertices().iter().map(|v| v.x).collect();
    let ys: Vec<f64> = p.vertices().iter().map(|v| v.y).collect();
    let min = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    zoom_min(lambda, vec![min(&xs), min(&ys)], vec![max(&xs), max(&ys)], 32, 60, 8.0).1
}

/// Densely sampled boundary of a polygon.
pub fn boundary_samples(p: &Polygon, per_edge: usize) -> Vec<P2> {
    let v = p.vertices();
    let mut out = Vec::with_capacity(v.len() * per_edge);
    for i in 0..v.len() {
        let (a, b) = (v[i], v[(i + 1) % v.len()]);
        for k in 0..per_edge {
            out.push(a + (b - a) * (k as f64 / per_edge as f64));
        }
    }
    out
}

fn ratio(pts: &[P2], th: f64, ls: f64) -> f64 {
    let (sn, cs) = th.sin_cos();
    let inv = (-ls).exp();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for w in pts {
        let r = (cs * w.x + sn * w.y).hypot(inv * (-sn * w.x + cs * w.y));
        lo = lo.min(r);
        hi = hi.max(r);
    }
    hi / lo
}

/// Distance of an o-symmetric polygon to the disc over a dense grid of
/// centred ellipse parameters, with the boundary sampled pointwise.
pub fn bm_polygon_oracle(p: &Polygon) -> f64 {
    let pts = boundary_samples(p, 400);
    zoom_min(|x| ratio(&pts, x[0], x[1]), vec![0.0, -2.5], vec![PI, 2.5], 40, 30, 8.0).1
}

/// Same for a body of revolution whose meridian is even about `0`.
pub fn bm_meridian_oracle(m: &Meridian) -> f64 {
    let (lo, hi) = m.domain();
    let mut pts: Vec<P2> = (0..=4000)
        .map(|k| {
            let t = lo + (hi - lo) * k as f64 / 4000.0;
            P2::new(t, m.radius(t))
        })
        .collect();
    // Flat end faces of truncated meridians.
    for t in [lo, hi] {
        let r = m.radius(t);
        pts.extend((0..400).map(|k| P2::new(t, r * k as f64 / 400.0)));
    }
    zoom_min(|x| ratio(&pts, 0.0, x[0]), vec![-3.0], vec![3.0], 200, 10, 2.0).1
}
