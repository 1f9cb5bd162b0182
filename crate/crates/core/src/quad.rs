//! One-dimensional numerics: adaptive quadrature, unimodal search, bisection.

const MAX_DEPTH: u32 = 50;

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Rounding noise in `f` does not shrink with the interval, so the
    // per-piece tolerance stops halving at this floor.
    let floor = (tol / 1024.0).max(16.0 * f64::EPSILON * whole.abs());
    simpson_step(f, a, b, fa, fm, fb, whole, tol, floor, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    floor: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    // Require at least a few levels so oscillating or kinked integrands are probed.
    if depth == 0 || (depth < MAX_DEPTH - 4 && delta.abs() <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    let half = (0.5 * tol).max(floor);
    simpson_step(f, a, m, fa, flm, fm, left, half, floor, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, half, floor, depth - 1)
}

/// `f` on `[a, b]` after the substitution `t = mid + half·cos θ`, which
/// removes square-root type endpoint singularities.
fn cos_substituted<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> impl Fn(f64) -> f64 + '_ {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    move |theta: f64| {
        let s = theta.sin();
        if s == 0.0 {
            0.0
        } else {
            f(mid + half * theta.cos()) * half * s
        }
    }
}

/// Coarse estimate of `∫ |f|` over `[a, b]`, used to fix an absolute scale.
fn coarse_scale<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let g = cos_substituted(f, a, b);
    let n = 64;
    let h = std::f64::consts::PI / n as f64;
    (0..=n).map(|k| g(k as f64 * h).abs()).sum::<f64>() * h
}

/// Integral of `f` over `[a, b]` to relative tolerance `rel_tol`, with the
/// cosine substitution.
pub fn integrate_cos<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let tol = rel_tol * coarse_scale(f, a, b).max(1e-300);
    adaptive_simpson(&cos_substituted(f, a, b), 0.0, std::f64::consts::PI, tol)
}

/// Integrates piece by piece between consecutive sorted `breaks`. The
/// tolerance is relative to the whole integral, so tiny pieces stay cheap.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], rel_tol: f64) -> f64 {
    let pieces: Vec<(f64, f64)> = breaks.windows(2).map(|w| (w[0], w[1])).filter(|(a, b)| b > a).collect();
    let scale: f64 = pieces.iter().map(|&(a, b)| coarse_scale(f, a, b)).sum();
    let tol = rel_tol * scale.max(1e-300) / pieces.len().max(1) as f64;
    pieces
        .iter()
        .map(|&(a, b)| adaptive_simpson(&cos_substituted(f, a, b), 0.0, std::f64::consts::PI, tol))
        .sum()
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximiser of a unimodal function on `[a, b]`.
/// Returns `(argmax, max)`.
pub fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > xtol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x);
    // Endpoints are admissible maximisers too.
    [(x, fx), (c, fc), (d, fd)]
        .into_iter()
        .fold((x, fx), |best, cand| if cand.1 > best.1 { cand } else { best })
}

/// Maximum of a unimodal function: coarse grid to bracket, golden section to refine.
/// Endpoint values are included, so monotone functions are handled.
pub fn grid_golden_max<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, grid: usize, xtol: f64) -> (f64, f64) {
    if b <= a {
        return (a, f(a));
    }
    let h = (b - a) / grid as f64;
    let mut best = (0usize, f64::NEG_INFINITY);
    for k in 0..=grid {
        let v = f(a + k as f64 * h);
        if v > best.1 {
            best = (k, v);
        }
    }
    let lo = a + best.0.saturating_sub(1) as f64 * h;
    let hi = (a + (best.0 + 1) as f64 * h).min(b);
    let (x, v) = golden_max(f, lo, hi, xtol);
    let xb = a + best.0 as f64 * h;
    if best.1 > v {
        (xb, best.1)
    } else {
        (x, v)
    }
}

/// Bisection for a sign change of `f` on `[a, b]`; `f(a)` and `f(b)` must differ in sign.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, xtol: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        if (b - a).abs() <= xtol {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Chebyshev-Lobatto nodes on `[a, b]`, increasing, endpoints included.
pub fn chebyshev_nodes(a: f64, b: f64, count: usize) -> Vec<f64> {
    let m = count.max(2) - 1;
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut nodes: Vec<f64> = (0..=m)
        .map(|k| mid - half * (std::f64::consts::PI * k as f64 / m as f64).cos())
        .collect();
    nodes[0] = a;
    nodes[m] = b;
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_substitution_handles_sqrt_endpoints() {
        let f = |t: f64| (1.0 - t * t).max(0.0).sqrt();
        let v = integrate_cos(&f, -1.0, 1.0, 1e-13);
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn simpson_is_exact_on_cubics() {
        let v = adaptive_simpson(&|x: f64| x * x * x - x, 0.0, 2.0, 1e-12);
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn noisy_sliver_pieces_stay_cheap() {
        let calls = std::cell::Cell::new(0usize);
        // Exp with a last-bit wobble, plus slivers near the end.
        let f = |t: f64| {
            calls.set(calls.get() + 1);
            t.exp() * (1.0 + 4e-16 * (1e9 * t).sin())
        };
        let v = integrate_pieces(&f, &[0.0, 0.5, 1.0 - 1e-9, 1.0 - 1e-12, 1.0], 1e-12);
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-11);
        assert!(calls.get() < 50_000, "{} calls", calls.get());
    }

    #[test]
    fn golden_finds_interior_and_boundary_maxima() {
        let (x, _) = grid_golden_max(&|x: f64| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 16, 1e-12);
        assert!((x - 0.3).abs() < 1e-6);
        let (x, v) = grid_golden_max(&|x: f64| x, 0.0, 1.0, 16, 1e-12);
        assert_eq!((x, v), (1.0, 1.0));
    }
}
