//! Bodies of revolution `{t u + y : y ⊥ u, |y| <= r(t)}` and their oblique sections.

use nalgebra::DMatrix;

use super::meridian::{Meridian, Profile, QUAD_TOL};
use super::{AffineMap, Direction};
use crate::error::{GeomError, Result};
use crate::linalg::{kappa, Point};
use crate::quad::{bisect, chebyshev_nodes, grid_golden_max, integrate_pieces};

#[derive(Debug, Clone)]
pub struct RevolutionBody {
    dim: usize,
    axis: Direction,
    meridian: Meridian,
}

impl RevolutionBody {
    pub fn new(axis: Direction, meridian: Meridian) -> Result<Self> {
        let dim = axis.dim();
        if !(2..=4).contains(&dim) {
            return Err(GeomError::invalid("revolution.dimension", format!("n = {dim}")));
        }
        meridian.validate()?;
        Ok(Self { dim, axis, meridian })
    }

    /// Ball of radius `radius` centred at the origin, axis `e₁`.
    pub fn ball(dim: usize, radius: f64) -> Result<Self> {
        Self::new(Direction::basis(dim, 0)?, Meridian::ball(radius))
    }

    /// Ellipsoid with semi-axis `half_len` along `axis` and `radius` across it.
    pub fn ellipsoid(axis: Direction, half_len: f64, radius: f64) -> Result<Self> {
        Self::new(axis, Meridian::Ellipse { center: 0.0, half_len, radius })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn axis(&self) -> &Direction {
        &self.axis
    }

    pub fn meridian(&self) -> &Meridian {
        &self.meridian
    }

    pub fn with_meridian(&self, meridian: Meridian) -> Result<Self> {
        Self::new(self.axis.clone(), meridian)
    }

    fn ball_factor(&self) -> f64 {
        kappa(self.dim - 1)
    }

    pub fn volume(&self) -> f64 {
        let k = (self.dim - 1) as i32;
        self.ball_factor() * self.meridian.integrate(|_, r| r.powi(k))
    }

    /// Centroid coordinate along the axis.
    pub fn axial_centroid(&self) -> f64 {
        let k = (self.dim - 1) as i32;
        let m0 = self.meridian.integrate(|_, r| r.powi(k));
        let m1 = self.meridian.integrate(|t, r| t * r.powi(k));
        m1 / m0
    }

    pub fn centroid(&self) -> Point {
        self.axis.as_point() * self.axial_centroid()
    }

    /// `(∫ (t - c)², ∫ ⟨y, w⟩²)` over the body, with `c` the axial centroid and
    /// `w` any unit vector orthogonal to the axis.
    pub fn principal_moments(&self) -> (f64, f64) {
        let k = (self.dim - 1) as i32;
        let c = self.axial_centroid();
        let kap = self.ball_factor();
        let axial = kap * self.meridian.integrate(|t, r| (t - c) * (t - c) * r.powi(k));
        let across = kap * self.meridian.integrate(|_, r| r.powi(k + 2)) / (k + 2) as f64;
        (axial, across)
    }

    /// Second moment matrix `∫ (x - p)(x - p)ᵀ dx`.
    pub fn second_moment_about(&self, p: &Point) -> DMatrix<f64> {
        let (axial, across) = self.principal_moments();
        let u = self.axis.as_point();
        let uu = u * u.transpose();
        let id = DMatrix::<f64>::identity(self.dim, self.dim);
        let g = self.centroid() - p;
        &uu * axial + (id - &uu) * across + &g * g.transpose() * self.volume()
    }

    /// Splits `d` into `(⟨d,u⟩, |d - ⟨d,u⟩u|)`.
    fn split(&self, d: &Point) -> (f64, f64) {
        let u = self.axis.as_point();
        let a = d.dot(u);
        (a, (d - u * a).norm())
    }

    pub fn support(&self, d: &Point) -> f64 {
        let (a, b) = self.split(d);
        self.meridian.support(a, b)
    }

    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        let (t, rho) = self.split(p);
        let (lo, hi) = self.meridian.domain();
        t >= lo - tol && t <= hi + tol && rho <= self.meridian.radius(t.clamp(lo, hi)) + tol
    }

    pub fn diameter(&self) -> f64 {
        let p = match self.meridian.sample(257) {
            Ok(p) => p,
            Err(_) => return self.meridian.domain().1 - self.meridian.domain().0,
        };
        let (t, r) = (p.t(), p.r());
        let mut best: f64 = 0.0;
        for i in 0..t.len() {
            for j in i..t.len() {
                let (dt, dr) = (t[j] - t[i], r[i] + r[j]);
                best = best.max((dt * dt + dr * dr).sqrt());
            }
        }
        best
    }

    /// Whether the body is symmetric about the origin (even meridian).
    pub fn is_o_symmetric(&self, tol: f64) -> bool {
        self.meridian.is_even(tol)
    }

    /// Image under `T`; only maps `x ↦ A x + b` with `A u = a u`,
    /// `A` a similarity of ratio `s` on `u^⊥` and `b ∥ u` are accepted.
    pub fn apply_affine(&self, map: &AffineMap) -> Result<Self> {
        let u = self.axis.as_point();
        let a = map.matrix();
        let au = a * u;
        let scale_t = au.dot(u);
        let tol = 1e-9 * a.norm().max(1.0);
        if (&au - u * scale_t).norm() > tol {
            return Err(GeomError::Representation("affine map does not preserve the axis".into()));
        }
        let b = map.translation();
        let shift = b.dot(u);
        if (b - u * shift).norm() > tol * (1.0 + b.norm()) {
            return Err(GeomError::Representation("translation leaves the axis".into()));
        }
        let basis = crate::linalg::complement_basis(u);
        let img = a * &basis;
        let gram = img.transpose() * &img;
        let s2 = gram.trace() / (self.dim - 1) as f64;
        let off = (&gram - DMatrix::<f64>::identity(self.dim - 1, self.dim - 1) * s2).norm();
        if off > tol * s2 || (img.transpose() * &au).norm() > tol * au.norm().max(1.0) {
            return Err(GeomError::Representation("affine map is not a similarity across the axis".into()));
        }
        let meridian = self.meridian.mapped(scale_t, shift, s2.sqrt());
        Ok(Self { dim: self.dim, axis: self.axis.clone(), meridian })
    }

    /// Volume-preserving dilation by `f` along the axis and `f^{-1/(n-1)}` across it.
    pub fn axial_dilation(&self, f: f64) -> Self {
        let across = f.powf(-1.0 / (self.dim - 1) as f64);
        Self { dim: self.dim, axis: self.axis.clone(), meridian: self.meridian.mapped(f, 0.0, across) }
    }

    pub fn translate_axis(&self, s: f64) -> Self {
        Self { dim: self.dim, axis: self.axis.clone(), meridian: self.meridian.mapped(1.0, s, 1.0) }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self { dim: self.dim, axis: self.axis.clone(), meridian: self.meridian.mapped(s, 0.0, s) }
    }

    /// Axis coordinate of `z`, or a representation error when `z` is off the axis.
    pub fn axis_coordinate(&self, z: &Point) -> Result<f64> {
        let (t, rho) = self.split(z);
        let scale = 1.0 + self.meridian.domain().1.abs() + self.meridian.domain().0.abs();
        if rho > 1e-12 * scale {
            return Err(GeomError::Representation(format!("point is {rho:.3e} off the axis")));
        }
        Ok(t)
    }

    /// Polar body about `z`, which must lie on the axis and inside the body.
    pub fn polar(&self, z: &Point) -> Result<Self> {
        let zt = self.axis_coordinate(z)?;
        let (lo, hi) = self.meridian.domain();
        let margin = (zt - lo).min(hi - zt).min(self.meridian.radius(zt));
        if margin < 1e-9 * (hi - lo) {
            return Err(GeomError::Domain(format!("polar centre is not interior (margin {margin:.3e})")));
        }
        let centred = self.meridian.mapped(1.0, -zt, 1.0);
        let polar = centred.polar()?.mapped(1.0, zt, 1.0);
        Ok(Self { dim: self.dim, axis: self.axis.clone(), meridian: polar })
    }

    /// Volume of the polar body about the axis point with coordinate `zt`.
    pub fn polar_volume_at(&self, zt: f64) -> Result<f64> {
        let z = self.axis.as_point() * zt;
        Ok(self.polar(&z)?.volume())
    }

    /// Hausdorff distance to another body of revolution with the same axis,
    /// from support functions on a dense set of meridian-plane directions.
    pub fn hausdorff(&self, other: &RevolutionBody) -> f64 {
        let m = 2048;
        (0..=m)
            .map(|k| {
                let phi = std::f64::consts::PI * k as f64 / m as f64;
                let (a, b) = (phi.cos(), phi.sin());
                (self.meridian.support(a, b) - other.meridian.support(a, b)).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Section by `{⟨x, u⟩ = t}`; axial directions give balls, others oblique sections.
    pub fn section(&self, u: &Direction, t: f64) -> super::Section {
        let (c, s) = self.split(u.as_point());
        if s <= 1e-14 {
            let tt = t * c.signum();
            let (lo, hi) = self.meridian.domain();
            if tt <= lo + 1e-12 * (hi - lo) || tt >= hi - 1e-12 * (hi - lo) {
                return super::Section::Empty;
            }
            return super::Section::Ball { dim: self.dim - 1, radius: self.meridian.radius(tt) };
        }
        match ObliqueSection::new(self, -c / s, t / s) {
            Some(sec) => super::Section::Oblique(sec),
            None => super::Section::Empty,
        }
    }

    /// Section by the hyperplane whose trace in the meridian plane is the line
    /// `y = slope · t + intercept`.
    pub fn oblique_section(&self, slope: f64, intercept: f64) -> Option<ObliqueSection> {
        ObliqueSection::new(self, slope, intercept)
    }
}

/// Section of a body of revolution by a hyperplane not orthogonal to the axis.
///
/// Writing the trace of the hyperplane in a meridian plane as `y = η t + y₀`,
/// the section is fibred over `t` by `(n-2)`-balls of radius
/// `ω(t) = sqrt(r(t)² - (η t + y₀)²)`, and `dt` stretches to arc length by
/// `sqrt(1 + η²)`.
#[derive(Debug, Clone)]
pub struct ObliqueSection {
    dim: usize,
    meridian: Meridian,
    slope: f64,
    intercept: f64,
    lo: f64,
    hi: f64,
}

impl ObliqueSection {
    fn new(body: &RevolutionBody, slope: f64, intercept: f64) -> Option<Self> {
        let meridian = body.meridian.clone();
        let (a, b) = meridian.domain();
        let g = |t: f64| meridian.radius(t) - (slope * t + intercept).abs();
        let xtol = 1e-15 * (b - a).max(1.0);
        let (tm, gm) = grid_golden_max(&g, a, b, 256, xtol);
        if gm <= 1e-12 * (b - a) {
            return None;
        }
        let lo = if g(a) >= 0.0 { a } else { bisect(&g, a, tm, xtol) };
        let hi = if g(b) >= 0.0 { b } else { bisect(&g, tm, b, xtol) };
        Some(Self { dim: body.dim, meridian, slope, intercept, lo, hi })
    }

    /// Ambient dimension of the body that was cut.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn range(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn stretch(&self) -> f64 {
        (1.0 + self.slope * self.slope).sqrt()
    }

    pub fn chord_radius(&self, t: f64) -> f64 {
        if t < self.lo || t > self.hi {
            return 0.0;
        }
        let r = self.meridian.radius(t);
        let y = self.slope * t + self.intercept;
        (r * r - y * y).max(0.0).sqrt()
    }

    /// `(n-1)`-volume of the section.
    pub fn measure(&self) -> f64 {
        if self.dim == 2 {
            return self.stretch() * (self.hi - self.lo);
        }
        let k = (self.dim - 2) as i32;
        let mut breaks: Vec<f64> = self.meridian.breakpoints().into_iter().filter(|&x| x > self.lo && x < self.hi).collect();
        breaks.insert(0, self.lo);
        breaks.push(self.hi);
        // The line may cross the origin of the |·| term inside the range.
        if self.slope != 0.0 {
            let x0 = -self.intercept / self.slope;
            if x0 > self.lo && x0 < self.hi {
                breaks.push(x0);
                breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            }
        }
        kappa(self.dim - 2) * self.stretch() * integrate_pieces(&|t| self.chord_radius(t).powi(k), &breaks, QUAD_TOL)
    }

    /// Meridian of the section in arc-length coordinates along its axis,
    /// sampled on `count` Chebyshev nodes (kinks of the body meridian kept).
    pub fn profile(&self, count: usize) -> Result<Profile> {
        let mut t = chebyshev_nodes(self.lo, self.hi, count);
        t.extend(self.meridian.breakpoints().into_iter().filter(|&x| x > self.lo && x < self.hi));
        t.sort_by(|a, b| a.partial_cmp(b).unwrap());
        t.dedup();
        let s = self.stretch();
        let pts = t.iter().map(|&x| (x * s, self.chord_radius(x))).collect();
        Profile::upper_hull(pts)
    }
}
