//! Convex body representations and elementary queries.

pub mod io;
pub mod meridian;
pub mod polygon;
pub mod polytope;
pub mod revolution;

use nalgebra::{DMatrix, Matrix2};
use serde::{Deserialize, Serialize};

pub use meridian::{Meridian, Profile, SectionProfile};
pub use polygon::{Polygon, P2};
pub use polytope::{Facet, Polytope, Representation};
pub use revolution::{ObliqueSection, RevolutionBody};

use crate::error::{GeomError, Result};
use crate::linalg::{complement_basis, kappa, Point};

/// Unit vector in ℝⁿ, `n ∈ {2, 3, 4}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Direction(Point);

impl Direction {
    /// Accepts vectors of norm `1 ± 1e-12`.
    pub fn new(v: Point) -> Result<Self> {
        if !(2..=4).contains(&v.len()) {
            return Err(GeomError::invalid("direction.dimension", format!("n = {}", v.len())));
        }
        let n = v.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(GeomError::invalid("direction.unit_norm", format!("|u| = {n}")));
        }
        Ok(Self(v))
    }

    /// Normalises `v`.
    pub fn normalized(v: Point) -> Result<Self> {
        let n = v.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(GeomError::invalid("direction.nonzero", "zero or non-finite vector"));
        }
        Self::new(v / n)
    }

    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        let mut v = Point::zeros(dim);
        if k >= dim {
            return Err(GeomError::DimensionMismatch { expected: dim, got: k + 1 });
        }
        v[k] = 1.0;
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_point(&self) -> &Point {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Self(-&self.0)
    }
}

impl TryFrom<Vec<f64>> for Direction {
    type Error = GeomError;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(Point::from_vec(v))
    }
}

impl From<Direction> for Vec<f64> {
    fn from(d: Direction) -> Self {
        d.0.as_slice().to_vec()
    }
}

/// Hyperplane `{x : ⟨normal, x⟩ = offset}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Direction,
    pub offset: f64,
}

impl Hyperplane {
    pub fn new(normal: Direction, offset: f64) -> Self {
        Self { normal, offset }
    }

    /// The hyperplane `u^⊥` through the origin.
    pub fn through_origin(normal: Direction) -> Self {
        Self { normal, offset: 0.0 }
    }

    pub fn signed_distance(&self, p: &Point) -> f64 {
        self.normal.as_point().dot(p) - self.offset
    }
}

/// Invertible affine map `x ↦ A x + b` with cached determinant.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    matrix: DMatrix<f64>,
    translation: Point,
    det: f64,
}

impl AffineMap {
    pub fn new(matrix: DMatrix<f64>, translation: Point) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n {
            return Err(GeomError::DimensionMismatch { expected: n, got: matrix.ncols() });
        }
        if translation.len() != n {
            return Err(GeomError::DimensionMismatch { expected: n, got: translation.len() });
        }
        let det = matrix.determinant();
        let scale = matrix.norm().powi(n as i32).max(f64::MIN_POSITIVE);
        if !det.is_finite() || det.abs() <= 1e-14 * scale {
            return Err(GeomError::invalid("affine.invertible", format!("det = {det:.3e}")));
        }
        Ok(Self { matrix, translation, det })
    }

    pub fn linear(matrix: DMatrix<f64>) -> Result<Self> {
        let n = matrix.nrows();
        Self::new(matrix, Point::zeros(n))
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: DMatrix::identity(dim, dim), translation: Point::zeros(dim), det: 1.0 }
    }

    pub fn translation_by(v: Point) -> Self {
        let n = v.len();
        Self { matrix: DMatrix::identity(n, n), translation: v, det: 1.0 }
    }

    pub fn scaling(dim: usize, s: f64) -> Result<Self> {
        Self::linear(DMatrix::identity(dim, dim) * s)
    }

    /// Dilation by `along` in direction `u` and by `across` on `u^⊥`.
    pub fn axial(u: &Direction, along: f64, across: f64) -> Result<Self> {
        let p = u.as_point();
        let uu = p * p.transpose();
        let n = u.dim();
        Self::linear(&uu * along + (DMatrix::identity(n, n) - &uu) * across)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn translation(&self) -> &Point {
        &self.translation
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn apply(&self, x: &Point) -> Point {
        &self.matrix * x + &self.translation
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            matrix: &self.matrix * &other.matrix,
            translation: &self.matrix * &other.translation + &self.translation,
            det: self.det * other.det,
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let inv = self.matrix.clone().try_inverse().expect("determinant checked at construction");
        let translation = -(&inv * &self.translation);
        AffineMap { matrix: inv, translation, det: 1.0 / self.det }
    }
}

impl Serialize for AffineMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<f64>> = self.matrix.row_iter().map(|r| r.iter().copied().collect()).collect();
        let mut st = s.serialize_struct("AffineMap", 3)?;
        st.serialize_field("matrix", &rows)?;
        st.serialize_field("translation", self.translation.as_slice())?;
        st.serialize_field("det", &self.det)?;
        st.end()
    }
}

/// Any supported convex body.
#[derive(Debug, Clone)]
pub enum Body {
    Polygon(Polygon),
    Polytope(Polytope),
    Revolution(RevolutionBody),
}

impl From<Polygon> for Body {
    fn from(p: Polygon) -> Self {
        Body::Polygon(p)
    }
}

impl From<Polytope> for Body {
    fn from(p: Polytope) -> Self {
        Body::Polytope(p)
    }
}

impl From<RevolutionBody> for Body {
    fn from(r: RevolutionBody) -> Self {
        Body::Revolution(r)
    }
}

pub(crate) fn to_p2(p: &Point) -> P2 {
    P2::new(p[0], p[1])
}

pub(crate) fn from_p2(p: &P2) -> Point {
    Point::from_vec(vec![p.x, p.y])
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Polygon(_) => 2,
            Body::Polytope(p) => p.dim(),
            Body::Revolution(r) => r.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Body::Polygon(_) => "polygon",
            Body::Polytope(p) if p.source() == Representation::Halfspaces => "polytope_h",
            Body::Polytope(_) => "polytope_v",
            Body::Revolution(_) => "revolution",
        }
    }

    pub fn volume(&self) -> f64 {
        match self {
            Body::Polygon(p) => p.area(),
            Body::Polytope(p) => p.volume(),
            Body::Revolution(r) => r.volume(),
        }
    }

    pub fn centroid(&self) -> Point {
        match self {
            Body::Polygon(p) => from_p2(&p.centroid()),
            Body::Polytope(p) => p.centroid(),
            Body::Revolution(r) => r.centroid(),
        }
    }

    /// Support function at `d` (not necessarily unit).
    pub fn support(&self, d: &Point) -> f64 {
        match self {
            Body::Polygon(p) => p.support(&to_p2(d)),
            Body::Polytope(p) => p.support(d),
            Body::Revolution(r) => r.support(d),
        }
    }

    pub fn diameter(&self) -> f64 {
        match self {
            Body::Polygon(p) => p.diameter(),
            Body::Polytope(p) => p.diameter(),
            Body::Revolution(r) => r.diameter(),
        }
    }

    pub fn contains(&self, x: &Point, tol: f64) -> bool {
        match self {
            Body::Polygon(p) => p.contains(&to_p2(x), tol),
            Body::Polytope(p) => p.contains(x, tol),
            Body::Revolution(r) => r.contains(x, tol),
        }
    }

    /// Distance from `x` to the boundary, positive inside.
    pub fn interior_margin(&self, x: &Point) -> f64 {
        match self {
            Body::Polygon(p) => p.interior_margin(&to_p2(x)),
            Body::Polytope(p) => p.interior_margin(x),
            Body::Revolution(r) => {
                let m = r.meridian();
                let u = r.axis().as_point();
                let t = x.dot(u);
                let rho = (x - u * t).norm();
                let (lo, hi) = m.domain();
                // Lower bound by the inscribed cylinder-ish gap; exact enough for guards.
                (t - lo).min(hi - t).min(m.radius(t) - rho)
            }
        }
    }

    /// `∫ (x - c)(x - c)ᵀ dx`.
    pub fn second_moment_about(&self, c: &Point) -> DMatrix<f64> {
        match self {
            Body::Polygon(p) => {
                let m: Matrix2<f64> = p.second_moment();
                let g = p.centroid();
                let d = g - to_p2(c);
                let full = m + (d * d.transpose() - g * g.transpose()) * p.area();
                DMatrix::from_iterator(2, 2, full.iter().copied())
            }
            Body::Polytope(p) => p.second_moment_about(c),
            Body::Revolution(r) => r.second_moment_about(c),
        }
    }

    pub fn section(&self, u: &Direction, t: f64) -> Result<Section> {
        self.check_dim(u.dim())?;
        Ok(match self {
            Body::Polygon(p) => {
                let d = to_p2(u.as_point());
                let (lo, hi) = (-p.support(&-d), p.support(&d));
                if t <= lo + 1e-12 * (hi - lo) || t >= hi - 1e-12 * (hi - lo) {
                    Section::Empty
                } else {
                    match p.chord(&d, t) {
                        Some((a, b)) if b > a => Section::Segment { length: b - a },
                        _ => Section::Empty,
                    }
                }
            }
            Body::Polytope(p) => {
                let basis = complement_basis(u.as_point());
                match p.section(u.as_point(), t, &basis) {
                    None => Section::Empty,
                    Some(s) if s.dim() == 1 => Section::Segment { length: s.volume() },
                    Some(s) if s.dim() == 2 => {
                        let pts: Vec<P2> = s.vertices().iter().map(to_p2).collect();
                        match Polygon::hull(&pts) {
                            Ok(poly) => Section::Polygon(poly),
                            Err(_) => Section::Empty,
                        }
                    }
                    Some(s) => Section::Polytope(s),
                }
            }
            Body::Revolution(r) => r.section(u, t),
        })
    }

    pub fn apply_affine(&self, map: &AffineMap) -> Result<Body> {
        self.check_dim(map.dim())?;
        Ok(match self {
            Body::Polygon(p) => {
                let a = map.matrix();
                let m = Matrix2::new(a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]);
                let mut img = p.map(&m, &to_p2(map.translation()));
                if map.det() < 0.0 {
                    img = Polygon::hull(img.vertices())?;
                }
                Body::Polygon(img)
            }
            Body::Polytope(p) => Body::Polytope(p.map(map.matrix(), map.translation())?),
            Body::Revolution(r) => Body::Revolution(r.apply_affine(map)?),
        })
    }

    pub fn translate(&self, v: &Point) -> Result<Body> {
        self.apply_affine(&AffineMap::translation_by(v.clone()))
    }

    pub(crate) fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(GeomError::DimensionMismatch { expected: self.dim(), got });
        }
        Ok(())
    }

    /// Centrally symmetric about the origin within `tol`.
    pub fn is_o_symmetric(&self, tol: f64) -> bool {
        match self {
            Body::Polygon(p) => p.vertices().iter().all(|v| p.contains(&-v, tol)),
            Body::Polytope(p) => p.vertices().iter().all(|v| p.contains(&-v, tol)),
            Body::Revolution(r) => r.is_o_symmetric(tol),
        }
    }

    /// Hausdorff distance, exact for two polygons or two polytopes, and from
    /// dense support sampling otherwise.
    pub fn hausdorff(&self, other: &Body) -> Result<f64> {
        self.check_dim(other.dim())?;
        Ok(match (self, other) {
            (Body::Polygon(a), Body::Polygon(b)) => a.hausdorff(b),
            (Body::Revolution(a), Body::Revolution(b)) if a.axis() == b.axis() => a.hausdorff(b),
            _ => {
                let dirs = crate::directions::sphere_grid(self.dim(), 4096, 7);
                dirs.iter().map(|d| (self.support(d) - other.support(d)).abs()).fold(0.0, f64::max)
            }
        })
    }
}

/// Intersection of a body with a hyperplane.
#[derive(Debug, Clone)]
pub enum Section {
    Empty,
    Segment { length: f64 },
    Polygon(Polygon),
    Polytope(Polytope),
    Ball { dim: usize, radius: f64 },
    Oblique(ObliqueSection),
}

impl Section {
    /// `(n-1)`-volume, zero when empty.
    pub fn measure(&self) -> f64 {
        match self {
            Section::Empty => 0.0,
            Section::Segment { length } => *length,
            Section::Polygon(p) => p.area(),
            Section::Polytope(p) => p.volume(),
            Section::Ball { dim, radius } => kappa(*dim) * radius.powi(*dim as i32),
            Section::Oblique(s) => s.measure(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Section::Empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::point;

    #[test]
    fn direction_validation() {
        assert!(Direction::new(point(&[1.0, 0.0])).is_ok());
        let e = Direction::new(point(&[1.0, 1.0])).unwrap_err();
        assert_eq!(e.invariant(), Some("direction.unit_norm"));
        assert!(Direction::new(point(&[1.0, 0.0, 0.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn affine_compose_and_inverse() {
        let a = AffineMap::new(DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 0.0, 3.0]), point(&[1.0, -1.0])).unwrap();
        let b = a.compose(&a.inverse());
        let x = point(&[0.3, 0.7]);
        assert!((b.apply(&x) - &x).norm() < 1e-14);
        assert!((a.det() - 6.0).abs() < 1e-14);
        assert!(AffineMap::linear(DMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn square_scaled_by_two() {
        let sq = Body::Polygon(Polygon::from_coords(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap());
        let big = sq.apply_affine(&AffineMap::scaling(2, 2.0).unwrap()).unwrap();
        assert!((big.volume() - 16.0).abs() < 1e-12);
        let s = sq.section(&Direction::basis(2, 0).unwrap(), 0.5).unwrap();
        assert!((s.measure() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn cube_section_is_square() {
        let cube = Body::Polytope(Polytope::cube(3));
        let s = cube.section(&Direction::basis(3, 0).unwrap(), 0.0).unwrap();
        assert!(matches!(s, Section::Polygon(_)));
        assert!((s.measure() - 4.0).abs() < 1e-12);
        assert!(cube.section(&Direction::basis(3, 0).unwrap(), 1.0).unwrap().is_empty());
    }
}
