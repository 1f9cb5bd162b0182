//! Convex polytopes in ℝⁿ (small n) carrying both the vertex and the facet
//! description, with a cached pulling triangulation.
//!
//! Vertex and facet enumeration are brute force over `n`-subsets. That is
//! the right trade at the sizes used here (tens of facets, n ≤ 5) and keeps
//! degenerate (non-simple) polytopes such as cubes exact.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::linalg::{affine_rank, embedded_simplex_volume, simplex_volume, solve, span_basis, Point};
use crate::lp::LinearProgram;

/// Which description a polytope was built from; kept for round-tripping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Representation {
    Halfspaces,
    Vertices,
}

/// A facet `⟨normal, x⟩ = offset` with unit outward normal and the indices of
/// the polytope vertices lying on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Facet {
    pub normal: Point,
    pub offset: f64,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    source: Representation,
    simplices: OnceLock<Vec<Vec<usize>>>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices && self.facets == other.facets
    }
}

/// Iterator over the `k`-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in (i + 1)..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

fn scale_of(points: &[Point]) -> f64 {
    points.iter().map(|p| p.amax()).fold(0.0, f64::max).max(1e-300)
}

/// Unit normal of the hyperplane through `n` points in ℝⁿ, or `None` if they
/// are affinely dependent.
fn hyperplane_through(points: &[&Point]) -> Option<(Point, f64)> {
    let n = points[0].len();
    let diffs: Vec<Point> = points[1..].iter().map(|p| *p - points[0]).collect();
    let scale = diffs.iter().map(|d| d.norm()).fold(0.0, f64::max);
    let basis = span_basis(&diffs, 1e-10 * scale.max(1e-300));
    if basis.len() != n - 1 {
        return None;
    }
    // Normal: component of a coordinate axis orthogonal to the basis, best conditioned.
    let mut best: Option<Point> = None;
    for k in 0..n {
        let mut e = Point::zeros(n);
        e[k] = 1.0;
        for b in &basis {
            let c = b.dot(&e);
            e -= b * c;
        }
        if best.as_ref().map_or(true, |b| e.norm() > b.norm()) {
            best = Some(e);
        }
    }
    let normal = best?.normalize();
    let offset = normal.dot(points[0]);
    Some((normal, offset))
}

fn dedupe_points(points: Vec<Point>, tol: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for p in points {
        if !out.iter().any(|q| (q - &p).amax() <= tol) {
            out.push(p);
        }
    }
    out
}

impl Polytope {
    /// Builds the polytope `{x : ⟨aᵢ, x⟩ <= bᵢ}` dropping redundant halfspaces.
    pub fn from_halfspaces(dim: usize, rows: Vec<(Point, f64)>) -> Result<Self> {
        Self::build_from_halfspaces(dim, rows, false)
    }

    /// As [`Polytope::from_halfspaces`] but rejects redundant halfspaces.
    pub fn from_halfspaces_strict(dim: usize, rows: Vec<(Point, f64)>) -> Result<Self> {
        Self::build_from_halfspaces(dim, rows, true)
    }

    fn build_from_halfspaces(dim: usize, rows: Vec<(Point, f64)>, strict: bool) -> Result<Self> {
        if dim == 0 {
            return Err(GeomError::invalid("polytope.dimension", "dimension 0"));
        }
        let mut normed: Vec<(Point, f64)> = Vec::with_capacity(rows.len());
        for (i, (a, b)) in rows.into_iter().enumerate() {
            if a.len() != dim {
                return Err(GeomError::DimensionMismatch { expected: dim, got: a.len() });
            }
            if !b.is_finite() || a.iter().any(|v| !v.is_finite()) {
                return Err(GeomError::invalid("polytope.finite", format!("halfspace {i}")));
            }
            let norm = a.norm();
            if norm < 1e-14 {
                if b < 0.0 {
                    return Err(GeomError::invalid("polytope.nonempty", format!("halfspace {i} is 0 <= {b}")));
                }
                continue;
            }
            normed.push((a / norm, b / norm));
        }
        Self::check_bounded(dim, &normed)?;
        let scale = normed.iter().map(|(_, b)| b.abs()).fold(0.0, f64::max).max(1e-300);
        let tol = 1e-9 * scale;
        let mut candidates = Vec::new();
        for subset in Combinations::new(normed.len(), dim) {
            let a = DMatrix::from_fn(dim, dim, |i, j| normed[subset[i]].0[j]);
            let b = DVector::from_iterator(dim, subset.iter().map(|&i| normed[i].1));
            if a.determinant().abs() < 1e-12 {
                continue;
            }
            let Some(x) = solve(a, &b) else { continue };
            if normed.iter().all(|(a, b)| a.dot(&x) <= b + tol) {
                candidates.push(x);
            }
        }
        let vertices = dedupe_points(candidates, 1e-9 * scale);
        let refs: Vec<&Point> = vertices.iter().collect();
        if vertices.len() < dim + 1 || affine_rank(&refs, 1e-9 * scale) < dim {
            return Err(GeomError::invalid("polytope.interior_nonempty", "polytope is lower dimensional or empty"));
        }
        let mut facets: Vec<Facet> = Vec::new();
        for (i, (a, b)) in normed.iter().enumerate() {
            let on: Vec<usize> = (0..vertices.len())
                .filter(|&k| (a.dot(&vertices[k]) - b).abs() <= tol)
                .collect();
            let on_refs: Vec<&Point> = on.iter().map(|&k| &vertices[k]).collect();
            let is_facet = on.len() >= dim && affine_rank(&on_refs, 1e-9 * scale) == dim - 1;
            let duplicate = facets.iter().any(|f| (&f.normal - a).amax() < 1e-9 && (f.offset - b).abs() < tol);
            if !is_facet || duplicate {
                if strict {
                    return Err(GeomError::invalid(
                        "polytope.irredundant",
                        format!("halfspace {i} does not define a facet"),
                    ));
                }
                continue;
            }
            facets.push(Facet { normal: a.clone(), offset: *b, vertices: on });
        }
        Ok(Self { dim, vertices, facets, source: Representation::Halfspaces, simplices: OnceLock::new() })
    }

    fn check_bounded(dim: usize, rows: &[(Point, f64)]) -> Result<()> {
        // Bounded iff the recession cone {d : A d <= 0} is trivial; probe ±eₖ.
        for k in 0..dim {
            for sign in [1.0, -1.0] {
                let mut objective = vec![0.0; dim];
                objective[k] = -sign;
                let mut lp = LinearProgram::new(objective);
                for (a, b) in rows {
                    lp.le(a.iter().copied().collect(), *b);
                }
                match lp.minimize() {
                    Ok(_) => {}
                    Err(GeomError::Domain(msg)) if msg.contains("unbounded") => {
                        return Err(GeomError::invalid("polytope.bounded", format!("unbounded along {}e{k}", if sign > 0.0 { "+" } else { "-" })));
                    }
                    Err(_) => return Err(GeomError::invalid("polytope.nonempty", "halfspaces have empty intersection")),
                }
            }
        }
        Ok(())
    }

    /// Convex hull of `points`, dropping points that are not extreme.
    pub fn from_vertices(points: Vec<Point>) -> Result<Self> {
        Self::build_from_vertices(points, false)
    }

    /// As [`Polytope::from_vertices`] but rejects non-extreme points.
    pub fn from_vertices_strict(points: Vec<Point>) -> Result<Self> {
        Self::build_from_vertices(points, true)
    }

    fn build_from_vertices(points: Vec<Point>, strict: bool) -> Result<Self> {
        let dim = points.first().map(|p| p.len()).unwrap_or(0);
        if dim == 0 {
            return Err(GeomError::invalid("polytope.dimension", "no points"));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, got: p.len() });
        }
        if points.iter().any(|p| p.iter().any(|v| !v.is_finite())) {
            return Err(GeomError::invalid("polytope.finite", "non-finite coordinate"));
        }
        let scale = scale_of(&points);
        let tol = 1e-9 * scale;
        let n_in = points.len();
        let points = dedupe_points(points, 1e-12 * scale);
        if strict && points.len() != n_in {
            return Err(GeomError::invalid("polytope.extreme_vertices", "duplicate vertex"));
        }
        let refs: Vec<&Point> = points.iter().collect();
        if points.len() < dim + 1 || affine_rank(&refs, tol) < dim {
            return Err(GeomError::invalid("polytope.full_dimensional", "hull is lower dimensional"));
        }
        let centre = refs.iter().fold(Point::zeros(dim), |acc, p| acc + *p) / points.len() as f64;
        let mut planes: Vec<(Point, f64)> = Vec::new();
        for subset in Combinations::new(points.len(), dim) {
            let sub: Vec<&Point> = subset.iter().map(|&i| &points[i]).collect();
            let Some((mut normal, mut offset)) = hyperplane_through(&sub) else { continue };
            if normal.dot(&centre) > offset {
                normal = -normal;
                offset = -offset;
            }
            if planes.iter().any(|(a, b)| (a - &normal).amax() < 1e-9 && (b - offset).abs() < tol) {
                continue;
            }
            if points.iter().all(|p| normal.dot(p) <= offset + tol) {
                planes.push((normal, offset));
            }
        }
        // Extreme points: those whose incident facet normals span ℝⁿ.
        let mut keep = Vec::new();
        for (i, p) in points.iter().enumerate() {
            let normals: Vec<Point> = planes
                .iter()
                .filter(|(a, b)| (a.dot(p) - b).abs() <= tol)
                .map(|(a, _)| a.clone())
                .collect();
            if span_basis(&normals, 1e-9).len() == dim {
                keep.push(i);
            } else if strict {
                return Err(GeomError::invalid("polytope.extreme_vertices", format!("vertex {i} is not extreme")));
            }
        }
        let vertices: Vec<Point> = keep.into_iter().map(|i| points[i].clone()).collect();
        let facets = planes
            .into_iter()
            .map(|(normal, offset)| {
                let on = (0..vertices.len())
                    .filter(|&k| (normal.dot(&vertices[k]) - offset).abs() <= tol)
                    .collect();
                Facet { normal, offset, vertices: on }
            })
            .collect();
        Ok(Self { dim, vertices, facets, source: Representation::Vertices, simplices: OnceLock::new() })
    }

    /// Assembles a polytope whose vertex/facet incidences are already known
    /// (used by exact polarity). No enumeration is performed.
    pub(crate) fn from_parts(dim: usize, vertices: Vec<Point>, facets: Vec<Facet>, source: Representation) -> Self {
        Self { dim, vertices, facets, source, simplices: OnceLock::new() }
    }

    /// Axis-parallel box `Π [lo_k, hi_k]`.
    pub fn cuboid(lo: &[f64], hi: &[f64]) -> Result<Self> {
        let dim = lo.len();
        let mut rows = Vec::new();
        for k in 0..dim {
            let mut e = Point::zeros(dim);
            e[k] = 1.0;
            rows.push((e.clone(), hi[k]));
            rows.push((-e, -lo[k]));
        }
        Self::from_halfspaces(dim, rows)
    }

    /// The cube `[-1, 1]ⁿ`.
    pub fn cube(dim: usize) -> Self {
        Self::cuboid(&vec![-1.0; dim], &vec![1.0; dim]).expect("cube is valid")
    }

    /// The cross-polytope `conv{±eₖ}`.
    pub fn cross_polytope(dim: usize) -> Self {
        let mut pts = Vec::new();
        for k in 0..dim {
            let mut e = Point::zeros(dim);
            e[k] = 1.0;
            pts.push(e.clone());
            pts.push(-e);
        }
        Self::from_vertices(pts).expect("cross-polytope is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn source(&self) -> Representation {
        self.source
    }

    pub fn with_source(mut self, source: Representation) -> Self {
        self.source = source;
        self
    }

    pub fn halfspaces(&self) -> Vec<(Point, f64)> {
        self.facets.iter().map(|f| (f.normal.clone(), f.offset)).collect()
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                d = d.max((&self.vertices[i] - &self.vertices[j]).norm());
            }
        }
        d
    }

    pub fn support(&self, d: &Point) -> f64 {
        self.vertices.iter().map(|v| v.dot(d)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Smallest facet slack `bᵢ - ⟨aᵢ, p⟩` (positive inside).
    pub fn interior_margin(&self, p: &Point) -> f64 {
        self.facets
            .iter()
            .map(|f| f.offset - f.normal.dot(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        self.interior_margin(p) >= -tol
    }

    fn tol(&self) -> f64 {
        1e-9 * scale_of(&self.vertices)
    }

    /// Faces of dimension `d - 1` of the face with vertex set `face` (of dimension `d`).
    fn subfaces(&self, face: &[usize], d: usize) -> Vec<Vec<usize>> {
        let tol = self.tol();
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        let set: BTreeSet<usize> = face.iter().copied().collect();
        for f in &self.facets {
            let inter: Vec<usize> = f.vertices.iter().copied().filter(|v| set.contains(v)).collect();
            if inter.len() < d || inter.len() == face.len() {
                continue;
            }
            let refs: Vec<&Point> = inter.iter().map(|&k| &self.vertices[k]).collect();
            if affine_rank(&refs, tol) == d - 1 {
                out.insert(inter);
            }
        }
        out.into_iter().collect()
    }

    /// Pulling triangulation of the face `face` of dimension `d`.
    fn triangulate_face(&self, face: &[usize], d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![face[0]]];
        }
        if d == 1 {
            // Extreme pair along the edge direction.
            let a = &self.vertices[face[0]];
            let dir = face.iter().map(|&k| &self.vertices[k] - a).max_by(|x, y| x.norm().partial_cmp(&y.norm()).unwrap()).unwrap();
            let key = |k: &usize| dir.dot(&self.vertices[*k]);
            let lo = *face.iter().min_by(|x, y| key(x).partial_cmp(&key(y)).unwrap()).unwrap();
            let hi = *face.iter().max_by(|x, y| key(x).partial_cmp(&key(y)).unwrap()).unwrap();
            return vec![vec![lo, hi]];
        }
        let apex = *face.iter().min().unwrap();
        let mut out = Vec::new();
        for sub in self.subfaces(face, d) {
            if sub.contains(&apex) {
                continue;
            }
            for mut s in self.triangulate_face(&sub, d - 1) {
                s.push(apex);
                out.push(s);
            }
        }
        out
    }

    /// Full-dimensional simplices (vertex indices) of a pulling triangulation.
    pub fn simplices(&self) -> &[Vec<usize>] {
        self.simplices.get_or_init(|| {
            let all: Vec<usize> = (0..self.vertices.len()).collect();
            let apex = 0usize;
            let mut out = Vec::new();
            for f in &self.facets {
                if f.vertices.contains(&apex) {
                    continue;
                }
                for mut s in self.triangulate_face(&f.vertices, self.dim - 1) {
                    s.push(apex);
                    out.push(s);
                }
            }
            if self.dim == 1 {
                return self.triangulate_face(&all, 1);
            }
            out
        })
    }

    fn simplex_points(&self, s: &[usize]) -> Vec<&Point> {
        s.iter().map(|&k| &self.vertices[k]).collect()
    }

    pub fn volume(&self) -> f64 {
        self.simplices().iter().map(|s| simplex_volume(&self.simplex_points(s))).sum()
    }

    /// Volume and centroid in one pass over the triangulation.
    pub fn volume_centroid(&self) -> (f64, Point) {
        let mut vol = 0.0;
        let mut acc = Point::zeros(self.dim);
        let origin = &self.vertices[0];
        for s in self.simplices() {
            let pts = self.simplex_points(s);
            let v = simplex_volume(&pts);
            let mean = pts.iter().fold(Point::zeros(self.dim), |a, p| a + (*p - origin)) / pts.len() as f64;
            vol += v;
            acc += mean * v;
        }
        (vol, origin + acc / vol)
    }

    pub fn centroid(&self) -> Point {
        self.volume_centroid().1
    }

    /// Second moments `∫ (x - c)(x - c)ᵀ dx` about the point `c`.
    pub fn second_moment_about(&self, c: &Point) -> DMatrix<f64> {
        let n = self.dim;
        let mut m = DMatrix::zeros(n, n);
        for s in self.simplices() {
            let pts: Vec<Point> = self.simplex_points(s).iter().map(|p| *p - c).collect();
            let refs: Vec<&Point> = pts.iter().collect();
            let v = simplex_volume(&refs);
            let sum = pts.iter().fold(Point::zeros(n), |a, p| a + p);
            let mut local = &sum * sum.transpose();
            for p in &pts {
                local += p * p.transpose();
            }
            m += local * (v / ((n + 1) * (n + 2)) as f64);
        }
        m
    }

    /// `(n-1)`-volume of every facet, in facet order.
    pub fn facet_areas(&self) -> Vec<f64> {
        self.facets
            .iter()
            .map(|f| {
                if self.dim == 1 {
                    return 1.0;
                }
                self.triangulate_face(&f.vertices, self.dim - 1)
                    .iter()
                    .map(|s| embedded_simplex_volume(&self.simplex_points(s)))
                    .sum()
            })
            .collect()
    }

    /// Image under `x ↦ A x + b` (A invertible).
    pub fn map(&self, a: &DMatrix<f64>, b: &Point) -> Result<Self> {
        let inv_t = a
            .clone()
            .try_inverse()
            .ok_or_else(|| GeomError::Domain("singular linear map".into()))?
            .transpose();
        let vertices: Vec<Point> = self.vertices.iter().map(|v| a * v + b).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let n = &inv_t * &f.normal;
                let norm = n.norm();
                let normal = n / norm;
                let offset = normal.dot(&vertices[f.vertices[0]]);
                Facet { normal, offset, vertices: f.vertices.clone() }
            })
            .collect();
        Ok(Self::from_parts(self.dim, vertices, facets, self.source))
    }

    pub fn translate(&self, v: &Point) -> Self {
        let vertices = self.vertices.iter().map(|p| p + v).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet { normal: f.normal.clone(), offset: f.offset + f.normal.dot(v), vertices: f.vertices.clone() })
            .collect();
        Self::from_parts(self.dim, vertices, facets, self.source)
    }

    /// Polar body about the interior point `z`, built from the known duality
    /// of faces (facets of K ↔ vertices of Kᶻ).
    pub fn polar(&self, z: &Point) -> Result<Self> {
        let diam = self.diameter();
        let mut pv = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let gap = f.offset - f.normal.dot(z);
            if gap < 1e-9 * diam {
                return Err(GeomError::Domain(format!("polar centre is not interior (margin {gap:.3e})")));
            }
            pv.push(z + &f.normal / gap);
        }
        let mut pf = Vec::with_capacity(self.vertices.len());
        for (k, v) in self.vertices.iter().enumerate() {
            let d = v - z;
            let len = d.norm();
            let normal = &d / len;
            let offset = normal.dot(z) + 1.0 / len;
            let on: Vec<usize> = self
                .facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.vertices.contains(&k))
                .map(|(i, _)| i)
                .collect();
            pf.push(Facet { normal, offset, vertices: on });
        }
        let source = match self.source {
            Representation::Halfspaces => Representation::Vertices,
            Representation::Vertices => Representation::Halfspaces,
        };
        Ok(Self::from_parts(self.dim, pv, pf, source))
    }

    /// Section by `{x : ⟨x, u⟩ = t}` in the coordinates `y` of `x = t u + B y`,
    /// where the columns of `basis` span `u^⊥`. `None` for empty or
    /// lower-dimensional intersections.
    pub fn section(&self, u: &Point, t: f64, basis: &DMatrix<f64>) -> Option<Polytope> {
        let tol = self.tol();
        // The section lies in the ball |y| <= R, so rows with offset beyond R are redundant.
        // Dropping them keeps nearly parallel facets from inflating the tolerance of the build.
        let radius = self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let mut rows = Vec::new();
        for f in &self.facets {
            let a = basis.transpose() * &f.normal;
            let rhs = f.offset - t * f.normal.dot(u);
            // Facets within 1e-9 rad of orthogonal to u^⊥ only bound the slab.
            if a.norm() < 1e-9 * f.normal.norm() {
                if rhs < -tol {
                    return None;
                }
                continue;
            }
            if rhs > radius * a.norm() + tol {
                continue;
            }
            rows.push((a, rhs));
        }
        // Vertices on the slab boundary keep the section well defined near the ends.
        let h_hi = self.support(u);
        let h_lo = -self.support(&-u);
        if t >= h_hi - 1e-12 * (h_hi - h_lo) || t <= h_lo + 1e-12 * (h_hi - h_lo) {
            return None;
        }
        Polytope::from_halfspaces(self.dim - 1, rows).ok()
    }

    /// Volume of the section `{⟨x, u⟩ = t}` (zero when empty).
    pub fn section_volume(&self, u: &Point, t: f64, basis: &DMatrix<f64>) -> f64 {
        self.section(u, t, basis).map_or(0.0, |s| s.volume())
    }

    /// Largest vertex mismatch between two polytopes with matching vertex sets;
    /// an upper bound for their Hausdorff distance.
    pub fn vertex_match_distance(&self, other: &Polytope) -> f64 {
        let one = |a: &Polytope, b: &Polytope| {
            a.vertices
                .iter()
                .map(|v| b.vertices.iter().map(|w| (v - w).norm()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max)
        };
        one(self, other).max(one(other, self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::point;

    #[test]
    fn cube_volume_and_facets() {
        let c = Polytope::cube(3);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert!((c.volume() - 8.0).abs() < 1e-12);
        assert!(c.centroid().norm() < 1e-14);
        for a in c.facet_areas() {
            assert!((a - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn vertex_hull_of_cube_matches() {
        let c = Polytope::cube(4);
        let h = Polytope::from_vertices(c.vertices().to_vec()).unwrap();
        assert_eq!(h.facets().len(), 8);
        assert!((h.volume() - 16.0).abs() < 1e-11);
    }

    #[test]
    fn cross_polytope_volume() {
        let x = Polytope::cross_polytope(3);
        assert_eq!(x.facets().len(), 8);
        assert!((x.volume() - 4.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn strict_constructors_reject_redundancy() {
        let mut rows = Polytope::cube(2).halfspaces();
        rows.push((point(&[1.0, 1.0]), 5.0));
        let e = Polytope::from_halfspaces_strict(2, rows.clone()).unwrap_err();
        assert_eq!(e.invariant(), Some("polytope.irredundant"));
        assert_eq!(Polytope::from_halfspaces(2, rows).unwrap().facets().len(), 4);
        let mut pts = Polytope::cube(2).vertices().to_vec();
        pts.push(point(&[0.0, 0.0]));
        assert_eq!(Polytope::from_vertices_strict(pts).unwrap_err().invariant(), Some("polytope.extreme_vertices"));
    }

    #[test]
    fn unbounded_is_rejected() {
        let rows = vec![(point(&[1.0, 0.0]), 1.0), (point(&[0.0, 1.0]), 1.0)];
        assert_eq!(Polytope::from_halfspaces(2, rows).unwrap_err().invariant(), Some("polytope.bounded"));
    }

    #[test]
    fn cube_polar_is_cross_polytope() {
        let p = Polytope::cube(3).polar(&Point::zeros(3)).unwrap();
        assert!((p.volume() - 4.0 / 3.0).abs() < 1e-13);
        let back = p.polar(&Point::zeros(3)).unwrap();
        assert!(back.vertex_match_distance(&Polytope::cube(3)) < 1e-14);
    }

    #[test]
    fn cube_section_is_square() {
        let u = point(&[1.0, 0.0, 0.0]);
        let basis = crate::linalg::complement_basis(&u);
        let s = Polytope::cube(3).section(&u, 0.0, &basis).unwrap();
        assert!((s.volume() - 4.0).abs() < 1e-12);
        assert!(Polytope::cube(3).section(&u, 1.0, &basis).is_none());
    }

    #[test]
    fn second_moment_of_cube() {
        let c = Polytope::cube(3);
        let m = c.second_moment_about(&Point::zeros(3));
        // ∫_{[-1,1]^3} x² = 8/3
        assert!((m[(0, 0)] - 8.0 / 3.0).abs() < 1e-12);
        assert!(m[(0, 1)].abs() < 1e-12);
    }
}
