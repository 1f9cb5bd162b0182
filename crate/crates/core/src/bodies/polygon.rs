//! Convex polygons in the plane, stored as counterclockwise vertex lists.

use nalgebra::{Matrix2, Vector2};

use crate::error::{GeomError, Result};

pub type P2 = Vector2<f64>;

/// A convex polygon with strictly convex counterclockwise vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<P2>,
}

fn cross(a: &P2, b: &P2) -> f64 {
    a.x * b.y - a.y * b.x
}

impl Polygon {
    /// Validating constructor: at least three vertices, every turn strictly
    /// counterclockwise, positive area.
    pub fn new(vertices: Vec<P2>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(GeomError::invalid("polygon.vertex_count", format!("{m} vertices")));
        }
        if vertices.iter().any(|v| !v.x.is_finite() || !v.y.is_finite()) {
            return Err(GeomError::invalid("polygon.finite", "non-finite coordinate"));
        }
        let scale = vertices.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1e-300);
        for i in 0..m {
            let a = vertices[i];
            let b = vertices[(i + 1) % m];
            let c = vertices[(i + 2) % m];
            let turn = cross(&(b - a), &(c - b));
            // `turn / |c - a|` is the distance of `b` from the chord `ac`.
            if turn <= 1e-14 * scale * (c - a).norm() {
                return Err(GeomError::invalid(
                    "polygon.strict_convexity",
                    format!("non-positive turn {turn:.3e} at vertex {}", (i + 1) % m),
                ));
            }
        }
        let poly = Self { vertices };
        // Strict convexity of every turn does not exclude winding twice.
        let total: f64 = (0..m)
            .map(|i| {
                let e0 = poly.vertices[(i + 1) % m] - poly.vertices[i];
                let e1 = poly.vertices[(i + 2) % m] - poly.vertices[(i + 1) % m];
                cross(&e0, &e1).atan2(e0.dot(&e1))
            })
            .sum();
        if (total - 2.0 * std::f64::consts::PI).abs() > 1e-6 {
            return Err(GeomError::invalid("polygon.simple", "vertex list winds more than once"));
        }
        if poly.area() <= 0.0 {
            return Err(GeomError::invalid("polygon.area", "area is not positive"));
        }
        Ok(poly)
    }

    /// Convex hull of arbitrary points (Andrew's monotone chain), dropping
    /// collinear and duplicate points.
    pub fn hull(points: &[P2]) -> Result<Self> {
        let mut pts: Vec<P2> = points.to_vec();
        pts.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
        let scale = pts.iter().map(|p| p.norm()).fold(0.0, f64::max).max(1e-300);
        // Middle points closer than this to the chord of their neighbours are dropped.
        let eps = 1e-13 * scale;
        let flat_at = |chain: &[P2], p: &P2| {
            let (a, b) = (chain[chain.len() - 2], chain[chain.len() - 1]);
            cross(&(b - a), &(p - b)) <= eps * (p - a).norm()
        };
        let mut lower: Vec<P2> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && flat_at(&lower, p) {
                lower.pop();
            }
            lower.push(*p);
        }
        let mut upper: Vec<P2> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && flat_at(&upper, p) {
                upper.pop();
            }
            upper.push(*p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        let mut clean: Vec<P2> = Vec::with_capacity(lower.len());
        for p in lower {
            if clean.last().map_or(true, |q: &P2| (p - q).norm() > 1e-13 * scale) {
                clean.push(p);
            }
        }
        while clean.len() > 1 && (clean[0] - clean[clean.len() - 1]).norm() <= 1e-13 * scale {
            clean.pop();
        }
        // Merging near-duplicates at the seam can leave a flat turn behind.
        let mut i = 0;
        while clean.len() > 3 && i < clean.len() {
            let m = clean.len();
            let (a, b, c) = (clean[(i + m - 1) % m], clean[i], clean[(i + 1) % m]);
            if cross(&(b - a), &(c - b)) <= 1e-14 * scale * (c - a).norm() {
                clean.remove(i);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        Self::new(clean)
    }

    pub fn from_coords(coords: &[[f64; 2]]) -> Result<Self> {
        Self::new(coords.iter().map(|c| P2::new(c[0], c[1])).collect())
    }

    /// Regular `m`-gon inscribed in the circle of radius `radius` about `center`.
    pub fn regular(m: usize, radius: f64, center: P2) -> Self {
        let vertices = (0..m)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                center + radius * P2::new(a.cos(), a.sin())
            })
            .collect();
        Self { vertices }
    }

    pub fn vertices(&self) -> &[P2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn edge(&self, i: usize) -> (P2, P2) {
        (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()])
    }

    pub fn area(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                cross(&a, &b)
            })
            .sum::<f64>()
            * 0.5
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len()).map(|i| {
            let (a, b) = self.edge(i);
            (b - a).norm()
        }).sum()
    }

    pub fn centroid(&self) -> P2 {
        // Shift to the first vertex for accuracy far from the origin.
        let o = self.vertices[0];
        let mut acc = P2::zeros();
        let mut area2 = 0.0;
        for i in 0..self.len() {
            let (a, b) = self.edge(i);
            let (a, b) = (a - o, b - o);
            let c = cross(&a, &b);
            area2 += c;
            acc += (a + b) * c;
        }
        o + acc / (3.0 * area2)
    }

    /// Second moments `∫ x xᵀ dx` over the polygon.
    pub fn second_moment(&self) -> Matrix2<f64> {
        let mut m = Matrix2::zeros();
        for i in 0..self.len() {
            let (a, b) = self.edge(i);
            let c = cross(&a, &b);
            // Triangle (o, a, b): ∫ x xᵀ = |T|/12 · (a aᵀ + b bᵀ + (a+b)(a+b)ᵀ) with signed area.
            let s = a + b;
            m += (a * a.transpose() + b * b.transpose() + s * s.transpose()) * (c / 24.0);
        }
        m
    }

    pub fn support(&self, d: &P2) -> f64 {
        self.vertices.iter().map(|v| v.dot(d)).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn diameter(&self) -> f64 {
        let (a, b) = self.diameter_pair();
        (self.vertices[a] - self.vertices[b]).norm()
    }

    /// Indices of a vertex pair realising the diameter.
    pub fn diameter_pair(&self) -> (usize, usize) {
        let mut best = (0, 0, -1.0);
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                let d = (self.vertices[i] - self.vertices[j]).norm_squared();
                if d > best.2 {
                    best = (i, j, d);
                }
            }
        }
        (best.0, best.1)
    }

    /// Halfplanes `⟨a, x⟩ <= b` with unit outward normals, one per edge.
    pub fn halfplanes(&self) -> Vec<(P2, f64)> {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                let e = b - a;
                let n = P2::new(e.y, -e.x).normalize();
                (n, n.dot(&a))
            })
            .collect()
    }

    /// Edge lengths paired with their unit outward normals.
    pub fn edges_with_normals(&self) -> Vec<(P2, f64)> {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                let e = b - a;
                (P2::new(e.y, -e.x).normalize(), e.norm())
            })
            .collect()
    }

    /// Signed distance margin of `p` from the boundary (positive inside).
    pub fn interior_margin(&self, p: &P2) -> f64 {
        self.halfplanes()
            .iter()
            .map(|(n, b)| b - n.dot(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: &P2, tol: f64) -> bool {
        self.interior_margin(p) >= -tol
    }

    pub fn translate(&self, v: &P2) -> Self {
        Self { vertices: self.vertices.iter().map(|p| p + v).collect() }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { vertices: self.vertices.iter().map(|p| p * s).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { vertices: self.vertices.iter().map(|p| -p).collect() }
    }

    /// Image under `x ↦ A x + b`; orientation is restored for reflections.
    pub fn map(&self, a: &Matrix2<f64>, b: &P2) -> Self {
        let mut vertices: Vec<P2> = self.vertices.iter().map(|p| a * p + b).collect();
        if a.determinant() < 0.0 {
            vertices.reverse();
        }
        Self { vertices }
    }

    /// Polar body about the interior point `z`.
    pub fn polar(&self, z: &P2) -> Result<Self> {
        let diam = self.diameter();
        let mut vertices = Vec::with_capacity(self.len());
        for (n, b) in self.halfplanes() {
            let gap = b - n.dot(z);
            if gap < 1e-9 * diam {
                return Err(GeomError::Domain(format!(
                    "polar centre is not interior (margin {gap:.3e})"
                )));
            }
            vertices.push(z + n / gap);
        }
        Self::hull(&vertices)
    }

    /// Interval `[lo, hi]` of the coordinate along `w` covered by the chord
    /// `{x : ⟨x, u⟩ = t}`, where `w` is `u` rotated by +90°.
    pub fn chord(&self, u: &P2, t: f64) -> Option<(f64, f64)> {
        let w = P2::new(-u.y, u.x);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.len() {
            let (a, b) = self.edge(i);
            let (sa, sb) = (a.dot(u) - t, b.dot(u) - t);
            if (sa <= 0.0 && sb >= 0.0) || (sa >= 0.0 && sb <= 0.0) {
                let p = if (sa - sb).abs() < 1e-300 {
                    // Edge lies in the line: both endpoints count.
                    lo = lo.min(a.dot(&w)).min(b.dot(&w));
                    hi = hi.max(a.dot(&w)).max(b.dot(&w));
                    continue;
                } else {
                    a + (b - a) * (sa / (sa - sb))
                };
                let s = p.dot(&w);
                lo = lo.min(s);
                hi = hi.max(s);
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Steiner symmetral about the line `{⟨x, u⟩ = c}`: every chord parallel
    /// to `u` is moved so its midpoint lies on the line.
    pub fn steiner(&self, u: &P2, c: f64) -> Result<Self> {
        let w = P2::new(-u.y, u.x);
        let mut pts = Vec::with_capacity(2 * self.len());
        for v in &self.vertices {
            let y = v.dot(&w);
            // chord along u at fixed w-coordinate y
            if let Some((lo, hi)) = self.chord(&w, y) {
                let half = 0.5 * (hi - lo);
                pts.push(y * w + (c + half) * u);
                pts.push(y * w + (c - half) * u);
            }
        }
        Self::hull(&pts)
    }

    /// Minkowski sum, exact as the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polygon) -> Result<Self> {
        let mut pts = Vec::with_capacity(self.len() * other.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a + b);
            }
        }
        Self::hull(&pts)
    }

    /// Largest violation of `other ⊂ self`, i.e. `max_v (⟨n,v⟩ - b)` over the
    /// vertices of `other` and the edges of `self` (non-positive if contained).
    pub fn containment_violation(&self, other: &Polygon) -> f64 {
        let hp = self.halfplanes();
        other
            .vertices
            .iter()
            .flat_map(|v| hp.iter().map(move |(n, b)| n.dot(v) - b))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Hausdorff distance between convex polygons, computed from vertex-to-polygon distances.
    pub fn hausdorff(&self, other: &Polygon) -> f64 {
        let one = |a: &Polygon, b: &Polygon| {
            a.vertices
                .iter()
                .map(|v| b.distance_to(v))
                .fold(0.0, f64::max)
        };
        one(self, other).max(one(other, self))
    }

    /// Euclidean distance from `p` to the polygon (zero inside).
    pub fn distance_to(&self, p: &P2) -> f64 {
        if self.contains(p, 0.0) {
            return 0.0;
        }
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                let e = b - a;
                let s = ((p - a).dot(&e) / e.norm_squared()).clamp(0.0, 1.0);
                (p - (a + e * s)).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }
}
