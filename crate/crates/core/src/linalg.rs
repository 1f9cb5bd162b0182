//! Small dense linear-algebra helpers shared by the body representations.

use nalgebra::{DMatrix, DVector};

pub type Point = DVector<f64>;

/// Volume of the unit ball in dimension `n`, `π^{n/2} / Γ(n/2 + 1)`.
///
/// Evaluated through the exact recursion `κ_n = 2π/n · κ_{n-2}` so every
/// value is a short product of exactly representable factors and π.
pub fn kappa(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0,
        _ => 2.0 * std::f64::consts::PI / n as f64 * kappa(n - 2),
    }
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

pub fn point(coords: &[f64]) -> Point {
    DVector::from_column_slice(coords)
}

/// Orthonormal basis of the complement of the unit vector `u`, as the columns
/// of an `n x (n-1)` matrix. Deterministic in `u`.
pub fn complement_basis(u: &Point) -> DMatrix<f64> {
    let n = u.len();
    let mut basis: Vec<Point> = Vec::with_capacity(n - 1);
    // Seed with the coordinate axes least aligned with u.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| u[a].abs().partial_cmp(&u[b].abs()).unwrap());
    for &k in &order {
        if basis.len() == n - 1 {
            break;
        }
        let mut e = Point::zeros(n);
        e[k] = 1.0;
        e -= u * u.dot(&e);
        for b in &basis {
            e -= b * b.dot(&e);
        }
        let norm = e.norm();
        if norm > 1e-8 {
            basis.push(e / norm);
        }
    }
    DMatrix::from_columns(&basis)
}

/// Orthonormal basis of the linear span of `vectors` (Gram-Schmidt with a
/// relative drop tolerance).
pub fn span_basis(vectors: &[Point], tol: f64) -> Vec<Point> {
    let mut basis: Vec<Point> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&w);
                w -= b * c;
            }
        }
        let norm = w.norm();
        if norm > tol {
            basis.push(w / norm);
        }
    }
    basis
}

/// Dimension of the affine hull of `points`.
pub fn affine_rank(points: &[&Point], tol: f64) -> usize {
    if points.is_empty() {
        return 0;
    }
    let base = points[0];
    let diffs: Vec<Point> = points[1..].iter().map(|p| *p - base).collect();
    span_basis(&diffs, tol).len()
}

/// `|det(p_1 - p_0, ..., p_n - p_0)| / n!` for a full-dimensional simplex.
pub fn simplex_volume(vertices: &[&Point]) -> f64 {
    let n = vertices.len() - 1;
    let m = DMatrix::from_fn(n, n, |i, j| vertices[j + 1][i] - vertices[0][i]);
    m.determinant().abs() / factorial(n)
}

/// `(k)`-dimensional volume of a simplex with `k+1` vertices embedded in a
/// space of any dimension, through the Gram determinant.
pub fn embedded_simplex_volume(vertices: &[&Point]) -> f64 {
    let k = vertices.len() - 1;
    if k == 0 {
        return 1.0;
    }
    let edges: Vec<Point> = vertices[1..].iter().map(|p| *p - vertices[0]).collect();
    let gram = DMatrix::from_fn(k, k, |i, j| edges[i].dot(&edges[j]));
    gram.determinant().max(0.0).sqrt() / factorial(k)
}

/// Solves the square system, returning `None` when it is numerically singular.
pub fn solve(a: DMatrix<f64>, b: &Point) -> Option<Point> {
    let lu = a.lu();
    let x = lu.solve(b)?;
    if x.iter().all(|v| v.is_finite()) {
        Some(x)
    } else {
        None
    }
}

/// Symmetric inverse square root through the eigendecomposition.
pub fn inverse_sqrt_spd(m: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    let eig = m.clone().symmetric_eigen();
    if eig.eigenvalues.iter().any(|&l| l <= 0.0 || !l.is_finite()) {
        return None;
    }
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l.sqrt()));
    Some(&eig.eigenvectors * d * eig.eigenvectors.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_matches_closed_forms() {
        let pi = std::f64::consts::PI;
        assert_eq!(kappa(2), pi);
        assert!((kappa(3) - 4.0 * pi / 3.0).abs() < 1e-15);
        assert!((kappa(4) - pi * pi / 2.0).abs() < 1e-15);
    }

    #[test]
    fn complement_is_orthonormal() {
        let u = point(&[1.0, 2.0, -0.5, 0.3]).normalize();
        let b = complement_basis(&u);
        let g = b.transpose() * &b;
        assert!((g - DMatrix::identity(3, 3)).norm() < 1e-14);
        assert!((b.transpose() * &u).norm() < 1e-14);
    }

    #[test]
    fn unit_simplex_volume() {
        let pts = [point(&[0., 0., 0.]), point(&[1., 0., 0.]), point(&[0., 1., 0.]), point(&[0., 0., 1.])];
        let refs: Vec<&Point> = pts.iter().collect();
        assert!((simplex_volume(&refs) - 1.0 / 6.0).abs() < 1e-15);
        assert!((embedded_simplex_volume(&refs[1..]) - 3f64.sqrt() / 2.0).abs() < 1e-14);
    }
}
