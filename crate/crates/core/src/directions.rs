//! Deterministic direction sets on the unit sphere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::Point;

/// `count` roughly uniform unit vectors in ℝⁿ: equally spaced angles on the
/// circle, a Fibonacci lattice on S², seeded Gaussian samples otherwise.
pub fn sphere_grid(dim: usize, count: usize, seed: u64) -> Vec<Point> {
    match dim {
        2 => (0..count)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
                Point::from_vec(vec![a.cos(), a.sin()])
            })
            .collect(),
        3 => fibonacci_sphere(count),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(count);
            while out.len() < count {
                let v = Point::from_fn(dim, |_, _| StandardNormal.sample(&mut rng));
                let n = v.norm();
                if n > 1e-6 {
                    out.push(v / n);
                }
            }
            out
        }
    }
}

pub fn fibonacci_sphere(count: usize) -> Vec<Point> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|k| {
            let z = 1.0 - (2.0 * k as f64 + 1.0) / count as f64;
            let rho = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * k as f64;
            Point::from_vec(vec![rho * phi.cos(), rho * phi.sin(), z])
        })
        .collect()
}

/// Seeded uniformly random unit vector.
pub fn random_direction<R: rand::Rng>(dim: usize, rng: &mut R) -> Point {
    loop {
        let v = Point::from_fn(dim, |_, _| StandardNormal.sample(rng));
        let n = v.norm();
        if n > 1e-6 {
            return v / n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_unit() {
        for dim in 2..=4 {
            let g = sphere_grid(dim, 100, 1);
            assert_eq!(g.len(), 100);
            assert!(g.iter().all(|v| (v.norm() - 1.0).abs() < 1e-14));
        }
    }
}
