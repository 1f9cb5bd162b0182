mod common;

use std::f64::consts::PI;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{bm_polygon_oracle, q_oracle, zoom_min};
use convexlab::bodies::P2;
use convexlab::lab::families::random_polygon;
use convexlab::measures::{affine_surface_area, bm_distance_ball, bonnesen_report, minkowski_q};
use convexlab::polar::{mixed_volume_v1, polar, santalo_point};
use convexlab::symmetrize::{isotropic_normalize, steiner};
use convexlab::{kappa, Body, Direction, Hyperplane, Point, Polygon, RevolutionBody};

fn square() -> Polygon {
    Polygon::from_coords(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap()
}

#[test]
fn polar_of_square_is_cross_polytope() {
    let Body::Polygon(p) = polar(&Body::Polygon(square()), &Point::zeros(2)).unwrap() else { panic!() };
    let mut vs: Vec<(f64, f64)> = p.vertices().iter().map(|v| (v.x, v.y)).collect();
    vs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let want = [(-1.0, 0.0), (0.0, -1.0), (0.0, 1.0), (1.0, 0.0)];
    for (a, b) in vs.iter().zip(want) {
        assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12, "{vs:?}");
    }
}

#[test]
fn santalo_point_of_triangle_matches_grid_minimum() {
    let t = Polygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
    let sp = santalo_point(&Body::Polygon(t.clone())).unwrap();
    let area = |x: &[f64]| {
        let z = P2::new(x[0], x[1]);
        if t.interior_margin(&z) <= 1e-9 {
            return f64::INFINITY;
        }
        t.polar(&z).map(|p| p.area()).unwrap_or(f64::INFINITY)
    };
    let (x, v) = zoom_min(area, vec![0.0, 0.0], vec![1.0, 1.0], 40, 20, 4.0);
    assert!((sp.polar_volume - v).abs() < 1e-5);
    assert!((sp.z[0] - x[0]).abs() < 1e-5 && (sp.z[1] - x[1]).abs() < 1e-5);
    // The Santaló point of a triangle is its centroid.
    assert!((sp.z[0] - 1.0 / 3.0).abs() < 1e-7);
}

#[test]
fn steiner_of_triangle_about_x_axis() {
    let t = Body::Polygon(Polygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap());
    let h = Hyperplane::through_origin(Direction::basis(2, 1).unwrap());
    let Body::Polygon(s) = steiner(&t, &h).unwrap() else { panic!() };
    let want = Polygon::from_coords(&[[0.0, -0.5], [1.0, 0.0], [0.0, 0.5]]).unwrap();
    assert!(s.hausdorff(&want) < 1e-12);
    // Midpoint construction chord by chord.
    for k in 1..50 {
        let x = k as f64 / 50.0;
        let (lo, hi) = s.chord(&P2::new(1.0, 0.0), x).unwrap();
        assert!((hi - lo - (1.0 - x)).abs() < 1e-12 && (hi + lo).abs() < 1e-12);
    }
}

#[test]
fn mixed_volume_matches_finite_difference() {
    let k = square();
    let m = square().scale(2.0);
    let v1 = mixed_volume_v1(&Body::Polygon(k.clone()), &Body::Polygon(m.clone())).unwrap();
    let fd = |t: f64| (k.minkowski_sum(&m.scale(t)).unwrap().area() - k.area()) / (2.0 * t);
    // Richardson extrapolation removes the O(t) term.
    let est = 2.0 * fd(1e-4) - fd(2e-4);
    assert!((v1 - 8.0).abs() < 1e-12);
    assert!((v1 - est).abs() < 1e-6);
}

#[test]
fn q_of_random_polygons_matches_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..6 {
        let p = random_polygon(rng.random_range(3..9), &mut rng);
        let q = minkowski_q(&Body::Polygon(p.clone())).unwrap().q;
        assert!((q - q_oracle(&p)).abs() < 1e-4);
    }
}

#[test]
fn bm_of_square_matches_ellipse_grid() {
    let d = bm_distance_ball(&Body::Polygon(square())).unwrap();
    assert!((d - 2f64.sqrt()).abs() < 1e-4);
    assert!((d - bm_polygon_oracle(&square())).abs() < 1e-4);
}

#[test]
fn oblique_section_of_ball_matches_membership() {
    let ball = RevolutionBody::ball(3, 1.0).unwrap();
    let s = ball.oblique_section(0.25, 0.25).unwrap();
    let b = Body::Revolution(ball);
    for k in 1..20 {
        let t = -1.0 + 2.0 * k as f64 / 20.0;
        let exact = (1.0 - t * t - 0.0625 * (1.0 + t) * (1.0 + t)).max(0.0).sqrt();
        assert!((s.chord_radius(t) - exact).abs() < 1e-12);
        // Largest w with (t, η(1+t), w) inside the ball, by scanning.
        let y = 0.25 * (1.0 + t);
        let w = (0..=20000)
            .map(|j| j as f64 / 20000.0)
            .take_while(|&w| b.contains(&Point::from_vec(vec![t, y, w]), 0.0))
            .last()
            .unwrap_or(0.0);
        assert!((w - exact).abs() <= 1e-4, "t={t}: {w} vs {exact}");
    }
}

#[test]
fn bonnesen_square_closed_forms() {
    let r = bonnesen_report(&square()).unwrap();
    assert!((r.w - 8.0 / PI).abs() < 1e-12);
    assert!((r.r_circ - 2f64.sqrt()).abs() < 1e-12 && (r.r_in - 1.0).abs() < 1e-9);
    let slack = 64.0 / (PI * PI) - 16.0 / PI - (2f64.sqrt() - 1.0).powi(2);
    assert!((r.slack - slack).abs() < 1e-9);
}

#[test]
fn affine_surface_area_is_affine_covariant() {
    // Ω(TK) = |det T|^{(n-1)/(n+1)} Ω(K); for n = 3 and semi-axes (2, 1/2, 1/2), det T = 1/2.
    let e = RevolutionBody::ellipsoid(Direction::basis(3, 0).unwrap(), 2.0, 0.5).unwrap();
    let omega = affine_surface_area(&e).unwrap();
    assert!((omega / (4.0 * PI * 0.5f64.sqrt()) - 1.0).abs() < 1e-5, "{omega}");
}

#[test]
fn isotropic_constant_of_disc_and_ball() {
    let disc = Body::Polygon(Polygon::regular(2048, 1.0, P2::zeros()));
    let (r, _) = isotropic_normalize(&disc).unwrap();
    assert!((r.l_k - 0.5 / PI.sqrt()).abs() < 1e-5);
    let (r, _) = isotropic_normalize(&Body::Revolution(RevolutionBody::ball(3, 2.0).unwrap())).unwrap();
    assert!((r.l_k - (kappa(3).powf(-2.0 / 3.0) / 5.0).sqrt()).abs() < 1e-9);
}
