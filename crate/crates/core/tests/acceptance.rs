//! Acceptance run: one pass/fail line per criterion.

mod common;

use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{bm_meridian_oracle, bm_polygon_oracle, chord, gauge, hv, q_oracle, support};
use convexlab::bodies::P2;
use convexlab::lab::families::{
    random_concave_profile, random_polygon, random_polytope, random_symmetric_polytope, random_unit,
};
use convexlab::lab::{bs_chain_check, caps_cut_ball, false_centre_scan, fit_exponent, section_containment_check, stability_scan, Member};
use convexlab::measures::minksym::graph_hull;
use convexlab::measures::{
    affine_ratios, bm_distance_ball, bonnesen_report, difference_body_gap, minkowski_q, minksym_bound_check,
};
use convexlab::measures::q::q_polygon;
use convexlab::polar::{geominimal_ellipsoid_bound, geominimal_upper, polar, santalo_point, volume_product_report};
use convexlab::symmetrize::steiner;
use convexlab::{kappa, Body, Direction, Hyperplane, Meridian, Point, Polygon, Polytope, RevolutionBody};

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn santalo_z(b: &Body) -> Result<(Point, f64), String> {
    let sp = santalo_point(b).map_err(e)?;
    Ok((Point::from_vec(sp.z), sp.polar_volume))
}

fn symmetric_polygon(rng: &mut ChaCha8Rng) -> Polygon {
    let m = rng.random_range(2..7);
    let half = random_polygon(m.max(3), rng);
    let pts: Vec<P2> = half.vertices().iter().flat_map(|v| [*v, -v]).collect();
    Polygon::hull(&pts).unwrap()
}

/// Hausdorff distance from a polygon to the largest triangle on three of its vertices.
fn nearest_vertex_triangle(p: &Polygon) -> f64 {
    let v = p.vertices();
    let mut best = (0.0, [0, 1, 2]);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                let a = ((v[j] - v[i]).perp(&(v[k] - v[i]))).abs();
                if a > best.0 {
                    best = (a, [i, j, k]);
                }
            }
        }
    }
    let t = Polygon::hull(&best.1.map(|i| v[i])).unwrap();
    p.hausdorff(&t)
}

fn c1_equality_cases() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in [3, 4] {
        let ball = Body::Revolution(RevolutionBody::ball(n, 1.0).map_err(e)?);
        let p = volume_product_report(&ball).map_err(e)?;
        check(p.deficit.abs() <= 1e-7, format!("n={n} deficit {}", p.deficit))?;
        let r = affine_ratios(&ball).map_err(e)?;
        check((r.isoperimetric - 1.0).abs() <= 1e-5, format!("n={n} isoperimetric ratio {}", r.isoperimetric))?;
        check((r.lutwak - 1.0).abs() <= 1e-5, format!("n={n} Lutwak ratio {}", r.lutwak))?;
        let g = geominimal_upper(&ball).map_err(e)?;
        let rhs = geominimal_ellipsoid_bound(&ball);
        check(((g - rhs) / rhs).abs() <= 1e-5, format!("n={n} geominimal {g} vs {rhs}"))?;
        worst = worst.max(p.deficit.abs()).max((r.isoperimetric - 1.0).abs()).max((r.lutwak - 1.0).abs());
    }
    Ok(format!("worst deviation {worst:.2e}"))
}

fn c2_exact_products() -> Outcome {
    let sq = Body::Polygon(Polygon::from_coords(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).map_err(e)?);
    let cube = Body::Polytope(Polytope::cube(3));
    let mut msg = String::new();
    for (b, exact) in [(sq, 8.0), (cube, 32.0 / 3.0)] {
        let n = b.dim();
        let p = volume_product_report(&b).map_err(e)?;
        let k2 = kappa(n) * kappa(n);
        check((p.product - exact).abs() <= 1e-9, format!("n={n} product {}", p.product))?;
        check(p.product < k2, "not below κ_n²")?;
        check(p.product > k2 / 2f64.powi(n as i32) && p.product > k2 / 4f64.powi(n as i32), "Kuperberg bound")?;
        check(p.kuperberg_symmetric_ok && p.kuperberg_general_ok, "Kuperberg flags")?;
        msg += &format!("n={n} product {:.12} ", p.product);
    }
    Ok(msg)
}

fn c3_bipolar_and_certificate() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut worst_h, mut worst_c) = (0.0f64, 0.0f64);
    for k in 0..200 {
        let n = 2 + k % 2;
        let m = rng.random_range(n + 2..n + 14);
        let b = Body::Polytope(random_polytope(n, m, &mut rng));
        let diam = b.diameter();
        let (z, _) = santalo_z(&b)?;
        let kz = polar(&b, &z).map_err(e)?;
        let back = polar(&kz, &z).map_err(e)?;
        let h = b.hausdorff(&back).map_err(e)? / diam;
        let c = (kz.centroid() - &z).norm() / diam;
        check(h <= 1e-8, format!("body {k}: bipolar residual {h:.2e}"))?;
        check(c <= 1e-6, format!("body {k}: centroid certificate {c:.2e}"))?;
        worst_h = worst_h.max(h);
        worst_c = worst_c.max(c);
    }
    Ok(format!("200 bodies, bipolar {worst_h:.1e}·diam, certificate {worst_c:.1e}·diam"))
}

fn c4_monotonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = f64::INFINITY;
    for k in 0..100 {
        let p = random_polygon(rng.random_range(3..12), &mut rng);
        let b = Body::Polygon(p);
        let u = random_unit(2, &mut rng);
        let off = b.centroid().dot(u.as_point()) + rng.random_range(-0.2..0.2);
        let sym = steiner(&b, &Hyperplane::new(u, off)).map_err(e)?;
        let (_, v0) = santalo_z(&b)?;
        let (_, v1) = santalo_z(&sym)?;
        check(v1 >= v0 - 1e-8, format!("planar body {k}: {v1} < {v0}"))?;
        worst = worst.min(v1 - v0);
    }
    for k in 0..30 {
        let n = 3 + k % 2;
        let prof = random_concave_profile(129, &mut rng).map_err(e)?;
        let r = RevolutionBody::new(Direction::basis(n, 0).map_err(e)?, Meridian::Sampled(prof)).map_err(e)?;
        let off = r.axial_centroid() + rng.random_range(-0.2..0.2);
        let b = Body::Revolution(r);
        let sym = steiner(&b, &Hyperplane::new(Direction::basis(n, 0).map_err(e)?, off)).map_err(e)?;
        let (_, v0) = santalo_z(&b)?;
        let (_, v1) = santalo_z(&sym)?;
        check(v1 >= v0 - 1e-8, format!("revolution body {k}: {v1} < {v0}"))?;
        worst = worst.min(v1 - v0);
    }
    // Polar growth under Steiner symmetrization about hyperplanes through o.
    for k in 0..40 {
        let n = 2 + k % 2;
        let b = Body::Polytope(random_symmetric_polytope(n, rng.random_range(n..n + 6), &mut rng));
        let u = random_unit(n, &mut rng);
        let sym = steiner(&b, &Hyperplane::through_origin(u)).map_err(e)?;
        let o = Point::zeros(n);
        let (v0, v1) = (polar(&b, &o).map_err(e)?.volume(), polar(&sym, &o).map_err(e)?.volume());
        check(v1 >= v0 - 1e-8, format!("o-symmetric body {k}: {v1} < {v0}"))?;
    }
    let mut failures = 0;
    for _ in 0..50 {
        let p = random_symmetric_polytope(3, rng.random_range(3..9), &mut rng);
        let u = random_unit(3, &mut rng);
        let rep = section_containment_check(&p, &u, 20).map_err(e)?;
        failures += rep.failures;
        check(rep.vol_polar_symmetral >= rep.vol_polar - 1e-8, "Fubini consequence")?;
    }
    check(failures == 0, format!("{failures} containment violations"))?;
    Ok(format!("smallest polar-volume gain {worst:.2e}, 0 containment violations"))
}

fn c5_polygon_inequalities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut min_slack, mut min_gap) = (f64::INFINITY, f64::INFINITY);
    let mut tri = 0;
    let mut symm = 0;
    let (mut near, mut near_worst) = (0, 0.0f64);
    for k in 0..500 {
        let p = match k % 10 {
            0 => symmetric_polygon(&mut rng),
            1 => random_polygon(3, &mut rng),
            _ => random_polygon(rng.random_range(3..16), &mut rng),
        };
        let b = bonnesen_report(&p).map_err(e)?;
        let body = Body::Polygon(p.clone());
        let gap = difference_body_gap(&body).map_err(e)?;
        let q = q_polygon(&p, None).map_err(e)?.q;
        check(b.slack >= -1e-9, format!("polygon {k}: Bonnesen slack {}", b.slack))?;
        check(gap >= -1e-9, format!("polygon {k}: gap {gap}"))?;
        check((gap.abs() <= 1e-4) == (q - 1.0 <= 1e-4), format!("polygon {k}: gap {gap} but q {q}"))?;
        check((1.0 - 1e-9..=2.0 + 1e-9).contains(&q), format!("polygon {k}: q {q}"))?;
        if p.len() == 3 {
            check((q - 2.0).abs() <= 1e-3, format!("triangle {k}: q {q}"))?;
        } else {
            check(q < 2.0, format!("polygon {k}: q {q} with {} vertices", p.len()))?;
            if q >= 2.0 - 1e-3 {
                let h = nearest_vertex_triangle(&p) / p.diameter();
                check(h <= 1e-2, format!("polygon {k}: q {q} but {h:.2e}·diam from any triangle"))?;
                near += 1;
                near_worst = near_worst.max(h);
            }
        }
        min_slack = min_slack.min(b.slack);
        min_gap = min_gap.min(gap);
        tri += (p.len() == 3) as usize;
        symm += (q - 1.0 <= 1e-4) as usize;
    }
    Ok(format!(
        "500 polygons ({tri} triangles, {symm} symmetric, {near} near-triangles within {near_worst:.1e}·diam), min slack {min_slack:.2e}, min gap {min_gap:.2e}"
    ))
}

fn c6_profile_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = f64::INFINITY;
    for k in 0..100 {
        let g = random_concave_profile(rng.random_range(9..200), &mut rng).map_err(e)?;
        let eps = q_polygon(&graph_hull(&g).map_err(e)?, None).map_err(e)?.q - 1.0;
        let rep = minksym_bound_check(&g, eps).map_err(e)?;
        check(rep.worst_margin >= -1e-9, format!("profile {k}: margin {}", rep.worst_margin))?;
        worst = worst.min(rep.worst_margin);
    }
    Ok(format!("100 profiles, smallest margin {worst:.2e}"))
}

fn c7_caps_exponent() -> Outcome {
    let mut msg = String::new();
    for (n, target, lo, hi) in [(3, 0.5, 3e-4, 3.3e-2), (4, 0.4, 3.3e-4, 3.5e-2)] {
        let members: Vec<Member> = (0..12)
            .map(|j| {
                let eps: f64 = lo * (hi / lo as f64).powf(j as f64 / 11.0);
                Member { param: eps, body: Body::Revolution(caps_cut_ball(n, eps).unwrap()) }
            })
            .collect();
        let (records, _) = stability_scan(&members, false).map_err(e)?;
        let used = records.iter().filter(|r| (1e-4..=1e-2).contains(&r.deficit)).count();
        let slope = fit_exponent(&records).ok_or("too few records in the fit window")?;
        check((slope - target).abs() <= 0.10, format!("n={n}: slope {slope:.3}, target {target}"))?;
        msg += &format!("n={n} slope {slope:.3} ({used} points) ");
    }
    Ok(msg)
}

fn c8_false_centre() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in [3, 4] {
        for (a, r) in [(1.0, 1.0), (1.7, 0.6), (0.5, 1.3), (3.0, 1.0)] {
            let el = RevolutionBody::ellipsoid(Direction::basis(n, 0).map_err(e)?, a, r).map_err(e)?;
            let rep = false_centre_scan(&el).map_err(e)?;
            check((rep.q_max - 1.0).abs() <= 1e-6, format!("ellipsoid n={n} ({a}, {r}): q_max {}", rep.q_max))?;
            check(rep.f_spread <= 1e-6, format!("ellipsoid n={n} ({a}, {r}): f spread {}", rep.f_spread))?;
            worst = worst.max((rep.q_max - 1.0).abs()).max(rep.f_spread);
        }
    }
    let caps = false_centre_scan(&caps_cut_ball(3, 0.05).map_err(e)?).map_err(e)?;
    check(caps.q_max >= 1.0 + 1e-4, format!("caps-cut ball q_max {}", caps.q_max))?;
    Ok(format!("ellipsoids within {worst:.1e}, caps-cut ball q_max {:.6}", caps.q_max))
}

fn c9_chain() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let k2 = kappa(3) * kappa(3);
    let mut branches = (0, 0);
    for k in 0..100 {
        let m = rng.random_range(5..14);
        let b = Body::Polytope(random_polytope(3, m, &mut rng));
        let rep = bs_chain_check(&b).map_err(|err| format!("body {k}: {err}"))?;
        check(rep.monotone, format!("body {k}: chain {:?}", rep.values))?;
        check(rep.values[2] <= k2 * (1.0 + 1e-6), format!("body {k}: final value {}", rep.values[2]))?;
        if rep.branch == "axis" {
            branches.0 += 1;
        } else {
            branches.1 += 1;
        }
    }
    Ok(format!("100 chains monotone ({} axis, {} diameter branch)", branches.0, branches.1))
}

fn c10_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = [0.0f64; 4];
    for k in 0..25 {
        let p = random_polygon(rng.random_range(3..10), &mut rng);
        let d = (minkowski_q(&Body::Polygon(p.clone())).map_err(e)?.q - q_oracle(&p)).abs();
        check(d <= 1e-4, format!("q instance {k}: off by {d:.2e}"))?;
        worst[0] = worst[0].max(d);
    }
    for k in 0..25 {
        let (value, oracle) = if k < 15 {
            let p = symmetric_polygon(&mut rng);
            (bm_distance_ball(&Body::Polygon(p.clone())).map_err(e)?, bm_polygon_oracle(&p))
        } else {
            let n = 3 + k % 2;
            let r = match k % 3 {
                0 => RevolutionBody::ellipsoid(Direction::basis(n, 0).map_err(e)?, rng.random_range(0.5..2.0), 1.0),
                1 => caps_cut_ball(n, rng.random_range(0.01..0.3)),
                _ => convexlab::lab::families::lp_revolution(n, rng.random_range(1.2..6.0)),
            }
            .map_err(e)?;
            let o = bm_meridian_oracle(r.meridian());
            (bm_distance_ball(&Body::Revolution(r)).map_err(e)?, o)
        };
        let d = (value - oracle).abs();
        check(d <= 1e-4, format!("bm instance {k}: {value} vs oracle {oracle}"))?;
        worst[1] = worst[1].max(d);
    }
    for k in 0..25 {
        let n = 2 + k % 2;
        let b = if n == 2 {
            Body::Polygon(random_polygon(rng.random_range(3..10), &mut rng))
        } else {
            Body::Polytope(random_polytope(3, rng.random_range(4..12), &mut rng))
        };
        let u = random_unit(n, &mut rng);
        let off = b.centroid().dot(u.as_point()) + rng.random_range(-0.3..0.3);
        let s = steiner(&b, &Hyperplane::new(u.clone(), off)).map_err(e)?;
        let ((vs, hs), (_, hs2)) = (hv(&b), hv(&s));
        let diam = b.diameter();
        let uu = u.as_point();
        let mut d: f64 = 0.0;
        let cen = b.centroid();
        // Interior points of K from convex combinations of vertex pairs, projected onto H.
        for i in 0..200 {
            let (a, c) = (&vs[i % vs.len()], &vs[(i * 7 + 1) % vs.len()]);
            let t = (i as f64 + 0.5) / 200.0;
            let v = &cen + (a * t + c * (1.0 - t) - &cen) * 0.95;
            let p = &v - uu * (v.dot(uu) - off);
            let Some((a0, a1)) = chord(&hs, &p, uu) else { continue };
            let Some((b0, b1)) = chord(&hs2, &p, uu) else {
                return Err(format!("steiner instance {k}: missing chord"));
            };
            d = d.max(((a1 - a0) - (b1 - b0)).abs()).max((b0 + b1).abs());
        }
        check(d <= 1e-9 * diam, format!("steiner instance {k}: chord error {d:.2e}"))?;
        check(((s.volume() - b.volume()) / b.volume()).abs() <= 1e-9, format!("steiner instance {k}: volume"))?;
        worst[2] = worst[2].max(d / diam);
    }
    for k in 0..25 {
        let n = 2 + k % 2;
        let b = if n == 2 {
            Body::Polygon(random_polygon(rng.random_range(3..10), &mut rng))
        } else {
            Body::Polytope(random_polytope(3, rng.random_range(4..12), &mut rng))
        };
        let (vs, hs) = hv(&b);
        let z = b.centroid();
        let pz = polar(&b, &z).map_err(e)?;
        let (pvs, phs) = hv(&pz);
        let mut d: f64 = 0.0;
        for _ in 0..200 {
            let v = random_unit(n, &mut rng).as_point().clone();
            let h_polar = support(&pvs, &v) - z.dot(&v);
            let g_k = gauge(&hs, &z, &v);
            let g_polar = gauge(&phs, &z, &v);
            let h_k = support(&vs, &v) - z.dot(&v);
            d = d.max((h_polar - g_k).abs() / g_k).max((g_polar - h_k).abs() / h_k);
        }
        check(d <= 1e-9, format!("polar instance {k}: duality error {d:.2e}"))?;
        worst[3] = worst[3].max(d);
    }
    Ok(format!(
        "q {:.1e}, bm {:.1e}, steiner {:.1e}·diam, polar {:.1e} (relative)",
        worst[0], worst[1], worst[2], worst[3]
    ))
}

fn main() {
    let criteria: [(&str, f64, fn() -> Outcome); 10] = [
        ("equality cases (ball n=3,4)", 10.0, c1_equality_cases),
        ("exact products (square, cube)", 1.0, c2_exact_products),
        ("bipolar involution and Santalo certificate", 120.0, c3_bipolar_and_certificate),
        ("monotonicity suite", 300.0, c4_monotonicity),
        ("polygon inequality suite", 120.0, c5_polygon_inequalities),
        ("concave profile bound", 60.0, c6_profile_bound),
        ("caps-cut exponent", 600.0, c7_caps_exponent),
        ("false-centre diagnostics", 300.0, c8_false_centre),
        ("volume-product chain", 600.0, c9_chain),
        ("oracle equivalence", 600.0, c10_oracles),
    ];
    let only: Vec<usize> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect())
        .unwrap_or_default();
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        failed += outcome.is_err() as usize;
        let slow = if secs > *budget { " (over time budget)" } else { "" };
        println!("criterion {:>2} {status}  {name}: {detail} [{secs:.1} s / {budget:.0} s{slow}]", i + 1);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
