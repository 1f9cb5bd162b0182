use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use convexlab::bodies::io::{read_body, to_json};
use convexlab::bodies::{Polytope, Representation, P2};
use convexlab::lab::{bs_chain_check, false_centre_scan, make_family, parse_range, stability_scan, FamilySpec};
use convexlab::measures::{
    affine_ratios, affine_surface_area, bm_symmetric, bonnesen_report, difference_body_gap, minkowski_q,
};
use convexlab::measures::bm::bm_polygon;
use convexlab::polar::{santalo_point, volume_product_report};
use convexlab::symmetrize::{full_reduction, isotropic_normalize, planar_double_steiner, rounding_pipeline, schwarz_round, steiner};
use convexlab::{Body, Direction, GeomError, Hyperplane, Meridian, Point, Polygon};
use serde_json::{json, Value};

use crate::{BodyCmd, Command, Io, Kind, LabCmd, MeasureArgs, Op, SymmetrizeArgs};

fn load(path: &Path) -> Result<Body> {
    let body = read_body(path)?;
    log::info!("read {} ({}, n = {})", path.display(), body.kind(), body.dim());
    Ok(body)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, v: &Value) -> Result<()> {
    emit(out, &(serde_json::to_string_pretty(v)? + "\n"))
}

fn parse_direction(spec: Option<&str>, n: usize) -> Result<Direction> {
    let Some(s) = spec else {
        return Ok(Direction::basis(n, 0)?);
    };
    let v: Vec<f64> = s.split(',').map(|x| x.trim().parse::<f64>()).collect::<std::result::Result<_, _>>().context("axis")?;
    if v.len() != n {
        return Err(GeomError::DimensionMismatch { expected: n, got: v.len() }.into());
    }
    Ok(Direction::normalized(Point::from_vec(v))?)
}

fn body_json(body: &Body, grid: Option<usize>) -> Result<String> {
    let body = match (body, grid) {
        (Body::Revolution(r), Some(g)) if matches!(r.meridian(), Meridian::Sampled(_) | Meridian::Sections(_)) => {
            Body::Revolution(r.with_meridian(Meridian::Sampled(r.meridian().sample(g)?))?)
        }
        _ => body.clone(),
    };
    Ok(to_json(&body)? + "\n")
}

pub fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Body(BodyCmd::Validate { io, tol }) => {
            let b = load(&io.body)?;
            let v = json!({
                "valid": true,
                "kind": b.kind(),
                "n": b.dim(),
                "volume": b.volume(),
                "centroid": b.centroid().as_slice(),
                "diameter": b.diameter(),
                "o_symmetric": b.is_o_symmetric(tol * b.diameter()),
            });
            emit_json(io.out.as_deref(), &v)
        }
        Command::Body(BodyCmd::Convert { io, to }) => {
            let b = load(&io.body)?;
            emit(io.out.as_deref(), &body_json(&convert(&b, to)?, None)?)
        }
        Command::Product(io) => {
            let b = load(&io.body)?;
            emit_json(io.out.as_deref(), &serde_json::to_value(volume_product_report(&b)?)?)
        }
        Command::Santalo(io) => {
            let b = load(&io.body)?;
            emit_json(io.out.as_deref(), &serde_json::to_value(santalo_point(&b)?)?)
        }
        Command::Symmetrize(args) => symmetrize(args),
        Command::Measure(args) => measure(args),
        Command::Lab(cmd) => lab(cmd),
    }
}

fn convert(b: &Body, to: Kind) -> Result<Body> {
    let pts: Vec<Point> = match b {
        Body::Polygon(p) => p.vertices().iter().map(|v| Point::from_vec(vec![v.x, v.y])).collect(),
        Body::Polytope(p) => p.vertices().to_vec(),
        Body::Revolution(_) => bail!(GeomError::Representation("bodies of revolution have no vertex form".into())),
    };
    Ok(match to {
        Kind::Polygon => {
            if b.dim() != 2 {
                bail!(GeomError::DimensionMismatch { expected: 2, got: b.dim() });
            }
            Body::Polygon(Polygon::hull(&pts.iter().map(|p| P2::new(p[0], p[1])).collect::<Vec<_>>())?)
        }
        Kind::PolytopeV => Body::Polytope(Polytope::from_vertices(pts)?.with_source(Representation::Vertices)),
        Kind::PolytopeH => Body::Polytope(Polytope::from_vertices(pts)?.with_source(Representation::Halfspaces)),
    })
}

fn symmetrize(a: SymmetrizeArgs) -> Result<()> {
    let b = load(&a.io.body)?;
    let n = b.dim();
    let (report, out): (Value, Body) = match a.op {
        Op::Steiner => {
            let u = parse_direction(a.axis.as_deref(), n)?;
            (json!({"op": "steiner", "offset": a.offset}), steiner(&b, &Hyperplane::new(u, a.offset))?)
        }
        Op::Schwarz => {
            let u = parse_direction(a.axis.as_deref(), n)?;
            (json!({"op": "schwarz"}), Body::Revolution(schwarz_round(&b, &u)?))
        }
        Op::Isotropic => {
            let (r, k) = isotropic_normalize(&b)?;
            (serde_json::to_value(r)?, k)
        }
        Op::Rounding => {
            let (r, c) = rounding_pipeline(&b)?;
            (serde_json::to_value(r)?, Body::Revolution(c))
        }
        Op::Full => match &b {
            Body::Polygon(p) => {
                let (r, q) = planar_double_steiner(p)?;
                (serde_json::to_value(r)?, Body::Polygon(q))
            }
            _ => {
                let (r, c) = full_reduction(&b)?;
                (serde_json::to_value(r)?, Body::Revolution(c))
            }
        },
    };
    emit(a.io.out.as_deref(), &body_json(&out, a.grid)?)?;
    match &a.report {
        Some(p) => emit_json(Some(p), &report),
        None => {
            eprintln!("{}", serde_json::to_string(&report)?);
            Ok(())
        }
    }
}

fn bm_any(b: &Body) -> Result<Value> {
    if let Body::Polygon(p) = b {
        if !b.is_o_symmetric(1e-8 * b.diameter()) {
            return Ok(serde_json::to_value(bm_polygon(p)?)?);
        }
    }
    Ok(serde_json::to_value(bm_symmetric(b)?)?)
}

fn measure(a: MeasureArgs) -> Result<()> {
    let b = load(&a.io.body)?;
    let none = !(a.q || a.bm || a.bonnesen || a.asa || a.ratios);
    let mut out = serde_json::Map::new();
    if a.q || none {
        let mut v = serde_json::to_value(minkowski_q(&b)?)?;
        if !matches!(b, Body::Revolution(_)) {
            v["difference_body_gap"] = json!(difference_body_gap(&b)?);
        }
        out.insert("q".into(), v);
    }
    if a.bm {
        out.insert("bm".into(), bm_any(&b)?);
    }
    if a.bonnesen {
        let Body::Polygon(p) = &b else {
            bail!(GeomError::Representation("Bonnesen report needs a polygon".into()));
        };
        out.insert("bonnesen".into(), serde_json::to_value(bonnesen_report(p)?)?);
    }
    if a.asa {
        let omega = match &b {
            Body::Revolution(r) => affine_surface_area(r)?,
            _ => 0.0,
        };
        out.insert("asa".into(), json!(omega));
    }
    if a.ratios {
        out.insert("ratios".into(), serde_json::to_value(affine_ratios(&b)?)?);
    }
    emit_json(a.io.out.as_deref(), &Value::Object(out))
}

fn revolution_of(io: &Io) -> Result<convexlab::RevolutionBody> {
    match load(&io.body)? {
        Body::Revolution(r) => Ok(r),
        _ => bail!(GeomError::Representation("false-centre scan needs a body of revolution".into())),
    }
}

fn lab(cmd: LabCmd) -> Result<()> {
    match cmd {
        LabCmd::Scan { family, n, eps, seed, timing, out } => {
            if !(2..=4).contains(&n) {
                bail!(GeomError::Precondition(format!("n = {n} outside 2..=4")));
            }
            let params = parse_range(&eps).map_err(GeomError::Precondition)?;
            let spec = FamilySpec::from_name(&family, n, params, seed)?;
            let members = make_family(&spec)?;
            log::info!("scanning {} members", members.len());
            let (records, slope) = stability_scan(&members, timing)?;
            let mut csv = String::from("param,deficit,bm_minus_1,q_max,seconds\n");
            for r in &records {
                writeln!(csv, "{},{},{},{},{}", r.param, r.deficit, r.bm_minus_1, r.q_max, r.seconds)?;
            }
            match slope {
                Some(s) => writeln!(csv, "# exponent {s}")?,
                None => writeln!(csv, "# exponent NaN")?,
            }
            emit(out.as_deref(), &csv)
        }
        LabCmd::Chain(io) => {
            let b = load(&io.body)?;
            emit_json(io.out.as_deref(), &serde_json::to_value(bs_chain_check(&b)?)?)
        }
        LabCmd::Falsecentre(io) => {
            let r = revolution_of(&io)?;
            emit_json(io.out.as_deref(), &serde_json::to_value(false_centre_scan(&r)?)?)
        }
    }
}
