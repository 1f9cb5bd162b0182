//! JSON body files.
//!
//! ```json
//! {"kind": "polytope_h", "n": 2, "data": [{"a": [1, 0], "b": 1}, ...]}
//! {"kind": "polytope_v", "n": 3, "data": [[1, 1, 1], ...]}
//! {"kind": "polygon",    "n": 2, "data": [[0, 0], [1, 0], [0, 1]]}
//! {"kind": "revolution", "n": 3, "data": {"axis": [1, 0, 0]},
//!  "meridian": {"t": [...], "r": [...], "exact": {"type": "ellipse", ...}}}
//! ```
//!
//! The optional `exact` field keeps closed-form meridians exact across a
//! round trip; readers that ignore it still get a valid sampled profile.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Body, Direction, Meridian, Polygon, Polytope, Profile, Representation, RevolutionBody, P2};
use crate::error::{GeomError, Result};
use crate::linalg::Point;

/// Nodes used when a meridian without closed form is written out.
pub const SAMPLE_NODES: usize = 2049;

#[derive(Debug, Serialize, Deserialize)]
struct BodyFile {
    kind: String,
    n: usize,
    data: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meridian: Option<MeridianFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct MeridianFile {
    t: Vec<f64>,
    r: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exact: Option<ExactMeridian>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum ExactMeridian {
    Ellipse { center: f64, half_len: f64, radius: f64 },
    Lp { center: f64, half_len: f64, radius: f64, p: f64 },
    Truncated { inner: Box<ExactMeridian>, lo: f64, hi: f64 },
}

#[derive(Debug, Serialize, Deserialize)]
struct HalfspaceRow {
    a: Vec<f64>,
    b: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct RevolutionData {
    axis: Vec<f64>,
}

fn schema(detail: impl Into<String>) -> GeomError {
    GeomError::invalid("file.schema", detail)
}

fn exact_of(m: &Meridian) -> Option<ExactMeridian> {
    match m {
        Meridian::Ellipse { center, half_len, radius } => {
            Some(ExactMeridian::Ellipse { center: *center, half_len: *half_len, radius: *radius })
        }
        Meridian::Lp { center, half_len, radius, p } => {
            Some(ExactMeridian::Lp { center: *center, half_len: *half_len, radius: *radius, p: *p })
        }
        Meridian::Truncated { inner, lo, hi } => {
            exact_of(inner).map(|e| ExactMeridian::Truncated { inner: Box::new(e), lo: *lo, hi: *hi })
        }
        _ => None,
    }
}

fn meridian_of(e: &ExactMeridian) -> Meridian {
    match e {
        ExactMeridian::Ellipse { center, half_len, radius } => {
            Meridian::Ellipse { center: *center, half_len: *half_len, radius: *radius }
        }
        ExactMeridian::Lp { center, half_len, radius, p } => {
            Meridian::Lp { center: *center, half_len: *half_len, radius: *radius, p: *p }
        }
        ExactMeridian::Truncated { inner, lo, hi } => {
            Meridian::Truncated { inner: Arc::new(meridian_of(inner)), lo: *lo, hi: *hi }
        }
    }
}

fn points_of(data: Value, n: usize) -> Result<Vec<Vec<f64>>> {
    let pts: Vec<Vec<f64>> = serde_json::from_value(data).map_err(|e| schema(format!("point list: {e}")))?;
    if let Some(p) = pts.iter().find(|p| p.len() != n) {
        return Err(GeomError::DimensionMismatch { expected: n, got: p.len() });
    }
    Ok(pts)
}

/// Parses and validates a body; reports the first violated invariant.
pub fn from_json(text: &str) -> Result<Body> {
    let file: BodyFile = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    let n = file.n;
    if !(2..=4).contains(&n) {
        return Err(GeomError::invalid("body.dimension", format!("n = {n}")));
    }
    match file.kind.as_str() {
        "polytope_h" => {
            let rows: Vec<HalfspaceRow> =
                serde_json::from_value(file.data).map_err(|e| schema(format!("halfspace list: {e}")))?;
            let mut hs = Vec::with_capacity(rows.len());
            for row in rows {
                if row.a.len() != n {
                    return Err(GeomError::DimensionMismatch { expected: n, got: row.a.len() });
                }
                hs.push((Point::from_vec(row.a), row.b));
            }
            Ok(Body::Polytope(Polytope::from_halfspaces_strict(n, hs)?))
        }
        "polytope_v" => {
            let pts = points_of(file.data, n)?;
            Ok(Body::Polytope(Polytope::from_vertices_strict(pts.into_iter().map(Point::from_vec).collect())?))
        }
        "polygon" => {
            if n != 2 {
                return Err(GeomError::invalid("polygon.dimension", format!("n = {n}")));
            }
            let pts = points_of(file.data, 2)?;
            Ok(Body::Polygon(Polygon::new(pts.iter().map(|p| P2::new(p[0], p[1])).collect())?))
        }
        "revolution" => {
            let data: RevolutionData =
                serde_json::from_value(file.data).map_err(|e| schema(format!("revolution data: {e}")))?;
            if data.axis.len() != n {
                return Err(GeomError::DimensionMismatch { expected: n, got: data.axis.len() });
            }
            let axis = Direction::new(Point::from_vec(data.axis))?;
            let mf = file.meridian.ok_or_else(|| schema("revolution body without meridian"))?;
            let profile = Profile::new(mf.t, mf.r)?;
            let meridian = match mf.exact {
                Some(e) => meridian_of(&e),
                None => Meridian::Sampled(profile),
            };
            Ok(Body::Revolution(RevolutionBody::new(axis, meridian)?))
        }
        other => Err(GeomError::invalid("body.kind", format!("unknown kind `{other}`"))),
    }
}

fn to_file(body: &Body) -> Result<BodyFile> {
    let n = body.dim();
    let vecs = |pts: &[Point]| Value::from(pts.iter().map(|p| p.as_slice().to_vec()).collect::<Vec<_>>());
    Ok(match body {
        Body::Polygon(p) => BodyFile {
            kind: "polygon".into(),
            n,
            data: Value::from(p.vertices().iter().map(|v| vec![v.x, v.y]).collect::<Vec<_>>()),
            meridian: None,
        },
        Body::Polytope(p) if p.source() == Representation::Halfspaces => {
            let rows: Vec<HalfspaceRow> =
                p.halfspaces().into_iter().map(|(a, b)| HalfspaceRow { a: a.as_slice().to_vec(), b }).collect();
            BodyFile {
                kind: "polytope_h".into(),
                n,
                data: serde_json::to_value(rows).map_err(|e| GeomError::Internal(e.to_string()))?,
                meridian: None,
            }
        }
        Body::Polytope(p) => BodyFile { kind: "polytope_v".into(), n, data: vecs(p.vertices()), meridian: None },
        Body::Revolution(r) => {
            let profile = r.meridian().sample(SAMPLE_NODES)?;
            BodyFile {
                kind: "revolution".into(),
                n,
                data: serde_json::to_value(RevolutionData { axis: r.axis().as_point().as_slice().to_vec() })
                    .map_err(|e| GeomError::Internal(e.to_string()))?,
                meridian: Some(MeridianFile {
                    t: profile.t().to_vec(),
                    r: profile.r().to_vec(),
                    exact: exact_of(r.meridian()),
                }),
            }
        }
    })
}

pub fn to_json(body: &Body) -> Result<String> {
    serde_json::to_string_pretty(&to_file(body)?).map_err(|e| GeomError::Internal(e.to_string()))
}

pub fn read_body(path: &Path) -> Result<Body> {
    let text = std::fs::read_to_string(path).map_err(|e| schema(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_body(path: &Path, body: &Body) -> Result<()> {
    std::fs::write(path, to_json(body)? + "\n").map_err(|e| GeomError::Domain(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polytope_round_trip() {
        let cube = Body::Polytope(Polytope::cube(3));
        let back = from_json(&to_json(&cube).unwrap()).unwrap();
        assert_eq!(back.kind(), "polytope_h");
        assert!((back.volume() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn ball_keeps_exact_meridian() {
        let ball = Body::Revolution(RevolutionBody::ball(3, 1.0).unwrap());
        let back = from_json(&to_json(&ball).unwrap()).unwrap();
        assert!((back.volume() - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn first_violation_is_named() {
        let text = r#"{"kind": "polytope_h", "n": 2, "data": [
            {"a": [1, 0], "b": 1}, {"a": [-1, 0], "b": 1},
            {"a": [0, 1], "b": 1}, {"a": [0, -1], "b": 1}, {"a": [1, 1], "b": 5}]}"#;
        assert_eq!(from_json(text).unwrap_err().invariant(), Some("polytope.irredundant"));
        let text = r#"{"kind": "polygon", "n": 2, "data": [[0, 0], [0, 1], [1, 0]]}"#;
        assert!(from_json(text).unwrap_err().invariant().is_some());
        let text = r#"{"kind": "blob", "n": 2, "data": []}"#;
        assert_eq!(from_json(text).unwrap_err().invariant(), Some("body.kind"));
    }
}
