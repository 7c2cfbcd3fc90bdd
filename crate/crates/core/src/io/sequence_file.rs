//! JSON sequence files.
//!
//! ```json
//! {
//!   "format": "udseq.sequence.v1",
//!   "domain": { "kind": "transported", "dimension": 1,
//!               "base": "right_half_plane",
//!               "map": [[-1.0, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 0.0]] },
//!   "points": [ [[0.5, 0.0]], [[0.5, 0.7585837018395336]] ],
//!   "image_points": [ [[0.3333333333333333, 0.0]], ... ],
//!   "meta": { "epsilon": 0.5, "delta": 0.7, "method": "disc-horocycle",
//!             "tool_version": "udseq 0.1.0" }
//! }
//! ```
//!
//! Each point is an array of `[re, im]` coordinates. Points of transported
//! domains are stored in base (chart) coordinates; `image_points` carries
//! their images for readers and is checked against the map on decode.
//! Floats are written in shortest round-trip form, so decoding reproduces
//! every coordinate bit for bit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TOOL_VERSION;
use crate::error::{Error, Result};
use crate::geometry::{BaseDomain, Domain, MoebiusMap, Point};
use crate::sequences::{Method, PointSequence, SequenceMeta};

pub const FORMAT_TAG: &str = "udseq.sequence.v1";

type Coord = [f64; 2];

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceFile {
    format: String,
    domain: DomainRecord,
    points: Vec<Vec<Coord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    image_points: Option<Vec<Vec<Coord>>>,
    meta: MetaRecord,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum DomainKind {
    UnitDisc,
    RightHalfPlane,
    UnitBall,
    Polydisc,
    Transported,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum BaseKind {
    UnitDisc,
    RightHalfPlane,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DomainRecord {
    kind: DomainKind,
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<BaseKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    map: Option<[Coord; 4]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MetaRecord {
    epsilon: Option<f64>,
    delta: f64,
    method: String,
    tool_version: String,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn coord(z: Complex64) -> Coord {
    [z.re, z.im]
}

fn point_record(p: &Point) -> Vec<Coord> {
    p.coords().iter().copied().map(coord).collect()
}

fn domain_record(domain: &Domain) -> DomainRecord {
    let (kind, base, map) = match domain {
        Domain::UnitDisc => (DomainKind::UnitDisc, None, None),
        Domain::RightHalfPlane => (DomainKind::RightHalfPlane, None, None),
        Domain::UnitBall(_) => (DomainKind::UnitBall, None, None),
        Domain::Polydisc(_) => (DomainKind::Polydisc, None, None),
        Domain::Transported { base, map } => {
            let base = match base {
                BaseDomain::UnitDisc => BaseKind::UnitDisc,
                BaseDomain::RightHalfPlane => BaseKind::RightHalfPlane,
            };
            (
                DomainKind::Transported,
                Some(base),
                Some(map.coefficients().map(coord)),
            )
        }
    };
    DomainRecord {
        kind,
        dimension: domain.dimension(),
        base,
        map,
    }
}

fn domain_from_record(rec: &DomainRecord) -> Result<Domain> {
    let one_dimensional = |domain: Domain| {
        if rec.dimension != 1 {
            return Err(schema("domain.dimension", "must be 1 for this kind"));
        }
        Ok(domain)
    };
    if rec.kind != DomainKind::Transported && (rec.base.is_some() || rec.map.is_some()) {
        return Err(schema(
            "domain",
            "`base` and `map` are only allowed for transported domains",
        ));
    }
    match rec.kind {
        DomainKind::UnitDisc => one_dimensional(Domain::UnitDisc),
        DomainKind::RightHalfPlane => one_dimensional(Domain::RightHalfPlane),
        DomainKind::UnitBall => {
            Domain::unit_ball(rec.dimension).map_err(|_| schema("domain.dimension", "must be >= 1"))
        }
        DomainKind::Polydisc => {
            Domain::polydisc(rec.dimension).map_err(|_| schema("domain.dimension", "must be >= 1"))
        }
        DomainKind::Transported => {
            let base = match rec.base {
                Some(BaseKind::UnitDisc) => BaseDomain::UnitDisc,
                Some(BaseKind::RightHalfPlane) => BaseDomain::RightHalfPlane,
                None => return Err(schema("domain.base", "missing for transported domain")),
            };
            let [a, b, c, d] = rec
                .map
                .ok_or_else(|| schema("domain.map", "missing for transported domain"))?
                .map(|[re, im]| Complex64::new(re, im));
            let map =
                MoebiusMap::new(a, b, c, d).map_err(|e| schema("domain.map", e.to_string()))?;
            one_dimensional(Domain::transported(base, map))
        }
    }
}

pub fn encode_sequence(seq: &PointSequence) -> Result<Vec<u8>> {
    let image_points = match seq.domain() {
        Domain::Transported { .. } => Some(
            seq.image_points()?
                .iter()
                .map(point_record)
                .collect::<Vec<_>>(),
        ),
        _ => None,
    };
    let file = SequenceFile {
        format: FORMAT_TAG.to_string(),
        domain: domain_record(seq.domain()),
        points: seq.points().iter().map(point_record).collect(),
        image_points,
        meta: MetaRecord {
            epsilon: seq.meta().epsilon,
            delta: seq.meta().delta,
            method: seq.meta().method.as_str().to_string(),
            tool_version: TOOL_VERSION.to_string(),
        },
    };
    let mut bytes = serde_json::to_vec_pretty(&file).map_err(|e| schema("", e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Parses and validates a sequence file. Structural problems are reported as
/// [`Error::Schema`] with the offending field path; a point outside the
/// declared domain as [`Error::PointOutsideDomain`] with its index.
pub fn decode_sequence(bytes: &[u8]) -> Result<PointSequence> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let file: SequenceFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner().to_string())
    })?;
    if file.format != FORMAT_TAG {
        return Err(schema(
            "format",
            format!("expected `{FORMAT_TAG}`, found `{}`", file.format),
        ));
    }
    let domain = domain_from_record(&file.domain)?;

    let points = file
        .points
        .iter()
        .enumerate()
        .map(|(i, coords)| {
            if coords.len() != domain.dimension() {
                return Err(schema(
                    format!("points[{i}]"),
                    format!(
                        "expected {} coordinates, found {}",
                        domain.dimension(),
                        coords.len()
                    ),
                ));
            }
            Point::new(
                coords
                    .iter()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect(),
            )
            .map_err(|e| schema(format!("points[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;

    let method: Method = file
        .meta
        .method
        .parse()
        .map_err(|m: String| schema("meta.method", m))?;
    if file.meta.delta.is_nan() || file.meta.delta <= 0.0 {
        return Err(schema("meta.delta", "must be positive"));
    }
    if file.meta.epsilon.is_some_and(|e| e.is_nan() || e <= 0.0) {
        return Err(schema("meta.epsilon", "must be positive when present"));
    }
    let meta = SequenceMeta {
        epsilon: file.meta.epsilon,
        delta: file.meta.delta,
        method,
    };
    let seq = PointSequence::new(domain, points, meta)?;

    match (&file.image_points, seq.domain()) {
        (Some(images), Domain::Transported { .. }) => {
            if images.len() != seq.len() {
                return Err(schema("image_points", "length differs from `points`"));
            }
            for (i, (given, p)) in images.iter().zip(seq.points()).enumerate() {
                let expected = seq.domain().image_of(p)?.first();
                let ok = given.len() == 1 && {
                    let z = Complex64::new(given[0][0], given[0][1]);
                    (z - expected).norm() <= 1e-9 * (1.0 + expected.norm())
                };
                if !ok {
                    return Err(schema(
                        format!("image_points[{i}]"),
                        "does not match the map applied to the chart point",
                    ));
                }
            }
        }
        (Some(_), _) => {
            return Err(schema(
                "image_points",
                "only allowed for transported domains",
            ))
        }
        (None, _) => {}
    }
    Ok(seq)
}
