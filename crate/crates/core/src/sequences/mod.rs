//! Uniformly discrete sequences: the horocycle constructions in the
//! half-plane and the disc, a root-finding oracle on horocycles, and the
//! greedy packer inside `D_c`.

mod construct;
mod horofind;
mod packing;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{Domain, Point};

pub use construct::{
    construct_disc_horocycle_sequence, construct_halfplane_line_sequence, line_ordinate, MAX_SPAN,
};
pub use horofind::find_on_horocycle;
pub use packing::{greedy_pack, PackerConfig, Packing, Walk, PARAM_TOL, RAY_SAMPLES};

/// How a sequence was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    HalfplaneLine,
    DiscHorocycle,
    GreedyPack,
    External,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::HalfplaneLine => "halfplane-line",
            Method::DiscHorocycle => "disc-horocycle",
            Method::GreedyPack => "greedy-pack",
            Method::External => "external",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "halfplane-line" => Ok(Method::HalfplaneLine),
            "disc-horocycle" => Ok(Method::DiscHorocycle),
            "greedy-pack" => Ok(Method::GreedyPack),
            "external" => Ok(Method::External),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceMeta {
    /// Boundary distance of the generating line, when there is one.
    pub epsilon: Option<f64>,
    /// Nominal separation.
    pub delta: f64,
    pub method: Method,
}

/// Ordered, pairwise distinct points of one domain.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSequence {
    domain: Domain,
    points: Vec<Point>,
    meta: SequenceMeta,
}

impl PointSequence {
    /// Validates membership (reporting the first offending index), dimension
    /// and distinctness.
    pub fn new(domain: Domain, points: Vec<Point>, meta: SequenceMeta) -> Result<Self> {
        positive("delta", meta.delta)?;
        if let Some(eps) = meta.epsilon {
            positive("epsilon", eps)?;
        }
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !domain.contains(p)? {
                return Err(Error::PointOutsideDomain { index: Some(i) });
            }
            if let Some(&first) = seen.get(&p.bit_key()) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p.bit_key(), i);
        }
        Ok(Self {
            domain,
            points,
            meta,
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn meta(&self) -> &SequenceMeta {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Kobayashi distance between two members.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.domain
            .distance_unchecked(&self.points[i], &self.points[j])
    }

    pub fn boundary_distances(&self) -> Vec<f64> {
        self.points
            .iter()
            .map(|p| {
                self.domain
                    .boundary_distance(p)
                    .expect("members are validated at construction")
            })
            .collect()
    }

    /// Points in the domain's ambient coordinates (see [`Domain::image_of`]).
    pub fn image_points(&self) -> Result<Vec<Point>> {
        self.points
            .iter()
            .map(|p| self.domain.image_of(p))
            .collect()
    }

    /// Same points and metadata in another domain chart.
    pub fn with_domain(&self, domain: Domain) -> Result<Self> {
        Self::new(domain, self.points.clone(), self.meta.clone())
    }
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonpositiveParameter { name, value })
    }
}
