use super::{positive, Method, PointSequence, SequenceMeta};
use crate::error::{Error, Result};
use crate::geometry::{Domain, Point};

/// Bisection tolerance on the walk parameter.
pub const PARAM_TOL: f64 = 1e-9;
/// Number of geometrically spaced samples used to check that the walked ray
/// stays in `D_c`. A guard, not a proof.
pub const RAY_SAMPLES: usize = 1024;

/// The ray `origin + t * direction`, `t >= 0`, and its probing step sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct Walk {
    pub origin: Point,
    pub direction: Point,
    pub initial_step: f64,
    pub max_step: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PackerConfig {
    /// Boundary-distance floor defining `D_c`.
    pub c: f64,
    pub delta: f64,
    pub count: usize,
    pub walk: Walk,
}

impl PackerConfig {
    pub fn new(c: f64, delta: f64, count: usize, walk: Walk) -> Result<Self> {
        let cfg = Self {
            c,
            delta,
            count,
            walk,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        positive("c", self.c)?;
        positive("delta", self.delta)?;
        positive("initial_step", self.walk.initial_step)?;
        positive("max_step", self.walk.max_step)?;
        if self.count == 0 {
            return Err(Error::InvalidPackerConfig(
                "count must be at least 1".into(),
            ));
        }
        if self.walk.initial_step > self.walk.max_step {
            return Err(Error::InvalidPackerConfig(
                "initial_step exceeds max_step".into(),
            ));
        }
        if self.walk.origin.dim() != self.walk.direction.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.walk.origin.dim(),
                found: self.walk.direction.dim(),
            });
        }
        let norm = self.walk.direction.norm_sqr().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidPackerConfig(format!(
                "direction has norm {norm}, expected 1"
            )));
        }
        Ok(())
    }
}

/// Output of [`greedy_pack`]: the sequence and the walk parameter of each point.
#[derive(Debug, Clone, PartialEq)]
pub struct Packing {
    pub sequence: PointSequence,
    pub parameters: Vec<f64>,
}

struct Walker<'a> {
    domain: &'a Domain,
    cfg: &'a PackerConfig,
    accepted: Vec<Point>,
}

impl Walker<'_> {
    fn at(&self, t: f64) -> Result<Point> {
        self.cfg.walk.origin.offset(&self.cfg.walk.direction, t)
    }

    fn in_dc(&self, p: &Point) -> Result<bool> {
        Ok(self.domain.contains(p)? && self.domain.boundary_distance(p)? >= self.cfg.c)
    }

    fn clears(&self, p: &Point) -> bool {
        self.accepted
            .iter()
            .all(|q| self.domain.distance_unchecked(p, q) >= self.cfg.delta)
    }

    /// Probe at `t`: `None` if outside `D_c`, otherwise clearance.
    fn probe(&self, t: f64) -> Result<Option<(Point, bool)>> {
        let p = self.at(t)?;
        if !self.in_dc(&p)? {
            return Ok(None);
        }
        let clear = self.clears(&p);
        Ok(Some((p, clear)))
    }

    /// Smallest parameter beyond `start` clearing all accepted balls.
    fn next_after(&self, start: f64) -> Result<(f64, Point)> {
        let walk = &self.cfg.walk;
        let mut lo = start;
        let mut step = walk.initial_step;
        let (mut hi, mut hi_point) = loop {
            let t = lo + step;
            match self.probe(t)? {
                None => {
                    step *= 0.5;
                    if step < PARAM_TOL {
                        return Err(Error::RayEscapesDc { parameter: t });
                    }
                }
                Some((p, true)) => break (t, p),
                Some((_, false)) => {
                    lo = t;
                    step = (2.0 * step).min(walk.max_step);
                }
            }
        };
        while hi - lo > PARAM_TOL {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match self.probe(mid)? {
                Some((p, true)) => {
                    hi = mid;
                    hi_point = p;
                }
                _ => lo = mid,
            }
        }
        Ok((hi, hi_point))
    }
}

/// Greedy packing of `cfg.count` points of `D_c` along a ray.
///
/// The first point is the ray origin; every further point is the first one
/// along the ray (to [`PARAM_TOL`] in the parameter) lying outside every
/// Kobayashi ball of radius `delta` around the points accepted so far. The
/// balls are never materialized; clearance is tested by evaluating distances.
/// The result is deterministic.
pub fn greedy_pack(domain: &Domain, cfg: &PackerConfig) -> Result<Packing> {
    cfg.validate()?;
    let origin = &cfg.walk.origin;
    if !domain.contains(origin)? {
        return Err(Error::PointOutsideDomain { index: None });
    }
    let origin_gap = domain.boundary_distance(origin)?;
    if origin_gap < cfg.c {
        return Err(Error::OriginOutsideDc {
            distance: origin_gap,
            c: cfg.c,
        });
    }

    let mut walker = Walker {
        domain,
        cfg,
        accepted: vec![origin.clone()],
    };
    let mut parameters = vec![0.0];
    while walker.accepted.len() < cfg.count {
        let start = *parameters.last().expect("origin accepted");
        let (t, p) = walker.next_after(start)?;
        parameters.push(t);
        walker.accepted.push(p);
    }

    let last = *parameters.last().expect("origin accepted");
    if last > 0.0 {
        let first = cfg.walk.initial_step.min(last);
        let ratio = (last / first).powf(1.0 / (RAY_SAMPLES - 1) as f64);
        let mut t = first;
        for i in 0..RAY_SAMPLES {
            if i == RAY_SAMPLES - 1 {
                t = last;
            }
            if !walker.in_dc(&walker.at(t)?)? {
                return Err(Error::RayEscapesDc { parameter: t });
            }
            t *= ratio;
        }
    }

    let sequence = PointSequence::new(
        domain.clone(),
        walker.accepted,
        SequenceMeta {
            epsilon: None,
            delta: cfg.delta,
            method: Method::GreedyPack,
        },
    )?;
    Ok(Packing {
        sequence,
        parameters,
    })
}
