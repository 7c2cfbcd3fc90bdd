use num_complex::Complex64;

use super::moebius::MoebiusMap;
use super::point::Point;
use super::special::{self, atanh_split, one_minus_norm_sqr};
use crate::error::{Error, Result};

/// One-dimensional domains that can be transported by a Moebius map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseDomain {
    UnitDisc,
    RightHalfPlane,
}

/// A model domain together with its metric and boundary-distance rules.
///
/// Points of a [`Domain::Transported`] domain are carried in the coordinates
/// of the base domain (the chart). The domain itself is the image of the base
/// under the map, so its boundary distance is measured in the image plane,
/// while its Kobayashi distance is that of the base (the map is an isometry).
/// Keeping chart coordinates lets points approach the image boundary far
/// closer than an `f64` image coordinate could resolve.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    UnitDisc,
    RightHalfPlane,
    UnitBall(usize),
    Polydisc(usize),
    Transported { base: BaseDomain, map: MoebiusMap },
}

impl From<BaseDomain> for Domain {
    fn from(base: BaseDomain) -> Self {
        match base {
            BaseDomain::UnitDisc => Domain::UnitDisc,
            BaseDomain::RightHalfPlane => Domain::RightHalfPlane,
        }
    }
}

impl Domain {
    pub fn unit_ball(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Domain::UnitBall(n))
    }

    pub fn polydisc(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Domain::Polydisc(n))
    }

    /// The image of `base` under `map`.
    pub fn transported(base: BaseDomain, map: MoebiusMap) -> Self {
        Domain::Transported { base, map }
    }

    /// The unit disc seen through the Cayley chart of the right half-plane.
    pub fn disc_via_half_plane() -> Self {
        Domain::transported(BaseDomain::RightHalfPlane, MoebiusMap::cayley())
    }

    pub fn dimension(&self) -> usize {
        match self {
            Domain::UnitBall(n) | Domain::Polydisc(n) => *n,
            _ => 1,
        }
    }

    fn check_dim(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: p.dim(),
            });
        }
        Ok(())
    }

    /// Strict membership.
    pub fn contains(&self, p: &Point) -> Result<bool> {
        self.check_dim(p)?;
        Ok(self.strictly_inside(p))
    }

    /// Membership requiring in addition a boundary distance above `margin`.
    pub fn contains_with_margin(&self, p: &Point, margin: f64) -> Result<bool> {
        self.check_dim(p)?;
        if !self.strictly_inside(p) {
            return Ok(false);
        }
        if margin <= 0.0 {
            return Ok(true);
        }
        Ok(self.boundary_distance_raw(p)? > margin)
    }

    fn strictly_inside(&self, p: &Point) -> bool {
        match self {
            Domain::UnitDisc => one_minus_norm_sqr(p.first()) > 0.0,
            Domain::RightHalfPlane => p.first().re > 0.0,
            Domain::UnitBall(_) => ball_complement(p) > 0.0,
            Domain::Polydisc(_) => p.coords().iter().all(|&z| one_minus_norm_sqr(z) > 0.0),
            Domain::Transported { base, map } => {
                let w = p.first();
                let inside = match base {
                    BaseDomain::UnitDisc => one_minus_norm_sqr(w) > 0.0,
                    BaseDomain::RightHalfPlane => w.re > 0.0,
                };
                inside && map.apply(w).is_ok()
            }
        }
    }

    fn require_inside(&self, p: &Point) -> Result<()> {
        if self.contains(p)? {
            Ok(())
        } else {
            Err(Error::PointOutsideDomain { index: None })
        }
    }

    /// Kobayashi distance, normalized so that `d(0, r) = artanh(r)` in the disc.
    pub fn kobayashi_distance(&self, p: &Point, q: &Point) -> Result<f64> {
        self.require_inside(p)?;
        self.require_inside(q)?;
        Ok(self.distance_unchecked(p, q))
    }

    /// Distance for points already known to lie in the domain.
    pub(crate) fn distance_unchecked(&self, p: &Point, q: &Point) -> f64 {
        match self {
            Domain::UnitDisc => disc_distance(p.first(), q.first()),
            Domain::RightHalfPlane => half_plane_distance(p.first(), q.first()),
            Domain::UnitBall(_) => ball_distance(p.coords(), q.coords()),
            Domain::Polydisc(_) => p
                .coords()
                .iter()
                .zip(q.coords())
                .map(|(&a, &b)| disc_distance(a, b))
                .fold(0.0, f64::max),
            Domain::Transported { base, .. } => match base {
                BaseDomain::UnitDisc => disc_distance(p.first(), q.first()),
                BaseDomain::RightHalfPlane => half_plane_distance(p.first(), q.first()),
            },
        }
    }

    /// Euclidean distance from `p` to the boundary of the domain.
    pub fn boundary_distance(&self, p: &Point) -> Result<f64> {
        self.require_inside(p)?;
        self.boundary_distance_raw(p)
    }

    fn boundary_distance_raw(&self, p: &Point) -> Result<f64> {
        Ok(match self {
            Domain::UnitDisc => disc_gap(p.first()),
            Domain::RightHalfPlane => p.first().re,
            Domain::UnitBall(_) => {
                let complement = ball_complement(p);
                complement / (1.0 + p.norm_sqr().sqrt())
            }
            Domain::Polydisc(_) => p
                .coords()
                .iter()
                .map(|&z| disc_gap(z))
                .fold(f64::INFINITY, f64::min),
            Domain::Transported { base, map } => transported_gap(*base, map, p.first())?,
        })
    }

    /// Coordinates of `p` in the domain's own ambient space.
    ///
    /// Identity except for transported domains, where the map is applied.
    pub fn image_of(&self, p: &Point) -> Result<Point> {
        self.check_dim(p)?;
        match self {
            Domain::Transported { map, .. } => Point::one(map.apply(p.first())?),
            _ => Ok(p.clone()),
        }
    }

    /// Inverse of [`Domain::image_of`].
    pub fn chart_of(&self, image: &Point) -> Result<Point> {
        self.check_dim(image)?;
        match self {
            Domain::Transported { map, .. } => Point::one(map.inverse().apply(image.first())?),
            _ => Ok(image.clone()),
        }
    }
}

/// `1 - |z|` via `(1 - |z|^2) / (1 + |z|)`.
fn disc_gap(z: Complex64) -> f64 {
    one_minus_norm_sqr(z) / (1.0 + special::abs(z))
}

fn ball_complement(p: &Point) -> f64 {
    p.coords().iter().fold(1.0, |acc, z| {
        (-z.re).mul_add(z.re, (-z.im).mul_add(z.im, acc))
    })
}

pub(crate) fn disc_distance(p: Complex64, q: Complex64) -> f64 {
    let den = Complex64::new(1.0, 0.0) - q.conj() * p;
    let rho = (special::abs(p - q) / special::abs(den)).min(1.0);
    let ln_complement =
        one_minus_norm_sqr(p).ln() + one_minus_norm_sqr(q).ln() - 2.0 * special::abs(den).ln();
    atanh_split(rho, ln_complement)
}

pub(crate) fn half_plane_distance(p: Complex64, q: Complex64) -> f64 {
    let sum_abs = special::abs(p + q.conj());
    let rho = (special::abs(p - q) / sum_abs).min(1.0);
    // 1 - rho^2 = 4 Re p Re q / |p + conj q|^2, kept in log form against overflow
    let ln_complement = std::f64::consts::LN_2 * 2.0 + p.re.ln() + q.re.ln() - 2.0 * sum_abs.ln();
    atanh_split(rho, ln_complement)
}

fn ball_distance(p: &[Complex64], q: &[Complex64]) -> f64 {
    let inner: Complex64 = p.iter().zip(q).map(|(a, b)| a * b.conj()).sum();
    let den_sq = (Complex64::new(1.0, 0.0) - inner).norm_sqr();
    let diff_sq: f64 = p.iter().zip(q).map(|(a, b)| (a - b).norm_sqr()).sum();
    // |p|^2 |q|^2 - |<p,q>|^2 by the Lagrange identity, free of cancellation
    let mut defect = 0.0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            defect += (p[i] * q[j] - p[j] * q[i]).norm_sqr();
        }
    }
    let rho = ((diff_sq - defect).max(0.0) / den_sq).sqrt().min(1.0);
    let pp = Point::new(p.to_vec()).expect("finite coordinates");
    let qq = Point::new(q.to_vec()).expect("finite coordinates");
    let ln_complement = ball_complement(&pp).ln() + ball_complement(&qq).ln() - den_sq.ln();
    atanh_split(rho, ln_complement)
}

/// Boundary distance in the image of a transported one-dimensional domain.
///
/// The image boundary is the zero set of the Hermitian form pulled back
/// through the adjugate of the map, and that form evaluated at `M(w)` equals
/// `|det|^2 Q_base(w) / |c w + d|^2`, which keeps full relative precision
/// close to the boundary.
fn transported_gap(base: BaseDomain, map: &MoebiusMap, w: Complex64) -> Result<f64> {
    let z = map.apply(w)?;
    let [a, b, c, d] = map.coefficients();
    let (p, q, r, s) = (d, -b, -c, a);
    let (form_a, form_b) = match base {
        BaseDomain::RightHalfPlane => (2.0 * (p.conj() * r).re, p.conj() * s + q * r.conj()),
        BaseDomain::UnitDisc => (r.norm_sqr() - p.norm_sqr(), r.conj() * s - p.conj() * q),
    };
    let form_d = match base {
        BaseDomain::RightHalfPlane => 2.0 * (q.conj() * s).re,
        BaseDomain::UnitDisc => s.norm_sqr() - q.norm_sqr(),
    };
    let base_form = match base {
        BaseDomain::RightHalfPlane => 2.0 * w.re,
        BaseDomain::UnitDisc => one_minus_norm_sqr(w),
    };
    let k = special::abs(map.determinant()) / special::abs(map.denominator(w));
    let form_at_image = k * k * base_form.abs();
    let scale = form_a.abs() + form_b.norm() + form_d.abs();
    if form_a.abs() <= 1e-14 * scale {
        Ok(form_at_image / (2.0 * form_b.norm()))
    } else {
        let center = -form_b / form_a;
        let radius = ((form_b.norm_sqr() - form_a * form_d).max(0.0)).sqrt() / form_a.abs();
        Ok(form_at_image / (form_a.abs() * (radius + special::abs(z - center))))
    }
}
