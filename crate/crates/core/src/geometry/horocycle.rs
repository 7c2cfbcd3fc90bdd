use num_complex::Complex64;

use crate::error::{Error, Result};

/// The circle internally tangent to the unit circle at `-1` that the Cayley
/// transform makes out of the line `Re w = epsilon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Horocycle {
    pub epsilon: f64,
    pub center: Complex64,
    pub radius: f64,
}

pub fn horocycle_of(epsilon: f64) -> Result<Horocycle> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::NonpositiveEpsilon(epsilon));
    }
    Ok(Horocycle {
        epsilon,
        center: Complex64::new(-epsilon / (1.0 + epsilon), 0.0),
        radius: 1.0 / (1.0 + epsilon),
    })
}

impl Horocycle {
    /// `| |z - center| - radius |`.
    pub fn deviation(&self, z: Complex64) -> f64 {
        ((z - self.center).norm() - self.radius).abs()
    }

    /// Point at arc gap `phi` from the tangency point, measured along the
    /// lower arc: `phi -> 0` approaches `-1`, `phi = pi` is the point
    /// `(1 - eps) / (1 + eps)` closest to the origin side.
    pub fn point_at_gap(&self, phi: f64) -> Complex64 {
        self.center - Complex64::from_polar(self.radius, phi)
    }

    /// Inverse of [`Horocycle::point_at_gap`], with values in `(0, 2 pi]`.
    pub fn gap_of(&self, z: Complex64) -> f64 {
        let v = self.center - z;
        let phi = v.im.atan2(v.re);
        if phi <= 0.0 {
            phi + 2.0 * std::f64::consts::PI
        } else {
            phi
        }
    }
}
