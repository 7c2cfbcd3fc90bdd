use num_complex::Complex64;

use super::special;
use crate::error::{Error, Result};

/// Relative threshold on `|ad - bc|` against the squared coefficient scale.
const DET_TOLERANCE: f64 = 1e-12;

/// A fractional-linear map `z -> (a z + b) / (c z + d)` with `ad - bc != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let coeffs = [a, b, c, d];
        if coeffs
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let det = a * d - b * c;
        if scale == 0.0 || det.norm() < DET_TOLERANCE * scale * scale {
            return Err(Error::DegenerateMap { det: det.norm() });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            a: one,
            b: zero,
            c: zero,
            d: one,
        }
    }

    /// `z -> (1 - z) / (1 + z)`, the involution exchanging the unit disc and
    /// the right half-plane.
    pub fn cayley() -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self {
            a: -one,
            b: one,
            c: one,
            d: one,
        }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// The denominator `c z + d` at `z`.
    pub fn denominator(&self, z: Complex64) -> Complex64 {
        self.c * z + self.d
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let den = self.denominator(z);
        if den.norm() <= f64::MIN_POSITIVE {
            return Err(Error::PoleInput);
        }
        let w = special::div(self.a * z + self.b, den);
        if !w.re.is_finite() || !w.im.is_finite() {
            return Err(Error::PoleInput);
        }
        Ok(w)
    }

    /// The adjugate `(d, -b, -c, a)`; as a map it is the inverse.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MoebiusMap) -> Result<Self> {
        Self::new(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
        )
    }
}

/// The Cayley transform `(1 - p) / (1 + p)`.
pub fn cayley(p: Complex64) -> Result<Complex64> {
    if special::abs(p + 1.0) < 1e-300 {
        return Err(Error::PoleAtMinusOne);
    }
    MoebiusMap::cayley()
        .apply(p)
        .map_err(|_| Error::PoleAtMinusOne)
}
