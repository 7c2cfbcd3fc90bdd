use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of C^n stored as `n` complex coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<Complex64>,
}

impl Point {
    /// Builds a point; rejects an empty coordinate list and non-finite entries.
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if coords
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Self { coords })
    }

    /// A point of the complex line.
    pub fn one(z: Complex64) -> Result<Self> {
        Self::new(vec![z])
    }

    pub fn re_im(re: f64, im: f64) -> Result<Self> {
        Self::one(Complex64::new(re, im))
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// First coordinate; the whole point for one-dimensional domains.
    pub fn first(&self) -> Complex64 {
        self.coords[0]
    }

    /// Euclidean norm squared in C^n = R^{2n}.
    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `self + t * direction`, coordinatewise.
    pub fn offset(&self, direction: &Point, t: f64) -> Result<Point> {
        if direction.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: direction.dim(),
            });
        }
        Point::new(
            self.coords
                .iter()
                .zip(&direction.coords)
                .map(|(p, d)| p + d * t)
                .collect(),
        )
    }

    /// Bit patterns of all coordinates, used for exact-duplicate detection.
    pub(crate) fn bit_key(&self) -> Vec<u64> {
        self.coords
            .iter()
            .flat_map(|z| [z.re.to_bits(), z.im.to_bits()])
            .collect()
    }
}

impl TryFrom<Complex64> for Point {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        Point::one(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_and_empty() {
        assert_eq!(Point::re_im(f64::NAN, 0.0), Err(Error::NonFinite));
        assert_eq!(Point::re_im(0.0, f64::INFINITY), Err(Error::NonFinite));
        assert!(matches!(
            Point::new(vec![]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn offset_moves_along_direction() {
        let p = Point::re_im(1.0, 0.0).unwrap();
        let d = Point::re_im(0.0, 1.0).unwrap();
        assert_eq!(p.offset(&d, 2.5).unwrap(), Point::re_im(1.0, 2.5).unwrap());
    }
}
