use num_complex::Complex64;

use super::{positive, Method, PointSequence, SequenceMeta};
use crate::error::{Error, Result};
use crate::geometry::{Domain, Point};

/// Cap on `n_points * delta`; keeps `sinh` of every walk length finite.
pub const MAX_SPAN: f64 = 350.0;

/// Imaginary part `2 eps sinh(k delta)` of the `k`-th point on `Re w = eps`.
///
/// On that line `d(eps + i y1, eps + i y2) = arsinh(|y1 - y2| / (2 eps))`,
/// so the `k`-th point sits at distance exactly `k delta` from the first.
pub fn line_ordinate(epsilon: f64, delta: f64, k: usize) -> f64 {
    2.0 * epsilon * (k as f64 * delta).sinh()
}

fn check_params(epsilon: f64, delta: f64, n_points: usize) -> Result<()> {
    positive("epsilon", epsilon)?;
    positive("delta", delta)?;
    if n_points == 0 {
        return Err(Error::NonpositiveParameter {
            name: "n_points",
            value: 0.0,
        });
    }
    let product = n_points as f64 * delta;
    if product > MAX_SPAN {
        return Err(Error::OverflowGuard {
            product,
            cap: MAX_SPAN,
        });
    }
    Ok(())
}

fn line_points(epsilon: f64, delta: f64, n_points: usize) -> Result<Vec<Point>> {
    (0..n_points)
        .map(|k| Point::one(Complex64::new(epsilon, line_ordinate(epsilon, delta, k))))
        .collect()
}

/// `w_k = eps + 2 i eps sinh(k delta)` in the right half-plane, `k < n_points`.
pub fn construct_halfplane_line_sequence(
    epsilon: f64,
    delta: f64,
    n_points: usize,
) -> Result<PointSequence> {
    check_params(epsilon, delta, n_points)?;
    PointSequence::new(
        Domain::RightHalfPlane,
        line_points(epsilon, delta, n_points)?,
        SequenceMeta {
            epsilon: Some(epsilon),
            delta,
            method: Method::HalfplaneLine,
        },
    )
}

/// The Cayley images `z_k = cayley(w_k)` of the line sequence, all on the
/// horocycle of `epsilon`.
///
/// The sequence lives in [`Domain::disc_via_half_plane`]: the stored chart
/// points are the `w_k`, and [`PointSequence::image_points`] yields the `z_k`.
pub fn construct_disc_horocycle_sequence(
    epsilon: f64,
    delta: f64,
    n_points: usize,
) -> Result<PointSequence> {
    check_params(epsilon, delta, n_points)?;
    PointSequence::new(
        Domain::disc_via_half_plane(),
        line_points(epsilon, delta, n_points)?,
        SequenceMeta {
            epsilon: Some(epsilon),
            delta,
            method: Method::DiscHorocycle,
        },
    )
}
