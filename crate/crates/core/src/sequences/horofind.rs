use super::positive;
use crate::error::{Error, Result};
use crate::geometry::{disc_distance, horocycle_of, Domain, Point};

const MAX_HALVINGS: usize = 200;
const ON_CURVE_TOL: f64 = 1e-10;

/// Point of the horocycle of `epsilon` at disc distance `target_distance`
/// from `base`, found by bracketing and bisection on the arc parameter.
///
/// The search moves from `base` along the arc towards the tangency point
/// `-1`, on the side where `Im z` decreases (the side covered by Cayley images
/// of `eps + i y`, `y > 0`). Along that arc the distance to `base` is
/// continuous, vanishes at `base` and is unbounded near `-1`, so a bracket
/// always exists.
pub fn find_on_horocycle(epsilon: f64, base: &Point, target_distance: f64) -> Result<Point> {
    let horocycle = horocycle_of(epsilon)?;
    positive("target_distance", target_distance)?;
    if !Domain::UnitDisc.contains(base)? {
        return Err(Error::PointOutsideDomain { index: None });
    }
    let z0 = base.first();
    let deviation = horocycle.deviation(z0);
    if deviation > ON_CURVE_TOL {
        return Err(Error::BaseOffCurve { deviation });
    }

    let distance_at = |phi: f64| -> Result<f64> {
        let z = horocycle.point_at_gap(phi);
        if Domain::UnitDisc.contains(&Point::one(z)?)? {
            Ok(disc_distance(z0, z))
        } else {
            // rounded onto the unit circle: infinitely far
            Ok(f64::INFINITY)
        }
    };

    // near: distance < target, far: distance >= target
    let mut near = horocycle.gap_of(z0);
    let mut far = near;
    let mut found = false;
    for _ in 0..MAX_HALVINGS {
        far *= 0.5;
        if distance_at(far)? >= target_distance {
            found = true;
            break;
        }
        near = far;
    }
    if !found {
        return Err(Error::BracketNotFound(MAX_HALVINGS));
    }

    loop {
        let mid = 0.5 * (near + far);
        if mid == near || mid == far {
            break;
        }
        if distance_at(mid)? >= target_distance {
            far = mid;
        } else {
            near = mid;
        }
    }
    Point::one(horocycle.point_at_gap(far))
}
