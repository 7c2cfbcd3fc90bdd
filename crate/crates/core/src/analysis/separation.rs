use crate::error::{Error, Result};
use crate::sequences::{positive, PointSequence};

/// Slack allowed below the nominal separation when testing discreteness.
pub const DISCRETE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationReport {
    pub min_distance: f64,
    /// Attaining pair `(i, j)`, `i < j`, lexicographically first among ties.
    pub argmin_pair: (usize, usize),
    /// Number of points scanned.
    pub count: usize,
}

fn better(d: f64, pair: (usize, usize), best: f64, best_pair: (usize, usize)) -> bool {
    d < best || (d == best && pair < best_pair)
}

/// Exact minimum pairwise Kobayashi distance.
///
/// Pairs are swept in order of their distance to the first point; by the
/// triangle inequality `d(p_i, p_j) >= |a_i - a_j|` with `a = d(p_0, .)`, so
/// the inner sweep stops once that bound exceeds the current minimum by more
/// than the rounding guard. Pruned pairs are strictly farther apart than the
/// minimum, so the result equals the full scan.
pub fn separation_constant(seq: &PointSequence) -> Result<SeparationReport> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let anchor: Vec<f64> = (0..n).map(|i| seq.distance(0, i)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| anchor[i].total_cmp(&anchor[j]).then(i.cmp(&j)));

    let mut best = f64::INFINITY;
    let mut best_pair = (0, 1);
    'outer: for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            let guard = 1e-9 * (1.0 + best + anchor[j]);
            if anchor[j] - anchor[i] > best + guard {
                break;
            }
            let pair = (i.min(j), i.max(j));
            let d = seq.distance(pair.0, pair.1);
            if better(d, pair, best, best_pair) {
                best = d;
                best_pair = pair;
                if best == 0.0 && best_pair == (0, 1) {
                    break 'outer;
                }
            }
        }
    }
    Ok(SeparationReport {
        min_distance: best,
        argmin_pair: best_pair,
        count: n,
    })
}

/// Plain O(N^2) scan, kept as the reference for [`separation_constant`].
pub fn separation_constant_brute_force(seq: &PointSequence) -> Result<SeparationReport> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut best = f64::INFINITY;
    let mut best_pair = (0, 1);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = seq.distance(i, j);
            if better(d, (i, j), best, best_pair) {
                best = d;
                best_pair = (i, j);
            }
        }
    }
    Ok(SeparationReport {
        min_distance: best,
        argmin_pair: best_pair,
        count: n,
    })
}

/// `true` iff all pairwise distances are at least `delta` (less
/// [`DISCRETE_SLACK`]). Sequences with fewer than two points qualify.
pub fn is_uniformly_discrete(seq: &PointSequence, delta: f64) -> Result<bool> {
    positive("delta", delta)?;
    if seq.len() < 2 {
        return Ok(true);
    }
    Ok(separation_constant(seq)?.min_distance >= delta - DISCRETE_SLACK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Domain, Point};
    use crate::sequences::{construct_halfplane_line_sequence, Method, SequenceMeta};

    fn external(domain: Domain, pts: &[(f64, f64)]) -> PointSequence {
        PointSequence::new(
            domain,
            pts.iter()
                .map(|&(x, y)| Point::re_im(x, y).unwrap())
                .collect(),
            SequenceMeta {
                epsilon: None,
                delta: 0.1,
                method: Method::External,
            },
        )
        .unwrap()
    }

    #[test]
    fn line_sequence_separation() {
        let seq = construct_halfplane_line_sequence(0.5, 0.7, 20).unwrap();
        let rep = separation_constant(&seq).unwrap();
        assert!((rep.min_distance - 0.7).abs() < 1e-10);
        assert_eq!(rep.argmin_pair, (0, 1));
        assert_eq!(rep.count, 20);
    }

    #[test]
    fn single_pair() {
        let seq = external(Domain::UnitDisc, &[(0.0, 0.0), (0.5, 0.0)]);
        let rep = separation_constant(&seq).unwrap();
        assert!((rep.min_distance - 0.5f64.atanh()).abs() < 1e-15);
    }

    #[test]
    fn discreteness_checks() {
        let seq = construct_halfplane_line_sequence(0.5, 0.7, 10).unwrap();
        assert!(is_uniformly_discrete(&seq, 0.7).unwrap());
        assert!(!is_uniformly_discrete(&seq, 1.4).unwrap());
        let one = construct_halfplane_line_sequence(0.5, 0.7, 1).unwrap();
        assert!(is_uniformly_discrete(&one, 5.0).unwrap());
        assert_eq!(separation_constant(&one), Err(Error::TooFewPoints(1)));
        assert!(is_uniformly_discrete(&seq, 0.0).is_err());
    }

    #[test]
    fn pruned_scan_matches_brute_force_on_scattered_points() {
        let pts: Vec<(f64, f64)> = (0..40)
            .map(|k| {
                let t = f64::from(k);
                (
                    0.9 * (0.37 * t).sin() * (0.11 * t).cos(),
                    0.4 * (0.53 * t).cos(),
                )
            })
            .collect();
        let seq = external(Domain::UnitDisc, &pts);
        assert_eq!(
            separation_constant(&seq).unwrap(),
            separation_constant_brute_force(&seq).unwrap()
        );
    }
}
