use std::fmt;

use crate::error::{Error, Result};

/// Number of trailing increments the heuristics look at.
pub const TAIL_WINDOW: usize = 20;

const TAIL_BOUND_REL: f64 = 1e-9;
const FLOOR_RATIO: f64 = 0.5;
const MAX_DECAY_EXPONENT: f64 = 0.1;

/// Heuristic classification of a partial-sum sequence. A finite prefix
/// cannot decide convergence; this only reports what the tail looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ConvergedNumerically,
    DivergingLinearly,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ConvergedNumerically => "converged-numerically",
            Verdict::DivergingLinearly => "diverging-linearly",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    pub last_increment: f64,
    /// Geometric ratio fitted to the positive trailing increments.
    pub increment_ratio: Option<f64>,
    /// Least-squares slope of the trailing partial sums against the index.
    pub linear_fit_slope: f64,
    /// Max deviation from that line over the max partial sum in the window.
    pub linear_fit_residual: f64,
}

/// Verdict from partial sums alone; increments are recovered by differencing.
///
/// Needs `TAIL_WINDOW + 1` partial sums.
pub fn convergence_verdict(partial_sums: &[f64]) -> Result<(Verdict, Diagnostics)> {
    if partial_sums.len() < TAIL_WINDOW + 1 {
        return Err(Error::TooFewTerms {
            needed: TAIL_WINDOW + 1,
            found: partial_sums.len(),
        });
    }
    let mut increments = Vec::with_capacity(partial_sums.len());
    increments.push(partial_sums[0]);
    increments.extend(partial_sums.windows(2).map(|w| w[1] - w[0]));
    Ok(verdict_from_increments(&increments, partial_sums))
}

/// Verdict from explicit increments (the series terms) and partial sums of
/// equal length.
///
/// * converged-numerically: the trailing increments are nonincreasing and
///   either reach zero or decay with fitted ratio `r < 1` such that the
///   geometric tail bound `last * r / (1 - r)` is below `1e-9` of the sum;
/// * diverging-linearly: the trailing increments are positive, their
///   minimum exceeds half their median, and they show no polynomial decay
///   (fitted exponent of `j^-a` below 0.1);
/// * otherwise inconclusive, which is also returned for fewer than
///   `TAIL_WINDOW + 1` terms.
pub fn verdict_from_increments(increments: &[f64], partial_sums: &[f64]) -> (Verdict, Diagnostics) {
    assert_eq!(increments.len(), partial_sums.len());
    let n = increments.len();
    let k = TAIL_WINDOW.min(n);
    let incs = &increments[n - k..];
    let sums = &partial_sums[n.saturating_sub(TAIL_WINDOW + 1)..];
    let first_index = n - k + 1;

    let (slope, residual) = linear_fit(sums);
    let diagnostics = Diagnostics {
        last_increment: incs.last().copied().unwrap_or(0.0),
        increment_ratio: geometric_ratio(incs),
        linear_fit_slope: slope,
        linear_fit_residual: residual,
    };
    if n < TAIL_WINDOW + 1 {
        return (Verdict::Inconclusive, diagnostics);
    }

    let current = *partial_sums.last().expect("nonempty");
    let nonincreasing = incs.windows(2).all(|w| w[1] <= w[0]);
    let last = diagnostics.last_increment;
    if nonincreasing && last >= 0.0 {
        if last == 0.0 {
            return (Verdict::ConvergedNumerically, diagnostics);
        }
        if let Some(r) = diagnostics.increment_ratio {
            if r < 1.0 && last * r / (1.0 - r) < TAIL_BOUND_REL * current {
                return (Verdict::ConvergedNumerically, diagnostics);
            }
        }
    }

    let min = incs.iter().copied().fold(f64::INFINITY, f64::min);
    if min > 0.0 {
        let mut sorted = incs.to_vec();
        sorted.sort_by(f64::total_cmp);
        let median = 0.5 * (sorted[(k - 1) / 2] + sorted[k / 2]);
        let decay = power_decay_exponent(incs, first_index);
        if min / median > FLOOR_RATIO && decay < MAX_DECAY_EXPONENT {
            return (Verdict::DivergingLinearly, diagnostics);
        }
    }
    (Verdict::Inconclusive, diagnostics)
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

fn linear_fit(sums: &[f64]) -> (f64, f64) {
    if sums.len() < 2 {
        return (0.0, 0.0);
    }
    let xs: Vec<f64> = (0..sums.len()).map(|i| i as f64).collect();
    let slope = least_squares_slope(&xs, sums);
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = sums.iter().sum::<f64>() / sums.len() as f64;
    let scale = sums.iter().fold(0.0_f64, |m, s| m.max(s.abs()));
    let worst = xs
        .iter()
        .zip(sums)
        .map(|(x, s)| (s - (my + slope * (x - mx))).abs())
        .fold(0.0, f64::max);
    let residual = if scale > 0.0 { worst / scale } else { 0.0 };
    (slope, residual)
}

fn geometric_ratio(incs: &[f64]) -> Option<f64> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = incs
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > 0.0)
        .map(|(i, &v)| (i as f64, v.ln()))
        .unzip();
    if xs.len() < 2 {
        return None;
    }
    Some(least_squares_slope(&xs, &ys).exp())
}

/// Fitted `a` in `x_j ~ j^-a` over the window, `first_index` being the
/// 1-based index of the first increment.
fn power_decay_exponent(incs: &[f64], first_index: usize) -> f64 {
    let xs: Vec<f64> = (0..incs.len())
        .map(|i| ((first_index + i) as f64).ln())
        .collect();
    let ys: Vec<f64> = incs.iter().map(|v| v.ln()).collect();
    -least_squares_slope(&xs, &ys)
}
