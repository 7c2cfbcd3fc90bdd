use super::verdict::{verdict_from_increments, Diagnostics, Verdict};
use crate::error::{Error, Result};
use crate::sequences::{positive, PointSequence};

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Family {
    Power(f64),
    /// Piecewise-linear through strictly increasing knots.
    Tabulated(Vec<(f64, f64)>),
}

/// An increasing weight `h` applied to boundary data.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction {
    family: Family,
}

impl WeightFunction {
    /// `h(x) = x^s`.
    pub fn power(s: f64) -> Self {
        Self {
            family: Family::Power(s),
        }
    }

    /// Piecewise-linear weight through `(x, h(x))` knots; both coordinates
    /// must be strictly increasing and `h` nonnegative.
    pub fn tabulated(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::NonincreasingWeight(
                "a table needs at least two knots".into(),
            ));
        }
        if knots
            .iter()
            .any(|(x, h)| !x.is_finite() || !h.is_finite() || *h < 0.0)
        {
            return Err(Error::NonincreasingWeight(
                "table entries must be finite with h >= 0".into(),
            ));
        }
        if let Some(i) = knots
            .windows(2)
            .position(|w| !(w[1].0 > w[0].0 && w[1].1 > w[0].1))
        {
            return Err(Error::NonincreasingWeight(format!(
                "table is not strictly increasing at row {}",
                i + 1
            )));
        }
        Ok(Self {
            family: Family::Tabulated(knots),
        })
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Power(_) => "power",
            Family::Tabulated(_) => "tabulated",
        }
    }

    /// Exponent of a power weight.
    pub fn exponent(&self) -> Option<f64> {
        match self.family {
            Family::Power(s) => Some(s),
            Family::Tabulated(_) => None,
        }
    }

    pub fn check_increasing(&self) -> Result<()> {
        match self.family {
            Family::Power(s) if !(s > 0.0 && s.is_finite()) => Err(Error::NonincreasingWeight(
                format!("x^s needs s > 0, got s = {s}"),
            )),
            _ => Ok(()),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        match &self.family {
            Family::Power(s) => Ok(if x == 0.0 { 0.0 } else { x.powf(*s) }),
            Family::Tabulated(knots) => {
                let (lo, hi) = (knots[0].0, knots[knots.len() - 1].0);
                if !(lo..=hi).contains(&x) {
                    return Err(Error::WeightOutOfRange { x, lo, hi });
                }
                let i = knots
                    .partition_point(|k| k.0 <= x)
                    .clamp(1, knots.len() - 1);
                let ((x0, h0), (x1, h1)) = (knots[i - 1], knots[i]);
                Ok(h0 + (h1 - h0) * (x - x0) / (x1 - x0))
            }
        }
    }
}

/// `true` iff `sum_m h(1/m)` converges; decided analytically for powers,
/// where it holds exactly when `s > 1`.
pub fn weight_admissible(h: &WeightFunction) -> Result<bool> {
    match h.family {
        Family::Power(s) => Ok(s > 1.0),
        Family::Tabulated(_) => Err(Error::UnsupportedFamily),
    }
}

/// Per-point terms of a boundary series with compensated running sums.
#[derive(Debug, Clone, PartialEq)]
pub struct SumReport {
    pub boundary_distances: Vec<f64>,
    pub terms: Vec<f64>,
    pub partial_sums: Vec<f64>,
    /// Heuristic; see [`super::verdict_from_increments`].
    pub verdict: Verdict,
    pub diagnostics: Diagnostics,
}

impl SumReport {
    fn from_terms(boundary_distances: Vec<f64>, terms: Vec<f64>) -> Self {
        let mut acc = NeumaierSum::new();
        let partial_sums: Vec<f64> = terms
            .iter()
            .map(|&t| {
                acc.add(t);
                acc.value()
            })
            .collect();
        let (verdict, diagnostics) = verdict_from_increments(&terms, &partial_sums);
        Self {
            boundary_distances,
            terms,
            partial_sums,
            verdict,
            diagnostics,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the first `n` terms (`S_0 = 0`).
    pub fn partial_sum(&self, n: usize) -> f64 {
        if n == 0 {
            0.0
        } else {
            self.partial_sums[n - 1]
        }
    }

    pub fn total(&self) -> f64 {
        self.partial_sums.last().copied().unwrap_or(0.0)
    }
}

/// `sum_j d_j^p h(-1 / ln d_j)` with `d_j` the boundary distance of `z_j`;
/// every `d_j` must be below 1. Exponent `p = n` gives the strongly
/// pseudoconvex estimate, `p = 2n` the finite-volume one.
pub fn theorem_sum(seq: &PointSequence, p_exponent: f64, h: &WeightFunction) -> Result<SumReport> {
    positive("p_exponent", p_exponent)?;
    h.check_increasing()?;
    let distances = seq.boundary_distances();
    if let Some(index) = distances.iter().position(|&d| d.is_nan() || d >= 1.0) {
        return Err(Error::BoundaryDistanceNotLessThanOne {
            index,
            distance: distances[index],
        });
    }
    let terms = distances
        .iter()
        .map(|&d| {
            let arg = if d == 0.0 { 0.0 } else { -1.0 / d.ln() };
            Ok(d.powf(p_exponent) * h.eval(arg)?)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(SumReport::from_terms(distances, terms))
}

/// Discrete Carleson-type mass `sum_j d_j^(n + 1)`.
pub fn carleson_mass(seq: &PointSequence, n_dim: usize) -> Result<SumReport> {
    if n_dim == 0 {
        return Err(Error::NonpositiveParameter {
            name: "n_dim",
            value: 0.0,
        });
    }
    let distances = seq.boundary_distances();
    let exponent = i32::try_from(n_dim + 1).map_err(|_| Error::NonpositiveParameter {
        name: "n_dim",
        value: n_dim as f64,
    })?;
    let terms = distances.iter().map(|d| d.powi(exponent)).collect();
    Ok(SumReport::from_terms(distances, terms))
}

/// `sum_j F(d_j)`; inside `D_c` every term is at least `F(c) > 0`.
///
/// A positive linear fit of the trailing partial sums with relative residual
/// below `1e-6` is reported as diverging-linearly.
pub fn divergence_sum(seq: &PointSequence, f: &WeightFunction) -> Result<SumReport> {
    f.check_increasing()?;
    let distances = seq.boundary_distances();
    let terms = distances
        .iter()
        .map(|&d| f.eval(d))
        .collect::<Result<Vec<f64>>>()?;
    let mut report = SumReport::from_terms(distances, terms);
    let diag = report.diagnostics;
    if report.len() >= 2 && diag.linear_fit_slope > 0.0 && diag.linear_fit_residual < 1e-6 {
        report.verdict = Verdict::DivergingLinearly;
    }
    Ok(report)
}
