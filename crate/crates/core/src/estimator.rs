//! Log-log regression of counting functions against `c·x^a·(log x)^b`, and
//! comparison of the fitted exponent with a predicted `a(G)`.
//!
//! The fit is ordinary least squares on
//! `log Z = log c + a·log x + b·log log x`, solved in closed form. Samples
//! with `Z = 0` carry no slope information and are dropped; so are samples
//! with `x ≤ 1` whenever the `log log x` column is in use.

use std::fmt;

use thiserror::Error;

use crate::permcore::{AValue, GroupError, PermGroup};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("grid needs 1 ≤ x_min < x_max and at least 2 points")]
    DegenerateRange,
    #[error("need at least 3 usable samples with distinct x, have {usable} ({dropped} dropped)")]
    TooFewSamples { usable: usize, dropped: usize },
    #[error("log x and log log x are collinear on these samples")]
    Degenerate,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Geometrically spaced integer cutoffs from `x_min` to `x_max` inclusive,
/// deduplicated after rounding.
pub fn geometric_grid(x_min: u64, x_max: u64, points: usize) -> Result<Vec<u64>, FitError> {
    if x_min < 1 || x_min >= x_max || points < 2 {
        return Err(FitError::DegenerateRange);
    }
    let (lo, hi) = ((x_min as f64).ln(), (x_max as f64).ln());
    let mut grid: Vec<u64> = (0..points)
        .map(|i| match i {
            0 => x_min,
            i if i == points - 1 => x_max,
            i => (lo + (hi - lo) * i as f64 / (points - 1) as f64).exp().round() as u64,
        })
        .map(|x| x.clamp(x_min, x_max))
        .collect();
    grid.dedup();
    Ok(grid)
}

/// Exponent of the `log x` factor in the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogPower {
    Fixed(f64),
    Fit,
}

impl LogPower {
    fn uses_loglog(self) -> bool {
        !matches!(self, LogPower::Fixed(b) if b == 0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub a_hat: f64,
    pub c_hat: f64,
    pub b: f64,
    pub b_fitted: bool,
    /// Root mean square of the residuals of `log Z`.
    pub rms_residual: f64,
    pub sample_count: usize,
    pub dropped: usize,
    /// Largest change in `a_hat` from leaving out one sample, when at least
    /// four samples are available.
    pub loo_sensitivity: Option<f64>,
}

impl fmt::Display for FitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a_hat = {:.6}", self.a_hat)?;
        writeln!(f, "c_hat = {:.6}", self.c_hat)?;
        writeln!(f, "b = {:.6} ({})", self.b, if self.b_fitted { "fitted" } else { "fixed" })?;
        writeln!(f, "rms_residual = {:.3e}", self.rms_residual)?;
        write!(f, "samples = {} (dropped {})", self.sample_count, self.dropped)?;
        if let Some(s) = self.loo_sensitivity {
            write!(f, "\nloo_sensitivity = {s:.3e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Row {
    lx: f64,
    llx: f64,
    lz: f64,
}

fn mean(it: impl Iterator<Item = f64>, n: f64) -> f64 {
    it.sum::<f64>() / n
}

/// Returns `(log c, a, b)` for the given rows.
fn solve(rows: &[Row], power: LogPower) -> Result<(f64, f64, f64), FitError> {
    let n = rows.len() as f64;
    let mx = mean(rows.iter().map(|r| r.lx), n);
    match power {
        LogPower::Fixed(b) => {
            let y = |r: &Row| r.lz - b * r.llx;
            let my = mean(rows.iter().map(y), n);
            let sxx: f64 = rows.iter().map(|r| (r.lx - mx).powi(2)).sum();
            let sxy: f64 = rows.iter().map(|r| (r.lx - mx) * (y(r) - my)).sum();
            let a = sxy / sxx;
            Ok((my - a * mx, a, b))
        }
        LogPower::Fit => {
            let ml = mean(rows.iter().map(|r| r.llx), n);
            let mz = mean(rows.iter().map(|r| r.lz), n);
            let (mut suu, mut suv, mut svv, mut suw, mut svw) = (0.0, 0.0, 0.0, 0.0, 0.0);
            for r in rows {
                let (u, v, w) = (r.lx - mx, r.llx - ml, r.lz - mz);
                suu += u * u;
                suv += u * v;
                svv += v * v;
                suw += u * w;
                svw += v * w;
            }
            let det = suu * svv - suv * suv;
            if !(det > 1e-12 * suu * svv) {
                return Err(FitError::Degenerate);
            }
            let a = (suw * svv - svw * suv) / det;
            let b = (svw * suu - suw * suv) / det;
            Ok((mz - a * mx - b * ml, a, b))
        }
    }
}

fn distinct_x(rows: &[Row]) -> usize {
    let mut xs: Vec<f64> = rows.iter().map(|r| r.lx).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs.len()
}

/// Least-squares fit of `(x, Z)` samples to `c·x^a·(log x)^b`.
pub fn fit_exponent(samples: &[(u64, u64)], log_power: LogPower) -> Result<FitResult, FitError> {
    let loglog = log_power.uses_loglog();
    let rows: Vec<Row> = samples
        .iter()
        .filter(|&&(x, z)| z > 0 && x >= 1 && (!loglog || x > 1))
        .map(|&(x, z)| {
            let lx = (x as f64).ln();
            Row { lx, llx: if loglog { lx.ln() } else { 0.0 }, lz: (z as f64).ln() }
        })
        .collect();
    let dropped = samples.len() - rows.len();
    if distinct_x(&rows) < 3 {
        return Err(FitError::TooFewSamples { usable: rows.len(), dropped });
    }
    let (log_c, a_hat, b) = solve(&rows, log_power)?;
    let ss: f64 = rows.iter().map(|r| (r.lz - log_c - a_hat * r.lx - b * r.llx).powi(2)).sum();
    let rms_residual = (ss / rows.len() as f64).sqrt();

    let loo_sensitivity = (rows.len() >= 4)
        .then(|| {
            (0..rows.len())
                .filter_map(|skip| {
                    let rest: Vec<Row> = rows
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, r)| *r)
                        .collect();
                    if distinct_x(&rest) < 3 {
                        return None;
                    }
                    solve(&rest, log_power).ok().map(|(_, a, _)| (a - a_hat).abs())
                })
                .fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d))))
        })
        .flatten();

    Ok(FitResult {
        a_hat,
        c_hat: log_c.exp(),
        b,
        b_fitted: log_power == LogPower::Fit,
        rms_residual,
        sample_count: rows.len(),
        dropped,
        loo_sensitivity,
    })
}

/// Fitted exponent against a predicted `a(G)`.
///
/// Counting data can only support or contradict the predicted growth; a
/// verdict inside the tolerance is evidence, not a proof.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub predicted: AValue,
    pub fitted: FitResult,
    pub tolerance: f64,
    pub within_tolerance: bool,
}

impl Verdict {
    pub fn new(predicted: AValue, fitted: FitResult, tolerance: f64) -> Verdict {
        let within_tolerance = (fitted.a_hat - predicted.to_f64()).abs() <= tolerance;
        Verdict { predicted, fitted, tolerance, within_tolerance }
    }

    pub fn deviation(&self) -> f64 {
        self.fitted.a_hat - self.predicted.to_f64()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "predicted a(G) = {} ({:.6})", self.predicted, self.predicted.to_f64())?;
        writeln!(f, "deviation = {:+.6} (tolerance {})", self.deviation(), self.tolerance)?;
        write!(
            f,
            "verdict: {} (empirical evidence only)",
            if self.within_tolerance { "CONSISTENT" } else { "INCONSISTENT" }
        )
    }
}

/// Computes `a(G)` for `group`, fits `samples` with a free log power, and
/// compares the two.
pub fn conjecture_verdict(
    group: &PermGroup,
    samples: &[(u64, u64)],
    tolerance: f64,
    cap: usize,
) -> Result<Verdict, FitError> {
    let predicted = group.a_invariant(cap)?;
    let fitted = fit_exponent(samples, LogPower::Fit)?;
    Ok(Verdict::new(predicted, fitted, tolerance))
}
