//! Statistical checks used by the property suites: one-sample
//! Kolmogorov–Smirnov, Monte Carlo proportion tolerance and Pearson
//! correlation.

use crate::distributions::Marginal;
use crate::error::{Error, Result};

/// Smallest sample accepted by [`ks_test`].
pub const KS_MIN_SAMPLES: usize = 100;

/// Absolute slack for proportions read from two-decimal tables.
pub const ROUNDING_FLOOR: f64 = 0.005;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub statistic: f64,
    pub approx_p_value: f64,
}

/// One-sample KS test against a continuous marginal. The p-value uses the
/// asymptotic Kolmogorov distribution with the small-sample adjustment
/// `λ = (√n + 0.12 + 0.11/√n) · D`.
pub fn ks_test(samples: &[f64], marginal: &Marginal) -> Result<KsResult> {
    if !marginal.is_continuous() {
        return Err(Error::DiscreteMarginal("ks_test"));
    }
    if samples.len() < KS_MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            needed: KS_MIN_SAMPLES,
            got: samples.len(),
        });
    }
    if let Some(&bad) = samples.iter().find(|v| v.is_nan()) {
        return Err(Error::Domain {
            what: "samples must not be NaN",
            value: bad,
        });
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let statistic = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = marginal.cdf(x);
            let below = f - i as f64 / n;
            let above = (i + 1) as f64 / n - f;
            below.max(above)
        })
        .fold(0.0, f64::max)
        .clamp(0.0, 1.0);
    let root = n.sqrt();
    let lambda = (root + 0.12 + 0.11 / root) * statistic;
    Ok(KsResult {
        statistic,
        approx_p_value: kolmogorov_survival(lambda),
    })
}

/// `P(K > λ)` for the Kolmogorov distribution.
fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let a = -2.0 * lambda * lambda;
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=200 {
        let k = f64::from(k);
        let term = sign * (a * k * k).exp();
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// `|observed − expected| ≤ max(z · √(expected(1−expected)/S), 0.005)`.
pub fn proportion_within(observed: f64, expected: f64, trials: u64, z: f64) -> bool {
    proportion_within_floor(observed, expected, trials, z, ROUNDING_FLOOR)
}

/// [`proportion_within`] with an explicit absolute floor.
pub fn proportion_within_floor(observed: f64, expected: f64, trials: u64, z: f64, floor: f64) -> bool {
    (observed - expected).abs() <= proportion_tolerance(expected, trials, z, floor)
}

pub fn proportion_tolerance(expected: f64, trials: u64, z: f64, floor: f64) -> f64 {
    let se = (expected * (1.0 - expected) / trials.max(1) as f64).sqrt();
    (z * se).max(floor)
}

/// Sample Pearson correlation.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: x.len(),
        });
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Domain {
            what: "correlation undefined for a constant vector",
            value: 0.0,
        });
    }
    Ok(sxy / (sxx * syy).sqrt())
}
