//! Per-dose outcome distributions.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::special::{
    inc_gamma, ln_gamma_unchecked, reg_inc_beta_unchecked, std_normal_cdf, std_normal_pdf,
    std_normal_quantile_unchecked,
};

const MAX_SOLVER_ITER: usize = 100;

/// Outcome distribution of one endpoint at one dose.
///
/// Gamma uses the shape/rate parameterisation, so its mean is `shape / rate`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Marginal {
    Bernoulli {
        p: f64,
    },
    Normal {
        mean: f64,
        sd: f64,
    },
    Gamma {
        shape: f64,
        rate: f64,
    },
    Beta {
        a: f64,
        b: f64,
    },
    #[serde(rename = "uniform")]
    Uniform01,
}

impl Marginal {
    pub fn bernoulli(p: f64) -> Result<Self> {
        Self::Bernoulli { p }.validated()
    }

    pub fn normal(mean: f64, sd: f64) -> Result<Self> {
        Self::Normal { mean, sd }.validated()
    }

    pub fn gamma(shape: f64, rate: f64) -> Result<Self> {
        Self::Gamma { shape, rate }.validated()
    }

    pub fn beta(a: f64, b: f64) -> Result<Self> {
        Self::Beta { a, b }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Checks the parameter domains.
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v > 0.0 && v.is_finite();
        match *self {
            Self::Bernoulli { p } if !(0.0..=1.0).contains(&p) => {
                Err(domain("Bernoulli p must lie in [0, 1]", p))
            }
            Self::Normal { mean, .. } if !mean.is_finite() => Err(domain("Normal mean must be finite", mean)),
            Self::Normal { sd, .. } if !positive(sd) => Err(domain("Normal sd must be > 0", sd)),
            Self::Gamma { shape, .. } if !positive(shape) => Err(domain("Gamma shape must be > 0", shape)),
            Self::Gamma { rate, .. } if !positive(rate) => Err(domain("Gamma rate must be > 0", rate)),
            Self::Beta { a, .. } if !positive(a) => Err(domain("Beta a must be > 0", a)),
            Self::Beta { b, .. } if !positive(b) => Err(domain("Beta b must be > 0", b)),
            _ => Ok(()),
        }
    }

    pub fn is_continuous(&self) -> bool {
        !matches!(self, Self::Bernoulli { .. })
    }

    pub fn mean(&self) -> f64 {
        match *self {
            Self::Bernoulli { p } => p,
            Self::Normal { mean, .. } => mean,
            Self::Gamma { shape, rate } => shape / rate,
            Self::Beta { a, b } => a / (a + b),
            Self::Uniform01 => 0.5,
        }
    }

    pub fn variance(&self) -> f64 {
        match *self {
            Self::Bernoulli { p } => p * (1.0 - p),
            Self::Normal { sd, .. } => sd * sd,
            Self::Gamma { shape, rate } => shape / (rate * rate),
            Self::Beta { a, b } => a * b / ((a + b).powi(2) * (a + b + 1.0)),
            Self::Uniform01 => 1.0 / 12.0,
        }
    }

    /// Density for continuous families, probability mass for Bernoulli.
    pub fn density(&self, y: f64) -> f64 {
        match *self {
            Self::Bernoulli { p } => {
                if y == 1.0 {
                    p
                } else if y == 0.0 {
                    1.0 - p
                } else {
                    0.0
                }
            }
            Self::Normal { mean, sd } => std_normal_pdf((y - mean) / sd) / sd,
            Self::Gamma { shape, rate } => {
                if y <= 0.0 {
                    return 0.0;
                }
                let x = rate * y;
                rate * ((shape - 1.0) * x.ln() - x - ln_gamma_unchecked(shape)).exp()
            }
            Self::Beta { a, b } => {
                if y <= 0.0 || y >= 1.0 {
                    return 0.0;
                }
                let ln_norm = ln_gamma_unchecked(a + b) - ln_gamma_unchecked(a) - ln_gamma_unchecked(b);
                (ln_norm + (a - 1.0) * y.ln() + (b - 1.0) * (-y).ln_1p()).exp()
            }
            Self::Uniform01 => {
                if (0.0..=1.0).contains(&y) {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Right-continuous CDF.
    pub fn cdf(&self, y: f64) -> f64 {
        match *self {
            Self::Bernoulli { p } => {
                if y < 0.0 {
                    0.0
                } else if y < 1.0 {
                    1.0 - p
                } else {
                    1.0
                }
            }
            Self::Normal { mean, sd } => std_normal_cdf((y - mean) / sd),
            Self::Gamma { shape, rate } => {
                if y <= 0.0 {
                    0.0
                } else {
                    inc_gamma(shape, rate * y, ln_gamma_unchecked(shape)).lower
                }
            }
            Self::Beta { a, b } => reg_inc_beta_unchecked(a, b, y.clamp(0.0, 1.0)),
            Self::Uniform01 => y.clamp(0.0, 1.0),
        }
    }

    /// Generalised inverse CDF `inf { y : F(y) >= u }` for `0 < u < 1`.
    ///
    /// Bernoulli returns `1` when `u < p`: a patient with latent tolerance `u`
    /// experiences the event at every dose whose probability exceeds `u`.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(domain("quantile requires 0 < u < 1", u));
        }
        Ok(self.quantile_unchecked(u))
    }

    pub(crate) fn quantile_unchecked(&self, u: f64) -> f64 {
        match *self {
            Self::Bernoulli { p } => bernoulli_quantile(p, u),
            Self::Normal { mean, sd } => mean + sd * std_normal_quantile_unchecked(u),
            Self::Gamma { shape, rate } => {
                standard_gamma_quantile(shape, ln_gamma_unchecked(shape), u) / rate
            }
            Self::Beta { a, b } => beta_quantile(a, b, u),
            Self::Uniform01 => u,
        }
    }

    /// `F(hi) − F(lo)` clamped to `[0, 1]`.
    pub fn interval_prob(&self, lo: f64, hi: f64) -> Result<f64> {
        if lo > hi {
            return Err(Error::ArgumentOrder { lo, hi });
        }
        Ok((self.cdf(hi) - self.cdf(lo)).clamp(0.0, 1.0))
    }
}

#[inline]
pub(crate) fn bernoulli_quantile(p: f64, u: f64) -> f64 {
    if u < p {
        1.0
    } else {
        0.0
    }
}

/// Quantile of Gamma(shape, 1), bracketed and solved with safeguarded Halley
/// steps from a Wilson–Hilferty start.
pub(crate) fn standard_gamma_quantile(shape: f64, ln_gamma_shape: f64, u: f64) -> f64 {
    // The upper end of the bracket is only known once the CDF exceeds u
    // somewhere; until then fallbacks expand from mean + 20 sd.
    let reach = shape + 20.0 * shape.sqrt();
    let mut lo = 0.0;
    let mut hi = f64::INFINITY;
    let fallback = |lo: f64, hi: f64, x: f64| {
        if hi.is_finite() {
            0.5 * (lo + hi)
        } else {
            (2.0 * x).max(reach)
        }
    };

    let mut x = gamma_initial_guess(shape, ln_gamma_shape, u);
    if !(x > 0.0 && x.is_finite()) {
        x = shape;
    }

    let upper_half = u > 0.5;
    for _ in 0..MAX_SOLVER_ITER {
        let ig = inc_gamma(shape, x, ln_gamma_shape);
        let f = if upper_half {
            (1.0 - u) - ig.upper
        } else {
            ig.lower - u
        };
        if f == 0.0 {
            return x;
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let density = ig.prefactor / x;
        let mut next = f64::NAN;
        if density > 0.0 && density.is_finite() {
            let newton = f / density;
            // f''/f' = (shape − 1)/x − 1 for the gamma CDF.
            let curvature = (shape - 1.0) / x - 1.0;
            let denom = 1.0 - 0.5 * newton * curvature;
            next = if denom > 0.5 {
                x - newton / denom
            } else {
                x - newton
            };
        }
        let bisected = !(next > lo && next < hi);
        if bisected {
            next = fallback(lo, hi, x);
        }
        let step = (next - x).abs();
        x = next;
        // After an interpolating step of relative size 1e-7 the residual error
        // is far below f64 resolution.
        if (!bisected && step <= 1e-7 * x) || (hi.is_finite() && hi - lo <= 4.0 * f64::EPSILON * hi) {
            break;
        }
    }
    x
}

fn gamma_initial_guess(shape: f64, ln_gamma_shape: f64, u: f64) -> f64 {
    let c = 1.0 / (9.0 * shape);
    let z = std_normal_quantile_unchecked(u);
    let wilson_hilferty = shape * (1.0 - c + z * c.sqrt()).powi(3);
    if shape >= 1.0 && wilson_hilferty > 0.0 {
        return wilson_hilferty;
    }
    // Small-x expansion P(a, x) ≈ x^a / Γ(a + 1).
    let small = ((u.ln() + ln_gamma_shape + shape.ln()) / shape).exp();
    if small < 1.0 {
        small
    } else if wilson_hilferty > 0.0 {
        wilson_hilferty
    } else {
        1.0 - (-u).ln_1p()
    }
}

fn beta_quantile(a: f64, b: f64, u: f64) -> f64 {
    if u > 0.5 {
        return 1.0 - beta_lower_quantile(b, a, 1.0 - u);
    }
    beta_lower_quantile(a, b, u)
}

fn beta_lower_quantile(a: f64, b: f64, u: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut x = a / (a + b);
    let ln_norm = ln_gamma_unchecked(a + b) - ln_gamma_unchecked(a) - ln_gamma_unchecked(b);
    for _ in 0..MAX_SOLVER_ITER * 2 {
        let f = reg_inc_beta_unchecked(a, b, x) - u;
        if f == 0.0 {
            return x;
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let density = (ln_norm + (a - 1.0) * x.ln() + (b - 1.0) * (-x).ln_1p()).exp();
        let mut next = x - f / density;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - x).abs();
        x = next;
        if step <= 1e-13 * x.max(1e-300) || hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validation::ks_test;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn parameter_domains() {
        assert!(Marginal::bernoulli(1.2).is_err());
        assert!(Marginal::bernoulli(0.0).is_ok());
        assert!(Marginal::normal(0.0, 0.0).is_err());
        assert!(Marginal::normal(f64::NAN, 1.0).is_err());
        assert!(Marginal::gamma(-1.0, 1.0).is_err());
        assert!(Marginal::gamma(1.0, 0.0).is_err());
        assert!(Marginal::beta(1.0, -2.0).is_err());
    }

    #[test]
    fn quantile_examples() {
        let q = |m: Marginal, u: f64| m.quantile(u).unwrap();
        assert!(close(q(Marginal::normal(0.1, 0.1).unwrap(), 0.40), 0.075, 5e-4));
        assert!(close(q(Marginal::normal(0.6, 0.6).unwrap(), 0.92), 1.443, 5e-4));
        let g = Marginal::gamma(2.5, 0.1).unwrap();
        assert!(close(q(g, 0.615), 26.3, 0.05));
        assert!(close(q(g, 0.214), 12.2, 0.05));
        assert_eq!(q(Marginal::bernoulli(0.25).unwrap(), 0.186), 1.0);
        assert_eq!(q(Marginal::bernoulli(0.10).unwrap(), 0.186), 0.0);
        assert_eq!(q(Marginal::Uniform01, 0.3), 0.3);
        assert!(g.quantile(0.0).is_err());
        assert!(g.quantile(1.0).is_err());
    }

    #[test]
    fn cdf_examples() {
        assert_eq!(Marginal::normal(0.0, 1.0).unwrap().cdf(0.0), 0.5);
        // Binomial-sum identity: I_x(2, 5) = P(Bin(6, x) >= 2).
        let x: f64 = 0.35;
        let oracle = 1.0 - (1.0 - x).powi(6) - 6.0 * x * (1.0 - x).powi(5);
        let beta = Marginal::beta(2.0, 5.0).unwrap();
        assert!(close(beta.cdf(0.35), oracle, 1e-13));
        assert!(close(oracle, 0.6809, 1e-3));
        let bern = Marginal::bernoulli(0.25).unwrap();
        assert_eq!(bern.cdf(0.0), 0.75);
        assert_eq!(bern.cdf(-0.1), 0.0);
        assert_eq!(bern.cdf(1.0), 1.0);
    }

    #[test]
    fn interval_prob_examples() {
        let a = Marginal::normal(0.109, 0.007f64.sqrt()).unwrap();
        assert!(close(a.interval_prob(0.09, 0.11).unwrap(), 0.09, 0.005));
        let b = Marginal::normal(0.217, 0.029f64.sqrt()).unwrap();
        assert!(close(b.interval_prob(0.09, 0.11).unwrap(), 0.04, 0.005));
        for m in [a, Marginal::gamma(2.0, 1.0).unwrap(), Marginal::Uniform01] {
            assert_eq!(m.interval_prob(0.5, 0.5).unwrap(), 0.0);
        }
        assert!(matches!(
            a.interval_prob(1.0, 0.0),
            Err(Error::ArgumentOrder { .. })
        ));
    }

    #[test]
    fn moments() {
        let g = Marginal::gamma(2.5, 0.1).unwrap();
        assert!(close(g.mean(), 25.0, 1e-12));
        assert!(close(g.variance(), 250.0, 1e-9));
        assert!(close(Marginal::beta(2.0, 5.0).unwrap().mean(), 2.0 / 7.0, 1e-15));
    }

    #[test]
    fn gamma_quantile_small_shape_and_tails() {
        for shape in [0.05, 0.2, 0.5, 1.0, 2.5, 13.5, 200.0] {
            let m = Marginal::gamma(shape, 0.1).unwrap();
            for u in [1e-12, 1e-6, 0.01, 0.3, 0.5, 0.77, 0.99, 1.0 - 1e-9, 1.0 - 1e-15] {
                let y = m.quantile(u).unwrap();
                assert!(y.is_finite() && y >= 0.0, "shape {shape} u {u} -> {y}");
                assert!(close(m.cdf(y), u, 1e-8), "shape {shape} u {u}: cdf {}", m.cdf(y));
            }
        }
    }

    #[test]
    fn continuous_round_trip_grid() {
        let families = [
            Marginal::normal(0.3, 0.2).unwrap(),
            Marginal::gamma(2.5, 0.1).unwrap(),
            Marginal::gamma(0.2, 0.1).unwrap(),
            Marginal::beta(2.0, 5.0).unwrap(),
            Marginal::beta(0.5, 0.5).unwrap(),
            Marginal::Uniform01,
        ];
        for m in families {
            for i in 1..1000 {
                let u = f64::from(i) / 1000.0;
                let y = m.quantile(u).unwrap();
                assert!(close(m.cdf(y), u, 1e-8), "{m:?} u {u}");
            }
        }
    }

    #[test]
    fn inverse_transform_samples_pass_ks() {
        let families = [
            Marginal::normal(0.3, 0.2).unwrap(),
            Marginal::gamma(2.5, 0.1).unwrap(),
            Marginal::gamma(0.2, 0.1).unwrap(),
            Marginal::beta(2.0, 5.0).unwrap(),
            Marginal::Uniform01,
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for m in families {
            let samples: Vec<f64> = (0..100_000)
                .map(|_| {
                    let u: f64 = rng.random();
                    m.quantile(u.max(f64::MIN_POSITIVE)).unwrap()
                })
                .collect();
            let ks = ks_test(&samples, &m).unwrap();
            assert!(ks.approx_p_value > 1e-3, "{m:?}: {ks:?}");
        }
    }

    #[test]
    fn bernoulli_tolerance_convention_has_mean_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let p = 0.3;
        let m = Marginal::bernoulli(p).unwrap();
        let draws = 1_000_000;
        let ones: f64 = (0..draws)
            .map(|_| m.quantile(rng.random::<f64>().max(1e-300)).unwrap())
            .sum();
        let mean = ones / f64::from(draws);
        let se = (p * (1.0 - p) / f64::from(draws)).sqrt();
        assert!((mean - p).abs() <= 3.0 * se, "mean {mean}");
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn bernoulli_outcome_is_monotone_in_p(p in 0.0f64..=1.0, q in 0.0f64..=1.0, u in 1e-9f64..1.0) {
                let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
                let a = Marginal::bernoulli(lo).unwrap().quantile(u).unwrap();
                let b = Marginal::bernoulli(hi).unwrap().quantile(u).unwrap();
                prop_assert!(a <= b);
            }

            #[test]
            fn gamma_duality(shape in 0.1f64..60.0, rate in 0.01f64..10.0, u in 1e-6f64..0.999999) {
                let m = Marginal::gamma(shape, rate).unwrap();
                let y = m.quantile(u).unwrap();
                prop_assert!((m.cdf(y) - u).abs() <= 1e-8);
            }
        }
    }
}
