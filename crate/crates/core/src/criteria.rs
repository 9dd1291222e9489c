//! Decision criteria scoring one dose's outcomes, and the rule that turns a
//! row of scores into a selected dose or a "none" verdict.

use serde::Serialize;

use crate::copula::CompleteInformation;
use crate::distributions::Marginal;
use crate::error::{domain, Error, Result};
use crate::special::{reg_inc_beta_unchecked, std_normal_cdf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Maximize,
    Minimize,
}

impl Direction {
    /// True when `candidate` is strictly better than `incumbent`.
    pub fn prefers(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Direction::Maximize => candidate > incumbent,
            Direction::Minimize => candidate < incumbent,
        }
    }
}

/// Thresholds of the safety/efficacy admissibility gate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdmissibilityParams {
    /// Toxicity probability regarded as safe.
    pub tox_cap: f64,
    /// Mean efficacy regarded as worthwhile.
    pub eff_floor: f64,
    /// Largest tolerated posterior probability that mean efficacy is below the floor.
    pub theta1: f64,
    /// Smallest required posterior probability that toxicity is below the cap.
    pub theta2: f64,
}

impl AdmissibilityParams {
    pub fn validate(&self) -> Result<()> {
        let open_unit = |v: f64| v > 0.0 && v < 1.0;
        if !open_unit(self.tox_cap) {
            return Err(domain("tox_cap must lie in (0, 1)", self.tox_cap));
        }
        if !self.eff_floor.is_finite() {
            return Err(domain("eff_floor must be finite", self.eff_floor));
        }
        if !open_unit(self.theta1) {
            return Err(domain("theta1 must lie in (0, 1)", self.theta1));
        }
        if !open_unit(self.theta2) {
            return Err(domain("theta2 must lie in (0, 1)", self.theta2));
        }
        Ok(())
    }
}

/// A criterion together with the endpoint(s) it reads.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Criterion {
    /// Distance between the sample mean and a target.
    AbsDistance { gamma: f64, endpoint: usize },
    /// Posterior mass of `[gamma − epsilon, gamma + epsilon]`.
    IntervalPosterior {
        gamma: f64,
        epsilon: f64,
        endpoint: usize,
    },
    /// Mean efficacy, zeroed unless both admissibility gates pass.
    EfficacyAdmissible {
        params: AdmissibilityParams,
        toxicity: usize,
        efficacy: usize,
    },
}

impl Criterion {
    pub fn name(&self) -> &'static str {
        match self {
            Criterion::AbsDistance { .. } => "abs_distance",
            Criterion::IntervalPosterior { .. } => "interval_posterior",
            Criterion::EfficacyAdmissible { .. } => "efficacy_admissible",
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            Criterion::AbsDistance { .. } => Direction::Minimize,
            _ => Direction::Maximize,
        }
    }

    /// Smallest number of patients the criterion can score.
    pub fn min_patients(&self) -> usize {
        match self {
            Criterion::AbsDistance { .. } => 1,
            _ => 2,
        }
    }

    /// Checks parameters and that every endpoint index is below `endpoints`.
    pub fn validate(&self, endpoints: usize) -> Result<()> {
        let check_endpoint = |k: usize| {
            if k < endpoints {
                Ok(())
            } else {
                Err(Error::InvalidScenario(format!(
                    "criterion endpoint {k} out of range for {endpoints} endpoint(s)"
                )))
            }
        };
        match *self {
            Criterion::AbsDistance { gamma, endpoint } => {
                if !(gamma > 0.0 && gamma < 1.0) {
                    return Err(domain("gamma must lie in (0, 1)", gamma));
                }
                check_endpoint(endpoint)
            }
            Criterion::IntervalPosterior {
                gamma,
                epsilon,
                endpoint,
            } => {
                if !gamma.is_finite() {
                    return Err(domain("gamma must be finite", gamma));
                }
                if !(epsilon > 0.0 && epsilon.is_finite()) {
                    return Err(domain("epsilon must be positive", epsilon));
                }
                check_endpoint(endpoint)
            }
            Criterion::EfficacyAdmissible {
                params,
                toxicity,
                efficacy,
            } => {
                params.validate()?;
                check_endpoint(toxicity)?;
                check_endpoint(efficacy)?;
                if toxicity == efficacy {
                    return Err(Error::InvalidScenario(
                        "toxicity and efficacy endpoints must differ".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoseScore {
    pub value: f64,
    pub admissible: bool,
    pub direction: Direction,
}

impl DoseScore {
    fn always(value: f64, direction: Direction) -> Self {
        Self {
            value,
            admissible: true,
            direction,
        }
    }

    /// The score with failed admissibility folded in as zero.
    pub fn effective(&self) -> f64 {
        if self.admissible {
            self.value
        } else {
            0.0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Selection {
    Dose(usize),
    NoDose,
}

/// Sample mean and variance with the `n − 1` divisor (zero when `n = 1`).
pub(crate) fn moments(y: &[f64]) -> (f64, f64) {
    let n = y.len() as f64;
    let mean = y.iter().sum::<f64>() / n;
    if y.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = y.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, ss / (n - 1.0))
}

fn require_len(y: &[f64], needed: usize) -> Result<()> {
    if y.is_empty() {
        return Err(Error::Empty("outcome vector"));
    }
    if y.len() < needed {
        return Err(Error::TooFewSamples { needed, got: y.len() });
    }
    Ok(())
}

pub fn score_abs_distance(y: &[f64], gamma: f64) -> Result<DoseScore> {
    require_len(y, 1)?;
    let (mean, _) = moments(y);
    Ok(DoseScore::always((mean - gamma).abs(), Direction::Minimize))
}

/// Mass that `Normal(mean(y), sd(y))` puts on `[gamma − epsilon, gamma + epsilon]`.
/// A constant sample is treated as a point mass.
pub fn score_interval_posterior(y: &[f64], gamma: f64, epsilon: f64) -> Result<DoseScore> {
    require_len(y, 2)?;
    if !(epsilon > 0.0) {
        return Err(domain("epsilon must be positive", epsilon));
    }
    let (mean, var) = moments(y);
    let value = if var > 0.0 {
        Marginal::Normal { mean, sd: var.sqrt() }.interval_prob(gamma - epsilon, gamma + epsilon)?
    } else if (mean - gamma).abs() <= epsilon {
        1.0
    } else {
        0.0
    };
    Ok(DoseScore::always(value, Direction::Maximize))
}

/// Toxicity gate: `P(p < tox_cap) > theta2` for `p ~ Beta(1 + x, 1 + n − x)`.
pub fn toxicity_admissible(events: usize, patients: usize, params: &AdmissibilityParams) -> bool {
    let a = 1.0 + events as f64;
    let b = 1.0 + (patients - events) as f64;
    reg_inc_beta_unchecked(a, b, params.tox_cap) > params.theta2
}

/// Efficacy gate: `P(M < eff_floor) < theta1` for `M ~ Normal(mean, sd/√n)`.
fn efficacy_admissible(mean: f64, var: f64, n: usize, params: &AdmissibilityParams) -> bool {
    let below = if var > 0.0 {
        let se = (var / n as f64).sqrt();
        std_normal_cdf((params.eff_floor - mean) / se)
    } else if mean < params.eff_floor {
        1.0
    } else {
        0.0
    };
    below < params.theta1
}

fn efficacy_score(y_eff: &[f64], tox_ok: bool, params: &AdmissibilityParams) -> DoseScore {
    let (mean, var) = moments(y_eff);
    DoseScore {
        value: mean,
        admissible: tox_ok && efficacy_admissible(mean, var, y_eff.len(), params),
        direction: Direction::Maximize,
    }
}

fn count_events(y_tox: &[f64]) -> Result<usize> {
    let mut events = 0;
    for &v in y_tox {
        if v == 1.0 {
            events += 1;
        } else if v != 0.0 {
            return Err(domain("toxicity outcomes must be 0 or 1", v));
        }
    }
    Ok(events)
}

pub fn score_efficacy_admissible(
    y_tox: &[f64],
    y_eff: &[f64],
    params: &AdmissibilityParams,
) -> Result<DoseScore> {
    if y_tox.len() != y_eff.len() {
        return Err(Error::LengthMismatch {
            left: y_tox.len(),
            right: y_eff.len(),
        });
    }
    require_len(y_eff, 2)?;
    params.validate()?;
    let events = count_events(y_tox)?;
    let tox_ok = toxicity_admissible(events, y_tox.len(), params);
    Ok(efficacy_score(y_eff, tox_ok, params))
}

/// Best admissible dose; ties go to the lowest index.
pub fn select_dose(scores: &[DoseScore], none_allowed: bool) -> Result<Selection> {
    let direction = scores.first().ok_or(Error::Empty("dose scores"))?.direction;
    if scores.iter().any(|s| s.direction != direction) {
        return Err(Error::MixedDirections);
    }
    let mut best: Option<(usize, f64)> = None;
    for (j, s) in scores.iter().enumerate() {
        if !s.admissible || s.value.is_nan() {
            continue;
        }
        match best {
            Some((_, incumbent)) if !direction.prefers(s.value, incumbent) => {}
            _ => best = Some((j, s.value)),
        }
    }
    match best {
        Some((j, _)) => Ok(Selection::Dose(j)),
        None if none_allowed => Ok(Selection::NoDose),
        None => Err(Error::NoAdmissibleDose),
    }
}

/// Scores every dose of a complete-information array under one criterion.
pub fn score_doses(criterion: &Criterion, info: &CompleteInformation) -> Result<Vec<DoseScore>> {
    let scorer = Scorer::new(*criterion, info.patients());
    let mut out = Vec::with_capacity(info.doses());
    scorer.score_into(info, &mut out)?;
    Ok(out)
}

/// A criterion prepared for a fixed number of patients. The toxicity gate
/// depends only on the event count, so it is tabulated once.
#[derive(Debug, Clone)]
pub(crate) struct Scorer {
    criterion: Criterion,
    tox_gate: Vec<bool>,
}

impl Scorer {
    pub(crate) fn new(criterion: Criterion, patients: usize) -> Self {
        let tox_gate = match &criterion {
            Criterion::EfficacyAdmissible { params, .. } => (0..=patients)
                .map(|x| toxicity_admissible(x, patients, params))
                .collect(),
            _ => Vec::new(),
        };
        Self { criterion, tox_gate }
    }

    pub(crate) fn score_into(&self, info: &CompleteInformation, out: &mut Vec<DoseScore>) -> Result<()> {
        out.clear();
        for j in 0..info.doses() {
            let score = match self.criterion {
                Criterion::AbsDistance { gamma, endpoint } => {
                    score_abs_distance(info.outcomes(j, endpoint), gamma)?
                }
                Criterion::IntervalPosterior {
                    gamma,
                    epsilon,
                    endpoint,
                } => score_interval_posterior(info.outcomes(j, endpoint), gamma, epsilon)?,
                Criterion::EfficacyAdmissible {
                    params,
                    toxicity,
                    efficacy,
                } => {
                    let y_eff = info.outcomes(j, efficacy);
                    require_len(y_eff, 2)?;
                    let events = count_events(info.outcomes(j, toxicity))?;
                    efficacy_score(y_eff, self.tox_gate[events], &params)
                }
            };
            out.push(score);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1: [[f64; 5]; 6] = [
        [0.075, 0.033, 0.241, 0.144, 0.050],
        [0.149, 0.065, 0.481, 0.288, 0.101],
        [0.224, 0.098, 0.722, 0.432, 0.151],
        [0.299, 0.130, 0.962, 0.576, 0.202],
        [0.373, 0.163, 1.203, 0.720, 0.252],
        [0.448, 0.195, 1.443, 0.864, 0.302],
    ];

    fn params() -> AdmissibilityParams {
        AdmissibilityParams {
            tox_cap: 0.35,
            eff_floor: 5.0,
            theta1: 0.5,
            theta2: 0.5,
        }
    }

    fn maxi(value: f64, admissible: bool) -> DoseScore {
        DoseScore {
            value,
            admissible,
            direction: Direction::Maximize,
        }
    }

    #[test]
    fn abs_distance_examples() {
        let s = score_abs_distance(&[0.0, 0.0, 1.0, 0.0, 0.0], 0.2).unwrap();
        assert!(s.value.abs() < 1e-15);
        assert_eq!(s.direction, Direction::Minimize);
        assert_eq!(score_abs_distance(&[1.0; 5], 0.25).unwrap().value, 0.75);
        assert!((score_abs_distance(&[0.0, 1.0, 1.0, 0.0], 0.3).unwrap().value - 0.2).abs() < 1e-15);
        assert_eq!(
            score_abs_distance(&[], 0.3).unwrap_err(),
            Error::Empty("outcome vector")
        );
    }

    #[test]
    fn interval_posterior_on_printed_matrix() {
        let want = [0.09, 0.04, 0.02, 0.01, 0.01, 0.01];
        let scores: Vec<DoseScore> = TABLE1
            .iter()
            .map(|y| score_interval_posterior(y, 0.1, 0.01).unwrap())
            .collect();
        for (s, w) in scores.iter().zip(want) {
            assert!((s.value - w).abs() <= 0.005, "{} vs {w}", s.value);
        }
        assert_eq!(select_dose(&scores, false).unwrap(), Selection::Dose(0));
    }

    #[test]
    fn interval_posterior_point_mass() {
        assert_eq!(score_interval_posterior(&[0.3; 4], 0.3, 0.01).unwrap().value, 1.0);
        assert_eq!(score_interval_posterior(&[0.5; 4], 0.3, 0.01).unwrap().value, 0.0);
        assert!(matches!(
            score_interval_posterior(&[0.3], 0.3, 0.01),
            Err(Error::TooFewSamples { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn efficacy_admissible_examples() {
        // Third and fourth doses of the bivariate worked example.
        let d3 = score_efficacy_admissible(
            &[1.0, 0.0, 0.0, 0.0, 0.0],
            &[121.8, 87.3, 159.3, 112.9, 153.5],
            &params(),
        )
        .unwrap();
        assert!(d3.admissible);
        assert!((d3.value - 126.96).abs() < 1e-9);
        let d4 = score_efficacy_admissible(
            &[1.0, 1.0, 0.0, 1.0, 0.0],
            &[134.3, 97.3, 173.5, 128.1, 167.4],
            &params(),
        )
        .unwrap();
        assert!(!d4.admissible);
        assert_eq!(d4.effective(), 0.0);

        let flat = score_efficacy_admissible(&[0.0; 5], &[0.0; 5], &params()).unwrap();
        assert!(!flat.admissible);
    }

    #[test]
    fn toxicity_gate_matches_binomial_tail() {
        // I_x(a, b) for integer a, b equals P(Bin(a + b − 1, x) ≥ a).
        fn binomial_tail(a: u32, b: u32, x: f64) -> f64 {
            let n = a + b - 1;
            (a..=n)
                .map(|k| {
                    let c: f64 = (0..k).map(|i| f64::from(n - i) / f64::from(i + 1)).product();
                    c * x.powi(k as i32) * (1.0 - x).powi((n - k) as i32)
                })
                .sum()
        }
        for events in 0..=5usize {
            let p = binomial_tail(1 + events as u32, 6 - events as u32, 0.35);
            assert_eq!(
                toxicity_admissible(events, 5, &params()),
                p > 0.5,
                "events {events}"
            );
        }
        assert!((binomial_tail(4, 3, 0.35) - 0.1174239).abs() < 1e-7);
    }

    #[test]
    fn efficacy_errors() {
        assert!(matches!(
            score_efficacy_admissible(&[0.0; 3], &[1.0; 4], &params()),
            Err(Error::LengthMismatch { left: 3, right: 4 })
        ));
        assert!(matches!(
            score_efficacy_admissible(&[0.0], &[1.0], &params()),
            Err(Error::TooFewSamples { .. })
        ));
        assert!(score_efficacy_admissible(&[0.5, 0.0], &[1.0, 2.0], &params()).is_err());
    }

    #[test]
    fn selection_examples() {
        let s: Vec<_> = [0.09, 0.04, 0.02, 0.01, 0.01, 0.01]
            .iter()
            .map(|&v| maxi(v, true))
            .collect();
        assert_eq!(select_dose(&s, false).unwrap(), Selection::Dose(0));

        let s = [
            maxi(0.30, true),
            maxi(0.79, true),
            maxi(1.28, true),
            maxi(1.40, false),
        ];
        assert_eq!(select_dose(&s, true).unwrap(), Selection::Dose(2));

        let none = [maxi(1.0, false), maxi(2.0, false)];
        assert_eq!(select_dose(&none, true).unwrap(), Selection::NoDose);
        assert_eq!(select_dose(&none, false).unwrap_err(), Error::NoAdmissibleDose);
        assert_eq!(select_dose(&[], true).unwrap_err(), Error::Empty("dose scores"));

        let mixed = [
            maxi(1.0, true),
            DoseScore {
                direction: Direction::Minimize,
                ..maxi(1.0, true)
            },
        ];
        assert_eq!(select_dose(&mixed, true).unwrap_err(), Error::MixedDirections);
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let s = [maxi(0.5, true), maxi(0.9, true), maxi(0.9, true)];
        assert_eq!(select_dose(&s, false).unwrap(), Selection::Dose(1));
        let m: Vec<_> = [0.2, 0.1, 0.1]
            .iter()
            .map(|&v| DoseScore::always(v, Direction::Minimize))
            .collect();
        assert_eq!(select_dose(&m, false).unwrap(), Selection::Dose(1));
    }

    #[test]
    fn distance_and_interval_agree_on_separated_binary_doses() {
        let n = 400;
        let doses: Vec<Vec<f64>> = [0.01, 0.30, 0.95]
            .iter()
            .map(|&rate| {
                let ones = (rate * n as f64).round() as usize;
                (0..n).map(|i| if i < ones { 1.0 } else { 0.0 }).collect()
            })
            .collect();
        let gamma = 0.3;
        let by_distance: Vec<_> = doses
            .iter()
            .map(|y| score_abs_distance(y, gamma).unwrap())
            .collect();
        let by_interval: Vec<_> = doses
            .iter()
            .map(|y| score_interval_posterior(y, gamma, 0.02).unwrap())
            .collect();
        assert_eq!(select_dose(&by_distance, false).unwrap(), Selection::Dose(1));
        assert_eq!(select_dose(&by_interval, false).unwrap(), Selection::Dose(1));
    }

    #[test]
    fn criterion_validation() {
        let ok = Criterion::EfficacyAdmissible {
            params: params(),
            toxicity: 0,
            efficacy: 1,
        };
        assert!(ok.validate(2).is_ok());
        assert!(ok.validate(1).is_err());
        assert!(Criterion::AbsDistance {
            gamma: 1.2,
            endpoint: 0
        }
        .validate(1)
        .is_err());
        assert!(Criterion::IntervalPosterior {
            gamma: 0.1,
            epsilon: 0.0,
            endpoint: 0
        }
        .validate(1)
        .is_err());
        let bad = AdmissibilityParams {
            theta2: 1.0,
            ..params()
        };
        assert!(bad.validate().is_err());
        assert_eq!(ok.direction(), Direction::Maximize);
        assert_eq!(ok.name(), "efficacy_admissible");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn dose_rows() -> impl Strategy<Value = Vec<(Vec<f64>, Vec<f64>)>> {
            prop::collection::vec(
                (
                    prop::collection::vec(prop::bool::weighted(0.3).prop_map(|b| f64::from(u8::from(b))), 6),
                    prop::collection::vec(0.0f64..200.0, 6),
                ),
                1..6,
            )
        }

        proptest! {
            #[test]
            fn efficacy_selection_is_scale_invariant(rows in dose_rows(), scale in 0.01f64..100.0) {
                let base = params();
                let scaled = AdmissibilityParams { eff_floor: base.eff_floor * scale, ..base };
                let plain: Vec<_> = rows.iter()
                    .map(|(t, e)| score_efficacy_admissible(t, e, &base).unwrap())
                    .collect();
                let stretched: Vec<_> = rows.iter()
                    .map(|(t, e)| {
                        let e: Vec<f64> = e.iter().map(|v| v * scale).collect();
                        score_efficacy_admissible(t, &e, &scaled).unwrap()
                    })
                    .collect();
                for (a, b) in plain.iter().zip(&stretched) {
                    prop_assert!((b.value - a.value * scale).abs() <= 1e-9 * (1.0 + b.value.abs()));
                }
                prop_assert_eq!(select_dose(&plain, true).unwrap(), select_dose(&stretched, true).unwrap());
            }

            #[test]
            fn interval_posterior_is_permutation_invariant(
                y in prop::collection::vec(-1.0f64..2.0, 2..40),
                seed in any::<u64>(),
            ) {
                let mut shuffled = y.clone();
                let len = shuffled.len();
                let mut state = seed;
                for i in (1..len).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    shuffled.swap(i, (state >> 33) as usize % (i + 1));
                }
                let a = score_interval_posterior(&y, 0.3, 0.05).unwrap().value;
                let b = score_interval_posterior(&shuffled, 0.3, 0.05).unwrap().value;
                prop_assert!((a - b).abs() <= 1e-12);
            }

            #[test]
            fn tied_doses_select_lowest_index(values in prop::collection::vec(0u8..4, 1..8)) {
                let scores: Vec<_> = values.iter().map(|&v| maxi(f64::from(v), true)).collect();
                let top = *values.iter().max().unwrap();
                let first = values.iter().position(|&v| v == top).unwrap();
                prop_assert_eq!(select_dose(&scores, false).unwrap(), Selection::Dose(first));
            }
        }
    }
}
