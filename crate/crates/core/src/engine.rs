//! Monte Carlo replication of complete-information trials and aggregation
//! of the selected doses into selection proportions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::copula::{
    cholesky, complete_information, draw_uniforms, CholeskyFactor, CompleteInformation, CorrelationMatrix,
    GridTransform, MarginalGrid, PatientProfile,
};
use crate::criteria::{moments, score_doses, select_dose, Criterion, DoseScore, Scorer, Selection};
use crate::distributions::Marginal;
use crate::error::{Error, Result};

/// Label used for the "no dose selected" column.
pub const NONE_LABEL: &str = "none";

/// Replication count used when a scenario does not state one.
pub const DEFAULT_REPLICATIONS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    pub name: String,
    pub doses: Vec<String>,
    pub endpoints: Vec<String>,
    pub marginals: MarginalGrid,
    pub correlation: CorrelationMatrix,
    pub criterion: Criterion,
    pub none_allowed: bool,
    pub patients: usize,
    pub replications: u64,
    pub seed: u64,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidScenario(msg));
        let m = self.doses.len();
        let k = self.endpoints.len();
        if m == 0 {
            return invalid("at least one dose is required".into());
        }
        if k == 0 {
            return invalid("at least one endpoint is required".into());
        }
        if self.marginals.doses() != m || self.marginals.endpoints() != k {
            return invalid(format!(
                "marginal grid is {}x{}, expected {m} doses x {k} endpoints",
                self.marginals.doses(),
                self.marginals.endpoints()
            ));
        }
        if self.correlation.dim() != k {
            return invalid(format!(
                "correlation matrix is {0}x{0}, expected {k}x{k}",
                self.correlation.dim()
            ));
        }
        if self.replications == 0 {
            return invalid("replications must be at least 1".into());
        }
        let needed = self.criterion.min_patients();
        if self.patients < needed {
            return invalid(format!(
                "criterion {} needs at least {needed} patients, got {}",
                self.criterion.name(),
                self.patients
            ));
        }
        self.criterion.validate(k)?;
        if let Criterion::EfficacyAdmissible { toxicity, .. } = self.criterion {
            for j in 0..m {
                if !matches!(self.marginals.get(j, toxicity), Marginal::Bernoulli { .. }) {
                    return invalid(format!(
                        "toxicity endpoint '{}' must be bernoulli at every dose (dose {})",
                        self.endpoints[toxicity], self.doses[j]
                    ));
                }
            }
        }
        Ok(())
    }

    /// SHA-256 of the canonical JSON encoding, hex encoded.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("scenario serializes to JSON");
        hex::encode(Sha256::digest(&bytes))
    }

    /// Dose labels followed by the "none" label.
    pub fn column_labels(&self) -> Vec<String> {
        let mut labels = self.doses.clone();
        labels.push(NONE_LABEL.to_string());
        labels
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchmarkResult {
    pub scenario: String,
    /// Dose labels followed by `none`.
    pub labels: Vec<String>,
    pub counts: Vec<u64>,
    pub proportions: Vec<f64>,
    pub mc_stderr: Vec<f64>,
    pub trials_run: u64,
    pub scenario_digest: String,
}

impl BenchmarkResult {
    fn from_counts(scenario: &Scenario, counts: Vec<u64>) -> Self {
        let trials: u64 = counts.iter().sum();
        let s = trials as f64;
        let proportions: Vec<f64> = counts.iter().map(|&c| c as f64 / s).collect();
        let mc_stderr = proportions.iter().map(|p| (p * (1.0 - p) / s).sqrt()).collect();
        Self {
            scenario: scenario.name.clone(),
            labels: scenario.column_labels(),
            counts,
            proportions,
            mc_stderr,
            trials_run: trials,
            scenario_digest: scenario.digest(),
        }
    }

    /// Proportion selecting `none`.
    pub fn none_proportion(&self) -> f64 {
        *self.proportions.last().expect("result has a none column")
    }
}

/// The random stream of trial `index`: one ChaCha8 key per seed, one
/// 64-bit stream id per trial.
pub fn trial_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub mean: f64,
    /// Sample variance with the `n − 1` divisor.
    pub variance: f64,
    /// Number of entries equal to one.
    pub ones: usize,
}

impl SummaryStats {
    pub fn sd(&self) -> f64 {
        self.variance.sqrt()
    }
}

pub fn summary_stats(y: &[f64]) -> Result<SummaryStats> {
    if y.is_empty() {
        return Err(Error::Empty("outcome vector"));
    }
    let (mean, variance) = moments(y);
    Ok(SummaryStats {
        mean,
        variance,
        ones: y.iter().filter(|&&v| v == 1.0).count(),
    })
}

/// Scores and selects a dose for fixed patient profiles.
pub fn evaluate_trial(scenario: &Scenario, profiles: &[PatientProfile]) -> Result<TrialEvaluation> {
    scenario.validate()?;
    let info = complete_information(profiles, &scenario.marginals)?;
    let scores = score_doses(&scenario.criterion, &info)?;
    let selection = select_dose(&scores, scenario.none_allowed)?;
    Ok(TrialEvaluation {
        info,
        scores,
        selection,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialEvaluation {
    pub info: CompleteInformation,
    pub scores: Vec<DoseScore>,
    pub selection: Selection,
}

/// One simulated trial drawn from `rng`.
pub fn run_trial(scenario: &Scenario, rng: &mut ChaCha8Rng) -> Result<Selection> {
    scenario.validate()?;
    let factor = cholesky(&scenario.correlation)?;
    TrialWorkspace::new(scenario, &factor).run(rng)
}

/// Runs `scenario.replications` trials split over `workers` threads. The
/// result does not depend on `workers`.
pub fn run_benchmark(scenario: &Scenario, workers: usize) -> Result<BenchmarkResult> {
    scenario.validate()?;
    let factor = cholesky(&scenario.correlation)?;
    let total = scenario.replications;
    let workers = (workers.max(1) as u64).min(total);
    let chunk = total.div_ceil(workers);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let columns = scenario.doses.len() + 1;
    let run_range = |(lo, hi): (u64, u64)| -> Result<Vec<u64>> {
        let mut workspace = TrialWorkspace::new(scenario, &factor);
        let mut counts = vec![0u64; columns];
        for index in lo..hi {
            let mut rng = trial_stream(scenario.seed, index);
            match workspace.run(&mut rng)? {
                Selection::Dose(j) => counts[j] += 1,
                Selection::NoDose => counts[columns - 1] += 1,
            }
        }
        Ok(counts)
    };

    let partials: Vec<Result<Vec<u64>>> = if ranges.len() == 1 {
        vec![run_range(ranges[0])]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&r| scope.spawn(move || run_range(r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("benchmark worker panicked"))
                .collect()
        })
    };

    let mut counts = vec![0u64; columns];
    for partial in partials {
        for (total, c) in counts.iter_mut().zip(partial?) {
            *total += c;
        }
    }
    Ok(BenchmarkResult::from_counts(scenario, counts))
}

/// Buffers reused across the trials of one worker.
struct TrialWorkspace<'a> {
    factor: &'a CholeskyFactor,
    transform: GridTransform,
    scorer: Scorer,
    none_allowed: bool,
    patients: usize,
    endpoints: usize,
    normals: Vec<f64>,
    uniforms: Vec<f64>,
    scores_buf: Vec<DoseScore>,
    normal_scores: Vec<f64>,
    info: CompleteInformation,
}

impl<'a> TrialWorkspace<'a> {
    fn new(scenario: &Scenario, factor: &'a CholeskyFactor) -> Self {
        let n = scenario.patients;
        let k = scenario.endpoints.len();
        Self {
            factor,
            transform: GridTransform::new(&scenario.marginals),
            scorer: Scorer::new(scenario.criterion, n),
            none_allowed: scenario.none_allowed,
            patients: n,
            endpoints: k,
            normals: vec![0.0; k],
            uniforms: vec![0.0; n * k],
            scores_buf: Vec::with_capacity(scenario.doses.len()),
            normal_scores: vec![0.0; n],
            info: CompleteInformation::zeroed(n, scenario.doses.len(), k),
        }
    }

    fn run(&mut self, rng: &mut ChaCha8Rng) -> Result<Selection> {
        for profile in self.uniforms.chunks_exact_mut(self.endpoints) {
            draw_uniforms(self.factor, rng, &mut self.normals, profile);
        }
        self.transform.fill(
            &self.uniforms,
            self.patients,
            self.info.values_mut(),
            &mut self.normal_scores,
        );
        self.scorer.score_into(&self.info, &mut self.scores_buf)?;
        select_dose(&self.scores_buf, self.none_allowed)
    }
}

/// A scenario with one endpoint and no correlation structure.
pub fn single_endpoint_scenario(
    name: &str,
    marginals: Vec<Marginal>,
    criterion: Criterion,
    patients: usize,
    replications: u64,
    seed: u64,
) -> Result<Scenario> {
    let doses = (1..=marginals.len()).map(|j| format!("d{j}")).collect();
    let grid = MarginalGrid::from_rows(marginals.into_iter().map(|m| vec![m]).collect())?;
    let scenario = Scenario {
        name: name.to_string(),
        doses,
        endpoints: vec!["response".to_string()],
        marginals: grid,
        correlation: CorrelationMatrix::identity(1),
        criterion,
        none_allowed: false,
        patients,
        replications,
        seed,
    };
    scenario.validate()?;
    Ok(scenario)
}
