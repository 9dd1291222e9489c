//! Complete-information benchmark for dose-finding trials.
//!
//! Each simulated patient carries latent uniforms (one per endpoint) that
//! determine their outcome at every dose through the dose's quantile
//! function. A decision criterion then scores each dose with full
//! knowledge of these outcomes, and the selection proportions over many
//! trials give an upper reference for any practical design.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bundled;
pub mod copula;
pub mod criteria;
pub mod distributions;
pub mod engine;
pub mod error;
pub mod report;
pub mod scenario_file;
pub mod selfcheck;
pub mod special;
pub mod validation;

pub use copula::{
    cholesky, complete_information, draw_profile, CholeskyFactor, CompleteInformation, CorrelationMatrix,
    MarginalGrid, PatientProfile,
};
pub use criteria::{
    score_abs_distance, score_doses, score_efficacy_admissible, score_interval_posterior, select_dose,
    AdmissibilityParams, Criterion, Direction, DoseScore, Selection,
};
pub use distributions::Marginal;
pub use engine::{
    evaluate_trial, run_benchmark, run_trial, summary_stats, trial_stream, BenchmarkResult, Scenario,
    SummaryStats, TrialEvaluation,
};
pub use error::{Error, Result};
pub use report::{render, ReportFormat};
pub use scenario_file::{parse_scenario, parse_scenario_str, to_toml, ScenarioFileError};
pub use selfcheck::{run_selfcheck, SelfcheckReport};
pub use validation::{ks_test, pearson, proportion_within, KsResult};
