use thiserror::Error;

/// Errors raised by the numerical core and the benchmark engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("interval bounds out of order: lo = {lo} > hi = {hi}")]
    ArgumentOrder { lo: f64, hi: f64 },

    #[error("matrix is not positive semi-definite: pivot {pivot} is {value}")]
    NotPositiveSemiDefinite { pivot: usize, value: f64 },

    #[error("invalid correlation matrix: {0}")]
    InvalidCorrelation(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("need at least {needed} observations, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{0} is not supported for discrete marginals")]
    DiscreteMarginal(&'static str),

    #[error("scores mix maximize and minimize directions")]
    MixedDirections,

    #[error("no admissible dose and a 'none' verdict is not allowed")]
    NoAdmissibleDose,

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(what: &'static str, value: f64) -> Error {
    Error::Domain { what, value }
}
