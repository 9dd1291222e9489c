//! TOML scenario files: parsing with located diagnostics, and a
//! deterministic writer.
//!
//! ```toml
//! schema_version = 1
//! name = "example"
//! doses = ["d1", "d2"]
//!
//! [[endpoints]]
//! name = "toxicity"
//! marginals = [{ family = "bernoulli", p = 0.1 }, { family = "bernoulli", p = 0.3 }]
//!
//! [[endpoints]]
//! name = "efficacy"
//! marginals = [{ family = "gamma", shape = 2.5, rate = 0.1 }, { family = "gamma", shape = 7.0, rate = 0.1 }]
//!
//! [correlation]
//! rho = 0.25
//!
//! [criterion]
//! name = "efficacy_admissible"
//! tox_cap = 0.35
//! eff_floor = 5.0
//! theta1 = 0.5
//! theta2 = 0.5
//! toxicity = "toxicity"
//! efficacy = "efficacy"
//!
//! [trial]
//! patients = 36
//! replications = 1000000
//! seed = 1
//! none_allowed = true
//! ```

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::ops::Range;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;
use toml::Spanned;

use crate::copula::{CorrelationMatrix, MarginalGrid};
use crate::criteria::{AdmissibilityParams, Criterion};
use crate::distributions::Marginal;
use crate::engine::{Scenario, DEFAULT_REPLICATIONS};

pub const SCHEMA_VERSION: i64 = 1;

#[derive(Debug, Error)]
pub enum ScenarioFileError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid `{field}` at line {line}, column {column}: {message}")]
    Semantic {
        field: String,
        line: usize,
        column: usize,
        message: String,
    },
}

impl ScenarioFileError {
    /// `(line, column)`, both 1-based, when the error has a location.
    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            Self::Io { .. } => None,
            Self::Syntax { line, column, .. } | Self::Semantic { line, column, .. } => Some((*line, *column)),
        }
    }
}

type FileResult<T> = std::result::Result<T, ScenarioFileError>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    schema_version: Spanned<i64>,
    name: Spanned<String>,
    doses: Spanned<Vec<Spanned<String>>>,
    endpoints: Spanned<Vec<Spanned<RawEndpoint>>>,
    correlation: Option<Spanned<RawCorrelation>>,
    criterion: Spanned<RawCriterion>,
    trial: Spanned<RawTrial>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEndpoint {
    name: Spanned<String>,
    marginals: Spanned<Vec<Spanned<Marginal>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCorrelation {
    rho: Option<Spanned<f64>>,
    matrix: Option<Spanned<Vec<Vec<f64>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCriterion {
    name: Spanned<String>,
    gamma: Option<Spanned<f64>>,
    epsilon: Option<Spanned<f64>>,
    tox_cap: Option<Spanned<f64>>,
    eff_floor: Option<Spanned<f64>>,
    theta1: Option<Spanned<f64>>,
    theta2: Option<Spanned<f64>>,
    endpoint: Option<Spanned<String>>,
    toxicity: Option<Spanned<String>>,
    efficacy: Option<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTrial {
    patients: Spanned<i64>,
    replications: Option<Spanned<i64>>,
    seed: Spanned<i64>,
    none_allowed: Option<bool>,
}

pub fn parse_scenario(path: impl AsRef<Path>) -> FileResult<Scenario> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioFileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_scenario_str(&text)
}

pub fn parse_scenario_str(text: &str) -> FileResult<Scenario> {
    let raw: RawScenario = toml::from_str(text).map_err(|e| {
        let (line, column) = line_col(text, e.span().map_or(0, |s| s.start));
        ScenarioFileError::Syntax {
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })?;
    Builder { text }.build(raw)
}

/// 1-based line and character column of a byte offset.
fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let mut offset = offset.min(text.len());
    while !text.is_char_boundary(offset) {
        offset -= 1;
    }
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[line_start..].chars().count() + 1)
}

struct Builder<'a> {
    text: &'a str,
}

impl Builder<'_> {
    fn err(
        &self,
        field: impl Into<String>,
        span: Range<usize>,
        message: impl fmt::Display,
    ) -> ScenarioFileError {
        let (line, column) = line_col(self.text, span.start);
        ScenarioFileError::Semantic {
            field: field.into(),
            line,
            column,
            message: message.to_string(),
        }
    }

    fn build(&self, raw: RawScenario) -> FileResult<Scenario> {
        if *raw.schema_version.get_ref() != SCHEMA_VERSION {
            return Err(self.err(
                "schema_version",
                raw.schema_version.span(),
                format!(
                    "unsupported version {}, expected {SCHEMA_VERSION}",
                    raw.schema_version.get_ref()
                ),
            ));
        }
        if raw.name.get_ref().trim().is_empty() {
            return Err(self.err("name", raw.name.span(), "must not be empty"));
        }

        let doses = self.labels("doses", &raw.doses)?;
        let m = doses.len();

        let endpoints_span = raw.endpoints.span();
        let raw_endpoints = raw.endpoints.into_inner();
        if raw_endpoints.is_empty() {
            return Err(self.err("endpoints", endpoints_span, "at least one endpoint is required"));
        }
        let mut endpoint_names: Vec<String> = Vec::with_capacity(raw_endpoints.len());
        let mut columns: Vec<Vec<Marginal>> = Vec::with_capacity(raw_endpoints.len());
        for (k, endpoint) in raw_endpoints.iter().enumerate() {
            let endpoint = endpoint.get_ref();
            let name = endpoint.name.get_ref();
            if name.trim().is_empty() {
                return Err(self.err(
                    format!("endpoints[{k}].name"),
                    endpoint.name.span(),
                    "must not be empty",
                ));
            }
            if endpoint_names.contains(name) {
                return Err(self.err(
                    format!("endpoints[{k}].name"),
                    endpoint.name.span(),
                    format!("duplicate endpoint '{name}'"),
                ));
            }
            endpoint_names.push(name.clone());
            let marginals = endpoint.marginals.get_ref();
            if marginals.len() != m {
                return Err(self.err(
                    format!("endpoints[{k}].marginals"),
                    endpoint.marginals.span(),
                    format!("expected {m} marginals (one per dose), got {}", marginals.len()),
                ));
            }
            let mut column = Vec::with_capacity(m);
            for (j, cell) in marginals.iter().enumerate() {
                cell.get_ref()
                    .validate()
                    .map_err(|e| self.err(format!("endpoints[{k}].marginals[{j}]"), cell.span(), e))?;
                column.push(*cell.get_ref());
            }
            columns.push(column);
        }
        let k = endpoint_names.len();
        let rows: Vec<Vec<Marginal>> = (0..m).map(|j| columns.iter().map(|c| c[j]).collect()).collect();
        let marginals =
            MarginalGrid::from_rows(rows).map_err(|e| self.err("endpoints", endpoints_span.clone(), e))?;

        let correlation = self.correlation(raw.correlation.as_ref(), k, endpoints_span)?;
        let criterion = self.criterion(&raw.criterion, &endpoint_names)?;

        let trial_span = raw.trial.span();
        let trial = raw.trial.into_inner();
        let patients = *trial.patients.get_ref();
        let min_patients = criterion.min_patients() as i64;
        if patients < min_patients {
            return Err(self.err(
                "trial.patients",
                trial.patients.span(),
                format!(
                    "criterion {} needs at least {min_patients} patients, got {patients}",
                    criterion.name()
                ),
            ));
        }
        let replications = match &trial.replications {
            Some(r) if *r.get_ref() < 1 => {
                return Err(self.err("trial.replications", r.span(), "must be at least 1"));
            }
            Some(r) => *r.get_ref() as u64,
            None => DEFAULT_REPLICATIONS,
        };
        let seed = *trial.seed.get_ref();
        if seed < 0 {
            return Err(self.err("trial.seed", trial.seed.span(), "must be non-negative"));
        }

        let scenario = Scenario {
            name: raw.name.into_inner(),
            doses,
            endpoints: endpoint_names,
            marginals,
            correlation,
            criterion,
            none_allowed: trial.none_allowed.unwrap_or(false),
            patients: patients as usize,
            replications,
            seed: seed as u64,
        };
        scenario
            .validate()
            .map_err(|e| self.err("trial", trial_span, e))?;
        Ok(scenario)
    }

    fn labels(&self, field: &str, raw: &Spanned<Vec<Spanned<String>>>) -> FileResult<Vec<String>> {
        let items = raw.get_ref();
        if items.is_empty() {
            return Err(self.err(field, raw.span(), "at least one entry is required"));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(items.len());
        for (i, label) in items.iter().enumerate() {
            let s = label.get_ref();
            if s.trim().is_empty() {
                return Err(self.err(format!("{field}[{i}]"), label.span(), "must not be empty"));
            }
            if !seen.insert(s.clone()) {
                return Err(self.err(
                    format!("{field}[{i}]"),
                    label.span(),
                    format!("duplicate label '{s}'"),
                ));
            }
            out.push(s.clone());
        }
        Ok(out)
    }

    fn correlation(
        &self,
        raw: Option<&Spanned<RawCorrelation>>,
        k: usize,
        endpoints_span: Range<usize>,
    ) -> FileResult<CorrelationMatrix> {
        let Some(raw) = raw else {
            if k == 1 {
                return Ok(CorrelationMatrix::identity(1));
            }
            return Err(self.err(
                "correlation",
                endpoints_span,
                format!("a correlation table is required for {k} endpoints"),
            ));
        };
        let table = raw.get_ref();
        match (&table.rho, &table.matrix) {
            (Some(_), Some(matrix)) => Err(self.err(
                "correlation.matrix",
                matrix.span(),
                "give either rho or matrix, not both",
            )),
            (None, None) => Err(self.err("correlation", raw.span(), "expected rho or matrix")),
            (Some(rho), None) => {
                if k != 2 {
                    return Err(self.err(
                        "correlation.rho",
                        rho.span(),
                        format!("a scalar rho needs exactly 2 endpoints, found {k}"),
                    ));
                }
                let value = *rho.get_ref();
                if !(-1.0..=1.0).contains(&value) {
                    return Err(self.err(
                        "correlation.rho",
                        rho.span(),
                        format!("{value} is outside [-1, 1]"),
                    ));
                }
                CorrelationMatrix::bivariate(value).map_err(|e| self.err("correlation.rho", rho.span(), e))
            }
            (None, Some(matrix)) => {
                let rows = matrix.get_ref();
                if rows.len() != k {
                    return Err(self.err(
                        "correlation.matrix",
                        matrix.span(),
                        format!("expected a {k}x{k} matrix, got {} rows", rows.len()),
                    ));
                }
                CorrelationMatrix::from_rows(rows)
                    .map_err(|e| self.err("correlation.matrix", matrix.span(), e))
            }
        }
    }

    fn criterion(&self, raw: &Spanned<RawCriterion>, endpoints: &[String]) -> FileResult<Criterion> {
        let c = raw.get_ref();
        let name = c.name.get_ref().as_str();
        let (required, allowed): (&[&str], &[&str]) = match name {
            "abs_distance" => (&["gamma"], &["gamma", "endpoint"]),
            "interval_posterior" => (&["gamma", "epsilon"], &["gamma", "epsilon", "endpoint"]),
            "efficacy_admissible" => (
                &["tox_cap", "eff_floor", "theta1", "theta2", "toxicity", "efficacy"],
                &["tox_cap", "eff_floor", "theta1", "theta2", "toxicity", "efficacy"],
            ),
            other => {
                return Err(self.err(
                    "criterion.name",
                    c.name.span(),
                    format!("unknown criterion '{other}' (expected abs_distance, interval_posterior or efficacy_admissible)"),
                ))
            }
        };
        let present: [(&str, Option<Range<usize>>); 9] = [
            ("gamma", c.gamma.as_ref().map(Spanned::span)),
            ("epsilon", c.epsilon.as_ref().map(Spanned::span)),
            ("tox_cap", c.tox_cap.as_ref().map(Spanned::span)),
            ("eff_floor", c.eff_floor.as_ref().map(Spanned::span)),
            ("theta1", c.theta1.as_ref().map(Spanned::span)),
            ("theta2", c.theta2.as_ref().map(Spanned::span)),
            ("endpoint", c.endpoint.as_ref().map(Spanned::span)),
            ("toxicity", c.toxicity.as_ref().map(Spanned::span)),
            ("efficacy", c.efficacy.as_ref().map(Spanned::span)),
        ];
        for (key, span) in &present {
            match span {
                Some(span) if !allowed.contains(key) => {
                    return Err(self.err(
                        format!("criterion.{key}"),
                        span.clone(),
                        format!("not a parameter of {name}"),
                    ))
                }
                None if required.contains(key) => {
                    return Err(self.err("criterion", raw.span(), format!("{name} requires `{key}`")))
                }
                _ => {}
            }
        }

        let number =
            |key: &str, value: &Option<Spanned<f64>>, ok: fn(f64) -> bool, rule: &str| -> FileResult<f64> {
                let v = value.as_ref().expect("required parameter checked above");
                if ok(*v.get_ref()) {
                    Ok(*v.get_ref())
                } else {
                    Err(self.err(
                        format!("criterion.{key}"),
                        v.span(),
                        format!("{} {rule}", v.get_ref()),
                    ))
                }
            };
        let open_unit = |v: f64| v > 0.0 && v < 1.0;
        let lookup = |key: &str, value: &Spanned<String>| -> FileResult<usize> {
            endpoints
                .iter()
                .position(|e| e == value.get_ref())
                .ok_or_else(|| {
                    self.err(
                        format!("criterion.{key}"),
                        value.span(),
                        format!("unknown endpoint '{}'", value.get_ref()),
                    )
                })
        };
        let single_endpoint = || -> FileResult<usize> {
            match &c.endpoint {
                Some(e) => lookup("endpoint", e),
                None if endpoints.len() == 1 => Ok(0),
                None => Err(self.err(
                    "criterion",
                    raw.span(),
                    format!("{name} requires `endpoint` when there are several endpoints"),
                )),
            }
        };

        let criterion = match name {
            "abs_distance" => Criterion::AbsDistance {
                gamma: number("gamma", &c.gamma, open_unit, "is outside (0, 1)")?,
                endpoint: single_endpoint()?,
            },
            "interval_posterior" => Criterion::IntervalPosterior {
                gamma: number("gamma", &c.gamma, f64::is_finite, "is not finite")?,
                epsilon: number(
                    "epsilon",
                    &c.epsilon,
                    |v| v > 0.0 && v.is_finite(),
                    "is not positive",
                )?,
                endpoint: single_endpoint()?,
            },
            _ => {
                let toxicity = lookup("toxicity", c.toxicity.as_ref().expect("checked"))?;
                let efficacy = lookup("efficacy", c.efficacy.as_ref().expect("checked"))?;
                if toxicity == efficacy {
                    return Err(self.err(
                        "criterion.efficacy",
                        c.efficacy.as_ref().expect("checked").span(),
                        "must name a different endpoint than toxicity",
                    ));
                }
                Criterion::EfficacyAdmissible {
                    params: AdmissibilityParams {
                        tox_cap: number("tox_cap", &c.tox_cap, open_unit, "is outside (0, 1)")?,
                        eff_floor: number("eff_floor", &c.eff_floor, f64::is_finite, "is not finite")?,
                        theta1: number("theta1", &c.theta1, open_unit, "is outside (0, 1)")?,
                        theta2: number("theta2", &c.theta2, open_unit, "is outside (0, 1)")?,
                    },
                    toxicity,
                    efficacy,
                }
            }
        };
        criterion
            .validate(endpoints.len())
            .map_err(|e| self.err("criterion", raw.span(), e))?;
        Ok(criterion)
    }
}

fn quoted(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

fn marginal_inline(m: &Marginal) -> String {
    match *m {
        Marginal::Bernoulli { p } => format!("{{ family = \"bernoulli\", p = {p:?} }}"),
        Marginal::Normal { mean, sd } => format!("{{ family = \"normal\", mean = {mean:?}, sd = {sd:?} }}"),
        Marginal::Gamma { shape, rate } => {
            format!("{{ family = \"gamma\", shape = {shape:?}, rate = {rate:?} }}")
        }
        Marginal::Beta { a, b } => format!("{{ family = \"beta\", a = {a:?}, b = {b:?} }}"),
        Marginal::Uniform01 => "{ family = \"uniform\" }".to_string(),
    }
}

/// Canonical text for a scenario; parsing it yields an equal scenario.
pub fn to_toml(scenario: &Scenario) -> String {
    let mut out = String::new();
    let list = |items: &[String]| items.iter().map(|s| quoted(s)).collect::<Vec<_>>().join(", ");
    let _ = writeln!(out, "schema_version = {SCHEMA_VERSION}");
    let _ = writeln!(out, "name = {}", quoted(&scenario.name));
    let _ = writeln!(out, "doses = [{}]", list(&scenario.doses));

    for (k, name) in scenario.endpoints.iter().enumerate() {
        let _ = writeln!(out, "\n[[endpoints]]");
        let _ = writeln!(out, "name = {}", quoted(name));
        let _ = writeln!(out, "marginals = [");
        for j in 0..scenario.marginals.doses() {
            let _ = writeln!(out, "    {},", marginal_inline(scenario.marginals.get(j, k)));
        }
        let _ = writeln!(out, "]");
    }

    let dim = scenario.correlation.dim();
    if dim == 2 {
        let _ = writeln!(out, "\n[correlation]\nrho = {:?}", scenario.correlation.get(1, 0));
    } else if dim > 2 {
        let _ = writeln!(out, "\n[correlation]\nmatrix = [");
        for row in scenario.correlation.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
            let _ = writeln!(out, "    [{}],", cells.join(", "));
        }
        let _ = writeln!(out, "]");
    }

    let _ = writeln!(out, "\n[criterion]\nname = {}", quoted(scenario.criterion.name()));
    let endpoint = |k: usize| quoted(&scenario.endpoints[k]);
    match scenario.criterion {
        Criterion::AbsDistance { gamma, endpoint: k } => {
            let _ = writeln!(out, "gamma = {gamma:?}\nendpoint = {}", endpoint(k));
        }
        Criterion::IntervalPosterior {
            gamma,
            epsilon,
            endpoint: k,
        } => {
            let _ = writeln!(
                out,
                "gamma = {gamma:?}\nepsilon = {epsilon:?}\nendpoint = {}",
                endpoint(k)
            );
        }
        Criterion::EfficacyAdmissible {
            params,
            toxicity,
            efficacy,
        } => {
            let _ = writeln!(
                out,
                "tox_cap = {:?}\neff_floor = {:?}\ntheta1 = {:?}\ntheta2 = {:?}\ntoxicity = {}\nefficacy = {}",
                params.tox_cap,
                params.eff_floor,
                params.theta1,
                params.theta2,
                endpoint(toxicity),
                endpoint(efficacy)
            );
        }
    }

    let _ = writeln!(
        out,
        "\n[trial]\npatients = {}\nreplications = {}\nseed = {}\nnone_allowed = {}",
        scenario.patients, scenario.replications, scenario.seed, scenario.none_allowed
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIVARIATE: &str = r#"
schema_version = 1
name = "two-endpoint"
doses = ["low", "high"]

[[endpoints]]
name = "toxicity"
marginals = [{ family = "bernoulli", p = 0.1 }, { family = "bernoulli", p = 0.3 }]

[[endpoints]]
name = "efficacy"
marginals = [
    { family = "gamma", shape = 2.5, rate = 0.1 },
    { family = "gamma", shape = 7.0, rate = 0.1 },
]

[correlation]
rho = 0.25

[criterion]
name = "efficacy_admissible"
tox_cap = 0.35
eff_floor = 5.0
theta1 = 0.5
theta2 = 0.5
toxicity = "toxicity"
efficacy = "efficacy"

[trial]
patients = 36
replications = 1000
seed = 7
none_allowed = true
"#;

    fn semantic(text: &str) -> (String, usize, usize) {
        match parse_scenario_str(text).unwrap_err() {
            ScenarioFileError::Semantic {
                field, line, column, ..
            } => (field, line, column),
            other => panic!("expected semantic error, got {other}"),
        }
    }

    #[test]
    fn parses_a_bivariate_file() {
        let s = parse_scenario_str(BIVARIATE).unwrap();
        assert_eq!(s.doses, vec!["low", "high"]);
        assert_eq!(s.endpoints, vec!["toxicity", "efficacy"]);
        assert_eq!(s.correlation, CorrelationMatrix::bivariate(0.25).unwrap());
        assert_eq!(
            *s.marginals.get(1, 1),
            Marginal::Gamma {
                shape: 7.0,
                rate: 0.1
            }
        );
        assert!(s.none_allowed);
        assert_eq!((s.patients, s.replications, s.seed), (36, 1000, 7));
        assert!(matches!(
            s.criterion,
            Criterion::EfficacyAdmissible {
                toxicity: 0,
                efficacy: 1,
                ..
            }
        ));
    }

    #[test]
    fn round_trips_through_text() {
        let s = parse_scenario_str(BIVARIATE).unwrap();
        let text = to_toml(&s);
        assert_eq!(parse_scenario_str(&text).unwrap(), s);
        assert_eq!(to_toml(&parse_scenario_str(&text).unwrap()), text);
    }

    #[test]
    fn rho_out_of_range_is_located() {
        let text = BIVARIATE.replace("rho = 0.25", "rho = 1.5");
        let (field, line, column) = semantic(&text);
        assert_eq!(field, "correlation.rho");
        assert_eq!(line, text.lines().position(|l| l.starts_with("rho")).unwrap() + 1);
        assert_eq!(column, 7);
    }

    #[test]
    fn missing_dose_cell_is_located() {
        let text = BIVARIATE.replace(", { family = \"bernoulli\", p = 0.3 }", "");
        let (field, line, _) = semantic(&text);
        assert_eq!(field, "endpoints[0].marginals");
        assert_eq!(line, 8);
    }

    #[test]
    fn invalid_marginal_is_located() {
        let text = BIVARIATE.replace("p = 0.3", "p = 1.3");
        let (field, line, _) = semantic(&text);
        assert_eq!(field, "endpoints[0].marginals[1]");
        assert_eq!(line, 8);
    }

    #[test]
    fn criterion_errors() {
        let (field, ..) = semantic(&BIVARIATE.replace("\"efficacy_admissible\"", "\"utility\""));
        assert_eq!(field, "criterion.name");
        let (field, ..) = semantic(&BIVARIATE.replace("theta2 = 0.5", "theta2 = 0.5\ngamma = 0.1"));
        assert_eq!(field, "criterion.gamma");
        let (field, ..) = semantic(&BIVARIATE.replace("theta1 = 0.5\n", ""));
        assert_eq!(field, "criterion");
        let (field, ..) = semantic(&BIVARIATE.replace("efficacy = \"efficacy\"", "efficacy = \"response\""));
        assert_eq!(field, "criterion.efficacy");
        let (field, ..) = semantic(&BIVARIATE.replace("tox_cap = 0.35", "tox_cap = 1.35"));
        assert_eq!(field, "criterion.tox_cap");
    }

    #[test]
    fn trial_and_header_errors() {
        let (field, ..) = semantic(&BIVARIATE.replace("patients = 36", "patients = 1"));
        assert_eq!(field, "trial.patients");
        let (field, ..) = semantic(&BIVARIATE.replace("replications = 1000", "replications = 0"));
        assert_eq!(field, "trial.replications");
        let (field, ..) = semantic(&BIVARIATE.replace("schema_version = 1", "schema_version = 2"));
        assert_eq!(field, "schema_version");
        let (field, ..) = semantic(&BIVARIATE.replace("[\"low\", \"high\"]", "[\"low\", \"low\"]"));
        assert_eq!(field, "doses[1]");
        let (field, ..) = semantic(&BIVARIATE.replace("[correlation]\nrho = 0.25\n", ""));
        assert_eq!(field, "correlation");
    }

    #[test]
    fn matrix_correlation() {
        let text = BIVARIATE.replace("rho = 0.25", "matrix = [[1.0, -0.4], [-0.4, 1.0]]");
        let s = parse_scenario_str(&text).unwrap();
        assert_eq!(s.correlation.get(0, 1), -0.4);
        let (field, ..) = semantic(&BIVARIATE.replace("rho = 0.25", "matrix = [[1.0, 0.4], [0.2, 1.0]]"));
        assert_eq!(field, "correlation.matrix");
    }

    #[test]
    fn syntax_errors_carry_location() {
        let text = BIVARIATE.replace("seed = 7", "seed = = 7");
        match parse_scenario_str(&text).unwrap_err() {
            ScenarioFileError::Syntax { line, column, .. } => {
                assert_eq!(
                    line,
                    text.lines().position(|l| l.starts_with("seed")).unwrap() + 1
                );
                assert!(column > 1);
            }
            other => panic!("unexpected {other}"),
        }
        let err =
            parse_scenario_str(&BIVARIATE.replace("rate = 0.1 }", "rate = 0.1, scale = 2.0 }")).unwrap_err();
        assert!(err.location().is_some());
        assert!(err.to_string().contains("line"));
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let err = parse_scenario("/nonexistent/definitely/missing.toml").unwrap_err();
        assert!(matches!(err, ScenarioFileError::Io { .. }));
        assert!(err.location().is_none());
    }

    #[test]
    fn line_col_counts_characters() {
        assert_eq!(line_col("ab\ncd", 0), (1, 1));
        assert_eq!(line_col("ab\ncd", 4), (2, 2));
        assert_eq!(line_col("é\nx", 3), (2, 1));
        assert_eq!(line_col("abc", 99), (1, 4));
    }

    mod fuzz {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(512))]

            #[test]
            fn arbitrary_text_never_panics(text in "\\PC{0,400}") {
                if let Err(e) = parse_scenario_str(&text) {
                    prop_assert!(e.location().is_some());
                }
            }

            #[test]
            fn mutated_files_never_panic(start in 0usize..800, len in 0usize..40, insert in "\\PC{0,8}") {
                let mut text = BIVARIATE.to_string();
                let mut s = start.min(text.len());
                while !text.is_char_boundary(s) { s -= 1; }
                let mut e = (s + len).min(text.len());
                while !text.is_char_boundary(e) { e -= 1; }
                text.replace_range(s..e, &insert);
                if let Err(err) = parse_scenario_str(&text) {
                    prop_assert!(err.to_string().contains("line"));
                }
            }
        }
    }
}
