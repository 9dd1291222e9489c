//! The canonical scenario set: six single-endpoint continuous scenarios in
//! equal- and unequal-variance form, and six toxicity/efficacy scenarios.

use std::io;
use std::path::{Path, PathBuf};

use crate::copula::{CorrelationMatrix, MarginalGrid};
use crate::criteria::{AdmissibilityParams, Criterion};
use crate::distributions::Marginal;
use crate::engine::{Scenario, DEFAULT_REPLICATIONS};
use crate::scenario_file::to_toml;

pub const FILE_EXTENSION: &str = "toml";

const PATIENTS: usize = 36;

/// `(λ, p)` per dose: gamma efficacy with mean λ and toxicity probability p.
const BIVARIATE_ROWS: [[(f64, f64); 4]; 6] = [
    [(25.0, 0.01), (70.0, 0.10), (115.0, 0.25), (127.0, 0.60)],
    [(5.0, 0.50), (70.0, 0.70), (90.0, 0.80), (135.0, 0.85)],
    [(25.0, 0.03), (46.0, 0.05), (90.0, 0.10), (135.0, 0.15)],
    [(20.0, 0.05), (75.0, 0.05), (75.0, 0.35), (75.0, 0.65)],
    [(60.0, 0.05), (65.0, 0.50), (80.0, 0.70), (95.0, 0.85)],
    [(2.0, 0.03), (2.0, 0.03), (2.0, 0.03), (2.0, 0.03)],
];

const EFFICACY_RATE: f64 = 0.1;
const RHO: f64 = 0.25;

fn dose_labels(m: usize) -> Vec<String> {
    (1..=m).map(|j| format!("d{j}")).collect()
}

fn continuous(index: u32, equal_variance: bool) -> Scenario {
    let gamma = f64::from(index) / 10.0;
    let rows = (1..=6)
        .map(|j| {
            let mean = f64::from(j) / 10.0;
            let sd = if equal_variance { 0.2 } else { mean };
            vec![Marginal::Normal { mean, sd }]
        })
        .collect();
    let criterion = if equal_variance {
        Criterion::IntervalPosterior {
            gamma,
            epsilon: 0.01,
            endpoint: 0,
        }
    } else {
        Criterion::AbsDistance { gamma, endpoint: 0 }
    };
    let variance = if equal_variance { "equal" } else { "unequal" };
    Scenario {
        name: format!("wang_sc{index}_{variance}"),
        doses: dose_labels(6),
        endpoints: vec!["response".into()],
        marginals: MarginalGrid::from_rows(rows).expect("bundled grid is valid"),
        correlation: CorrelationMatrix::identity(1),
        criterion,
        none_allowed: false,
        patients: PATIENTS,
        replications: DEFAULT_REPLICATIONS,
        seed: 20_190_100 + u64::from(index) * 2 + u64::from(!equal_variance),
    }
}

fn bivariate(index: u32) -> Scenario {
    let rows = BIVARIATE_ROWS[(index - 1) as usize]
        .iter()
        .map(|&(lambda, p)| {
            vec![
                Marginal::Bernoulli { p },
                Marginal::Gamma {
                    shape: lambda / 10.0,
                    rate: EFFICACY_RATE,
                },
            ]
        })
        .collect();
    Scenario {
        name: format!("bekele_sc{index}"),
        doses: dose_labels(4),
        endpoints: vec!["toxicity".into(), "efficacy".into()],
        marginals: MarginalGrid::from_rows(rows).expect("bundled grid is valid"),
        correlation: CorrelationMatrix::bivariate(RHO).expect("bundled rho is valid"),
        criterion: Criterion::EfficacyAdmissible {
            params: AdmissibilityParams {
                tox_cap: 0.35,
                eff_floor: 5.0,
                theta1: 0.5,
                theta2: 0.5,
            },
            toxicity: 0,
            efficacy: 1,
        },
        none_allowed: true,
        patients: PATIENTS,
        replications: DEFAULT_REPLICATIONS,
        seed: 20_190_200 + u64::from(index),
    }
}

/// All bundled scenarios in a fixed order.
pub fn bundled_scenarios() -> Vec<Scenario> {
    let mut out = Vec::with_capacity(18);
    for index in 1..=6 {
        out.push(continuous(index, true));
        out.push(continuous(index, false));
    }
    out.extend((1..=6).map(bivariate));
    out
}

pub fn bundled_names() -> Vec<String> {
    bundled_scenarios().into_iter().map(|s| s.name).collect()
}

pub fn bundled_scenario(name: &str) -> Option<Scenario> {
    let name = name.strip_suffix(".toml").unwrap_or(name);
    bundled_scenarios().into_iter().find(|s| s.name == name)
}

/// Writes one `<name>.toml` per bundled scenario into `dir`.
pub fn emit_bundled(dir: &Path) -> io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    bundled_scenarios()
        .iter()
        .map(|s| {
            let path = dir.join(format!("{}.{FILE_EXTENSION}", s.name));
            std::fs::write(&path, to_toml(s))?;
            Ok(path)
        })
        .collect()
}
