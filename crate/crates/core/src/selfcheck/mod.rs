//! Accuracy check of the special functions against tabulated
//! high-precision reference values.

mod reference;

use std::fmt;

use crate::special::{ln_gamma, reg_inc_beta, reg_inc_gamma, std_normal_cdf, std_normal_quantile};

/// Largest accepted absolute error.
pub const TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub function: &'static str,
    pub args: Vec<f64>,
    pub expected: f64,
    pub got: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSummary {
    pub function: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub max_abs_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfcheckReport {
    pub tolerance: f64,
    pub functions: Vec<FunctionSummary>,
    pub mismatches: Vec<Mismatch>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<22} {:>6} {:>9} {:>14}",
            "function", "cases", "failures", "max abs error"
        )?;
        for s in &self.functions {
            writeln!(
                f,
                "{:<22} {:>6} {:>9} {:>14.3e}",
                s.function, s.cases, s.failures, s.max_abs_error
            )?;
        }
        for m in &self.mismatches {
            match m.got {
                Some(got) => writeln!(
                    f,
                    "MISMATCH {}{:?}: expected {:e}, got {:e}",
                    m.function, m.args, m.expected, got
                )?,
                None => writeln!(f, "MISMATCH {}{:?}: evaluation failed", m.function, m.args)?,
            }
        }
        write!(
            f,
            "{} (tolerance {:e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.tolerance
        )
    }
}

struct Tally<'a> {
    report: &'a mut SelfcheckReport,
    summary: FunctionSummary,
}

impl Tally<'_> {
    fn record(&mut self, args: &[f64], expected: f64, got: Option<f64>) {
        self.summary.cases += 1;
        let err = got.map(|g| (g - expected).abs());
        match err {
            Some(e) if e <= self.report.tolerance => {
                self.summary.max_abs_error = self.summary.max_abs_error.max(e);
            }
            _ => {
                self.summary.failures += 1;
                if let Some(e) = err.filter(|e| !e.is_nan()) {
                    self.summary.max_abs_error = self.summary.max_abs_error.max(e);
                } else {
                    self.summary.max_abs_error = f64::NAN;
                }
                self.report.mismatches.push(Mismatch {
                    function: self.summary.function,
                    args: args.to_vec(),
                    expected,
                    got,
                });
            }
        }
    }
}

fn tally<F: FnOnce(&mut Tally<'_>)>(report: &mut SelfcheckReport, function: &'static str, body: F) {
    let mut t = Tally {
        report,
        summary: FunctionSummary {
            function,
            cases: 0,
            failures: 0,
            max_abs_error: 0.0,
        },
    };
    body(&mut t);
    let summary = t.summary;
    report.functions.push(summary);
}

pub fn run_selfcheck() -> SelfcheckReport {
    let mut report = SelfcheckReport {
        tolerance: TOLERANCE,
        functions: Vec::new(),
        mismatches: Vec::new(),
    };
    tally(&mut report, "std_normal_cdf", |t| {
        for &(x, want) in reference::NORMAL_CDF {
            t.record(&[x], want, Some(std_normal_cdf(x)));
        }
    });
    tally(&mut report, "std_normal_quantile", |t| {
        for &(u, want) in reference::NORMAL_QUANTILE {
            t.record(&[u], want, std_normal_quantile(u).ok());
        }
    });
    tally(&mut report, "ln_gamma", |t| {
        for &(a, want) in reference::LN_GAMMA {
            t.record(&[a], want, ln_gamma(a).ok());
        }
    });
    tally(&mut report, "reg_inc_gamma", |t| {
        for &(a, x, want) in reference::REG_INC_GAMMA {
            t.record(&[a, x], want, reg_inc_gamma(a, x).ok());
        }
    });
    tally(&mut report, "reg_inc_beta", |t| {
        for &(a, b, x, want) in reference::REG_INC_BETA {
            t.record(&[a, b, x], want, reg_inc_beta(a, b, x).ok());
        }
    });
    report
}
