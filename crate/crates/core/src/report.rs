//! Text renderings of a benchmark result.

use std::fmt::Write as _;

use crate::engine::BenchmarkResult;

/// Row label used for the benchmark's proportions.
pub const DESIGN_LABEL: &str = "Benchmark";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// Aligned columns, proportions to two decimals.
    Table,
    /// Header plus one row, full precision.
    Csv,
    /// The full result object, full precision.
    Json,
}

pub fn render(result: &BenchmarkResult, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => render_table(result),
        ReportFormat::Csv => render_csv(result),
        ReportFormat::Json => render_json(result),
    }
}

fn column_title(label: &str) -> String {
    if label == crate::engine::NONE_LABEL {
        "None".to_string()
    } else {
        label.to_string()
    }
}

pub fn render_table(result: &BenchmarkResult) -> String {
    let first_width = DESIGN_LABEL.len().max("Design".len());
    let cells: Vec<String> = result.proportions.iter().map(|p| format!("{p:.2}")).collect();
    let titles: Vec<String> = result.labels.iter().map(|l| column_title(l)).collect();
    let widths: Vec<usize> = titles
        .iter()
        .zip(&cells)
        .map(|(t, c)| t.len().max(c.len()))
        .collect();

    let mut out = String::new();
    let _ = writeln!(out, "Scenario {}", result.scenario);
    let _ = write!(out, "{:<first_width$}", "Design");
    for (t, w) in titles.iter().zip(&widths) {
        let _ = write!(out, "  {t:>w$}");
    }
    out.push('\n');
    let _ = write!(out, "{DESIGN_LABEL:<first_width$}");
    for (c, w) in cells.iter().zip(&widths) {
        let _ = write!(out, "  {c:>w$}");
    }
    out.push('\n');
    let max_se = result.mc_stderr.iter().copied().fold(0.0, f64::max);
    let _ = writeln!(
        out,
        "trials {}, max MC standard error {max_se:.5}, digest {}",
        result.trials_run, result.scenario_digest
    );
    out
}

pub fn render_csv(result: &BenchmarkResult) -> String {
    let mut header = vec!["design".to_string()];
    header.extend(result.labels.iter().cloned());
    header.extend(result.labels.iter().map(|l| format!("se_{l}")));
    let mut row = vec![DESIGN_LABEL.to_string()];
    row.extend(result.proportions.iter().map(|p| p.to_string()));
    row.extend(result.mc_stderr.iter().map(|s| s.to_string()));
    format!("{}\n{}\n", header.join(","), row.join(","))
}

pub fn render_json(result: &BenchmarkResult) -> String {
    let mut text = serde_json::to_string_pretty(result).expect("result serializes to JSON");
    text.push('\n');
    text
}
