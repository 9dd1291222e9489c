//! Command-line front end: run, validate and emit benchmark scenarios.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dosebench_core::bundled::{bundled_names, bundled_scenario, emit_bundled};
use dosebench_core::{parse_scenario, render, run_benchmark, run_selfcheck, ReportFormat, Scenario};

const EXIT_SCENARIO: u8 = 3;
const EXIT_RUNTIME: u8 = 4;

#[derive(Parser)]
#[command(
    name = "dosebench",
    version,
    about = "Complete-information benchmark for dose-finding trials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a scenario and report selection proportions.
    Run(RunArgs),
    /// Parse and validate scenario files without running them.
    Validate {
        /// Scenario files or bundled scenario names.
        #[arg(required = true)]
        scenarios: Vec<String>,
    },
    /// Write the bundled scenario files into a directory.
    EmitScenarios {
        #[arg(default_value = "scenarios")]
        dir: PathBuf,
    },
    /// Check special functions against reference values.
    Selfcheck,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Scenario file or bundled scenario name.
    scenario: String,
    /// Override the number of simulated trials.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    replications: Option<u64>,
    /// Override the random seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => ReportFormat::Table,
            Format::Csv => ReportFormat::Csv,
            Format::Json => ReportFormat::Json,
        }
    }
}

enum Failure {
    Scenario(String),
    Runtime(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        let (message, code) = match self {
            Failure::Scenario(m) => (m, EXIT_SCENARIO),
            Failure::Runtime(m) => (m, EXIT_RUNTIME),
        };
        eprintln!("dosebench: error: {message}");
        ExitCode::from(code)
    }
}

fn load(spec: &str) -> Result<Scenario, Failure> {
    let path = Path::new(spec);
    if !path.exists() {
        if let Some(s) = bundled_scenario(spec) {
            return Ok(s);
        }
    }
    parse_scenario(path).map_err(|e| {
        let hint = if path.exists() {
            String::new()
        } else {
            format!(" (bundled scenarios: {})", bundled_names().join(", "))
        };
        Failure::Scenario(format!("{e}{hint}"))
    })
}

fn run(args: RunArgs) -> Result<(), Failure> {
    let mut scenario = load(&args.scenario)?;
    if let Some(r) = args.replications {
        scenario.replications = r;
    }
    if let Some(s) = args.seed {
        scenario.seed = s;
    }
    scenario
        .validate()
        .map_err(|e| Failure::Scenario(format!("{}: {e}", args.scenario)))?;
    let workers = args.workers.map_or_else(
        || std::thread::available_parallelism().map_or(1, usize::from),
        |w| w as usize,
    );
    let result = run_benchmark(&scenario, workers).map_err(|e| Failure::Runtime(e.to_string()))?;
    let text = render(&result, args.format.into());
    match args.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Runtime(format!("cannot write report: {e}"))),
    }
}

fn validate(specs: &[String]) -> Result<(), Failure> {
    let mut first_error = None;
    for spec in specs {
        match load(spec).and_then(|s| {
            s.validate()
                .map(|()| s)
                .map_err(|e| Failure::Scenario(format!("{spec}: {e}")))
        }) {
            Ok(s) => println!(
                "ok {spec}: {} doses, {} endpoint(s), criterion {}, {} patients",
                s.doses.len(),
                s.endpoints.len(),
                s.criterion.name(),
                s.patients
            ),
            Err(Failure::Scenario(m) | Failure::Runtime(m)) => {
                eprintln!("dosebench: error: {m}");
                first_error.get_or_insert(Failure::Scenario(m));
            }
        }
    }
    first_error.map_or(Ok(()), Err)
}

fn emit(dir: &Path) -> Result<(), Failure> {
    let paths = emit_bundled(dir)
        .map_err(|e| Failure::Runtime(format!("cannot write scenarios to {}: {e}", dir.display())))?;
    for p in paths {
        println!("{}", p.display());
    }
    Ok(())
}

fn selfcheck() -> Result<(), Failure> {
    let report = run_selfcheck();
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Runtime(format!(
            "{} reference value(s) out of tolerance",
            report.mismatches.len()
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Validate { scenarios } => match validate(&scenarios) {
            Err(_) => return ExitCode::from(EXIT_SCENARIO),
            ok => ok,
        },
        Command::EmitScenarios { dir } => emit(&dir),
        Command::Selfcheck => selfcheck(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}
