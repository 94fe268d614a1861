//! Command-line front end: validate problem files, solve the bi-criteria
//! rating problem, emit the Pareto frontier as plot-ready data, and solve
//! single-criterion variants.
//!
//! Exit codes: 0 success, 1 domain error (validation failure, infeasible
//! constraints, off-frontier parameter), 2 I/O or parse error.

mod input;
mod output;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use tropirank_core::decision::{
    self, DecisionProblem, NormalizePolicy, RatingFactory, DEFAULT_RECIPROCITY_TOL,
};
use tropirank_core::linsys::{spectral_radius, tr_det};
use tropirank_core::oracle;
use tropirank_core::poly::interaction_sigma;
use tropirank_core::{FrontierDescription, TropScalar, DEFAULT_TOL};

use input::{load_problem, parse_scalar_text, ProblemInput};
use output::{to_json_text, Rendering};

#[derive(Parser)]
#[command(
    name = "tropirank",
    version,
    about = "Exact Pareto-frontier ratings from constrained bi-criteria pairwise comparisons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a problem file: reciprocity, positivity, and feasibility of the
    /// constraints
    Validate(InputArgs),
    /// Solve the two-criteria problem and emit ratings at a frontier point
    Solve(SolveArgs),
    /// Emit the Pareto frontier (and optional samples) without ratings
    Frontier(FrontierArgs),
    /// Solve a single criterion under the constraints
    Single(SingleArgs),
    /// Brute-force diagnostics (slow; for debugging)
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Problem file (JSON; matrices as nested arrays, rational strings allowed)
    input: Option<PathBuf>,
    /// Read matrices from CSV files instead: A.csv B.csv [C.csv]
    #[arg(long, num_args = 2..=3, value_name = "CSV")]
    matrix_csv: Option<Vec<PathBuf>>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the document to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format; csv emits the frontier samples as "alpha,beta" rows
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Emit natural logs instead of linear-scale values
    #[arg(long)]
    log: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Frontier parameter for the first criterion; defaults to the frontier
    /// point, or the geometric midpoint of a segment
    #[arg(long)]
    alpha: Option<String>,
    /// Rating normalization policy
    #[arg(long, value_enum, default_value_t = Normalize::MaxOne)]
    normalize: Normalize,
    /// Add this many evenly log-spaced frontier samples for plotting
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FrontierArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Sample count; zero means the piece breakpoints only
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SingleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which comparison matrix to approximate
    #[arg(long, value_enum, ignore_case = true)]
    criterion: Criterion,
    #[arg(long, value_enum, default_value_t = Normalize::MaxOne)]
    normalize: Normalize,
    /// Write the document to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Emit natural logs instead of linear-scale values
    #[arg(long)]
    log: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also run the grid Pareto search
    #[arg(long)]
    grid: bool,
    /// Grid points per axis
    #[arg(long, default_value_t = 61)]
    points: usize,
    /// Symmetric log-range of the grid
    #[arg(long, default_value_t = 3.0)]
    range: f64,
    /// Write the document to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Csv,
}

// variant names mirror the CLI values max-one / sum-one / first-one
#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, ValueEnum)]
enum Normalize {
    MaxOne,
    SumOne,
    FirstOne,
}

impl From<Normalize> for NormalizePolicy {
    fn from(n: Normalize) -> NormalizePolicy {
        match n {
            Normalize::MaxOne => NormalizePolicy::MaxOne,
            Normalize::SumOne => NormalizePolicy::SumOne,
            Normalize::FirstOne => NormalizePolicy::FirstOne,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Criterion {
    A,
    B,
}

/// Failures split by exit code: bad input (2) versus domain outcomes (1).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain(String),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError::Input(message.into())
    }

    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<tropirank_core::Error> for CliError {
    fn from(e: tropirank_core::Error) -> CliError {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn comparison_tolerance() -> Result<f64, CliError> {
    match std::env::var("TROPIRANK_TOL") {
        Ok(raw) => {
            let tol: f64 = raw
                .parse()
                .map_err(|_| CliError::input(format!("TROPIRANK_TOL is not a number: {raw:?}")))?;
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::input(format!(
                    "TROPIRANK_TOL must be a positive number, got {raw:?}"
                )));
            }
            Ok(tol)
        }
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let tol = comparison_tolerance()?;
    match cli.command {
        Command::Validate(args) => cmd_validate(args, tol),
        Command::Solve(args) => cmd_solve(args, tol),
        Command::Frontier(args) => cmd_frontier(args, tol),
        Command::Single(args) => cmd_single(args, tol),
        Command::Oracle(args) => cmd_oracle(args, tol),
    }
}

fn read_input(args: &InputArgs) -> Result<ProblemInput, CliError> {
    load_problem(args.input.as_deref(), args.matrix_csv.as_deref())
}

fn build_problem(parsed: ProblemInput, tol: f64) -> Result<DecisionProblem, CliError> {
    let options = decision::ProblemOptions {
        tol,
        ..decision::ProblemOptions::default()
    };
    DecisionProblem::with_options(parsed.labels, parsed.a, parsed.b, parsed.c, &options)
        .map_err(CliError::from)
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_validate(args: InputArgs, tol: f64) -> Result<ExitCode, CliError> {
    let parsed = read_input(&args)?;
    let mut report = String::new();
    let mut total = 0usize;
    for (name, matrix) in [("A", &parsed.a), ("B", &parsed.b)] {
        let violations = decision::validate_pairwise(matrix, DEFAULT_RECIPROCITY_TOL);
        describe(&mut report, name, &violations);
        total += violations.len();
    }
    match &parsed.c {
        Some(c) => {
            let violations = decision::validate_constraints(c, tol);
            describe(&mut report, "C", &violations);
            total += violations.len();
        }
        None => report.push_str("C: absent (unconstrained)\n"),
    }
    print!("{report}");
    Ok(if total == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn describe(report: &mut String, name: &str, violations: &[decision::Violation]) {
    if violations.is_empty() {
        report.push_str(&format!("{name}: ok\n"));
    } else {
        report.push_str(&format!("{name}: {} violation(s)\n", violations.len()));
        for v in violations {
            report.push_str(&format!("  - {v}\n"));
        }
    }
}

fn diagnostics_json(problem: &DecisionProblem, render: &Rendering) -> Result<Value, CliError> {
    let lambda = spectral_radius(problem.a())?;
    let mu = spectral_radius(problem.b())?;
    let sigma = interaction_sigma(problem.a(), problem.c())?;
    let theta = interaction_sigma(problem.b(), problem.c())?;
    let tr_c = tr_det(problem.c())?;
    Ok(json!({
        "lambda": render.scalar(lambda),
        "mu": render.scalar(mu),
        "sigma": render.scalar(sigma),
        "theta": render.scalar(theta),
        "tr_c": render.scalar(tr_c),
        "validation": {
            "a": render.violations(&decision::validate_pairwise(problem.a(), DEFAULT_RECIPROCITY_TOL)),
            "b": render.violations(&decision::validate_pairwise(problem.b(), DEFAULT_RECIPROCITY_TOL)),
            "constraints": render.violations(&decision::validate_constraints(problem.c(), DEFAULT_TOL)),
        },
    }))
}

/// Frontier rows for CSV and the `samples` document entry: explicit sample
/// count when requested, otherwise the piece breakpoints.
fn frontier_rows(f: &FrontierDescription, samples: usize) -> Vec<(TropScalar, TropScalar)> {
    if samples > 0 {
        f.sample(samples)
    } else {
        f.breakpoints()
    }
}

fn parse_alpha(raw: &str) -> Result<TropScalar, CliError> {
    let alpha = parse_scalar_text(raw).map_err(|m| CliError::input(format!("--alpha: {m}")))?;
    Ok(alpha)
}

fn cmd_solve(args: SolveArgs, tol: f64) -> Result<ExitCode, CliError> {
    let parsed = read_input(&args.input)?;
    let problem = build_problem(parsed, tol)?;
    let (frontier, factory): (FrontierDescription, RatingFactory) = decision::solve(&problem, tol)?;
    let policy: NormalizePolicy = args.normalize.into();
    let solution = match &args.alpha {
        Some(raw) => factory.rating_at(parse_alpha(raw)?, policy)?,
        None => factory.rating_default(policy)?,
    };
    let render = Rendering {
        log_scale: args.output.log,
    };
    let rows = frontier_rows(&frontier, args.samples);
    let text = match args.output.format {
        Format::Json => {
            let diagnostics = diagnostics_json(&problem, &render)?;
            let samples = (args.samples > 0).then_some(rows.as_slice());
            let doc = render.solution(problem.labels(), &solution, diagnostics, samples);
            to_json_text(&doc)
        }
        Format::Csv => render.frontier_csv(&rows),
    };
    emit(args.output.output.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_frontier(args: FrontierArgs, tol: f64) -> Result<ExitCode, CliError> {
    let parsed = read_input(&args.input)?;
    let problem = build_problem(parsed, tol)?;
    let frontier = tropirank_core::frontier::frontier(problem.a(), problem.b(), problem.c(), tol)?;
    let render = Rendering {
        log_scale: args.output.log,
    };
    let rows = frontier_rows(&frontier, args.samples);
    let text = match args.output.format {
        Format::Json => to_json_text(&json!({
            "frontier": render.frontier(&frontier),
            "samples": render.pairs(&rows),
        })),
        Format::Csv => render.frontier_csv(&rows),
    };
    emit(args.output.output.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_single(args: SingleArgs, tol: f64) -> Result<ExitCode, CliError> {
    let parsed = read_input(&args.input)?;
    let problem = build_problem(parsed, tol)?;
    let matrix = match args.criterion {
        Criterion::A => problem.a(),
        Criterion::B => problem.b(),
    };
    let (delta, generators) = decision::solve_single(matrix, problem.c(), tol)?;
    let policy: NormalizePolicy = args.normalize.into();
    let normalized: Vec<_> = generators
        .iter()
        .map(|g| decision::normalize(g, policy))
        .collect();
    let render = Rendering {
        log_scale: args.log,
    };
    let doc = json!({
        "criterion": match args.criterion { Criterion::A => "A", Criterion::B => "B" },
        "delta": render.scalar(delta),
        "generators": Value::Array(normalized.iter().map(|g| render.vector(g)).collect()),
        "ratings": render.ratings(problem.labels(), &normalized[0]),
    });
    emit(args.output.as_ref(), &to_json_text(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: OracleArgs, tol: f64) -> Result<ExitCode, CliError> {
    let parsed = read_input(&args.input)?;
    let problem = build_problem(parsed, tol)?;
    let n = problem.order();
    let render = Rendering { log_scale: false };

    let mut r_table = Map::new();
    for k in 1..n {
        for l in 1..=k {
            for m in 1..=n - k {
                let r = oracle::enum_rklm(problem.a(), problem.b(), problem.c(), k, l, m)?;
                r_table.insert(format!("r({k},{l},{m})"), render.scalar(r));
            }
        }
    }

    let mut doc = json!({
        "lambda": render.scalar(spectral_radius(problem.a())?),
        "mu": render.scalar(spectral_radius(problem.b())?),
        "karp_lambda": render.scalar(oracle::karp_radius(problem.a())?),
        "karp_mu": render.scalar(oracle::karp_radius(problem.b())?),
        "sigma": render.scalar(oracle::enum_sigma_theta(problem.a(), problem.c())?),
        "theta": render.scalar(oracle::enum_sigma_theta(problem.b(), problem.c())?),
        "tr_c": render.scalar(tr_det(problem.c())?),
        "r": Value::Object(r_table),
        "trace_binomial_ok": oracle::check_trace_binomial(problem.a(), problem.b(), tol)?,
    });
    if args.grid {
        let grid = oracle::GridSpec {
            points_per_axis: args.points,
            log_range: args.range,
            fixed_first: true,
        };
        let points = oracle::grid_pareto(&problem, &grid)?;
        doc["grid_pareto"] = render.pairs(&points);
    }
    emit(args.output.as_ref(), &to_json_text(&doc))?;
    Ok(ExitCode::SUCCESS)
}
