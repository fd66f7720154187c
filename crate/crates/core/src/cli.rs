//! Command-line front end.
//!
//! Exit codes: `0` success, `2` usage error, `3` data error, `4` numerical
//! non-convergence.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dataset::LossDataset;
use crate::distributions::ArctanGRParams;
use crate::error::Error;
use crate::fit::{compare_models, fit_agr, fit_model, ModelKind, ModelParams};
use crate::format::{csv_string, fixed_width_table, sig6};
use crate::plot::PlotBundle;
use crate::risk::{
    empirical_risk, mc_risk_curve, risk_curve, ConfidenceLevel, RiskMethod, RiskReport,
    RiskSubject, EMPIRICAL_ESTIMATOR,
};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "arctan-gr",
    version,
    about = "Arctan Gaussian-Rayleigh loss modelling"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Descriptive statistics of a dataset
    Describe(DescribeArgs),
    /// Fit one model by maximum likelihood
    Fit(FitArgs),
    /// Fit all models and rank them by information criteria
    Compare(CompareArgs),
    /// VaR, TVaR and tail variance for given or fitted parameters, or empirically
    Risk(RiskArgs),
    /// Export histogram, box plot, density and risk curves as data
    Plotdata(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Agr,
    Gaussian,
    Rayleigh,
    Laplace,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Agr => ModelKind::ArctanGR,
            ModelArg::Gaussian => ModelKind::Gaussian,
            ModelArg::Rayleigh => ModelKind::Rayleigh,
            ModelArg::Laplace => ModelKind::Laplace,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Output file (directory for `plotdata --format csv`); stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DescribeArgs {
    #[arg(long)]
    pub data: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub data: String,
    #[arg(long, value_enum, default_value = "agr")]
    pub model: ModelArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub data: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RiskArgs {
    /// Dataset to fit (or to use directly with --empirical)
    #[arg(long, conflicts_with_all = ["omega", "psi"])]
    pub data: Option<String>,
    #[arg(long, value_enum, default_value = "agr")]
    pub model: ModelArg,
    #[arg(long, requires = "psi", allow_hyphen_values = true)]
    pub omega: Option<f64>,
    #[arg(long, requires = "omega")]
    pub psi: Option<f64>,
    /// Comma-separated confidence levels
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    /// Order-statistic estimators on the data instead of a model
    #[arg(long, requires = "data")]
    pub empirical: bool,
    /// Estimate TVaR and TV by Monte Carlo with this many draws
    #[arg(long)]
    pub mc_samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long)]
    pub data: String,
    /// Histogram bin count; Freedman–Diaconis if omitted
    #[arg(long)]
    pub bins: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter { .. } | Error::Domain { .. } => EXIT_USAGE,
            Error::Data(_) | Error::InsufficientData { .. } => EXIT_DATA,
            Error::Quadrature { .. } | Error::NoConvergence(_) | Error::Numerical(_) => {
                EXIT_NUMERIC
            }
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Confidence levels whose printed three-decimal values label the
/// `ω = 0.02, ψ = 0.005` reference grid: 8 evenly spaced levels from 0.609 to 0.99.
pub fn reference_alpha_grid() -> Vec<f64> {
    (0..8)
        .map(|i| 0.609 + i as f64 * (0.99 - 0.609) / 7.0)
        .collect()
}

pub const EMPIRICAL_ALPHAS: [f64; 6] = [0.75, 0.80, 0.85, 0.90, 0.95, 0.99];

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Describe(a) => describe(a),
        Command::Fit(a) => fit(a),
        Command::Compare(a) => compare(a),
        Command::Risk(a) => risk(a),
        Command::Plotdata(a) => plotdata(a),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::data(format!("cannot write output: {e}")))
        }
    }
}

fn load(spec: &str) -> CliResult<LossDataset> {
    Ok(LossDataset::load(spec)?)
}

fn describe(a: DescribeArgs) -> CliResult<()> {
    let data = load(&a.data)?;
    let s = data.describe();
    let opt = |v: Option<f64>| v.map(sig6).unwrap_or_else(|| "NA".into());
    let rows: Vec<Vec<String>> = vec![
        vec!["n".into(), s.n.to_string()],
        vec!["mean".into(), sig6(s.mean)],
        vec!["median".into(), sig6(s.median)],
        vec!["sd".into(), sig6(s.sd)],
        vec!["min".into(), sig6(s.min)],
        vec!["q1".into(), sig6(s.q1)],
        vec!["q3".into(), sig6(s.q3)],
        vec!["max".into(), sig6(s.max)],
        vec!["bowley_skewness".into(), opt(s.bowley_skewness)],
        vec!["moors_kurtosis".into(), opt(s.moors_kurtosis)],
    ];
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&s).expect("summary serializes") + "\n",
        Format::Csv => csv_string(&["stat", "value"], &rows)?,
        Format::Table => fixed_width_table(&["stat", "value"], &rows),
    };
    emit(&a.output.out, &text)
}

fn fit(a: FitArgs) -> CliResult<()> {
    let data = load(&a.data)?;
    let result = fit_model(a.model.into(), &data)?;
    let table = crate::fit::ComparisonTable::new(data.name(), data.len(), vec![result.clone()]);
    let text = match a.output.format {
        Format::Json => result.to_json(),
        Format::Csv => table.to_csv()?,
        Format::Table => table.to_table(),
    };
    emit(&a.output.out, &text)
}

fn compare(a: CompareArgs) -> CliResult<()> {
    let data = load(&a.data)?;
    let table = compare_models(&data)?;
    let text = match a.output.format {
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv()?,
        Format::Table => table.to_table(),
    };
    emit(&a.output.out, &text)
}

fn levels(alphas: &[f64]) -> CliResult<Vec<ConfidenceLevel>> {
    alphas
        .iter()
        .map(|&a| ConfidenceLevel::new(a).map_err(CliError::from))
        .collect()
}

fn risk(a: RiskArgs) -> CliResult<()> {
    let report = if a.empirical {
        let data = load(a.data.as_deref().expect("clap enforces --data"))?;
        let alphas = a
            .alphas
            .clone()
            .unwrap_or_else(|| EMPIRICAL_ALPHAS.to_vec());
        let mut rows = Vec::new();
        for &alpha in &alphas {
            match empirical_risk(&data, alpha) {
                Ok(row) => rows.push(row),
                Err(e @ Error::InsufficientData { .. }) => {
                    eprintln!("warning: alpha={alpha} omitted: {e}");
                }
                Err(e) => return Err(e.into()),
            }
        }
        if rows.is_empty() {
            return Err(CliError::data("no confidence level had enough exceedances"));
        }
        eprintln!("method: {EMPIRICAL_ESTIMATOR}");
        RiskReport::new(
            RiskSubject::Empirical {
                dataset: data.name().to_string(),
                n: data.len(),
            },
            RiskMethod::Empirical {
                estimator: EMPIRICAL_ESTIMATOR.to_string(),
            },
            rows,
        )
    } else {
        let params = match (&a.data, a.omega, a.psi) {
            (Some(spec), _, _) => {
                if a.model != ModelArg::Agr {
                    return Err(CliError::usage(
                        "model-based risk measures are available for --model agr only",
                    ));
                }
                let data = load(spec)?;
                match fit_agr(&data)?.params {
                    ModelParams::ArctanGR(p) => p,
                    _ => unreachable!("fit_agr returns Arctan-GR parameters"),
                }
            }
            (None, Some(omega), Some(psi)) => ArctanGRParams::new(omega, psi)?,
            _ => return Err(CliError::usage("give --omega and --psi, or --data")),
        };
        let alphas = levels(&a.alphas.clone().unwrap_or_else(reference_alpha_grid))?;
        match a.mc_samples {
            Some(n) => mc_risk_curve(&params, &alphas, n, a.seed)?,
            None => risk_curve(&params, &alphas)?,
        }
    };
    let text = match a.output.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
        Format::Table => report.to_table(),
    };
    emit(&a.output.out, &text)
}

fn plotdata(a: PlotArgs) -> CliResult<()> {
    let data = load(&a.data)?;
    let fits = compare_models(&data)?;
    let bundle = PlotBundle::new(&data, &fits, a.bins)?;
    match a.output.format {
        Format::Json => emit(&a.output.out, &bundle.to_json()),
        Format::Csv => {
            let dir = a
                .output
                .out
                .as_deref()
                .ok_or_else(|| CliError::usage("--format csv needs --out <directory>"))?;
            write_dir(dir, &bundle.to_csv_files()?)
        }
        Format::Table => Err(CliError::usage("plotdata supports --format json or csv")),
    }
}

fn write_dir(dir: &Path, files: &[(&str, String)]) -> CliResult<()> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::data(format!("cannot create {}: {e}", dir.display())))?;
    for (name, text) in files {
        let path = dir.join(name);
        fs::write(&path, text)
            .map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}
