//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, BenchConfig};
use crate::error::{Error, Result};
use crate::interval::IntervalMatrix;
use crate::pca::{pca_auto, pca_with, Method, PcaResult};
use crate::render::{render_circle, render_plane, PlotSpec};
use crate::table::{aggregate_classic, parse_classic_csv, parse_interval_csv, write_interval_csv};

#[derive(Debug, Parser)]
#[command(
    name = "symbolic-pca",
    version,
    about = "Centers-method PCA for interval-valued data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: RunConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Zzt,
    Ztz,
}

#[derive(Debug, Clone, clap::Args)]
pub struct AnalysisArgs {
    /// Interval table (CSV, `[lo,hi]` cells or `name.lo`/`name.hi` columns).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    /// Number of components; defaults to every positive eigenvalue.
    #[arg(long)]
    pub q: Option<usize>,
    /// Report raw interval correlations instead of clamping to [-1, 1].
    #[arg(long)]
    pub no_clamp: bool,
    /// Columns to drop before the analysis.
    #[arg(long, value_delimiter = ',')]
    pub exclude_cols: Vec<String>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub analysis: AnalysisArgs,
    /// Components on the horizontal and vertical axes, 1-based.
    #[arg(long, value_parser = parse_axes, default_value = "1,2")]
    pub axes: (usize, usize),
    #[arg(long, default_value_t = 600)]
    pub width: u32,
    #[arg(long, default_value_t = 600)]
    pub height: u32,
    #[arg(long, default_value = "")]
    pub title: String,
    #[arg(long)]
    pub no_labels: bool,
}

fn parse_axes(text: &str) -> std::result::Result<(usize, usize), String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [x, y] = parts.as_slice() else {
        return Err("expected two comma-separated components, e.g. 1,2".into());
    };
    let parse = |s: &str| match s.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(format!("invalid component {s:?}")),
    };
    Ok((parse(x)?, parse(y)?))
}

#[derive(Debug, Clone, Subcommand)]
pub enum RunConfig {
    /// Group a classic table by a concept column into an interval table.
    Aggregate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Concept column.
        #[arg(long)]
        by: String,
        #[arg(long, value_delimiter = ',')]
        exclude_cols: Vec<String>,
    },
    /// Run the PCA and write a JSON result plus scores and correlations CSVs.
    Pca(AnalysisArgs),
    /// Render the symbolic correlation circle as SVG.
    PlotCircle(PlotArgs),
    /// Render the symbolic principal plane as SVG.
    PlotPlane(PlotArgs),
    /// Time the ZZᵗ and ZᵗZ paths on a seeded random table.
    Bench {
        #[arg(long, default_value_t = 2000)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also write the report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// An error annotated with the file it came from.
#[derive(Debug)]
pub struct RunError {
    pub path: Option<PathBuf>,
    pub error: Error,
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.path {
            Some(p) => write!(f, "{}: {}", p.display(), self.error),
            None => write!(f, "{}", self.error),
        }
    }
}

fn at(path: &Path) -> impl Fn(Error) -> RunError + '_ {
    move |error| RunError {
        path: Some(path.to_path_buf()),
        error,
    }
}

fn bare(error: Error) -> RunError {
    RunError { path: None, error }
}

fn read(path: &Path) -> Result<String, RunError> {
    fs::read_to_string(path).map_err(|e| at(path)(e.into()))
}

fn write(path: &Path, contents: &str) -> Result<(), RunError> {
    fs::write(path, contents).map_err(|e| at(path)(e.into()))
}

fn check_path(path: &Path) -> Result<(), RunError> {
    if path.as_os_str().is_empty() {
        return Err(bare(Error::Io("empty path".into())));
    }
    Ok(())
}

fn load_table(args: &AnalysisArgs) -> Result<IntervalMatrix, RunError> {
    check_path(&args.input)?;
    check_path(&args.output)?;
    let text = read(&args.input)?;
    let table = parse_interval_csv(&text).map_err(at(&args.input))?;
    if args.exclude_cols.is_empty() {
        Ok(table)
    } else {
        table
            .without_columns(&args.exclude_cols)
            .map_err(at(&args.input))
    }
}

fn analyse(args: &AnalysisArgs) -> Result<PcaResult, RunError> {
    let table = load_table(args)?;
    let result = match args.method {
        MethodArg::Auto => pca_auto(&table, args.q),
        MethodArg::Zzt => pca_with(&table, Method::Zzt, args.q),
        MethodArg::Ztz => pca_with(&table, Method::Ztz, args.q),
    };
    result.map_err(at(&args.input))
}

/// `<dir>/<stem>.<suffix>` next to `output`.
pub fn sibling(output: &Path, suffix: &str) -> PathBuf {
    let stem = output.file_stem().unwrap_or_default().to_string_lossy();
    output.with_file_name(format!("{stem}.{suffix}"))
}

fn plot_spec(args: &PlotArgs) -> PlotSpec {
    PlotSpec {
        axis_x: args.axes.0,
        axis_y: args.axes.1,
        width: args.width,
        height: args.height,
        labels: !args.no_labels,
        title: args.title.clone(),
    }
}

/// Executes one command and returns the text to print on success.
pub fn run(config: &RunConfig) -> Result<String, RunError> {
    match config {
        RunConfig::Aggregate {
            input,
            output,
            by,
            exclude_cols,
        } => {
            check_path(input)?;
            check_path(output)?;
            let text = read(input)?;
            let classic = parse_classic_csv(&text, Some(by)).map_err(at(input))?;
            let mut table = aggregate_classic(&classic, by).map_err(at(input))?;
            if !exclude_cols.is_empty() {
                table = table.without_columns(exclude_cols).map_err(at(input))?;
            }
            write(output, &write_interval_csv(&table))?;
            Ok(format!(
                "wrote {} ({} rows x {} interval columns)",
                output.display(),
                table.n_rows(),
                table.n_cols()
            ))
        }
        RunConfig::Pca(args) => {
            let result = analyse(args)?;
            let clamp = !args.no_clamp;
            write(&args.output, &result.to_json(clamp))?;
            let scores = sibling(&args.output, "scores.csv");
            let correlations = sibling(&args.output, "correlations.csv");
            write(&scores, &result.scores_csv())?;
            write(&correlations, &result.correlations_csv(clamp))?;
            Ok(format!(
                "method {} with {} components; wrote {}, {}, {}",
                result.method_used.as_str(),
                result.n_components(),
                args.output.display(),
                scores.display(),
                correlations.display()
            ))
        }
        RunConfig::PlotCircle(args) => {
            let result = analyse(&args.analysis)?;
            let correlations = if args.analysis.no_clamp {
                result.correlations
            } else {
                result.correlations.clamped_unit()
            };
            let svg = render_circle(&correlations, &plot_spec(args)).map_err(bare)?;
            write(&args.analysis.output, &svg)?;
            Ok(format!("wrote {}", args.analysis.output.display()))
        }
        RunConfig::PlotPlane(args) => {
            let result = analyse(&args.analysis)?;
            let svg = render_plane(&result.scores, &plot_spec(args)).map_err(bare)?;
            write(&args.analysis.output, &svg)?;
            Ok(format!("wrote {}", args.analysis.output.display()))
        }
        RunConfig::Bench {
            m,
            n,
            trials,
            seed,
            output,
        } => {
            let report = run_bench(BenchConfig {
                m: *m,
                n: *n,
                trials: (*trials).max(1),
                seed: *seed,
            })
            .map_err(bare)?;
            let text = report.to_string();
            if let Some(path) = output {
                write(path, &format!("{text}\n"))?;
            }
            Ok(text)
        }
    }
}

/// Parses `args` (including the program name), runs the command, prints
/// the outcome, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli.command) {
        Ok(msg) => {
            println!("{msg}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.error.exit_code()
        }
    }
}
