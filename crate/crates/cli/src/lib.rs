//! Argument parsing and command execution for the `qcong` binary.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcong::engine::{all_pass, grid_verify, Evaluation, GridSpec, Statement, Verdict};
use qcong::report::{emit_report, Format, ReportOptions};

mod eval;
mod selftest;

pub use eval::EvalObject;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qcong",
    version,
    about = "Verify q-congruences for generalized w-polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Verify a statement over a parameter grid.
    Verify(Box<VerifyArgs>),
    /// Print one polynomial in canonical text form.
    Eval(EvalArgs),
    /// Print the triangle of w(n,k) for n up to --nmax.
    Table {
        #[arg(long, default_value_t = 8)]
        nmax: i64,
    },
    /// Run the built-in invariant suites on small grids.
    Selftest,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Statement id; run with an unknown id to list the catalog.
    statement: String,
    #[command(flatten)]
    ranges: RangeArgs,
    /// Check only the cyclotomic factor of this divisor of n (theorem sums).
    #[arg(long)]
    divisor: Option<i64>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Jsonl)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report measured times (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    /// Evaluate theorem sums exactly instead of modulo q^L - 1.
    #[arg(long)]
    exact: bool,
    /// Corrupt every computed value by adding 1 (testing hook).
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// Every range flag accepts `lo..hi` (inclusive) or a single value.
#[derive(Args, Debug, Default)]
struct RangeArgs {
    #[arg(long, value_parser = parse_range)]
    n: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    alpha: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    beta: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    m: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    r: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    a: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    b: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    d: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    s: Option<(i64, i64)>,
    #[arg(long, value_parser = parse_range)]
    t: Option<(i64, i64)>,
}

impl RangeArgs {
    fn into_map(self) -> BTreeMap<String, (i64, i64)> {
        [
            ("n", self.n),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("m", self.m),
            ("r", self.r),
            ("a", self.a),
            ("b", self.b),
            ("d", self.d),
            ("s", self.s),
            ("t", self.t),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
    }
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(value_enum)]
    object: EvalObject,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    alpha: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Text,
    Jsonl,
}

/// Parses `lo..hi` or `v`.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if hi < lo {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok((lo, hi))
        }
        None => parse(s).map(|v| (v, v)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub grid: GridSpec,
    pub output: Option<PathBuf>,
    pub report: ReportOptions,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalConfig {
    pub object: EvalObject,
    pub values: BTreeMap<&'static str, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliConfig {
    Verify(VerifyConfig),
    Eval(EvalConfig),
    Table { nmax: i64 },
    Selftest,
}

/// A parse failure, or a request for help/version text, with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
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
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn parse_cli<I, T>(argv: I) -> Result<CliConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError {
        code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
        message: e.render().to_string(),
    })?;
    match cli.command {
        CliCommand::Verify(args) => {
            let statement: Statement = args
                .statement
                .parse()
                .map_err(|e: qcong::Error| CliError::usage(e.to_string()))?;
            let workers = args.workers.unwrap_or_else(default_workers);
            if workers == 0 {
                return Err(CliError::usage("--workers must be positive"));
            }
            let mut grid = GridSpec::new(statement)
                .workers(workers)
                .evaluation(if args.exact {
                    Evaluation::Exact
                } else {
                    Evaluation::Cyclic
                })
                .fault_injection(args.inject_fault);
            grid.ranges = args.ranges.into_map();
            grid.divisor = args.divisor;
            validate_ranges(&grid)?;
            Ok(CliConfig::Verify(VerifyConfig {
                grid,
                output: args.output,
                report: ReportOptions {
                    format: match args.format {
                        FormatArg::Text => Format::Text,
                        FormatArg::Jsonl => Format::Jsonl,
                    },
                    timing: args.timing,
                },
            }))
        }
        CliCommand::Eval(args) => {
            let values = [
                ("n", args.n),
                ("k", args.k),
                ("alpha", args.alpha),
                ("a", args.a),
                ("b", args.b),
                ("d", args.d),
            ]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k, v)))
            .collect();
            let config = EvalConfig {
                object: args.object,
                values,
            };
            eval::check_inputs(&config).map_err(CliError::usage)?;
            Ok(CliConfig::Eval(config))
        }
        CliCommand::Table { nmax } => {
            if nmax < 1 {
                return Err(CliError::usage("--nmax must be at least 1"));
            }
            Ok(CliConfig::Table { nmax })
        }
        CliCommand::Selftest => Ok(CliConfig::Selftest),
    }
}

fn validate_ranges(grid: &GridSpec) -> Result<(), CliError> {
    let schema = grid.statement.params();
    for (name, &(lo, _)) in &grid.ranges {
        let Some(p) = schema.iter().find(|p| p.name == name) else {
            let names: Vec<_> = schema.iter().map(|p| format!("--{}", p.name)).collect();
            return Err(CliError::usage(format!(
                "{} does not take --{name}; it takes {}",
                grid.statement,
                names.join(", ")
            )));
        };
        if lo < p.min {
            return Err(CliError::usage(format!(
                "--{name} must start at {} or above",
                p.min
            )));
        }
    }
    if let Some(p) = schema
        .iter()
        .find(|p| p.default.is_none() && !grid.ranges.contains_key(p.name))
    {
        return Err(CliError::usage(format!(
            "{} needs --{}",
            grid.statement, p.name
        )));
    }
    Ok(())
}

fn write_report(
    verdicts: &[Verdict],
    config: &VerifyConfig,
    stdout: &mut dyn Write,
) -> io::Result<()> {
    match &config.output {
        Some(path) => emit_report(
            verdicts,
            &mut BufWriter::new(File::create(path)?),
            config.report,
        ),
        None => emit_report(verdicts, &mut BufWriter::new(stdout), config.report),
    }
}

/// Runs a parsed command, writing results to `stdout` and diagnostics to
/// `stderr`, and returns the process exit code.
pub fn run(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match config {
        CliConfig::Verify(v) => {
            let verdicts = match grid_verify(&v.grid) {
                Ok(verdicts) => verdicts,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            if let Err(e) = write_report(&verdicts, v, stdout) {
                let _ = writeln!(stderr, "error: cannot write report: {e}");
                return EXIT_IO;
            }
            return if all_pass(&verdicts) {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
        }
        CliConfig::Eval(e) => match eval::render(e) {
            Ok(text) => writeln!(stdout, "{text}"),
            Err(err) => {
                let _ = writeln!(stderr, "error: {err}");
                return EXIT_USAGE;
            }
        },
        CliConfig::Table { nmax } => eval::write_table(*nmax, stdout),
        CliConfig::Selftest => match selftest::run(stdout) {
            Ok(true) => Ok(()),
            Ok(false) => return EXIT_FAIL,
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_IO
        }
    }
}
