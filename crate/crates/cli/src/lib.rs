//! Command-line front end: `tree-spectra {compute|table|verify}`.
//!
//! Each subcommand writes its report to the supplied writer and maps
//! failures to the process exit codes: 1 for a failed check or internal
//! error, 2 for unreadable input, 3 for a graph that is not a tree.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod compute;
pub mod record;
pub mod table;
pub mod verify;

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_NOT_A_TREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tree-spectra",
    version,
    about = "Exact normalized-Laplacian spectra of trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matching indices, characteristic polynomial and spectrum of one tree.
    Compute(ComputeArgs),
    /// Regenerate a reference table.
    Table(TableArgs),
    /// Cross-check every route on seeded random trees.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Edge-list file.
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,
    /// Path on N vertices.
    #[arg(long, value_name = "N", group = "source")]
    pub path: Option<usize>,
    /// Starlike tree with the given branch lengths.
    #[arg(
        long,
        value_name = "L1,L2,...",
        value_delimiter = ',',
        group = "source"
    )]
    pub starlike: Option<Vec<usize>>,
    /// Double starlike tree H_m(p,q).
    #[arg(long, value_name = "M,P,Q", value_delimiter = ',', group = "source")]
    pub double_starlike: Option<Vec<usize>>,
    /// Star on N vertices.
    #[arg(long, value_name = "N", group = "source")]
    pub star: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Largest accepted gap between exact and Jacobi eigenvalues.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Starlike8,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub name: TableName,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of random trees.
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub trees: u64,
    /// Largest tree order.
    #[arg(long = "max-n", default_value_t = 16, value_parser = clap::value_parser!(u64).range(2..))]
    pub max_n: u64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Perturb R^(1) of every tree before checking, to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// A failure carrying the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<tree_spectra::Error> for CliError {
    fn from(e: tree_spectra::Error) -> Self {
        use tree_spectra::Error::*;
        let code = match e {
            Parse { .. } | InvalidArgument(_) | Mode(_) => EXIT_BAD_INPUT,
            NotATree(_) => EXIT_NOT_A_TREE,
            Capacity { .. } | Numeric(_) | Consistency(_) => EXIT_FAILURE,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_FAILURE, format!("write failed: {e}"))
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => compute::run(&args, out),
        Command::Table(args) => table::run(&args, out),
        Command::Verify(args) => verify::run(&args, out),
    }
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn run_with_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_BAD_INPUT } else { 0 };
        }
    };
    match run(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}
