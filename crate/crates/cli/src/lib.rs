//! Command-line front end for `delaunay-rank`.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 the computation
//! disagrees with itself (the two rank methods differ, or the vertices are not
//! cospherical under the given Gram form).

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod file;
pub mod report;

pub use commands::Method;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Invalid(_) => EXIT_INVALID,
        }
    }
}

impl From<delaunay_rank::Error> for CliError {
    fn from(e: delaunay_rank::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Text for standard output and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }

    pub fn with_status(stdout: String, consistent: bool) -> Self {
        Outcome {
            stdout,
            code: if consistent { EXIT_OK } else { EXIT_INCONSISTENT },
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "drank", version, about = "Exact rank of lattice Delaunay polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank from the Gram-parameter system, the distance system, or both.
    Rank {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Write a standard polytope: simplex, cross, halfcube, cube or p0.
    Family {
        name: String,
        n: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Saturated basis of the integral affine dependencies.
    Deps { file: PathBuf },
    /// Search for an affine basis over the integers.
    Basicity {
        file: PathBuf,
        /// Maximum number of affinely independent subsets to test.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Circumsphere, central symmetry and bounded-window emptiness.
    Verify {
        file: PathBuf,
        /// Lattice points up to this many steps outside the vertex bounding
        /// box are examined.
        #[arg(long, default_value_t = 1)]
        window: usize,
    },
    /// Dimension of the intersection of the Gram-parameter spaces.
    Nrd {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// All of the above for one file.
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        window: usize,
    },
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Rank { file, method } => commands::rank(file, *method),
        Command::Family { name, n, output } => commands::family(name, *n, output.as_deref()),
        Command::Deps { file } => commands::deps(file),
        Command::Basicity { file, budget } => commands::basicity(file, *budget),
        Command::Verify { file, window } => commands::verify(file, *window),
        Command::Nrd { files } => commands::nrd_of(files),
        Command::Report {
            file,
            budget,
            window,
        } => commands::report(file, *budget, *window),
    }
}

/// Parses arguments (including the program name) and runs the command.
/// Returns standard output, standard error and the exit code.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (String::new(), text, code)
            } else {
                (text, String::new(), code)
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => (out.stdout, String::new(), out.code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}
