//! `fermat-bundle`: counting, classifying and ranking rational points on the
//! Fermat cubic surface bundle.

mod commands;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Exit statuses: 0 success, 1 a check failed, 2 I/O, 64 usage, 65 domain
/// error, 66 missing input.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    Domain(String),
    MissingInput(String),
    CheckFailed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Io(_) => 2,
            CliError::Usage(_) => 64,
            CliError::Domain(_) => 65,
            CliError::MissingInput(_) => 66,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m)
            | CliError::Usage(m)
            | CliError::Domain(m)
            | CliError::MissingInput(m)
            | CliError::CheckFailed(m) => m,
        }
    }
}

pub type CliResult = Result<(), CliError>;

#[derive(Parser, Debug)]
#[command(name = "fermat-bundle", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Parallelism {
    /// Worker threads for the enumeration (defaults to the number of CPUs).
    #[arg(long)]
    pub workers: Option<usize>,
}

impl Parallelism {
    pub fn workers(&self) -> Result<usize, CliError> {
        match self.workers {
            Some(0) => Err(CliError::Usage("--workers must be at least 1".into())),
            Some(w) => Ok(w),
            None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count points of bounded anticanonical height per class and write a CSV.
    Count {
        /// Comma-separated, strictly ascending height bounds.
        #[arg(long, value_delimiter = ',', required = true)]
        bounds: Vec<u64>,
        #[arg(long, default_value = "counts.csv")]
        out: PathBuf,
        #[command(flatten)]
        parallel: Parallelism,
        /// Also dump every point to `<out>.points`.
        #[arg(long)]
        emit_points: bool,
    },
    /// List every point with anticanonical height at most the bound.
    Enumerate {
        #[arg(long)]
        bound: u64,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        parallel: Parallelism,
    },
    /// Classify one point given as `x0:x1:x2:x3 y0:y1:y2:y3`.
    #[command(allow_negative_numbers = true)]
    Classify { x: String, y: String },
    /// Picard rank of the diagonal cubic a0 y0³ + a1 y1³ + a2 y2³ + a3 y3³ = 0.
    #[command(name = "fiber-rank", allow_negative_numbers = true)]
    FiberRank {
        #[arg(num_args = 4, required = true)]
        coefficients: Vec<i64>,
    },
    /// The 27 lines of a diagonal cubic: labels, Galois orbits and incidences.
    #[command(allow_negative_numbers = true)]
    Lines {
        #[arg(num_args = 4, required = true)]
        coefficients: Vec<i64>,
    },
    /// Check the intersection-number identities at random parameter values.
    #[command(name = "verify-intersections")]
    VerifyIntersections {
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Empirical Picard-rank distribution over random diagonal cubics.
    #[command(name = "rank-survey")]
    RankSurvey {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficients are drawn from [-range, range] \ {0}.
        #[arg(long, default_value_t = 20)]
        range: i64,
    },
    /// Render a counts CSV as a log-log SVG chart.
    Plot { csv: PathBuf, svg: PathBuf },
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Count {
            bounds,
            out,
            parallel,
            emit_points,
        } => commands::count(&bounds, &out, parallel.workers()?, emit_points),
        Command::Enumerate {
            bound,
            out,
            parallel,
        } => commands::enumerate(bound, out.as_deref(), parallel.workers()?),
        Command::Classify { x, y } => commands::classify(&x, &y),
        Command::FiberRank { coefficients } => commands::fiber_rank(&coefficients),
        Command::Lines { coefficients } => commands::lines(&coefficients),
        Command::VerifyIntersections { samples, seed } => {
            commands::verify_intersections(samples, seed)
        }
        Command::RankSurvey {
            samples,
            seed,
            range,
        } => commands::rank_survey(samples, seed, range),
        Command::Plot { csv, svg } => commands::plot(&csv, &svg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(64)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fermat-bundle: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
