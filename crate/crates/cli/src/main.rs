use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropnev_cli::commands::{
    cmd_analyze, cmd_eval, cmd_linalg, cmd_reproduce_paper, cmd_verify,
};
use tropnev_core::suites::DEFAULT_SEED;

/// Exact max-plus (tropical) Nevanlinna calculus over the rationals.
#[derive(Parser)]
#[command(name = "tropnev", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a named function from a scenario file at exact points.
    Eval {
        file: PathBuf,
        /// Function name from the [functions] section.
        #[arg(long)]
        function: String,
        /// Comma-separated rational points, e.g. "7,0,1/2".
        #[arg(long)]
        points: String,
        /// Decimal digits in the rendered column.
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Emit characteristic and first-main-theorem tables for a scenario.
    Analyze {
        file: PathBuf,
        /// Directory for CSV output (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Grid override "from:to:count" (geometric spacing).
        #[arg(long)]
        grid: Option<String>,
        /// Shift constant override.
        #[arg(long = "shift-c")]
        shift_c: Option<String>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Determinants, Cramer permanents and bounds for matrices in a file.
    Linalg { file: PathBuf },
    /// Run a scenario's declared checks; exit 0 iff all match.
    Verify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Grid override "from:to:count".
        #[arg(long)]
        grid: Option<String>,
        #[arg(long = "shift-c")]
        shift_c: Option<String>,
        /// Force truncated counting in value-distribution checks.
        #[arg(long)]
        truncate: bool,
        /// Override a declared expectation, e.g. --expect smt_main=fails.
        #[arg(long)]
        expect: Vec<String>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Reproduce every bundled worked example plus the property suites.
    ReproducePaper {
        /// Directory for CSV output (none when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Load scenarios from a directory instead of the built-in bundle.
        #[arg(long = "bundle-dir")]
        bundle_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
}

fn seed_from_env() -> u64 {
    match std::env::var("TROPNEV_SEED") {
        Ok(v) => v.parse().unwrap_or(DEFAULT_SEED),
        Err(_) => DEFAULT_SEED,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Eval { file, function, points, precision } => {
            cmd_eval(file, function, points, *precision)
        }
        Command::Analyze { file, out, grid, shift_c, precision } => {
            cmd_analyze(file, out, grid, shift_c, *precision)
        }
        Command::Linalg { file } => cmd_linalg(file),
        Command::Verify { file, out, grid, shift_c, truncate, expect, precision } => {
            cmd_verify(file, out, grid, shift_c, *truncate, expect, *precision)
        }
        Command::ReproducePaper { out, bundle_dir, precision } => {
            cmd_reproduce_paper(out, bundle_dir, seed_from_env(), *precision)
        }
    };
    ExitCode::from(code as u8)
}
