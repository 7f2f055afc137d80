//! Command-line driver.
//!
//! Exit status mirrors the outcome: 0 certified (or a passing check), 2
//! refuted, 3 inconclusive, 1 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::certify::{self, Outcome};
use crate::error::Error;
use crate::io::{self, EmitOptions, JobConfig, Mode};
use crate::matrix_form::MatrixForm;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Caps the worker threads used for coefficient and grid checks.
pub const THREADS_ENV: &str = "POLYA_CERT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "polya-cert",
    version,
    about = "Pólya certificates for symmetric matrices of forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search for the least m with Sigma^m * B strictly positive definite coefficients.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 50)]
        m_max: u32,
        /// Include every witness minor vector in the report.
        #[arg(long)]
        witnesses: bool,
        /// Include the grid margin estimate and per-exponent failures.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Only look for a simplex counterexample on the grid.
    Refute {
        #[command(flatten)]
        common: Common,
    },
    /// Grid minimum of lambda_min(B(x)), rounded down to a rational.
    Margin {
        #[command(flatten)]
        common: Common,
    },
    /// Minimum of the pure-state functional over grid points and probe directions.
    PureStateScan {
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a certificate produced by `certify --witnesses`.
    Verify {
        input: PathBuf,
        certificate: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Common {
    input: PathBuf,
    #[arg(long, default_value_t = 16)]
    grid_depth: u32,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn job(common: &Common, mode: Mode) -> JobConfig {
    JobConfig {
        grid_depth: common.grid_depth,
        mode,
        output_path: common.output.clone(),
        ..JobConfig::default()
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load(path: &Path) -> Result<MatrixForm, String> {
    io::parse_matrix_form(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs one job and returns the report text with its exit status.
pub fn run_job(b: &MatrixForm, config: &JobConfig) -> Result<(String, i32), Error> {
    config.validate()?;
    b.validate()?;
    let depth = config.grid_depth;
    Ok(match config.mode {
        Mode::Certify => {
            let report = certify::polya_exponent_search(b, &config.search_options())?;
            let status = match report.outcome {
                Outcome::Certified(_) => EXIT_OK,
                Outcome::Refuted(_) => EXIT_REFUTED,
                Outcome::Inconclusive => EXIT_INCONCLUSIVE,
            };
            (io::emit_report(&report, config.emit), status)
        }
        Mode::RefuteOnly => match certify::counterexample_search(b, depth)? {
            Some(cx) => (io::emit_counterexample(&cx), EXIT_REFUTED),
            None => (io::emit_clean_grid(depth), EXIT_INCONCLUSIVE),
        },
        Mode::Margin => match certify::counterexample_search(b, depth)? {
            Some(cx) => (io::emit_counterexample(&cx), EXIT_REFUTED),
            None => (
                io::emit_margin(depth, &certify::margin_estimate(b, depth)?),
                EXIT_OK,
            ),
        },
        Mode::PureStateScan => {
            let scan = certify::pure_state_scan(b, depth)?;
            let status = if scan.value > Default::default() {
                EXIT_OK
            } else {
                EXIT_REFUTED
            };
            (io::emit_pure_state_scan(depth, &scan), status)
        }
    })
}

fn execute(command: Command) -> Result<(String, i32, Option<PathBuf>), String> {
    let (b, config) = match command {
        Command::Verify {
            input,
            certificate,
            output,
        } => {
            let b = load(&input)?;
            let cert = io::parse_certificate(&read(&certificate)?)
                .map_err(|e| format!("{}: {e}", certificate.display()))?;
            let valid = certify::verify_certificate(&b, &cert).map_err(|e| e.to_string())?;
            let status = if valid { EXIT_OK } else { EXIT_REFUTED };
            return Ok((io::emit_verification(valid), status, output));
        }
        Command::Certify {
            common,
            m_max,
            witnesses,
            diagnostics,
        } => {
            let config = JobConfig {
                m_max,
                emit: EmitOptions {
                    witnesses,
                    diagnostics,
                },
                ..job(&common, Mode::Certify)
            };
            (load(&common.input)?, config)
        }
        Command::Refute { common } => (load(&common.input)?, job(&common, Mode::RefuteOnly)),
        Command::Margin { common } => (load(&common.input)?, job(&common, Mode::Margin)),
        Command::PureStateScan { common } => {
            (load(&common.input)?, job(&common, Mode::PureStateScan))
        }
    };
    let (text, status) = run_job(&b, &config).map_err(|e| e.to_string())?;
    Ok((text, status, config.output_path))
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let n: usize = value
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {value:?}"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

/// Parses `args` (program name first), runs the job, writes the report and
/// returns the process exit status.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT_ERROR,
            };
        }
    };
    let result = thread_pool().and_then(|pool| pool.install(|| execute(cli.command)));
    match result {
        Ok((text, status, output)) => {
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        eprintln!("polya-cert: cannot write {}: {e}", path.display());
                        return EXIT_INPUT_ERROR;
                    }
                }
                None => print!("{text}"),
            }
            status
        }
        Err(message) => {
            eprintln!("polya-cert: {message}");
            EXIT_INPUT_ERROR
        }
    }
}
