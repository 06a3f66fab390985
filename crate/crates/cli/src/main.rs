use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ybe_cli::commands::{self, Format, KChoice};
use ybe_cli::error::{CliError, CliResult, EXIT_OK, EXIT_VERIFY};
use ybe_cli::verify::{Status, Suite, Verifier};
use ybe_cli::{parse_complex, parse_rational};

#[derive(Parser)]
#[command(name = "ybe-forge", version, about = "Build and verify classical r-matrices for sl(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix J_(e,d).
    Jmatrix {
        e: usize,
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rational solution from the cuspidal pipeline, split n = (n-d) + d.
    Rational {
        n: usize,
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rational solution attached to the Stolin triple (sl(n), e, omega_K).
    Stolin {
        n: usize,
        e: usize,
        /// `default` (K = J), `neg-j` (K = -J) or a path to a JSON matrix.
        #[arg(long, default_value = "default")]
        k_matrix: KChoice,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Belavin elliptic r-matrix, numerically.
    Elliptic {
        n: usize,
        d: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "0.3+1i")]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value_t = 60)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites and print a report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, hide = true)]
        inject_sign_flip: bool,
    },
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("FORGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Invalid(format!("FORGE_THREADS must be a positive integer, got {raw:?}")))?;
    if threads == 0 {
        return Err(CliError::Invalid("FORGE_THREADS must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Invalid(e.to_string()))
}

fn execute(cli: Cli) -> CliResult<i32> {
    configure_threads()?;
    let out = match cli.command {
        Command::Jmatrix { e, d, format } => commands::cmd_jmatrix(e, d, format)?,
        Command::Rational { n, d, x, y, format } => {
            let doc = commands::rational_document(n, d, &parse_rational(&x)?, &parse_rational(&y)?)?;
            commands::render(&doc, format)?
        }
        Command::Stolin { n, e, k_matrix, x, y, format } => {
            let doc = commands::stolin_document(n, e, &k_matrix, &parse_rational(&x)?, &parse_rational(&y)?)?;
            commands::render(&doc, format)?
        }
        Command::Elliptic { n, d, tau, x, y, terms, format } => {
            let doc = commands::elliptic_document(n, d, parse_complex(&tau)?, parse_complex(&x)?, parse_complex(&y)?, terms)?;
            if let Some(drift) = doc.provenance.truncation_drift {
                eprintln!("coefficient drift at {} vs {} terms: {drift:e}", terms, 2 * terms);
            }
            commands::render(&doc, format)?
        }
        Command::Verify { suite, n_max, inject_sign_flip } => {
            let report = Verifier { sign_flip: inject_sign_flip }.run(suite, n_max);
            for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
                eprintln!("FAIL {} residual={:e} tol={:e} {}", c.name, c.residual, c.tolerance, c.detail.as_deref().unwrap_or(""));
            }
            let passed = report.checks.iter().filter(|c| c.status == Status::Pass).count();
            eprintln!("{passed}/{} checks passed", report.checks.len());
            emit(&serde_json::to_string_pretty(&report)?)?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY });
        }
    };
    emit(&out)?;
    Ok(EXIT_OK)
}

/// Writes a document to stdout; a closed pipe is not an error.
fn emit(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
