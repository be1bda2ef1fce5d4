use std::path::PathBuf;
use std::process::ExitCode;

use caforge_cli::commands::{cmd_binom, cmd_check, cmd_delta_sieve, cmd_power_sums, cmd_proof_checks, cmd_search};
use caforge_cli::{exit_code_for, Outcome, PolyFormat, EXIT_ASSERTION, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE};
use caforge_core::hull::Tolerances;
use caforge_core::search::ProofCheckConfig;
use caforge_core::Execution;
use clap::{Parser, Subcommand};

/// Exact and numeric checks for polynomials sharing a root with every derivative.
#[derive(Parser, Debug)]
#[command(name = "caforge", version)]
struct Cli {
    /// Write the JSON certificate here (atomically).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run single-threaded.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact test, necessary conditions and hull diagnostics for one polynomial.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = PolyFormat::Coeffs)]
        format: PolyFormat,
        /// Exit with status 1 if any condition fails.
        #[arg(long)]
        assert_ca: bool,
        #[arg(long, default_value_t = 1e-10)]
        root_residual: f64,
        #[arg(long, default_value_t = 1e-8)]
        hull_tol: f64,
        #[arg(long, default_value_t = 1e-8)]
        deriv_tol: f64,
    },
    /// Index sets whose determinant is divisible by p, for degree p + 1.
    DeltaSieve {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        shards: Option<usize>,
        /// Reduce determinants modulo p instead of computing them exactly.
        #[arg(long)]
        modular: bool,
    },
    /// Binomial exception sets for every prime q <= N.
    Binom {
        #[arg(long = "N", short = 'N')]
        n: u64,
    },
    /// Root power sums of a derivative from the coefficients.
    PowerSums {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = PolyFormat::Coeffs)]
        format: PolyFormat,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long, default_value_t = 5)]
        m: usize,
    },
    /// Exhaustive search over integer root multisets.
    Search {
        #[arg(long = "N", short = 'N')]
        n: usize,
        #[arg(long = "B", short = 'B')]
        b: i64,
    },
    /// Closed-form checkpoints over numeric and degree ranges.
    ProofChecks {
        #[arg(long, default_value_t = 4.0)]
        phi_start: f64,
        #[arg(long, default_value_t = 100.0)]
        phi_end: f64,
        #[arg(long, default_value_t = 9601)]
        phi_steps: usize,
        #[arg(long, default_value_t = 3)]
        n_min: u64,
        #[arg(long, default_value_t = 1_000_000)]
        n_max: u64,
        #[arg(long, default_value_t = 6)]
        int_min: u64,
        #[arg(long, default_value_t = 20)]
        int_max: u64,
    },
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("CAFORGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("CAFORGE_THREADS must be a positive integer, got {value:?}"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(cli: Cli) -> caforge_core::Result<(Outcome, bool)> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    Ok(match cli.command {
        Command::Check {
            poly,
            format,
            assert_ca,
            root_residual,
            hull_tol,
            deriv_tol,
        } => {
            let tol = Tolerances {
                root_residual,
                hull_boundary: hull_tol,
                derivative_nonvanishing: deriv_tol,
            };
            (cmd_check(&poly, format, &tol, exec)?, assert_ca)
        }
        Command::DeltaSieve { p, m, shards, modular } => (cmd_delta_sieve(p, m, shards, modular, exec)?, false),
        Command::Binom { n } => (cmd_binom(n)?, false),
        Command::PowerSums { poly, format, l, m } => (cmd_power_sums(&poly, format, l, m)?, false),
        Command::Search { n, b } => (cmd_search(n, b, exec)?, false),
        Command::ProofChecks {
            phi_start,
            phi_end,
            phi_steps,
            n_min,
            n_max,
            int_min,
            int_max,
        } => {
            let config = ProofCheckConfig {
                phi_start,
                phi_end,
                phi_steps,
                n_min,
                n_max,
                integration_min: int_min,
                integration_max: int_max,
                exec,
            };
            (cmd_proof_checks(&config)?, false)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    let out = cli.out.clone();
    let (mut outcome, assert_ca) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for(&e) as u8);
        }
    };
    print!("{}", outcome.table);
    if let Some(path) = out {
        outcome.certificate.stamp_now();
        if let Err(e) = outcome.certificate.write_atomic(&path) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(EXIT_RUNTIME as u8);
        }
    }
    let code = if assert_ca && outcome.certificate.any_failed() {
        EXIT_ASSERTION
    } else {
        EXIT_OK
    };
    ExitCode::from(code as u8)
}
