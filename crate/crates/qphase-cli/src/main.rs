//! Command line front end: parameter sweeps to CSV, separability checks with
//! a scripting-friendly exit code, and Deutsch-Jozsa runs with query counts.

mod sweep;

use clap::{Parser, Subcommand};
use qphase::dj::{
    classical_decide_general, classical_recover_linear, dj_run, DjError, OracleSpec, QueryLog,
};
use qphase::separability::{check_constraints, fit_linear, is_entangling, DEFAULT_ANGLE_TOL};
use qphase::states::PhaseTable;
use std::path::PathBuf;
use std::process::ExitCode;
use sweep::{run_sweep, SweepCase, SweepConfig, SweepError};

const EXIT_OK: u8 = 0;
const EXIT_ENTANGLING: u8 = 1;
const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PROMISE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qphase",
    about = "Global phase functions on qubit registers: entanglement sweeps, separability checks, Deutsch-Jozsa runs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a phase family and emit CSV (stdout or --out).
    Sweep {
        /// Which family to sweep.
        #[arg(long, value_enum)]
        case: SweepCase,
        /// Grid points per axis. Angle axes span [0, 2π) with spacing
        /// 2π/(steps−1); the q axis spans [0, 1/2] inclusive.
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Pin the first angle instead of sweeping it.
        #[arg(long)]
        theta: Option<f64>,
        /// Pin the second angle (two-angle cases only).
        #[arg(long)]
        sigma: Option<f64>,
        /// Pin the mixing weight (mixed case only).
        #[arg(long)]
        q: Option<f64>,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest allowed |numeric − analytic| per row.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Decide whether a phase table generates entanglement: exit code 0
    /// means product state (prints the affine form), exit code 1 means
    /// entangling (prints the violated constraints as JSON lines).
    CheckLinear {
        /// Path to a phase table JSON file: {"n": ..., "phases": [...]}.
        path: PathBuf,
        /// Angle tolerance in radians.
        #[arg(long, default_value_t = DEFAULT_ANGLE_TOL)]
        tol: f64,
    },
    /// Run the Deutsch-Jozsa pipeline on an oracle and report the verdict,
    /// the entanglement flag, and the classical query counts.
    Dj {
        /// Path to an oracle JSON file.
        path: PathBuf,
        /// Angle tolerance for the entanglement flag.
        #[arg(long, default_value_t = DEFAULT_ANGLE_TOL)]
        tol: f64,
    },
    /// Recover an affine oracle classically from n+1 queries.
    RecoverLinear {
        /// Path to an oracle JSON file (promised affine).
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Sweep {
            case,
            steps,
            theta,
            sigma,
            q,
            out,
            tol,
        } => cmd_sweep(
            SweepConfig {
                case,
                steps,
                theta,
                sigma,
                q,
                tol,
            },
            out,
        ),
        Command::CheckLinear { path, tol } => cmd_check_linear(&path, tol),
        Command::Dj { path, tol } => cmd_dj(&path, tol),
        Command::RecoverLinear { path } => cmd_recover_linear(&path),
    };
    ExitCode::from(code)
}

fn cmd_sweep(config: SweepConfig, out: Option<PathBuf>) -> u8 {
    let csv = match run_sweep(&config) {
        Ok(csv) => csv,
        Err(err @ SweepError::Config(_)) => {
            eprintln!("error: {err}");
            return EXIT_PARSE;
        }
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_FAILURE;
        }
    };
    match out {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, csv) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return EXIT_FAILURE;
            }
        }
        None => print!("{csv}"),
    }
    EXIT_OK
}

fn load_phase_table(path: &PathBuf) -> Result<PhaseTable, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    PhaseTable::from_json(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn load_oracle(path: &PathBuf) -> Result<OracleSpec, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    OracleSpec::from_json(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn cmd_check_linear(path: &PathBuf, tol: f64) -> u8 {
    let table = match load_phase_table(path) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    match fit_linear(&table, tol) {
        Some(form) => {
            println!(
                "{}",
                serde_json::json!({ "theta0": form.theta0, "theta": form.theta })
            );
            EXIT_OK
        }
        None => {
            for (constraint, residual) in check_constraints(&table, tol) {
                let (a, b, c, d) = constraint.indices;
                println!(
                    "{}",
                    serde_json::json!({ "constraint": [a, b, c, d], "residual": residual })
                );
            }
            EXIT_ENTANGLING
        }
    }
}

fn cmd_dj(path: &PathBuf, tol: f64) -> u8 {
    let oracle = match load_oracle(path) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    let outcome = dj_run(&oracle);
    let table = oracle.phase_table();
    println!("n: {}", oracle.n());
    println!("prob_zero: {:.16e}", outcome.prob_zero);
    println!("verdict: {}", outcome.verdict);
    println!("entangling: {}", is_entangling(&table, tol));
    println!("queries_quantum: 1");

    let mut log = QueryLog::new();
    let mut code = EXIT_OK;
    match classical_decide_general(&oracle, &mut log) {
        Ok(verdict) => {
            println!("classical_general_verdict: {verdict}");
            println!("queries_classical_general: {}", log.count());
        }
        Err(DjError::NotPromise) => {
            println!("queries_classical_general: n/a");
            eprintln!("error: oracle is neither constant nor balanced over {{0, pi}}");
            code = EXIT_PROMISE;
        }
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_FAILURE;
        }
    }
    match classical_recover_linear(&oracle) {
        Ok((_, log)) => println!("queries_classical_linear: {}", log.count()),
        Err(DjError::PromiseViolated { .. }) => println!("queries_classical_linear: n/a"),
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_FAILURE;
        }
    }
    code
}

fn cmd_recover_linear(path: &PathBuf) -> u8 {
    let oracle = match load_oracle(path) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    match classical_recover_linear(&oracle) {
        Ok((form, log)) => {
            println!(
                "{}",
                serde_json::json!({
                    "theta0": form.theta0,
                    "theta": form.theta,
                    "queries": log.count(),
                })
            );
            EXIT_OK
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_PROMISE
        }
    }
}
