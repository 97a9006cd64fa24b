//! Parameter sweeps over the phase families, emitted as CSV.
//!
//! Every row carries the numeric pipeline result next to the closed-form
//! value and their largest absolute difference; the whole sweep is validated
//! against the tolerance before a single byte is written, so emitted files
//! are self-consistent by construction.

use qphase::analytic::{
    concurrence_from_lambda_pair, concurrence_one_param, lambda_ab, lambda_bc_prime,
    lambda_bc_two_param, rho_mixed_one_param, TwoParamPoint,
};
use qphase::entangle::{entanglement_of_formation, eof_from_concurrence};
use qphase::states::{DensityMatrix, PhaseTable, PureState};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepCase {
    /// Single phase parameter on the first basis state, BC reduction.
    OneParam,
    /// Phases on the first two basis states, BC reduction.
    Bc,
    /// Phases on the first and fourth basis states, BC reduction.
    BcPrime,
    /// Phases on the first two basis states, AB reduction.
    Ab,
    /// Single phase on the mixed register, swept against the mixing weight.
    Mixed,
}

#[derive(Debug)]
pub struct SweepConfig {
    pub case: SweepCase,
    pub steps: usize,
    pub theta: Option<f64>,
    pub sigma: Option<f64>,
    pub q: Option<f64>,
    pub tol: f64,
}

#[derive(Debug)]
pub enum SweepError {
    Config(String),
    Validation { row: usize, abs_diff: f64, tol: f64 },
}

impl std::fmt::Display for SweepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepError::Config(msg) => write!(f, "invalid sweep configuration: {msg}"),
            SweepError::Validation { row, abs_diff, tol } => write!(
                f,
                "self-validation failed at row {row}: |numeric - analytic| = {abs_diff:e} exceeds {tol:e}"
            ),
        }
    }
}

impl std::error::Error for SweepError {}

/// Half-open angle grid: spacing 2π/(steps−1), with the periodic endpoint
/// pulled just inside [0, 2π) so no row duplicates the first one.
pub fn angle_grid(steps: usize) -> Vec<f64> {
    let h = 2.0 * PI / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i == steps - 1 {
                2.0 * PI * (1.0 - 1e-12)
            } else {
                i as f64 * h
            }
        })
        .collect()
}

/// Closed mixing-weight grid over [0, 1/2].
pub fn q_grid(steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| 0.5 * i as f64 / (steps - 1) as f64)
        .collect()
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Reduction of the pure three-qubit phase state.
fn reduced(phase_on: &[(usize, f64)], keep: &[usize]) -> DensityMatrix {
    let mut phases = vec![0.0; 8];
    for &(j, value) in phase_on {
        phases[j] = value;
    }
    let t = PhaseTable::new(3, phases).expect("fixed-size table");
    DensityMatrix::from_pure(&PureState::from_phase_table(&t))
        .partial_trace(keep)
        .expect("valid keep set")
}

struct Row {
    axes: Vec<f64>,
    c_numeric: f64,
    eof_numeric: f64,
    c_analytic: f64,
    eof_analytic: f64,
}

impl Row {
    fn abs_diff(&self) -> f64 {
        (self.c_numeric - self.c_analytic)
            .abs()
            .max((self.eof_numeric - self.eof_analytic).abs())
    }

    fn write(&self, out: &mut String) {
        let mut fields: Vec<String> = self.axes.iter().copied().map(fmt17).collect();
        fields.push(fmt17(self.c_numeric));
        fields.push(fmt17(self.eof_numeric));
        fields.push(fmt17(self.c_analytic));
        fields.push(fmt17(self.eof_analytic));
        fields.push(fmt17(self.abs_diff()));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
}

fn pure_case_row(case: SweepCase, theta: f64, sigma: f64) -> Row {
    let point = TwoParamPoint::new(theta, sigma);
    let (rho, pair) = match case {
        SweepCase::Bc => (
            reduced(&[(0, theta), (1, sigma)], &[2, 3]),
            lambda_bc_two_param(&point),
        ),
        SweepCase::BcPrime => (
            reduced(&[(0, theta), (3, sigma)], &[2, 3]),
            lambda_bc_prime(&point),
        ),
        SweepCase::Ab => (
            reduced(&[(0, theta), (1, sigma)], &[1, 2]),
            lambda_ab(&point),
        ),
        _ => unreachable!("two-angle cases only"),
    };
    let report = entanglement_of_formation(&rho).expect("two-qubit reduction");
    let c_analytic = concurrence_from_lambda_pair(pair);
    Row {
        axes: vec![theta, sigma],
        c_numeric: report.concurrence,
        eof_numeric: report.eof,
        c_analytic,
        eof_analytic: eof_from_concurrence(c_analytic),
    }
}

fn one_param_row(theta: f64) -> Row {
    let report =
        entanglement_of_formation(&reduced(&[(0, theta)], &[2, 3])).expect("two-qubit reduction");
    let c_analytic = concurrence_one_param(theta);
    Row {
        axes: vec![theta],
        c_numeric: report.concurrence,
        eof_numeric: report.eof,
        c_analytic,
        eof_analytic: eof_from_concurrence(c_analytic),
    }
}

fn mixed_row(theta: f64, q: f64) -> Result<Row, SweepError> {
    // numeric: phase then trace the full three-qubit mixed register
    let pipeline = DensityMatrix::mixed_plus_minus(q, 3)
        .map_err(|e| SweepError::Config(e.to_string()))?
        .apply_phase(0, theta)
        .expect("index 0 always valid")
        .partial_trace(&[2, 3])
        .expect("valid keep set");
    let numeric = entanglement_of_formation(&pipeline).expect("two-qubit reduction");
    // reference: the entrywise closed form of the same reduction
    let direct = rho_mixed_one_param(theta, q).map_err(|e| SweepError::Config(e.to_string()))?;
    let reference = entanglement_of_formation(&direct).expect("two-qubit reduction");
    Ok(Row {
        axes: vec![theta, q],
        c_numeric: numeric.concurrence,
        eof_numeric: numeric.eof,
        c_analytic: reference.concurrence,
        eof_analytic: reference.eof,
    })
}

/// Runs the sweep and returns the full CSV (header row included) after
/// validating every row against the configured tolerance.
pub fn run_sweep(config: &SweepConfig) -> Result<String, SweepError> {
    if config.steps < 2 {
        return Err(SweepError::Config(format!(
            "steps must be at least 2, got {}",
            config.steps
        )));
    }
    for (name, value) in [
        ("theta", config.theta),
        ("sigma", config.sigma),
        ("q", config.q),
    ] {
        if let Some(v) = value {
            if !v.is_finite() {
                return Err(SweepError::Config(format!("{name} must be finite")));
            }
        }
    }
    if let Some(q) = config.q {
        if !(0.0..=0.5).contains(&q) {
            return Err(SweepError::Config(format!(
                "q must lie in [0, 1/2], got {q}"
            )));
        }
    }

    let fixed_or = |fixed: Option<f64>, grid: Vec<f64>| fixed.map(|v| vec![v]).unwrap_or(grid);

    let (header, rows) = match config.case {
        SweepCase::OneParam => {
            if config.sigma.is_some() || config.q.is_some() {
                return Err(SweepError::Config(
                    "the one-param case takes only --theta".into(),
                ));
            }
            let thetas = fixed_or(config.theta, angle_grid(config.steps));
            let rows: Vec<Row> = thetas.into_iter().map(one_param_row).collect();
            (
                "theta,concurrence_numeric,eof_numeric,concurrence_analytic,eof_analytic,abs_diff",
                rows,
            )
        }
        SweepCase::Bc | SweepCase::BcPrime | SweepCase::Ab => {
            if config.q.is_some() {
                return Err(SweepError::Config(
                    "two-angle cases take --theta and --sigma, not --q".into(),
                ));
            }
            let thetas = fixed_or(config.theta, angle_grid(config.steps));
            let sigmas = fixed_or(config.sigma, angle_grid(config.steps));
            let mut rows = Vec::with_capacity(thetas.len() * sigmas.len());
            for &theta in &thetas {
                for &sigma in &sigmas {
                    rows.push(pure_case_row(config.case, theta, sigma));
                }
            }
            ("theta,sigma,concurrence_numeric,eof_numeric,concurrence_analytic,eof_analytic,abs_diff", rows)
        }
        SweepCase::Mixed => {
            if config.sigma.is_some() {
                return Err(SweepError::Config(
                    "the mixed case takes --theta and --q, not --sigma".into(),
                ));
            }
            let thetas = fixed_or(config.theta, angle_grid(config.steps));
            let qs = fixed_or(config.q, q_grid(config.steps));
            let mut rows = Vec::with_capacity(thetas.len() * qs.len());
            for &theta in &thetas {
                for &q in &qs {
                    rows.push(mixed_row(theta, q)?);
                }
            }
            ("theta,q,concurrence_numeric,eof_numeric,concurrence_analytic,eof_analytic,abs_diff", rows)
        }
    };

    for (i, row) in rows.iter().enumerate() {
        let abs_diff = row.abs_diff();
        if abs_diff >= config.tol {
            return Err(SweepError::Validation {
                row: i,
                abs_diff,
                tol: config.tol,
            });
        }
    }

    let mut out = String::with_capacity(rows.len() * 140 + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in &rows {
        row.write(&mut out);
    }
    Ok(out)
}
