//! Separability of phase-generated states.
//!
//! A global phase function produces a product state exactly when it is affine
//! over the bit string of the basis index, f(j) = θ⃗·j⃗ + θ₀ (mod 2π). Two
//! independent routes decide this:
//!
//! * [`check_constraints`] evaluates an explicit family of 2ⁿ−(n+1)
//!   difference constraints, each of the form
//!   [f(a)−f(b)] − [f(c)−f(d)] ≡ 0 (mod 2π);
//! * [`fit_linear`] recovers the candidate affine form from n+1 table entries
//!   and verifies it everywhere.
//!
//! Both routes agree; a violated constraint is a certificate of entanglement.

use crate::angle::{wrap_pi, wrap_two_pi};
use crate::states::PhaseTable;
use serde::{Deserialize, Serialize};

/// Default tolerance, in radians, for deciding that an angle residual is zero.
pub const DEFAULT_ANGLE_TOL: f64 = 1e-9;

/// Affine phase form f(j) = θ⃗·j⃗ + θ₀ (mod 2π), with all components
/// canonicalized into [0, 2π).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearPhaseForm {
    pub theta0: f64,
    pub theta: Vec<f64>,
}

impl LinearPhaseForm {
    pub fn new(theta0: f64, theta: Vec<f64>) -> Self {
        Self {
            theta0: wrap_two_pi(theta0),
            theta: theta.into_iter().map(wrap_two_pi).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }

    /// Evaluates the form on a basis index (qubit 1 = most significant bit).
    pub fn evaluate(&self, j: usize) -> f64 {
        let n = self.n();
        let mut sum = self.theta0;
        for (i, &th) in self.theta.iter().enumerate() {
            if (j >> (n - 1 - i)) & 1 == 1 {
                sum += th;
            }
        }
        wrap_two_pi(sum)
    }

    /// Materializes the full phase table of the form.
    pub fn to_table(&self) -> Result<PhaseTable, crate::states::StateError> {
        PhaseTable::from_fn(self.n(), |j| self.evaluate(j))
    }
}

/// One difference constraint [f(a)−f(b)] − [f(c)−f(d)] ≡ 0 (mod 2π).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub indices: (usize, usize, usize, usize),
}

impl Constraint {
    /// Signed residual of the constraint on a table, reduced to (−π, π].
    pub fn residual(&self, t: &PhaseTable) -> f64 {
        let (a, b, c, d) = self.indices;
        wrap_pi((t.phase(a) - t.phase(b)) - (t.phase(c) - t.phase(d)))
    }
}

/// The full disentanglement constraint family for an n-qubit register.
///
/// For each bit distance 2^{k−1} (k = 1…n) the reference difference
/// f(0) − f(2^{k−1}) is compared against every other difference at the same
/// distance, giving 2^{n−k} − 1 constraints per k and 2ⁿ − (n+1) in total.
pub fn constraint_list(n: usize) -> Vec<Constraint> {
    assert!(n >= 1, "need at least one qubit");
    let mut out = Vec::with_capacity((1usize << n) - (n + 1));
    for k in 1..=n {
        let stride = 1usize << (k - 1);
        let block = 1usize << k;
        for m in 1..(1usize << (n - k)) {
            out.push(Constraint {
                indices: (0, stride, m * block, m * block + stride),
            });
        }
    }
    debug_assert_eq!(out.len(), (1usize << n) - (n + 1));
    out
}

/// All constraints violated beyond `tol`, with their residuals. An empty
/// result means the table generates a product state.
pub fn check_constraints(t: &PhaseTable, tol: f64) -> Vec<(Constraint, f64)> {
    constraint_list(t.n())
        .into_iter()
        .filter_map(|c| {
            let r = c.residual(t);
            (r.abs() > tol).then_some((c, r))
        })
        .collect()
}

/// Tries to expand a table as an affine form.
///
/// θ₀ is anchored at f(0) and each θᵢ at the basis index where only qubit i
/// is 1; the candidate is then verified on every entry. `None` means no
/// affine expansion exists within `tol`.
pub fn fit_linear(t: &PhaseTable, tol: f64) -> Option<LinearPhaseForm> {
    let n = t.n();
    let theta0 = t.phase(0);
    let theta: Vec<f64> = (1..=n)
        .map(|i| wrap_two_pi(t.phase(PhaseTable::single_bit_index(n, i)) - theta0))
        .collect();
    let form = LinearPhaseForm::new(theta0, theta);
    for j in 0..t.dim() {
        if wrap_pi(t.phase(j) - form.evaluate(j)).abs() > tol {
            return None;
        }
    }
    Some(form)
}

/// True exactly when the table cannot be written as an affine form, i.e. the
/// phase layer entangles the register.
pub fn is_entangling(t: &PhaseTable, tol: f64) -> bool {
    fit_linear(t, tol).is_none()
}
