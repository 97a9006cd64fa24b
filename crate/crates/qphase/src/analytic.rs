//! Closed-form entanglement results for three-qubit registers with one or two
//! nonzero phase parameters.
//!
//! These expressions serve double duty: fast evaluation for parameter sweeps,
//! and ground truth for the generic numeric pipeline. One convention to keep
//! straight: the λ values returned here are scaled by 64 relative to the true
//! eigenvalues of ρρ̃ (so that they stay O(1)–O(64) integers at the corners);
//! the numeric pipeline reports the unscaled eigenvalues. Concurrence from a
//! scaled pair is (√λ₊ − √λ₋)/8.

use crate::states::{DensityMatrix, StateError};
use num_complex::Complex64;

/// The scale factor between the λ convention used here and the true
/// eigenvalues of ρρ̃.
pub const LAMBDA_SCALE: f64 = 64.0;

/// A point of the two-parameter phase family, with the four cosine
/// combinations every closed form is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoParamPoint {
    pub theta: f64,
    pub sigma: f64,
}

impl TwoParamPoint {
    pub fn new(theta: f64, sigma: f64) -> Self {
        Self { theta, sigma }
    }

    /// 1 − cos θ ∈ [0, 2].
    pub fn t(&self) -> f64 {
        1.0 - self.theta.cos()
    }

    /// 1 − cos σ ∈ [0, 2].
    pub fn s(&self) -> f64 {
        1.0 - self.sigma.cos()
    }

    /// 1 − cos(θ+σ) ∈ [0, 2].
    pub fn r(&self) -> f64 {
        1.0 - (self.theta + self.sigma).cos()
    }

    /// 1 − cos(θ−σ) ∈ [0, 2].
    pub fn u(&self) -> f64 {
        1.0 - (self.theta - self.sigma).cos()
    }
}

/// Concurrence from a scaled λ pair: (√λ₊ − √λ₋)/8, floored at zero.
pub fn concurrence_from_lambda_pair((plus, minus): (f64, f64)) -> f64 {
    ((plus.max(0.0).sqrt() - minus.max(0.0).sqrt()) / 8.0).max(0.0)
}

/// Scaled λ± = 2(√2 ± 1)²(1 − cos θ) for the single-phase reduction.
pub fn lambda_one_param(theta: f64) -> (f64, f64) {
    let sqrt2 = 2.0f64.sqrt();
    let t = 1.0 - theta.cos();
    (
        2.0 * (sqrt2 + 1.0).powi(2) * t,
        2.0 * (sqrt2 - 1.0).powi(2) * t,
    )
}

/// C(θ) = (1/(2√2))·√(1 − cos θ) ∈ [0, 1/2] for the single-phase reduction.
pub fn concurrence_one_param(theta: f64) -> f64 {
    (1.0 - theta.cos()).max(0.0).sqrt() / (2.0 * 2.0f64.sqrt())
}

/// Scaled λ± for the two-phase BC reduction (phases on the first two basis
/// states, first qubit traced out): depends only on θ − σ.
pub fn lambda_bc_two_param(point: &TwoParamPoint) -> (f64, f64) {
    lambda_one_param(point.theta - point.sigma)
}

/// Scaled λ± = 2{3r + 2ts ± 2[2r(r + ts)]^{1/2}} for the variant with phases
/// on the |000⟩ and |011⟩ basis states, first qubit traced out.
pub fn lambda_bc_prime(point: &TwoParamPoint) -> (f64, f64) {
    let (t, s, r) = (point.t(), point.s(), point.r());
    let root = (2.0 * r * (r + t * s)).max(0.0).sqrt();
    (
        2.0 * (3.0 * r + 2.0 * t * s + 2.0 * root),
        2.0 * (3.0 * r + 2.0 * t * s - 2.0 * root).max(0.0),
    )
}

/// Scaled λ± = 2[4(t+s) − u ± 2{2(t+s)[2(t+s) − u]}^{1/2}] for the AB
/// reduction (phases on the first two basis states, last qubit traced out).
pub fn lambda_ab(point: &TwoParamPoint) -> (f64, f64) {
    let (t, s, u) = (point.t(), point.s(), point.u());
    let root = (2.0 * (t + s) * (2.0 * (t + s) - u)).max(0.0).sqrt();
    (
        2.0 * (4.0 * (t + s) - u + 2.0 * root),
        (2.0 * (4.0 * (t + s) - u - 2.0 * root)).max(0.0),
    )
}

/// The 4×4 BC reduction of the single-phase three-qubit state, written out
/// entrywise: (1/8)·[[2, 1+τ, 1+τ, 1+τ], [1+τ̄, 2, 2, 2], …] with τ = e^{iθ}.
pub fn rho_bc_one_param(theta: f64) -> DensityMatrix {
    let tau = Complex64::from_polar(1.0, theta);
    let one_plus = Complex64::new(1.0, 0.0) + tau;
    let m = crate::linalg::ComplexMatrix::from_fn(4, |r, c| {
        let v = match (r, c) {
            (0, 0) => Complex64::new(2.0, 0.0),
            (0, _) => one_plus,
            (_, 0) => one_plus.conj(),
            _ => Complex64::new(2.0, 0.0),
        };
        v / 8.0
    });
    DensityMatrix::new(2, m).expect("closed-form reduction is a valid state")
}

/// The 4×4 two-qubit reduction of the phased mixed register:
/// (1/4)·[[1, (1+τ)α, (1+τ)α, 2(1+τ)α²], [(1+τ̄)α, 1, 4α², 2α], …]
/// with τ = e^{iθ} and α = 1/2 − q.
pub fn rho_mixed_one_param(theta: f64, q: f64) -> Result<DensityMatrix, StateError> {
    if !(0.0..=0.5).contains(&q) {
        return Err(StateError::QOutOfRange { q });
    }
    let tau = Complex64::from_polar(1.0, theta);
    let a = 0.5 - q;
    let one = Complex64::new(1.0, 0.0);
    let ta = (one + tau) * a;
    let taa = (one + tau) * (2.0 * a * a);
    let real = |x: f64| Complex64::new(x, 0.0);
    let rows = [
        [one, ta, ta, taa],
        [ta.conj(), one, real(4.0 * a * a), real(2.0 * a)],
        [ta.conj(), real(4.0 * a * a), one, real(2.0 * a)],
        [taa.conj(), real(2.0 * a), real(2.0 * a), one],
    ];
    let m = crate::linalg::ComplexMatrix::from_fn(4, |r, c| rows[r][c] / 4.0);
    DensityMatrix::new(2, m)
}
