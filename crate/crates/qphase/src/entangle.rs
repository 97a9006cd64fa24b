//! Two-qubit entanglement: concurrence and entanglement of formation.
//!
//! The eigenvalue problem is routed through Hermitian matrices only: instead
//! of diagonalizing the non-Hermitian product ρρ̃ directly, we diagonalize
//! √ρ·ρ̃·√ρ, which has the same spectrum and keeps the Jacobi solver on safe
//! ground.

use crate::linalg::{hermitian_eigensystem, psd_sqrt, ComplexMatrix, LinalgError};
use crate::states::DensityMatrix;
use num_complex::Complex64;
use thiserror::Error;

/// Eigenvalues this close below zero are treated as rounding noise and
/// clamped before square roots are taken. The same value, taken relative to
/// the largest eigenvalue, floors positive noise: an eigenvalue of order
/// 1e−16 is numerically zero, but its square root would contaminate the
/// concurrence at the 1e−8 level.
pub const CLAMP_TOL: f64 = 1e-10;

/// Absolute floor below which an eigenvalue of ρρ̃ is indistinguishable from
/// zero at f64 precision.
pub const NOISE_FLOOR: f64 = 1e-14;

const EIG_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum EntangleError {
    #[error("operation requires a two-qubit state, got {got} qubits")]
    WrongDimension { got: usize },
    #[error("probability {p} outside [0, 1]")]
    POutOfRange { p: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Everything the concurrence pipeline produces for one two-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    /// Eigenvalues of ρρ̃, descending and clamped to be non-negative.
    pub lambdas: [f64; 4],
    /// max(0, √λ₁ − √λ₂ − √λ₃ − √λ₄) in [0, 1].
    pub concurrence: f64,
    /// (1 + √(1 − C²)) / 2 in [1/2, 1].
    pub p: f64,
    /// Binary entropy of `p`, in bits.
    pub eof: f64,
}

/// The spin-flipped state ρ̃ = (σy⊗σy) ρ* (σy⊗σy).
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix, EntangleError> {
    if rho.n() != 2 {
        return Err(EntangleError::WrongDimension { got: rho.n() });
    }
    // σy⊗σy in the computational basis is the real matrix with entries
    // -1, +1, +1, -1 on the anti-diagonal.
    let flip = |i: usize| 3 - i;
    let sign = |i: usize| if i == 0 || i == 3 { -1.0 } else { 1.0 };
    let m = rho.matrix();
    Ok(ComplexMatrix::from_fn(4, |r, c| {
        m[(flip(r), flip(c))].conj() * (sign(r) * sign(c))
    }))
}

/// Eigenvalues of ρρ̃ in descending order, computed as the Hermitian spectrum
/// of √ρ·ρ̃·√ρ and clamped at zero.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4], EntangleError> {
    let rho_tilde = spin_flip(rho)?;
    let root = psd_sqrt(rho.matrix(), CLAMP_TOL)?;
    let product = root.mul(&rho_tilde).mul(&root);
    // symmetrize away the last bits of rounding before diagonalizing
    let herm = ComplexMatrix::from_fn(4, |r, c| (product[(r, c)] + product[(c, r)].conj()) * 0.5);
    let eig = hermitian_eigensystem(&herm, EIG_TOL)?;
    let floor = (CLAMP_TOL * eig.eigenvalues[0].max(0.0)).max(NOISE_FLOOR);
    let mut lambdas = [0.0; 4];
    for (slot, &l) in lambdas.iter_mut().zip(&eig.eigenvalues) {
        *slot = if l < floor { 0.0 } else { l };
    }
    Ok(lambdas)
}

/// Wootters concurrence C = max(0, √λ₁ − √λ₂ − √λ₃ − √λ₄).
pub fn concurrence(rho: &DensityMatrix) -> Result<f64, EntangleError> {
    let l = wootters_lambdas(rho)?;
    Ok(concurrence_from_lambdas(&l))
}

fn concurrence_from_lambdas(l: &[f64; 4]) -> f64 {
    let roots: Vec<f64> = l.iter().map(|&x| x.max(0.0).sqrt()).collect();
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

/// Binary entropy H(p) = −p·log₂p − (1−p)·log₂(1−p), with H(0) = H(1) = 0.
pub fn binary_entropy(p: f64) -> Result<f64, EntangleError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(EntangleError::POutOfRange { p });
    }
    let term = |x: f64| if x == 0.0 { 0.0 } else { -x * x.log2() };
    Ok(term(p) + term(1.0 - p))
}

/// Entanglement of formation as a function of concurrence alone.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    let p = 0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt());
    binary_entropy(p).expect("p is in [1/2, 1] by construction")
}

/// Full pipeline: spectrum of ρρ̃, concurrence, p, and entanglement of
/// formation for a two-qubit state.
pub fn entanglement_of_formation(rho: &DensityMatrix) -> Result<EntanglementReport, EntangleError> {
    let lambdas = wootters_lambdas(rho)?;
    let concurrence = concurrence_from_lambdas(&lambdas);
    let p = 0.5 * (1.0 + (1.0 - concurrence * concurrence).max(0.0).sqrt());
    let eof = binary_entropy(p)?;
    Ok(EntanglementReport {
        lambdas,
        concurrence,
        p,
        eof,
    })
}

/// |Φ⁺⟩⟨Φ⁺| with |Φ⁺⟩ = (|00⟩ + |11⟩)/√2; handy in tests and sanity checks.
pub fn bell_phi_plus() -> DensityMatrix {
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![Complex64::new(0.0, 0.0); 4];
    amps[0] = Complex64::new(inv, 0.0);
    amps[3] = Complex64::new(inv, 0.0);
    DensityMatrix::from_pure(&crate::states::PureState::new(2, amps).unwrap())
}
