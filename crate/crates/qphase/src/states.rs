//! Register states driven by global phase functions.
//!
//! A [`PhaseTable`] assigns one phase to each computational basis state of an
//! n-qubit register. Qubit 1 is the most significant bit of a basis index, so
//! index j decomposes as the bit string j₁…jₙ.

use crate::angle::wrap_two_pi;
use crate::linalg::{hermitian_eigensystem, ComplexMatrix};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest register accepted by the validating constructors. Dense density
/// matrices grow as 4^n, so anything beyond this needs the explicit
/// `with_limit` constructor.
pub const DEFAULT_MAX_QUBITS: usize = 10;

/// Tolerance on ‖ψ‖² = 1 and on Hermiticity/trace of density matrices.
pub const STATE_TOL: f64 = 1e-12;

/// Tolerance on positive semidefiniteness of density matrices.
pub const PSD_TOL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    #[error("qubit count {n} outside supported range 1..={max}")]
    InvalidQubitCount { n: usize, max: usize },
    #[error("phase table must hold exactly {expected} entries, got {got}")]
    PhaseCountMismatch { expected: usize, got: usize },
    #[error("phase at index {index} is not finite")]
    NonFinitePhase { index: usize },
    #[error("state norm² = {norm_sqr} is not 1")]
    NotNormalized { norm_sqr: f64 },
    #[error("mixing probability q = {q} outside [0, 1/2]")]
    QOutOfRange { q: f64 },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("partial trace needs a nonempty set of kept qubits")]
    EmptyKeepSet,
    #[error("kept qubits must be strictly increasing and within 1..={n}, got {index}")]
    InvalidQubitIndex { index: usize, n: usize },
    #[error("matrix is not Hermitian within tolerance: deviation {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("matrix trace {trace} is not 1")]
    TraceNotOne { trace: f64 },
    #[error("matrix is not positive semidefinite within tolerance")]
    NotPsd,
    #[error("matrix dimension {dim} is not 2^{n}")]
    DimensionMismatch { dim: usize, n: usize },
}

/// Global phase function f: {0,…,2ⁿ−1} → [0, 2π), stored per basis index.
///
/// Phases are normalized into [0, 2π) on construction; 2π is reassigned to 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PhaseTableRaw", into = "PhaseTableRaw")]
pub struct PhaseTable {
    n: usize,
    phases: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct PhaseTableRaw {
    n: usize,
    phases: Vec<f64>,
}

impl TryFrom<PhaseTableRaw> for PhaseTable {
    type Error = StateError;
    fn try_from(raw: PhaseTableRaw) -> Result<Self, StateError> {
        PhaseTable::new(raw.n, raw.phases)
    }
}

impl From<PhaseTable> for PhaseTableRaw {
    fn from(t: PhaseTable) -> Self {
        PhaseTableRaw {
            n: t.n,
            phases: t.phases,
        }
    }
}

impl PhaseTable {
    pub fn new(n: usize, phases: Vec<f64>) -> Result<Self, StateError> {
        Self::with_limit(n, phases, DEFAULT_MAX_QUBITS)
    }

    /// As [`PhaseTable::new`] but with a caller-chosen register cap.
    pub fn with_limit(n: usize, phases: Vec<f64>, max_qubits: usize) -> Result<Self, StateError> {
        if n == 0 || n > max_qubits {
            return Err(StateError::InvalidQubitCount { n, max: max_qubits });
        }
        let expected = 1usize << n;
        if phases.len() != expected {
            return Err(StateError::PhaseCountMismatch {
                expected,
                got: phases.len(),
            });
        }
        if let Some(index) = phases.iter().position(|p| !p.is_finite()) {
            return Err(StateError::NonFinitePhase { index });
        }
        Ok(Self {
            n,
            phases: phases.into_iter().map(wrap_two_pi).collect(),
        })
    }

    /// Table holding the same phase on every basis state.
    pub fn constant(n: usize, value: f64) -> Result<Self, StateError> {
        if !(1..=DEFAULT_MAX_QUBITS).contains(&n) {
            return Err(StateError::InvalidQubitCount {
                n,
                max: DEFAULT_MAX_QUBITS,
            });
        }
        Self::new(n, vec![value; 1 << n])
    }

    /// Table from an arbitrary phase function over basis indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> f64) -> Result<Self, StateError> {
        if n == 0 || n > DEFAULT_MAX_QUBITS {
            return Err(StateError::InvalidQubitCount {
                n,
                max: DEFAULT_MAX_QUBITS,
            });
        }
        Self::new(n, (0..1usize << n).map(&mut f).collect())
    }

    pub fn from_json(json: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(json)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn phase(&self, j: usize) -> f64 {
        self.phases[j]
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// Index of the basis state where qubit `i` (1-based, MSB first) is 1 and
    /// all the others are 0.
    pub fn single_bit_index(n: usize, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= n);
        1 << (n - i)
    }
}

/// Normalized pure state of an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> Result<Self, StateError> {
        if amplitudes.len() != 1 << n {
            return Err(StateError::DimensionMismatch {
                dim: amplitudes.len(),
                n,
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > STATE_TOL {
            return Err(StateError::NotNormalized { norm_sqr });
        }
        Ok(Self { n, amplitudes })
    }

    pub(crate) fn from_trusted(n: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n);
        Self { n, amplitudes }
    }

    /// The basis state |0…0⟩.
    pub fn zero(n: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Self { n, amplitudes }
    }

    /// Builds 2^{−n/2} Σⱼ e^{i f(j)} |j⟩ for a phase table f.
    pub fn from_phase_table(table: &PhaseTable) -> Self {
        let scale = (table.dim() as f64).sqrt().recip();
        let amplitudes = table
            .phases()
            .iter()
            .map(|&p| Complex64::from_polar(scale, p))
            .collect();
        Self {
            n: table.n(),
            amplitudes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, j: usize) -> Complex64 {
        self.amplitudes[j]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Hermitian, PSD, trace-1 operator on an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validating constructor: checks Hermiticity, unit trace, and positive
    /// semidefiniteness of the supplied matrix.
    pub fn new(n: usize, matrix: ComplexMatrix) -> Result<Self, StateError> {
        if matrix.dim() != 1 << n {
            return Err(StateError::DimensionMismatch {
                dim: matrix.dim(),
                n,
            });
        }
        let deviation = matrix.hermitian_deviation();
        if deviation > STATE_TOL {
            return Err(StateError::NotHermitian { deviation });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > STATE_TOL {
            return Err(StateError::TraceNotOne { trace });
        }
        if !matrix.is_psd(PSD_TOL) {
            return Err(StateError::NotPsd);
        }
        Ok(Self { n, matrix })
    }

    /// Projector |ψ⟩⟨ψ| of a pure state.
    pub fn from_pure(state: &PureState) -> Self {
        let amps = state.amplitudes();
        let matrix = ComplexMatrix::from_fn(state.dim(), |r, c| amps[r] * amps[c].conj());
        Self {
            n: state.n(),
            matrix,
        }
    }

    /// n-fold tensor power of the single-qubit mixture
    /// (1−q)|+⟩⟨+| + q|−⟩⟨−| with 0 ≤ q ≤ 1/2.
    pub fn mixed_plus_minus(q: f64, n: usize) -> Result<Self, StateError> {
        if !(0.0..=0.5).contains(&q) {
            return Err(StateError::QOutOfRange { q });
        }
        if n == 0 || n > DEFAULT_MAX_QUBITS {
            return Err(StateError::InvalidQubitCount {
                n,
                max: DEFAULT_MAX_QUBITS,
            });
        }
        let alpha = 0.5 - q;
        let single = ComplexMatrix::from_fn(2, |r, c| {
            Complex64::new(if r == c { 0.5 } else { alpha }, 0.0)
        });
        let mut matrix = single.clone();
        for _ in 1..n {
            matrix = matrix.kron(&single);
        }
        Ok(Self { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.matrix[(r, c)]
    }

    /// Conjugation by the diagonal unitary that multiplies basis state `j`
    /// by e^{iθ}. Diagonal entries are untouched, so the spectrum and trace
    /// are preserved exactly.
    pub fn apply_phase(&self, j: usize, theta: f64) -> Result<Self, StateError> {
        let dim = self.dim();
        if j >= dim {
            return Err(StateError::IndexOutOfRange { index: j, dim });
        }
        let tau = Complex64::from_polar(1.0, theta);
        let mut matrix = self.matrix.clone();
        for c in 0..dim {
            if c != j {
                matrix[(j, c)] *= tau;
                matrix[(c, j)] *= tau.conj();
            }
        }
        Ok(Self { n: self.n, matrix })
    }

    /// Reduction to the qubits listed in `keep` (1-based, strictly
    /// increasing); everything else is traced out.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self, StateError> {
        if keep.is_empty() {
            return Err(StateError::EmptyKeepSet);
        }
        let n = self.n;
        let mut prev = 0;
        for &k in keep {
            if k < 1 || k > n || k <= prev {
                return Err(StateError::InvalidQubitIndex { index: k, n });
            }
            prev = k;
        }
        let traced: Vec<usize> = (1..=n).filter(|q| !keep.contains(q)).collect();
        let kept_bits = keep.len();
        let traced_bits = traced.len();
        let out_dim = 1usize << kept_bits;
        let trace_dim = 1usize << traced_bits;

        // Bit position (from MSB) of qubit q in an n-qubit index is n − q.
        let scatter = |qubits: &[usize], value: usize| -> usize {
            let mut idx = 0usize;
            for (pos, &q) in qubits.iter().enumerate() {
                let bit = (value >> (qubits.len() - 1 - pos)) & 1;
                idx |= bit << (n - q);
            }
            idx
        };

        let mut matrix = ComplexMatrix::zeros(out_dim);
        for row in 0..out_dim {
            let row_base = scatter(keep, row);
            for col in 0..out_dim {
                let col_base = scatter(keep, col);
                let mut sum = Complex64::new(0.0, 0.0);
                for t in 0..trace_dim {
                    let t_bits = scatter(&traced, t);
                    sum += self.matrix[(row_base | t_bits, col_base | t_bits)];
                }
                matrix[(row, col)] = sum;
            }
        }
        Ok(Self {
            n: kept_bits,
            matrix,
        })
    }

    /// tr(ρ²), which is 1 exactly when the state is pure.
    pub fn purity(&self) -> f64 {
        let dim = self.dim();
        let mut s = 0.0;
        for r in 0..dim {
            for c in 0..dim {
                // tr(ρ²) = Σ ρ_rc ρ_cr = Σ |ρ_rc|² for Hermitian ρ
                s += (self.matrix[(r, c)] * self.matrix[(c, r)]).re;
            }
        }
        s
    }

    /// Tensor product with another state; `self` occupies the leading qubits.
    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            n: self.n + other.n,
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    /// Eigenvalues of the state, descending.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>, crate::linalg::LinalgError> {
        Ok(hermitian_eigensystem(&self.matrix, tol)?.eigenvalues)
    }
}
