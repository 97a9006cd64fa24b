//! Dense complex linear algebra sized for density matrices.
//!
//! Everything here is written for small Hermitian problems (dimension at most
//! 2^10): row-major storage, naive O(n³) products, and a cyclic Jacobi
//! eigensolver chosen for robustness rather than speed. Matrices are immutable
//! values; every operation returns a fresh matrix.

use num_complex::Complex64;
use thiserror::Error;

/// Default convergence budget for the Jacobi sweep loop.
pub const DEFAULT_SWEEP_BUDGET: usize = 100;

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: max |M - M†| entry = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("Jacobi sweeps exhausted before convergence: off-diagonal norm = {off_diagonal:e}")]
    NoConvergence { off_diagonal: f64 },
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:e}")]
    NotPsd { min_eigenvalue: f64 },
}

/// Square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(r, c)].conj())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_fn(self.dim, |r, c| self[(r, c)] * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |r, c| self[(r, c)] + other[(r, c)])
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        out
    }

    /// Kronecker product; `self` indexes the most significant block.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        Self::from_fn(da * db, |r, c| {
            self[(r / db, c / db)] * other[(r % db, c % db)]
        })
    }

    /// Largest entrywise deviation from Hermitian symmetry.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// True when Hermitian within `tol` and every eigenvalue is at least −`tol`.
    pub fn is_psd(&self, tol: f64) -> bool {
        match hermitian_eigensystem(self, tol) {
            Ok(eig) => eig.eigenvalues.last().copied().unwrap_or(0.0) >= -tol,
            Err(_) => false,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r != c {
                    s += self[(r, c)].norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r * self.dim + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r * self.dim + c]
    }
}

/// Eigenvalues in descending order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

/// Diagonalizes a Hermitian matrix by cyclic Jacobi rotations.
///
/// `tol` gates the Hermiticity pre-check (largest allowed |M − M†| entry) and
/// is the convergence target for the off-diagonal Frobenius norm.
pub fn hermitian_eigensystem(m: &ComplexMatrix, tol: f64) -> Result<Eigensystem, LinalgError> {
    hermitian_eigensystem_with_budget(m, tol, DEFAULT_SWEEP_BUDGET)
}

/// `hermitian_eigensystem` with an explicit sweep budget.
pub fn hermitian_eigensystem_with_budget(
    m: &ComplexMatrix,
    tol: f64,
    max_sweeps: usize,
) -> Result<Eigensystem, LinalgError> {
    let deviation = m.hermitian_deviation();
    if deviation > tol {
        return Err(LinalgError::NotHermitian { deviation });
    }
    let n = m.dim;
    // Work on the Hermitian average so sub-tolerance asymmetry cannot steer
    // the rotations.
    let mut a = ComplexMatrix::from_fn(n, |r, c| (m[(r, c)] + m[(c, r)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    let mut converged = a.off_diagonal_norm() <= tol;
    let mut sweeps = 0;
    while !converged {
        if sweeps == max_sweeps {
            return Err(LinalgError::NoConvergence {
                off_diagonal: a.off_diagonal_norm(),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = a.off_diagonal_norm() <= tol;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.partial_cmp(&a[(i, i)].re).unwrap());
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(Eigensystem {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation annihilating the (p, q) entry of `a`,
/// accumulated into `v`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ} of the pivot entry
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // Unitary block: [[c, s·e^{iφ}], [−s·e^{−iφ}, c]].
    let sp = phase * s;

    let n = a.dim;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * sp.conj();
        a[(k, q)] = akp * sp + akq * c;
        a[(p, k)] = a[(k, p)].conj();
        a[(q, k)] = a[(k, q)].conj();
    }
    a[(p, p)] = Complex64::new(c * c * app - 2.0 * r * s * c + s * s * aqq, 0.0);
    a[(q, q)] = Complex64::new(s * s * app + 2.0 * r * s * c + c * c * aqq, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * sp.conj();
        v[(k, q)] = vkp * sp + vkq * c;
    }
}

/// Hermitian PSD square root via eigendecomposition.
///
/// Eigenvalues in [−`tol`, 0) are clamped to zero; anything below −`tol`
/// is rejected as not positive semidefinite.
pub fn psd_sqrt(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix, LinalgError> {
    let eig = hermitian_eigensystem(m, tol)?;
    let min = eig.eigenvalues.last().copied().unwrap_or(0.0);
    if min < -tol {
        return Err(LinalgError::NotPsd {
            min_eigenvalue: min,
        });
    }
    let n = m.dim;
    let roots: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
    // R = V · diag(√λ) · V†
    let mut scaled = eig.eigenvectors.clone();
    for c in 0..n {
        for r in 0..n {
            scaled[(r, c)] *= roots[c];
        }
    }
    Ok(scaled.mul(&eig.eigenvectors.adjoint()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_eigensystem() {
        let eig = hermitian_eigensystem(&ComplexMatrix::identity(4), 1e-12).unwrap();
        for l in &eig.eigenvalues {
            assert!((l - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn diagonal_matrix_is_already_solved() {
        let m = ComplexMatrix::diagonal(&[3.0, 1.0, -2.0]);
        let eig = hermitian_eigensystem(&m, 1e-12).unwrap();
        assert_eq!(eig.eigenvalues, vec![3.0, 1.0, -2.0]);
        // standard basis eigenvectors, up to column order
        for col in 0..3 {
            let mut hits = 0;
            for row in 0..3 {
                if eig.eigenvectors[(row, col)].norm() > 0.5 {
                    hits += 1;
                }
            }
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn two_by_two_with_complex_off_diagonal() {
        // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 0)] = c(1.0, 0.0);
        m[(0, 1)] = c(0.0, 1.0);
        m[(1, 0)] = c(0.0, -1.0);
        m[(1, 1)] = c(1.0, 0.0);
        let eig = hermitian_eigensystem(&m, 1e-12).unwrap();
        assert!((eig.eigenvalues[0] - 2.0).abs() < 1e-12);
        assert!(eig.eigenvalues[1].abs() < 1e-12);
        // residual ‖M v − λ v‖ per column
        for i in 0..2 {
            for row in 0..2 {
                let mv: Complex64 = (0..2).map(|k| m[(row, k)] * eig.eigenvectors[(k, i)]).sum();
                let lv = eig.eigenvectors[(row, i)] * eig.eigenvalues[i];
                assert!((mv - lv).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = c(1.0, 0.0);
        match hermitian_eigensystem(&m, 1e-12) {
            Err(LinalgError::NotHermitian { deviation }) => assert!(deviation > 0.9),
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn zero_budget_reports_no_convergence() {
        let mut m = ComplexMatrix::identity(3);
        m[(0, 1)] = c(0.5, 0.2);
        m[(1, 0)] = c(0.5, -0.2);
        match hermitian_eigensystem_with_budget(&m, 1e-12, 0) {
            Err(LinalgError::NoConvergence { off_diagonal }) => assert!(off_diagonal > 0.1),
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn psd_sqrt_diagonal() {
        let m = ComplexMatrix::diagonal(&[4.0, 9.0]);
        let r = psd_sqrt(&m, 1e-12).unwrap();
        let expect = ComplexMatrix::diagonal(&[2.0, 3.0]);
        assert!(r.max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn psd_sqrt_zero() {
        let z = ComplexMatrix::zeros(3);
        let r = psd_sqrt(&z, 1e-12).unwrap();
        assert!(r.max_abs_diff(&z) == 0.0);
    }

    #[test]
    fn psd_sqrt_rejects_negative_eigenvalue() {
        let m = ComplexMatrix::diagonal(&[1.0, -0.5]);
        match psd_sqrt(&m, 1e-10) {
            Err(LinalgError::NotPsd { min_eigenvalue }) => {
                assert!((min_eigenvalue + 0.5).abs() < 1e-12)
            }
            other => panic!("expected NotPsd, got {other:?}"),
        }
    }

    #[test]
    fn kron_block_structure() {
        let a = ComplexMatrix::diagonal(&[1.0, 2.0]);
        let b = ComplexMatrix::from_fn(2, |r, c| Complex64::new((2 * r + c) as f64, 0.0));
        let k = a.kron(&b);
        assert_eq!(k.dim(), 4);
        assert_eq!(k[(0, 1)], b[(0, 1)]);
        assert_eq!(k[(2, 3)], b[(0, 1)] * 2.0);
        assert_eq!(k[(0, 2)], c(0.0, 0.0));
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        // fixed small Hermitian matrix
        let mut m = ComplexMatrix::diagonal(&[0.3, -0.1, 0.8, 0.5]);
        m[(0, 2)] = c(0.2, 0.7);
        m[(2, 0)] = c(0.2, -0.7);
        m[(1, 3)] = c(-0.4, 0.1);
        m[(3, 1)] = c(-0.4, -0.1);
        let eig = hermitian_eigensystem(&m, 1e-12).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-10);
    }
}
