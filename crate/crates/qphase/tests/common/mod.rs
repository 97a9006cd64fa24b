//! Shared test oracles, all independent of the library's eigensolver path:
//! characteristic polynomials by cofactor expansion, a bisection root finder
//! for real-rooted polynomials, and brute-force purity checks straight off
//! state amplitudes.

#![allow(dead_code)]

use num_complex::Complex64;
use qphase::linalg::ComplexMatrix;
use qphase::states::{PhaseTable, PureState};
use rand::Rng;

/// Coefficients (ascending, monic) of det(λI − M) by recursive cofactor
/// expansion with polynomial arithmetic. Exponential in the dimension; meant
/// for the 4×4 matrices of the concurrence pipeline.
pub fn characteristic_polynomial(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.dim();
    // entries of M − λI as degree-1 polynomials in λ
    let entry = |r: usize, c: usize| -> Vec<Complex64> {
        let mut p = vec![m[(r, c)], Complex64::new(0.0, 0.0)];
        if r == c {
            p[1] = Complex64::new(-1.0, 0.0);
        }
        p
    };
    let rows: Vec<Vec<Vec<Complex64>>> = (0..n)
        .map(|r| (0..n).map(|c| entry(r, c)).collect())
        .collect();
    let det = poly_det(&rows);
    // det(M − λI) = (−1)^n det(λI − M); normalize to monic
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    det.iter()
        .map(|c| {
            let v = c * sign;
            assert!(
                v.im.abs() < 1e-9,
                "characteristic polynomial must be real, got imaginary part {}",
                v.im
            );
            v.re
        })
        .collect()
}

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_scaled(acc: &mut Vec<Complex64>, p: &[Complex64], k: f64) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Complex64::new(0.0, 0.0));
    }
    for (slot, &x) in acc.iter_mut().zip(p) {
        *slot += x * k;
    }
}

fn poly_det(rows: &[Vec<Vec<Complex64>>]) -> Vec<Complex64> {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = vec![Complex64::new(0.0, 0.0)];
    for col in 0..n {
        let minor: Vec<Vec<Vec<Complex64>>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = poly_mul(&rows[0][col], &poly_det(&minor));
        poly_add_scaled(&mut det, &term, if col % 2 == 0 { 1.0 } else { -1.0 });
    }
    det
}

fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Roots of a monic polynomial promised to have only real roots, with
/// multiplicity, in descending order.
///
/// Strategy: the critical points (roots of the derivative, found recursively)
/// bracket every root. A critical point where the polynomial itself is
/// numerically zero is a root of multiplicity one more than its multiplicity
/// in the derivative; everything else is a simple root inside a sign-change
/// interval and falls to bisection.
pub fn real_rooted_roots(coeffs: &[f64]) -> Vec<f64> {
    let degree = coeffs.len() - 1;
    assert!((coeffs[degree] - 1.0).abs() < 1e-9, "expected monic input");
    if degree == 0 {
        return vec![];
    }
    if degree == 1 {
        return vec![-coeffs[0]];
    }
    let mut derivative: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect();
    let lead = derivative[degree - 1];
    for c in &mut derivative {
        *c /= lead;
    }
    let mut crits = real_rooted_roots(&derivative);
    crits.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let scale = 1.0 + coeffs[..degree].iter().fold(0.0f64, |m, &c| m.max(c.abs()));
    let zero_tol = 1e-13 * scale;
    let bound = scale; // Cauchy bound: strictly larger than any root

    // multiple roots: critical points where p vanishes, with multiplicity
    // one above their count among the critical points
    let mut roots = Vec::new();
    let mut i = 0;
    while i < crits.len() {
        let c = crits[i];
        let mut count = 1;
        while i + count < crits.len() && (crits[i + count] - c).abs() < 1e-9 * bound {
            count += 1;
        }
        if poly_eval(coeffs, c).abs() <= zero_tol {
            for _ in 0..=count {
                roots.push(c);
            }
        }
        i += count;
    }

    // simple roots: one sign change per bracketing interval whose endpoints
    // are clear of the multiple roots handled above
    let mut endpoints = vec![-bound];
    endpoints.extend(&crits);
    endpoints.push(bound);
    for pair in endpoints.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let (flo, fhi) = (poly_eval(coeffs, lo), poly_eval(coeffs, hi));
        if flo.abs() <= zero_tol || fhi.abs() <= zero_tol {
            continue;
        }
        if flo * fhi < 0.0 {
            roots.push(bisect(coeffs, lo, hi));
        }
    }
    assert_eq!(roots.len(), degree, "root count must match the degree");
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    roots
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = poly_eval(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fmid = poly_eval(coeffs, mid);
        if fmid == 0.0 {
            return mid;
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenvalues of a matrix with real spectrum, by the characteristic
/// polynomial route, descending.
pub fn eigenvalues_by_charpoly(m: &ComplexMatrix) -> Vec<f64> {
    real_rooted_roots(&characteristic_polynomial(m))
}

/// Random unitary as a product of complex Givens rotations with random
/// phases. Not Haar-distributed, but plenty of coverage for round-trips.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(dim);
    for p in 0..dim {
        for q in (p + 1)..dim {
            let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let (c, s) = (angle.cos(), angle.sin());
            let mut g = ComplexMatrix::identity(dim);
            g[(p, p)] = Complex64::new(c, 0.0);
            g[(p, q)] = Complex64::from_polar(s, phase);
            g[(q, p)] = -Complex64::from_polar(s, -phase);
            g[(q, q)] = Complex64::new(c, 0.0);
            u = u.mul(&g);
        }
    }
    let mut d = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        d[(i, i)] = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    }
    u.mul(&d)
}

/// Standard complex Gaussian entry via Box-Muller.
fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    Complex64::new(r * u2.cos(), r * u2.sin())
}

/// Random density matrix ρ = GG†/tr(GG†) with Ginibre G.
pub fn random_density_matrix(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| gaussian_complex(rng));
    let gg = g.mul(&g.adjoint());
    let tr = gg.trace().re;
    gg.scale(Complex64::new(1.0 / tr, 0.0))
}

/// Random phase table with uniform phases.
pub fn random_phase_table(n: usize, rng: &mut impl Rng) -> PhaseTable {
    PhaseTable::from_fn(n, |_| rng.gen_range(0.0..std::f64::consts::TAU)).unwrap()
}

/// Purity of the single-qubit marginal for qubit `i` (1-based, MSB first),
/// computed directly from the amplitudes — no density matrix, no partial
/// trace, no eigensolver.
pub fn marginal_purity_from_amplitudes(state: &PureState, i: usize) -> f64 {
    let n = state.n();
    let bit = n - i;
    let mut p0 = 0.0;
    let mut p1 = 0.0;
    let mut coherence = Complex64::new(0.0, 0.0);
    for (j, amp) in state.amplitudes().iter().enumerate() {
        if (j >> bit) & 1 == 0 {
            p0 += amp.norm_sqr();
            coherence += amp * state.amplitude(j | (1 << bit)).conj();
        } else {
            p1 += amp.norm_sqr();
        }
    }
    p0 * p0 + p1 * p1 + 2.0 * coherence.norm_sqr()
}

/// Brute-force product-state test: every single-qubit marginal has purity 1.
pub fn is_product_by_purity(table: &PhaseTable, tol: f64) -> bool {
    let state = PureState::from_phase_table(table);
    (1..=table.n()).all(|i| (marginal_purity_from_amplitudes(&state, i) - 1.0).abs() <= tol)
}

/// All balanced {0, π} tables on n qubits (exactly half the entries π).
pub fn all_balanced_tables(n: usize) -> Vec<PhaseTable> {
    let dim = 1usize << n;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << dim) {
        if mask.count_ones() as usize == dim / 2 {
            let phases = (0..dim)
                .map(|j| {
                    if (mask >> j) & 1 == 1 {
                        std::f64::consts::PI
                    } else {
                        0.0
                    }
                })
                .collect();
            out.push(PhaseTable::new(n, phases).unwrap());
        }
    }
    out
}
