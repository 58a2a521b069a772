//! Dense Hermitian eigensolver and spectral utilities.
//!
//! The solver runs cyclic Jacobi on the 2n x 2n real symmetric embedding
//! [[X, -Y], [Y, X]] of M = X + iY. Embedding eigenvalues come in duplicated
//! pairs; the pairs are collapsed and eigenvectors recovered through the
//! (u, v) <-> u + iv correspondence, with Gram-Schmidt inside degenerate
//! clusters.

use num_complex::Complex64;

use crate::hypergraph::Hypergraph;
use crate::matrix::ComplexMatrix;
use crate::operators;
use crate::{Error, Result};

/// Relative off-diagonal Frobenius threshold for Jacobi convergence.
const JACOBI_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 60;
/// Pre-solve Hermiticity requirement.
const HERMITIAN_INPUT_TOL: f64 = 1e-10;
/// Eigenvalue gap below which vectors are re-orthonormalized as a cluster.
const CLUSTER_GAP: f64 = 1e-8;

/// Ascending real eigenvalues with optional orthonormal eigenvectors.
///
/// Eigenvector phases are normalized so the first component of largest
/// absolute value is real and nonnegative, which makes golden outputs
/// deterministic.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<Complex64>>>,
    /// max over i of ||M x_i - lambda_i x_i||_2.
    pub max_residual: f64,
}

impl Spectrum {
    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }
}

/// Two-sided zero threshold: an eigenvalue counts as zero when
/// |lambda| <= max(absolute_floor, relative_factor * max |lambda|).
#[derive(Debug, Clone, Copy)]
pub struct NullityPolicy {
    pub absolute_floor: f64,
    pub relative_factor: f64,
}

impl Default for NullityPolicy {
    fn default() -> Self {
        NullityPolicy {
            absolute_floor: 1e-10,
            relative_factor: 1e-9,
        }
    }
}

impl NullityPolicy {
    pub fn threshold(&self, spectrum: &Spectrum) -> f64 {
        let scale = spectrum
            .values
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        self.absolute_floor.max(self.relative_factor * scale)
    }
}

/// Eigen-decomposition of a Hermitian matrix.
pub fn hermitian_eig(m: &ComplexMatrix, want_vectors: bool) -> Result<Spectrum> {
    m.require_hermitian(HERMITIAN_INPUT_TOL)?;
    let n = m.rows();
    if n == 0 {
        return Ok(Spectrum {
            values: vec![],
            vectors: want_vectors.then(Vec::new),
            max_residual: 0.0,
        });
    }

    // real symmetric embedding of M = X + iY
    let dim = 2 * n;
    let mut embed = vec![0.0f64; dim * dim];
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j);
            embed[i * dim + j] = z.re;
            embed[(n + i) * dim + (n + j)] = z.re;
            embed[i * dim + (n + j)] = -z.im;
            embed[(n + i) * dim + j] = z.im;
        }
    }
    let (raw_values, basis) = jacobi_symmetric(&mut embed, dim)?;

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| raw_values[a].total_cmp(&raw_values[b]));

    // duplicated pairs collapse to one eigenvalue each
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        values.push(0.5 * (raw_values[order[2 * i]] + raw_values[order[2 * i + 1]]));
    }

    let vectors = extract_vectors(m, &values, &order, &basis, n)?;
    let max_residual = residual(m, &values, &vectors);
    Ok(Spectrum {
        values,
        vectors: want_vectors.then_some(vectors),
        max_residual,
    })
}

/// Spectrum of a matrix similar to a Hermitian one through a positive
/// diagonal: given M and d, solves diag(d)^{1/2} M diag(d)^{-1/2} and maps
/// eigenvectors back so they satisfy M x = lambda x. Used for the normalized
/// Laplacian L via its Hermitian similar form.
pub fn eig_via_similarity(
    m: &ComplexMatrix,
    diag: &[f64],
    want_vectors: bool,
) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != diag.len() {
        return Err(Error::LengthMismatch {
            expected: m.rows(),
            got: diag.len(),
        });
    }
    if let Some(index) = diag.iter().position(|&d| !(d > 0.0)) {
        return Err(Error::NonPositiveDiagonal { index });
    }
    let sqrt: Vec<f64> = diag.iter().map(|d| d.sqrt()).collect();
    let inv_sqrt: Vec<f64> = diag.iter().map(|d| 1.0 / d.sqrt()).collect();
    let hermitian_form = m.scale_rows_cols(&sqrt, &inv_sqrt);
    let sym = hermitian_eig(&hermitian_form, true)?;

    // x eigenvector of the Hermitian form <-> D^{-1/2} x eigenvector of M
    let mapped: Vec<Vec<Complex64>> = sym
        .vectors
        .as_ref()
        .unwrap()
        .iter()
        .map(|x| {
            let mut y: Vec<Complex64> =
                x.iter().zip(&inv_sqrt).map(|(xi, s)| xi * *s).collect();
            let norm = vec_norm(&y);
            for yi in &mut y {
                *yi /= norm;
            }
            normalize_vector_phase(&mut y);
            y
        })
        .collect();
    let max_residual = residual(m, &sym.values, &mapped);
    Ok(Spectrum {
        values: sym.values,
        vectors: want_vectors.then_some(mapped),
        max_residual,
    })
}

/// Multiplicity of the eigenvalue 0 under `policy`.
pub fn nullity(m: &ComplexMatrix, policy: &NullityPolicy) -> Result<usize> {
    let s = hermitian_eig(m, false)?;
    Ok(nullity_from(&s, policy))
}

pub fn nullity_from(spectrum: &Spectrum, policy: &NullityPolicy) -> usize {
    let tau = policy.threshold(spectrum);
    spectrum.values.iter().filter(|v| v.abs() <= tau).count()
}

/// max |lambda|; 0 for an empty spectrum.
pub fn spectral_radius(spectrum: &Spectrum) -> f64 {
    match (spectrum.min(), spectrum.max()) {
        (Some(lo), Some(hi)) => lo.abs().max(hi.abs()),
        _ => 0.0,
    }
}

/// rho(M) <= max_i (|m_ii| + sum_{j != i} |m_ij|): the Gersgorin disc bound.
pub fn gershgorin_bound(m: &ComplexMatrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut bound = 0.0f64;
    for i in 0..m.rows() {
        let row_sum: f64 = (0..m.cols()).map(|j| m.get(i, j).norm()).sum();
        bound = bound.max(row_sum);
    }
    Ok(bound)
}

/// Which operator a Rayleigh quotient refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Adjacency,
    Kirchhoff,
    Normalized,
}

/// Rayleigh quotient of `x` for A, K or L of `g`.
///
/// The K and L quotients use the edge-sum form of the quadratic identity
/// x+ K x = sum_e |sum_{v in e} omega(v,e)^{-1} x_v|^2, which is manifestly
/// real; the A quotient is x+ A x / x+ x with its (tiny) imaginary part
/// dropped.
pub fn rayleigh(kind: OperatorKind, g: &Hypergraph, x: &[Complex64]) -> Result<f64> {
    let n = g.vertex_count();
    if x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: x.len(),
        });
    }
    let norm_sq: f64 = x.iter().map(|z| z.norm_sqr()).sum();
    if norm_sq == 0.0 {
        return Err(Error::ZeroVector);
    }
    match kind {
        OperatorKind::Adjacency => {
            let a = operators::adjacency_matrix(g);
            let ax = a.apply(x);
            let num: Complex64 = x.iter().zip(&ax).map(|(xi, yi)| xi.conj() * yi).sum();
            debug_assert!(num.im.abs() <= 1e-9 * (1.0 + num.norm()));
            Ok(num.re / norm_sq)
        }
        OperatorKind::Kirchhoff => Ok(edge_sum_quadratic(g, x, None) / norm_sq),
        OperatorKind::Normalized => {
            let zero = g.zero_degree_vertices();
            if !zero.is_empty() {
                return Err(Error::ZeroDegreeVertex { vertices: zero });
            }
            let degrees = g.degrees();
            let weighted: f64 = x
                .iter()
                .zip(&degrees)
                .map(|(z, &d)| d as f64 * z.norm_sqr())
                .sum();
            Ok(edge_sum_quadratic(g, x, None) / weighted)
        }
    }
}

/// sum_e |sum_{v in e} conj(omega(v,e)) w_v x_v|^2 with optional per-vertex
/// weights w (used for the calL quadratic form with w_v = 1/sqrt(deg v)).
pub fn edge_sum_quadratic(g: &Hypergraph, x: &[Complex64], weights: Option<&[f64]>) -> f64 {
    g.edges()
        .iter()
        .map(|edge| {
            let s: Complex64 = edge
                .iter()
                .map(|(&v, &p)| {
                    let w = weights.map_or(1.0, |ws| ws[v]);
                    p.value().conj() * x[v] * w
                })
                .sum();
            s.norm_sqr()
        })
        .sum()
}

fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn residual(m: &ComplexMatrix, values: &[f64], vectors: &[Vec<Complex64>]) -> f64 {
    let mut worst = 0.0f64;
    for (lambda, x) in values.iter().zip(vectors) {
        let mx = m.apply(x);
        let r: f64 = mx
            .iter()
            .zip(x)
            .map(|(mi, xi)| (mi - xi * *lambda).norm_sqr())
            .sum::<f64>()
            .sqrt();
        worst = worst.max(r);
    }
    worst
}

/// Make the first component of largest absolute value real and nonnegative.
fn normalize_vector_phase(x: &mut [Complex64]) {
    let mut best = 0usize;
    let mut best_abs = 0.0f64;
    for (i, z) in x.iter().enumerate() {
        let a = z.norm();
        if a > best_abs + 1e-15 {
            best_abs = a;
            best = i;
        }
    }
    if best_abs == 0.0 {
        return;
    }
    let rotation = x[best].conj() / best_abs;
    for z in x.iter_mut() {
        *z *= rotation;
    }
}

/// Recover complex eigenvectors from the embedding basis: within each
/// near-degenerate cluster, run complex Gram-Schmidt over the candidate
/// columns (u, v) -> u + iv and keep the independent ones.
fn extract_vectors(
    m: &ComplexMatrix,
    values: &[f64],
    order: &[usize],
    basis: &[f64],
    n: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let dim = 2 * n;
    let scale = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let gap = CLUSTER_GAP * (1.0 + scale);

    let column = |idx: usize| -> Vec<Complex64> {
        (0..n)
            .map(|i| Complex64::new(basis[i * dim + idx], basis[(n + i) * dim + idx]))
            .collect()
    };

    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] < gap {
            end += 1;
        }
        let want = end - start;
        let mut kept: Vec<Vec<Complex64>> = Vec::with_capacity(want);
        for pair in (2 * start)..(2 * end) {
            if kept.len() == want {
                break;
            }
            let mut x = column(order[pair]);
            for y in &kept {
                let overlap: Complex64 =
                    y.iter().zip(&x).map(|(yi, xi)| yi.conj() * xi).sum();
                for (xi, yi) in x.iter_mut().zip(y) {
                    *xi -= overlap * yi;
                }
            }
            let norm = vec_norm(&x);
            if norm > 1e-6 {
                for xi in &mut x {
                    *xi /= norm;
                }
                kept.push(x);
            }
        }
        if kept.len() != want {
            // the 2k candidates span the k-dim complex eigenspace, so this
            // only triggers on a solver breakdown
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
        for mut x in kept {
            normalize_vector_phase(&mut x);
            vectors.push(x);
        }
        start = end;
    }
    debug_assert_eq!(vectors.len(), m.rows());
    Ok(vectors)
}

/// Cyclic Jacobi for a real symmetric matrix in row-major storage. Returns
/// the unsorted diagonal and the accumulated orthogonal basis (columns are
/// eigenvectors).
fn jacobi_symmetric(a: &mut [f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if frob == 0.0 {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        s += a[i * n + j] * a[i * n + j];
                    }
                }
            }
            s.sqrt()
        };
        if off <= JACOBI_TOL * frob {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[i * n + p];
                        let aiq = a[i * n + q];
                        a[i * n + p] = aip - s * (aiq + tau * aip);
                        a[p * n + i] = a[i * n + p];
                        a[i * n + q] = aiq + s * (aip - tau * aiq);
                        a[q * n + i] = a[i * n + q];
                    }
                }
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = vip - s * (viq + tau * vip);
                    v[i * n + q] = viq + s * (vip - tau * viq);
                }
            }
        }
    }
    if !converged {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        s += a[i * n + j] * a[i * n + j];
                    }
                }
            }
            s.sqrt()
        };
        if off > JACOBI_TOL * frob {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g1, g2, g3};
    use crate::operators::{
        adjacency_matrix, dual_kirchhoff, kirchhoff, normalized, sym_normalized,
    };

    fn assert_values(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn adjacency_of_sharp_example() {
        let s = hermitian_eig(&adjacency_matrix(&g3()), true).unwrap();
        assert_values(&s.values, &[-2.0, 1.0, 1.0], 1e-9);
        assert!(s.max_residual <= 1e-8 * 3.0);
    }

    #[test]
    fn kirchhoff_spectra() {
        let s1 = hermitian_eig(&kirchhoff(&g1()), false).unwrap();
        assert_values(&s1.values, &[0.0, 2.0], 1e-9);
        let s3 = hermitian_eig(&kirchhoff(&g3()), false).unwrap();
        assert_values(&s3.values, &[0.0, 0.0, 3.0], 1e-9);
    }

    #[test]
    fn zero_matrix() {
        let s = hermitian_eig(&ComplexMatrix::zeros(4, 4), true).unwrap();
        assert_values(&s.values, &[0.0; 4], 0.0);
        assert_eq!(s.max_residual, 0.0);
    }

    #[test]
    fn empty_matrix() {
        let s = hermitian_eig(&ComplexMatrix::zeros(0, 0), true).unwrap();
        assert!(s.values.is_empty());
        assert_eq!(spectral_radius(&s), 0.0);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 1, Complex64::new(1.0, 0.0));
        assert!(matches!(
            hermitian_eig(&m, false),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            hermitian_eig(&ComplexMatrix::zeros(2, 3), false),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn eigenvector_contract() {
        let s = hermitian_eig(&kirchhoff(&g1()), true).unwrap();
        let vectors = s.vectors.as_ref().unwrap();
        for (i, x) in vectors.iter().enumerate() {
            assert!((vec_norm(x) - 1.0).abs() <= 1e-10);
            for (j, y) in vectors.iter().enumerate() {
                if i != j {
                    let overlap: Complex64 =
                        x.iter().zip(y).map(|(a, b)| a.conj() * b).sum();
                    assert!(overlap.norm() <= 1e-8);
                }
            }
            // phase determinism
            let mut max_abs = 0.0f64;
            let mut first = 0usize;
            for (k, z) in x.iter().enumerate() {
                if z.norm() > max_abs + 1e-15 {
                    max_abs = z.norm();
                    first = k;
                }
            }
            assert!(x[first].im.abs() <= 1e-12 && x[first].re >= 0.0);
        }
        assert!(s.max_residual <= 1e-8 * (1.0 + 2.0));
    }

    #[test]
    fn similarity_solver_matches_normalized_laplacian() {
        for g in [g1(), g2(), g3()] {
            let l = normalized(&g).unwrap();
            let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
            let s = eig_via_similarity(&l, &degrees, true).unwrap();
            let herm = hermitian_eig(&sym_normalized(&g).unwrap(), false).unwrap();
            assert_values(&s.values, &herm.values, 1e-9);
            assert!(s.max_residual <= 1e-8);
        }
        let l3 = normalized(&g3()).unwrap();
        let s3 = eig_via_similarity(&l3, &[1.0, 1.0, 1.0], false).unwrap();
        assert_values(&s3.values, &[0.0, 0.0, 3.0], 1e-9);
        let l2 = normalized(&g2()).unwrap();
        let s2 = eig_via_similarity(&l2, &[2.0, 2.0], false).unwrap();
        assert_values(&s2.values, &[1.0, 1.0], 1e-9);
        let l1 = normalized(&g1()).unwrap();
        let s1 = eig_via_similarity(&l1, &[1.0, 1.0], false).unwrap();
        assert_values(&s1.values, &[0.0, 2.0], 1e-9);

        assert!(matches!(
            eig_via_similarity(&l1, &[1.0, 0.0], false),
            Err(Error::NonPositiveDiagonal { index: 1 })
        ));
    }

    #[test]
    fn nullities() {
        let policy = NullityPolicy::default();
        assert_eq!(nullity(&kirchhoff(&g3()), &policy).unwrap(), 2);
        assert_eq!(nullity(&dual_kirchhoff(&g3()), &policy).unwrap(), 0);
        assert_eq!(nullity(&ComplexMatrix::zeros(5, 5), &policy).unwrap(), 5);
    }

    #[test]
    fn radius_and_gershgorin() {
        let sa = hermitian_eig(&adjacency_matrix(&g3()), false).unwrap();
        assert!((spectral_radius(&sa) - 2.0).abs() <= 1e-9);
        let sa1 = hermitian_eig(&adjacency_matrix(&g1()), false).unwrap();
        assert!((spectral_radius(&sa1) - 1.0).abs() <= 1e-9);

        assert!((gershgorin_bound(&adjacency_matrix(&g3())).unwrap() - 2.0).abs() < 1e-12);
        assert!((gershgorin_bound(&kirchhoff(&g3())).unwrap() - 3.0).abs() < 1e-12);
        let d = ComplexMatrix::real_diagonal(&[5.0]);
        assert!((gershgorin_bound(&d).unwrap() - 5.0).abs() < 1e-15);
        assert!(gershgorin_bound(&adjacency_matrix(&g3())).unwrap() >= spectral_radius(&sa) - 1e-9);
    }

    #[test]
    fn rayleigh_quotients() {
        let inv_sqrt3 = 1.0 / 3.0f64.sqrt();
        let x = vec![Complex64::new(inv_sqrt3, 0.0); 3];
        let rq = rayleigh(OperatorKind::Kirchhoff, &g3(), &x).unwrap();
        assert!((rq - 3.0).abs() <= 1e-12);

        let e0 = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        assert_eq!(rayleigh(OperatorKind::Adjacency, &g1(), &e0).unwrap(), 0.0);

        let y = vec![Complex64::new(0.3, 0.4), Complex64::new(-0.2, 0.6)];
        let rl = rayleigh(OperatorKind::Normalized, &g2(), &y).unwrap();
        assert!((rl - 1.0).abs() <= 1e-12);

        assert!(matches!(
            rayleigh(OperatorKind::Kirchhoff, &g3(), &[Complex64::default(); 3]),
            Err(Error::ZeroVector)
        ));
        assert!(matches!(
            rayleigh(OperatorKind::Normalized, &Hypergraph::empty(2), &e0),
            Err(Error::ZeroDegreeVertex { .. })
        ));
    }

    #[test]
    fn trace_matches_eigenvalue_sum() {
        for m in [
            adjacency_matrix(&g1()),
            kirchhoff(&g2()),
            kirchhoff(&g3()),
            dual_kirchhoff(&g2()),
        ] {
            let s = hermitian_eig(&m, false).unwrap();
            let sum: f64 = s.values.iter().sum();
            let scale = s.values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            assert!((sum - m.trace().re).abs() <= 1e-9 * m.rows() as f64 * (1.0 + scale));
        }
    }
}
