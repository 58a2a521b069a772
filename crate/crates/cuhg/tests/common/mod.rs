//! Shared helpers for the integration tests: closed-form eigenvalue oracles
//! for 2x2 and 3x3 Hermitian matrices (independent of the iterative solver)
//! and the pinned random-hypergraph corpus.
#![allow(dead_code)] // not every test binary uses every helper

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use cuhg::generate::{gen_random, PhaseMode};
use cuhg::hypergraph::Hypergraph;
use cuhg::matrix::ComplexMatrix;

/// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula, ascending.
pub fn oracle_2x2(m: &ComplexMatrix) -> Vec<f64> {
    assert_eq!((m.rows(), m.cols()), (2, 2));
    let a = m.get(0, 0).re;
    let c = m.get(1, 1).re;
    let b = m.get(0, 1);
    let mid = 0.5 * (a + c);
    let disc = (0.25 * (a - c) * (a - c) + b.norm_sqr()).sqrt();
    vec![mid - disc, mid + disc]
}

fn det3(m: &ComplexMatrix) -> Complex64 {
    let e = |i, j| m.get(i, j);
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Eigenvalues of a 3x3 Hermitian matrix via the trigonometric solution of
/// the characteristic cubic, ascending.
pub fn oracle_3x3(m: &ComplexMatrix) -> Vec<f64> {
    assert_eq!((m.rows(), m.cols()), (3, 3));
    let q = (m.get(0, 0).re + m.get(1, 1).re + m.get(2, 2).re) / 3.0;
    let p1 = m.get(0, 1).norm_sqr() + m.get(0, 2).norm_sqr() + m.get(1, 2).norm_sqr();
    let p2 = (m.get(0, 0).re - q).powi(2)
        + (m.get(1, 1).re - q).powi(2)
        + (m.get(2, 2).re - q).powi(2)
        + 2.0 * p1;
    if p2 <= f64::EPSILON * (1.0 + q * q) {
        return vec![q; 3];
    }
    let p = (p2 / 6.0).sqrt();
    let mut b = ComplexMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let shift = if i == j {
                Complex64::new(q, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            b.set(i, j, (m.get(i, j) - shift) / p);
        }
    }
    let r = (det3(&b).re / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3 * 2.0).cos();
    let mid = 3.0 * q - hi - lo;
    let mut values = vec![lo, mid, hi];
    values.sort_by(f64::total_cmp);
    values
}

/// Random Hermitian matrix with entries of magnitude O(scale).
pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize, scale: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        m.set(i, i, Complex64::new(rng.gen_range(-scale..scale), 0.0));
        for j in (i + 1)..dim {
            let z = Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale));
            m.set(i, j, z);
            m.set(j, i, z.conj());
        }
    }
    m
}

/// One corpus entry: a label for failure messages plus the hypergraph.
pub struct CorpusEntry {
    pub label: String,
    pub graph: Hypergraph,
}

pub const CORPUS_SIZE: usize = 500;

/// The pinned corpus: 500 deterministic random hypergraphs with n in 2..=10,
/// m in 1..=10, mixed inclusion probabilities and phase models.
pub fn corpus() -> Vec<CorpusEntry> {
    let modes = [
        PhaseMode::Continuous,
        PhaseMode::RootsOfUnity(2),
        PhaseMode::RootsOfUnity(3),
        PhaseMode::RootsOfUnity(4),
    ];
    let probabilities = [0.3, 0.5, 0.8, 1.0];
    let mut out = Vec::with_capacity(CORPUS_SIZE);
    for i in 0..CORPUS_SIZE {
        let n = 2 + (i * 7) % 9; // 2..=10
        let m = 1 + (i * 5) % 10; // 1..=10
        let p = probabilities[(i / 4) % 4];
        let mode = modes[i % 4];
        let seed = i as u64;
        let graph = gen_random(n, m, p, mode, seed).unwrap().graph;
        out.push(CorpusEntry {
            label: format!("corpus[{i}] n={n} m={m} p={p} mode={mode:?} seed={seed}"),
            graph,
        });
    }
    out
}
