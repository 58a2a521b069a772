//! The iterative Hermitian eigensolver against closed-form
//! characteristic-polynomial roots for 2x2 and 3x3 matrices.

mod common;

use common::{oracle_2x2, oracle_3x3, random_hermitian};
use cuhg::eigen::hermitian_eig;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORACLE_TOL: f64 = 1e-9;

#[test]
fn solver_matches_2x2_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..1000 {
        let m = random_hermitian(&mut rng, 2, 3.0);
        let expected = oracle_2x2(&m);
        let got = hermitian_eig(&m, false).unwrap().values;
        for (e, g) in expected.iter().zip(&got) {
            assert!(
                (e - g).abs() <= ORACLE_TOL * (1.0 + e.abs()),
                "case {case}: expected {expected:?}, got {got:?}"
            );
        }
    }
}

#[test]
fn solver_matches_3x3_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for case in 0..1000 {
        let m = random_hermitian(&mut rng, 3, 3.0);
        let expected = oracle_3x3(&m);
        let got = hermitian_eig(&m, false).unwrap().values;
        for (e, g) in expected.iter().zip(&got) {
            assert!(
                (e - g).abs() <= ORACLE_TOL * (1.0 + e.abs()),
                "case {case}: expected {expected:?}, got {got:?}"
            );
        }
    }
}

#[test]
fn eigenvectors_satisfy_residual_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for dim in [2usize, 3, 5, 8] {
        for _ in 0..50 {
            let m = random_hermitian(&mut rng, dim, 2.0);
            let spectrum = hermitian_eig(&m, true).unwrap();
            let vectors = spectrum.vectors.as_ref().unwrap();
            for (lambda, x) in spectrum.values.iter().zip(vectors) {
                let mx = m.apply(x);
                let res: f64 = mx
                    .iter()
                    .zip(x)
                    .map(|(mi, xi)| (mi - xi * *lambda).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                assert!(
                    res <= 1e-8 * (1.0 + lambda.abs()),
                    "dim {dim}: residual {res} at lambda {lambda}"
                );
            }
        }
    }
}

#[test]
fn eigenvectors_are_orthonormal() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let m = random_hermitian(&mut rng, 6, 2.0);
        let spectrum = hermitian_eig(&m, true).unwrap();
        let vectors = spectrum.vectors.as_ref().unwrap();
        for (i, x) in vectors.iter().enumerate() {
            for (j, y) in vectors.iter().enumerate() {
                let dot: Complex64 = x.iter().zip(y).map(|(a, b)| a.conj() * b).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (dot.norm() - expect).abs() <= 1e-8,
                    "<v{i}, v{j}> = {dot}"
                );
            }
        }
    }
}

#[test]
fn repeated_eigenvalues_are_resolved() {
    // diag(2, 2, 2) plus a rank-one Hermitian perturbation keeps a double
    // eigenvalue at 2
    let mut m = cuhg::matrix::ComplexMatrix::identity(3).scale(2.0);
    let u = [
        Complex64::new(0.5, 0.5),
        Complex64::new(0.5, -0.5),
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
    ];
    for i in 0..3 {
        for j in 0..3 {
            let v = m.get(i, j) + u[i] * u[j].conj();
            m.set(i, j, v);
        }
    }
    let spectrum = hermitian_eig(&m, true).unwrap();
    // ||u||^2 = 1.5, so the perturbed eigenvalue is 2 + 1.5
    let expected = [2.0, 2.0, 3.5];
    for (e, g) in expected.iter().zip(&spectrum.values) {
        assert!((e - g).abs() <= 1e-10, "{:?}", spectrum.values);
    }
    assert!(spectrum.max_residual <= 1e-9);
}
