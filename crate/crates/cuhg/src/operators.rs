//! The matrices attached to a complex unit hypergraph: degree matrix D,
//! incidence matrix B, adjacency A, Kirchhoff Laplacian K = D - A (= BB+),
//! dual Kirchhoff K* = B+B, normalized Laplacian L = D^{-1}K, its Hermitian
//! similar form calL = Id - D^{-1/2} A D^{-1/2}, and the dual normalized
//! Laplacian L* = B+ D^{-1} B.

use num_complex::Complex64;

use crate::hypergraph::Hypergraph;
use crate::matrix::ComplexMatrix;
use crate::{Error, Result};

/// D = diag(deg v_1, ..., deg v_n).
pub fn degree_matrix(g: &Hypergraph) -> ComplexMatrix {
    let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    ComplexMatrix::real_diagonal(&degrees)
}

/// B_ij = omega(v_i, e_j) on incidences, 0 elsewhere.
pub fn incidence_matrix(g: &Hypergraph) -> ComplexMatrix {
    let mut b = ComplexMatrix::zeros(g.vertex_count(), g.edge_count());
    for (j, edge) in g.edges().iter().enumerate() {
        for (&i, &phase) in edge {
            b.set(i, j, phase.value());
        }
    }
    b
}

/// a_ij = sum over edges of the adjacency gain -omega(v_i,e) conj(omega(v_j,e)),
/// zero diagonal. Hermitian.
pub fn adjacency_matrix(g: &Hypergraph) -> ComplexMatrix {
    let n = g.vertex_count();
    let mut a = ComplexMatrix::zeros(n, n);
    for edge in g.edges() {
        let items: Vec<(usize, Complex64)> =
            edge.iter().map(|(&v, &p)| (v, p.value())).collect();
        for (pos, &(i, wi)) in items.iter().enumerate() {
            for &(j, wj) in items.iter().skip(pos + 1) {
                let gain = -wi * wj.conj();
                a.set(i, j, a.get(i, j) + gain);
                a.set(j, i, a.get(j, i) + gain.conj());
            }
        }
    }
    a
}

/// K = D - A, built from the definition. The identity K = BB+ is asserted by
/// tests and the check suite rather than used as the construction path, so
/// the two routes stay independent.
pub fn kirchhoff(g: &Hypergraph) -> ComplexMatrix {
    degree_matrix(g).sub(&adjacency_matrix(g))
}

/// The theorem route BB+, kept separate from `kirchhoff` on purpose.
pub fn kirchhoff_from_incidence(g: &Hypergraph) -> ComplexMatrix {
    let b = incidence_matrix(g);
    b.matmul(&b.adjoint())
}

/// K* = B+ B.
pub fn dual_kirchhoff(g: &Hypergraph) -> ComplexMatrix {
    let b = incidence_matrix(g);
    b.adjoint().matmul(&b)
}

fn positive_degrees(g: &Hypergraph) -> Result<Vec<f64>> {
    let zero = g.zero_degree_vertices();
    if !zero.is_empty() {
        return Err(Error::ZeroDegreeVertex { vertices: zero });
    }
    Ok(g.degrees().iter().map(|&d| d as f64).collect())
}

/// L = D^{-1} K. Not Hermitian in general; similar to `sym_normalized`.
pub fn normalized(g: &Hypergraph) -> Result<ComplexMatrix> {
    let degrees = positive_degrees(g)?;
    let k = kirchhoff(g);
    let inv: Vec<f64> = degrees.iter().map(|d| 1.0 / d).collect();
    let ones = vec![1.0; degrees.len()];
    Ok(k.scale_rows_cols(&inv, &ones))
}

/// calL = Id - D^{-1/2} A D^{-1/2}; Hermitian and similar to L.
pub fn sym_normalized(g: &Hypergraph) -> Result<ComplexMatrix> {
    let degrees = positive_degrees(g)?;
    let inv_sqrt: Vec<f64> = degrees.iter().map(|d| 1.0 / d.sqrt()).collect();
    let scaled_a = adjacency_matrix(g).scale_rows_cols(&inv_sqrt, &inv_sqrt);
    Ok(ComplexMatrix::identity(degrees.len()).sub(&scaled_a))
}

/// L* = B+ D^{-1} B.
pub fn dual_normalized(g: &Hypergraph) -> Result<ComplexMatrix> {
    let degrees = positive_degrees(g)?;
    let inv: Vec<f64> = degrees.iter().map(|d| 1.0 / d).collect();
    let b = incidence_matrix(g);
    let ones = vec![1.0; b.cols()];
    Ok(b.adjoint().matmul(&b.scale_rows_cols(&inv, &ones)))
}
