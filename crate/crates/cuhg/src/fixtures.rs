//! Small named hypergraphs used across tests, examples and documentation.

use crate::generate::single_edge_all_ones;
use crate::hypergraph::Hypergraph;

/// Two vertices, one 2-edge with phases (1, i).
pub fn g1() -> Hypergraph {
    Hypergraph::build(2, &[vec![(0, 1.0, 0.0), (1, 0.0, 1.0)]]).unwrap()
}

/// Two vertices, two 2-edges with phases (1, 1) and (1, -1). 2-regular and
/// 2-uniform; the two adjacency gains cancel, so A = 0 and K = 2 Id.
pub fn g2() -> Hypergraph {
    Hypergraph::build(
        2,
        &[
            vec![(0, 1.0, 0.0), (1, 1.0, 0.0)],
            vec![(0, 1.0, 0.0), (1, -1.0, 0.0)],
        ],
    )
    .unwrap()
}

/// Three vertices, one all-ones 3-edge: the sharp example for the adjacency
/// spectral radius bound (rho(A) = 2 = max degree times (max size - 1)).
pub fn g3() -> Hypergraph {
    single_edge_all_ones(3).unwrap()
}
