//! Build a small complex unit hypergraph and print the spectrum of each of
//! its six operators.
//!
//!     cargo run --example spectra

use cuhg::eigen::{eig_via_similarity, hermitian_eig, nullity_from, NullityPolicy};
use cuhg::hypergraph::Hypergraph;
use cuhg::operators::{
    adjacency_matrix, dual_kirchhoff, dual_normalized, kirchhoff, normalized, sym_normalized,
};

fn main() {
    // three vertices, two edges; the phase of an incidence is any complex
    // number of modulus 1, given here as (re, im)
    let g = Hypergraph::build(
        3,
        &[
            vec![(0, 1.0, 0.0), (1, 0.0, 1.0), (2, 1.0, 0.0)],
            vec![(1, 1.0, 0.0), (2, -1.0, 0.0)],
        ],
    )
    .unwrap();

    println!(
        "hypergraph with {} vertices, {} edges, degrees {:?}",
        g.vertex_count(),
        g.edge_count(),
        g.degrees()
    );

    let policy = NullityPolicy::default();
    let named = [
        ("A     (adjacency)", hermitian_eig(&adjacency_matrix(&g), false)),
        ("K     (Kirchhoff Laplacian)", hermitian_eig(&kirchhoff(&g), false)),
        ("K*    (dual Kirchhoff)", hermitian_eig(&dual_kirchhoff(&g), false)),
        ("calL  (symmetrized normalized)", hermitian_eig(&sym_normalized(&g).unwrap(), false)),
        ("L*    (dual normalized)", hermitian_eig(&dual_normalized(&g).unwrap(), false)),
    ];
    for (name, spectrum) in named {
        let s = spectrum.unwrap();
        println!(
            "{name}: {:?}  (nullity {})",
            s.values,
            nullity_from(&s, &policy)
        );
    }

    // L = D^{-1} K is not Hermitian, but is similar to calL through D^{1/2};
    // the dedicated solver returns genuine L eigenpairs
    let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    let l = eig_via_similarity(&normalized(&g).unwrap(), &degrees, true).unwrap();
    println!("L     (normalized, via similarity): {:?}", l.values);
    println!("      max residual ||Lx - lambda x|| = {:.3e}", l.max_residual);
}
