//! Duality swaps vertices and edges; the Kirchhoff Laplacians K and K*
//! trade places and share their non-zero spectra.
//!
//!     cargo run --example duality

use cuhg::eigen::hermitian_eig;
use cuhg::generate::{gen_random, PhaseMode};
use cuhg::operators::{dual_kirchhoff, kirchhoff};

fn main() {
    let g = gen_random(5, 3, 0.7, PhaseMode::Continuous, 4).unwrap().graph;
    let dual = g.dual();
    println!(
        "G: {} vertices / {} edges;  G*: {} vertices / {} edges",
        g.vertex_count(),
        g.edge_count(),
        dual.vertex_count(),
        dual.edge_count()
    );
    assert_eq!(dual.dual(), g, "duality is an involution");

    // K(G*) coincides with K*(G) entry by entry
    let k_dual = kirchhoff(&dual);
    let kstar = dual_kirchhoff(&g);
    println!(
        "max |K(G*) - K*(G)| = {:.3e}",
        k_dual.max_abs_diff(&kstar)
    );

    let spec_k = hermitian_eig(&kirchhoff(&g), false).unwrap().values;
    let spec_kstar = hermitian_eig(&kstar, false).unwrap().values;
    println!("spec K  = {spec_k:?}");
    println!("spec K* = {spec_kstar:?}");
    println!(
        "same multiset away from zero; the multiplicity of 0 differs by n - m = {}",
        g.vertex_count() as i64 - g.edge_count() as i64
    );
}
