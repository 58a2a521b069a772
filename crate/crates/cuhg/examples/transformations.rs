//! Weak deletion and switching, with the spectral effects of each:
//! deletions interlace the Laplacian spectrum, switchings preserve it.
//!
//!     cargo run --example transformations

use cuhg::eigen::hermitian_eig;
use cuhg::generate::{gen_random, PhaseMode};
use cuhg::hypergraph::SwitchingFunction;
use cuhg::operators::kirchhoff;
use cuhg::phase::Phase;

fn spec_k(g: &cuhg::hypergraph::Hypergraph) -> Vec<f64> {
    hermitian_eig(&kirchhoff(g), false).unwrap().values
}

fn main() {
    let g = gen_random(6, 4, 0.6, PhaseMode::RootsOfUnity(4), 11).unwrap().graph;
    let full = spec_k(&g);
    println!("spec K(G)            = {full:?}");

    // weak vertex deletion drops a row/column; eigenvalues interlace:
    // lambda_k(G) <= lambda_k(G - v) <= lambda_{k+1}(G)
    let (without_v0, _) = g.weak_delete_vertices(&[0]).unwrap();
    let sub = spec_k(&without_v0);
    println!("spec K(G - v0)       = {sub:?}");
    for k in 0..sub.len() {
        assert!(full[k] <= sub[k] + 1e-8 && sub[k] <= full[k + 1] + 1e-8);
    }

    // weak edge deletion keeps the dimension; the spectrum moves down
    let without_e0 = g.weak_delete_edges(&[0]).unwrap();
    println!("spec K(G - e0)       = {:?}", spec_k(&without_e0));

    // switching multiplies phases by units; K changes only by conjugation,
    // so its spectrum is untouched
    let zeta = SwitchingFunction::vertex(
        (0..g.vertex_count())
            .map(|v| Phase::from_angle(0.37 * v as f64))
            .collect(),
    );
    let switched = g.switch(&zeta).unwrap();
    let spec_switched = spec_k(&switched);
    let max_dev = full
        .iter()
        .zip(&spec_switched)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!("spec K after vertex switching deviates by {max_dev:.3e}");

    // switching by the inverse restores the original phases
    let restored = switched.switch(&zeta.inverse()).unwrap();
    for (e, edge) in g.edges().iter().enumerate() {
        for (&v, &p) in edge {
            assert!(p.dist(restored.phase(v, e).unwrap()) <= 1e-15);
        }
    }
    println!("inverse switching restores G exactly");
}
