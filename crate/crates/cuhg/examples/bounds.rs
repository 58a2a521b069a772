//! Eigenvalue bounds from the maximum degree and maximum edge size, shown
//! on the sharp case: a single edge containing every vertex with phase 1.
//!
//!     cargo run --example bounds

use cuhg::analysis::bound_report;
use cuhg::generate::{gen_random, single_edge_all_ones, PhaseMode};

fn main() {
    // one n-edge, all phases 1: rho(A) = n - 1 meets the degree-size bound
    // Delta(nabla - 1) exactly, and lambda_max(K) = n meets nabla * Delta
    let sharp = single_edge_all_ones(6).unwrap();
    let r = bound_report(&sharp);
    println!(
        "single 6-edge: rho(A) = {}  vs  Delta(nabla-1) = {}",
        r.rho_a,
        r.delta as f64 * (r.nabla as f64 - 1.0)
    );
    println!(
        "               lambda_max(K) = {}  vs  nabla*Delta = {}",
        r.lambda_max_k,
        r.nabla * r.delta
    );

    // a random instance sits strictly inside the bounds
    let g = gen_random(7, 5, 0.5, PhaseMode::Continuous, 23).unwrap().graph;
    let r = bound_report(&g);
    println!(
        "\nrandom instance: Delta = {}, nabla = {}, regular = {}, uniform = {}",
        r.delta, r.nabla, r.is_regular, r.is_uniform
    );
    println!("rho(A)        = {:.6}  (bound {})", r.rho_a, r.delta * (r.nabla - 1));
    println!(
        "lambda_max(K) = {:.6}  (underlying {:.6}, bound {})",
        r.lambda_max_k,
        r.lambda_max_k_underlying,
        r.nabla * r.delta
    );
    if let Some(l) = r.lambda_max_l {
        println!("lambda_max(L) = {l:.6}  (bound {})", r.nabla);
    }
    if let (Some(alpha), Some(ratio)) = (r.alpha, r.vol_ratio) {
        println!(
            "independence number = {alpha}, vol(S)/|S| = {ratio:.6} <= lambda_max(K)"
        );
    }
    for (name, verdict) in &r.verdicts {
        println!("  {verdict:?}  {name}");
    }
}
