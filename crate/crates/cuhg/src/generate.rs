//! Seeded hypergraph generators for fixtures and fuzzing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{Edge, Hypergraph};
use crate::phase::Phase;
use crate::{Error, Result};

/// How incidence phases are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseMode {
    /// Uniform on the whole unit circle.
    Continuous,
    /// Uniform on the k-th roots of unity; k = 2 gives oriented hypergraphs,
    /// k = 1 ordinary (all-ones) hypergraphs.
    RootsOfUnity(u32),
}

/// A generated hypergraph plus the indices of edges that stayed empty after
/// the resampling cap.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Hypergraph,
    pub empty_edges: Vec<usize>,
}

const EMPTY_EDGE_RETRIES: usize = 100;

/// Each (vertex, edge) incidence is present independently with probability
/// `p`; phases are i.i.d. per `mode`. Edges that come out empty are resampled
/// up to 100 times, then left empty and flagged. Deterministic per seed.
pub fn gen_random(
    n: usize,
    m: usize,
    p: f64,
    mode: PhaseMode,
    seed: u64,
) -> Result<Generated> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::BadParameter(format!(
            "inclusion probability must be in (0, 1], got {p}"
        )));
    }
    if let PhaseMode::RootsOfUnity(k) = mode {
        if k == 0 {
            return Err(Error::BadParameter("k must be at least 1".into()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    let mut empty_edges = Vec::new();
    for e in 0..m {
        let mut edge = Edge::new();
        for attempt in 0..EMPTY_EDGE_RETRIES {
            edge = sample_edge(n, p, mode, &mut rng);
            if !edge.is_empty() {
                break;
            }
            if attempt + 1 == EMPTY_EDGE_RETRIES {
                empty_edges.push(e);
            }
        }
        edges.push(edge);
    }
    Ok(Generated {
        graph: Hypergraph::from_parts(n, edges),
        empty_edges,
    })
}

fn sample_edge(n: usize, p: f64, mode: PhaseMode, rng: &mut ChaCha8Rng) -> Edge {
    let mut edge = Edge::new();
    for v in 0..n {
        if rng.gen::<f64>() < p {
            let phase = match mode {
                PhaseMode::Continuous => {
                    Phase::from_angle(rng.gen::<f64>() * 2.0 * std::f64::consts::PI)
                }
                PhaseMode::RootsOfUnity(k) => Phase::root_of_unity(rng.gen_range(0..k), k),
            };
            edge.insert(v, phase);
        }
    }
    edge
}

/// One edge containing every vertex with phase 1: the sharp example for the
/// adjacency spectral radius bound. 1-regular and n-uniform.
pub fn single_edge_all_ones(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    let edge: Edge = (0..n).map(|v| (v, Phase::ONE)).collect();
    Ok(Hypergraph::from_parts(n, vec![edge]))
}
