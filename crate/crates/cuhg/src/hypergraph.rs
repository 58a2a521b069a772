use std::collections::BTreeMap;

use crate::phase::Phase;
use crate::{Error, Result};

/// One edge: vertex index -> incidence phase. A `BTreeMap` enforces at most
/// one phase per (vertex, edge) pair and keeps incidences in vertex order.
pub type Edge = BTreeMap<usize, Phase>;

/// A complex unit hypergraph: vertices 0..n-1, an ordered list of edges, and
/// a unit phase on every incidence.
///
/// Edges form a multiset and are never deduplicated; their order is semantic
/// (it is the column order of the incidence matrix). Degree-0 vertices and,
/// after weak vertex deletion, empty edges are both legal.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Degree/size statistics of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Maximum vertex degree.
    pub max_degree: usize,
    /// Maximum edge size.
    pub max_size: usize,
    pub is_regular: bool,
    pub is_uniform: bool,
}

impl DegreeProfile {
    pub fn volume(&self) -> usize {
        self.degrees.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchKind {
    Vertex,
    Edge,
}

/// A switching function: one complex unit per vertex (or per edge).
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchingFunction {
    pub kind: SwitchKind,
    pub values: Vec<Phase>,
}

impl SwitchingFunction {
    pub fn vertex(values: Vec<Phase>) -> Self {
        SwitchingFunction {
            kind: SwitchKind::Vertex,
            values,
        }
    }

    pub fn edge(values: Vec<Phase>) -> Self {
        SwitchingFunction {
            kind: SwitchKind::Edge,
            values,
        }
    }

    /// The pointwise group inverse; switching by `f` then `f.inverse()`
    /// restores the original phases.
    pub fn inverse(&self) -> Self {
        SwitchingFunction {
            kind: self.kind,
            values: self.values.iter().map(|p| p.inv()).collect(),
        }
    }
}

impl Hypergraph {
    /// Build and validate a hypergraph from raw incidence triples, one inner
    /// list per edge.
    pub fn build(n: usize, raw_edges: &[Vec<(usize, f64, f64)>]) -> Result<Hypergraph> {
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (edge_idx, raw) in raw_edges.iter().enumerate() {
            let mut edge = Edge::new();
            for &(v, re, im) in raw {
                if v >= n {
                    return Err(Error::BadVertexIndex { index: v, n });
                }
                let phase = Phase::new(re, im)?;
                if edge.insert(v, phase).is_some() {
                    return Err(Error::DuplicateIncidence {
                        vertex: v,
                        edge: edge_idx,
                    });
                }
            }
            edges.push(edge);
        }
        Ok(Hypergraph { n, edges })
    }

    /// Internal constructor for transformations that preserve validity.
    pub(crate) fn from_parts(n: usize, edges: Vec<Edge>) -> Hypergraph {
        debug_assert!(edges.iter().all(|e| e.keys().all(|&v| v < n)));
        Hypergraph { n, edges }
    }

    pub fn empty(n: usize) -> Hypergraph {
        Hypergraph { n, edges: vec![] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> Result<&Edge> {
        self.edges.get(j).ok_or(Error::BadEdgeIndex {
            index: j,
            m: self.edges.len(),
        })
    }

    /// The incidence phase omega(v, e), or None if v is not in e.
    pub fn phase(&self, v: usize, e: usize) -> Option<Phase> {
        self.edges.get(e).and_then(|edge| edge.get(&v).copied())
    }

    pub fn incidence_count(&self) -> usize {
        self.edges.iter().map(|e| e.len()).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge.keys() {
                degrees[v] += 1;
            }
        }
        degrees
    }

    pub fn zero_degree_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let sizes: Vec<usize> = self.edges.iter().map(|e| e.len()).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let max_size = sizes.iter().copied().max().unwrap_or(0);
        let is_regular = degrees.iter().all(|&d| d == max_degree);
        let is_uniform = sizes.iter().all(|&s| s == max_size);
        DegreeProfile {
            degrees,
            sizes,
            max_degree,
            max_size,
            is_regular,
            is_uniform,
        }
    }

    /// The adjacency gain phi_e(v_i, v_j) = -omega(v_i, e) * omega(v_j, e)^{-1}.
    pub fn adjacency_gain(&self, e: usize, i: usize, j: usize) -> Result<Phase> {
        let edge = self.edge(e)?;
        match (edge.get(&i), edge.get(&j)) {
            (Some(&wi), Some(&wj)) if i != j => Ok(Phase::MINUS_ONE.mul(wi).mul(wj.inv())),
            _ => Err(Error::NotAdjacentInEdge { i, j, edge: e }),
        }
    }

    /// The dual hypergraph: vertices and edges swap roles, and each phase is
    /// inverted (conjugated). An involution.
    pub fn dual(&self) -> Hypergraph {
        let mut edges = vec![Edge::new(); self.n];
        for (e, edge) in self.edges.iter().enumerate() {
            for (&v, &phase) in edge {
                edges[v].insert(e, phase.inv());
            }
        }
        Hypergraph {
            n: self.edges.len(),
            edges,
        }
    }

    /// Same incidence structure with every phase set to 1.
    pub fn underlying(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .map(|edge| edge.keys().map(|&v| (v, Phase::ONE)).collect())
            .collect();
        Hypergraph { n: self.n, edges }
    }

    /// Weak vertex deletion: drop the vertices in `remove` and their
    /// incidences, keeping every edge (possibly emptied). Returns the new
    /// hypergraph and the old-to-new index map (None for deleted vertices).
    pub fn weak_delete_vertices(
        &self,
        remove: &[usize],
    ) -> Result<(Hypergraph, Vec<Option<usize>>)> {
        let mut deleted = vec![false; self.n];
        for &v in remove {
            if v >= self.n {
                return Err(Error::BadVertexIndex { index: v, n: self.n });
            }
            deleted[v] = true;
        }
        let mut index_map = vec![None; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            if !deleted[v] {
                index_map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|edge| {
                edge.iter()
                    .filter_map(|(&v, &p)| index_map[v].map(|nv| (nv, p)))
                    .collect()
            })
            .collect();
        Ok((Hypergraph { n: next, edges }, index_map))
    }

    /// Weak edge deletion: drop the listed edges; vertices are untouched.
    pub fn weak_delete_edges(&self, remove: &[usize]) -> Result<Hypergraph> {
        let m = self.edges.len();
        let mut deleted = vec![false; m];
        for &e in remove {
            if e >= m {
                return Err(Error::BadEdgeIndex { index: e, m });
            }
            deleted[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, _)| !deleted[e])
            .map(|(_, edge)| edge.clone())
            .collect();
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Switch phases: omega(v,e) -> zeta(v)^{-1} omega(v,e) for a vertex
    /// switching, xi(e)^{-1} omega(v,e) for an edge switching.
    pub fn switch(&self, f: &SwitchingFunction) -> Result<Hypergraph> {
        let expected = match f.kind {
            SwitchKind::Vertex => self.n,
            SwitchKind::Edge => self.edges.len(),
        };
        if f.values.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: f.values.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                edge.iter()
                    .map(|(&v, &p)| {
                        let factor = match f.kind {
                            SwitchKind::Vertex => f.values[v].inv(),
                            SwitchKind::Edge => f.values[e].inv(),
                        };
                        (v, factor.mul(p))
                    })
                    .collect()
            })
            .collect();
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Brute-force independence number with a lexicographically smallest
    /// witness. A set is independent when it meets every edge at most once.
    pub fn independence_number(&self) -> Result<(usize, Vec<usize>)> {
        const LIMIT: usize = 24;
        if self.n > LIMIT {
            return Err(Error::TooLarge {
                n: self.n,
                limit: LIMIT,
            });
        }
        let edge_masks: Vec<u32> = self
            .edges
            .iter()
            .map(|edge| edge.keys().fold(0u32, |acc, &v| acc | (1 << v)))
            .collect();
        let mut best: u32 = 0;
        for mask in 0u32..(1u32 << self.n) {
            if edge_masks
                .iter()
                .any(|&em| (em & mask).count_ones() > 1)
            {
                continue;
            }
            let better = match mask.count_ones().cmp(&best.count_ones()) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Equal => lex_less(mask, best),
                std::cmp::Ordering::Less => false,
            };
            if better {
                best = mask;
            }
        }
        let witness: Vec<usize> = (0..self.n).filter(|&v| best & (1 << v) != 0).collect();
        Ok((witness.len(), witness))
    }
}

/// Order on vertex sets encoded as bitmasks: lexicographic on the sorted
/// element lists, so {0,3} < {1,2}.
fn lex_less(a: u32, b: u32) -> bool {
    let (mut a, mut b) = (a, b);
    while a != 0 && b != 0 {
        let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
        if la != lb {
            return la < lb;
        }
        a &= a - 1;
        b &= b - 1;
    }
    // prefixes equal: the shorter-remaining set is smaller
    a == 0 && b != 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g1, g2, g3};

    #[test]
    fn build_stores_phases() {
        let g = g1();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.phase(0, 0).unwrap(), Phase::ONE);
        assert_eq!(g.phase(1, 0).unwrap(), Phase::I);
        assert_eq!(g.incidence_count(), 2);
    }

    #[test]
    fn build_rejects_bad_inputs() {
        assert!(matches!(
            Hypergraph::build(2, &[vec![(0, 0.5, 0.5)]]),
            Err(Error::NonUnitPhase { .. })
        ));
        assert!(matches!(
            Hypergraph::build(2, &[vec![(0, 1.0, 0.0), (0, 0.0, 1.0)]]),
            Err(Error::DuplicateIncidence { vertex: 0, edge: 0 })
        ));
        assert!(matches!(
            Hypergraph::build(2, &[vec![(2, 1.0, 0.0)]]),
            Err(Error::BadVertexIndex { index: 2, n: 2 })
        ));
    }

    #[test]
    fn degree_profiles() {
        let p3 = g3().degree_profile();
        assert_eq!(p3.degrees, vec![1, 1, 1]);
        assert_eq!(p3.sizes, vec![3]);
        assert_eq!((p3.max_degree, p3.max_size), (1, 3));
        assert!(p3.is_regular && p3.is_uniform);

        let p1 = g1().degree_profile();
        assert_eq!(p1.degrees, vec![1, 1]);
        assert_eq!(p1.sizes, vec![2]);
        assert_eq!((p1.max_degree, p1.max_size), (1, 2));

        let p2 = g2().degree_profile();
        assert_eq!(p2.degrees, vec![2, 2]);
        assert_eq!(p2.sizes, vec![2, 2]);
        assert!(p2.is_regular && p2.is_uniform);
        assert_eq!(p2.volume(), 4);

        let empty = Hypergraph::empty(0).degree_profile();
        assert_eq!((empty.max_degree, empty.max_size), (0, 0));
    }

    #[test]
    fn adjacency_gains() {
        // phi = -1 * i^{-1} = i for G1
        let phi = g1().adjacency_gain(0, 0, 1).unwrap();
        assert!(phi.dist(Phase::I) < 1e-15);
        // all-ones edge: equal phases cancel, gain -1
        let phi3 = g3().adjacency_gain(0, 0, 1).unwrap();
        assert!(phi3.dist(Phase::MINUS_ONE) < 1e-15);
        // reciprocity
        let fwd = g1().adjacency_gain(0, 0, 1).unwrap();
        let back = g1().adjacency_gain(0, 1, 0).unwrap();
        assert!(fwd.mul(back).dist(Phase::ONE) < 1e-12);
        assert!(matches!(
            g1().adjacency_gain(0, 0, 0),
            Err(Error::NotAdjacentInEdge { .. })
        ));
    }

    #[test]
    fn dual_swaps_and_conjugates() {
        let d = g1().dual();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.edge_count(), 2);
        assert!(d.phase(0, 0).unwrap().dist(Phase::ONE) < 1e-15);
        assert!(d.phase(0, 1).unwrap().dist(Phase::I.inv()) < 1e-15);

        assert_eq!(g3().dual().dual(), g3());
        let empty = Hypergraph::empty(0);
        assert_eq!(empty.dual(), empty);

        let dp = d.degree_profile();
        let p = g1().degree_profile();
        assert_eq!(dp.degrees, p.sizes);
        assert_eq!(dp.sizes, p.degrees);
    }

    #[test]
    fn underlying_sets_all_phases_to_one() {
        let u = g1().underlying();
        assert_eq!(u.phase(0, 0).unwrap(), Phase::ONE);
        assert_eq!(u.phase(1, 0).unwrap(), Phase::ONE);
        assert_eq!(g3().underlying(), g3());
        let u2 = g2().underlying();
        assert_eq!(u2.edge_count(), 2);
        assert_eq!(u2.edges()[0], u2.edges()[1]);
    }

    #[test]
    fn weak_vertex_deletion() {
        let (h, map) = g3().weak_delete_vertices(&[2]).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edges()[0].len(), 2);
        assert_eq!(map, vec![Some(0), Some(1), None]);

        let (all, _) = g1().weak_delete_vertices(&[0, 1]).unwrap();
        assert_eq!(all.vertex_count(), 0);
        assert_eq!(all.edge_count(), 1);
        assert!(all.edges()[0].is_empty());

        let (same, _) = g2().weak_delete_vertices(&[]).unwrap();
        assert_eq!(same, g2());

        // disjoint deletions commute
        let g = g3();
        let (a, _) = g.weak_delete_vertices(&[0]).unwrap();
        let (ab, _) = a.weak_delete_vertices(&[0]).unwrap(); // old v1 after compaction
        let (ba, _) = g.weak_delete_vertices(&[0, 1]).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn weak_edge_deletion() {
        let h = g2().weak_delete_edges(&[1]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.phase(1, 0).unwrap(), Phase::ONE);

        let h1 = g1().weak_delete_edges(&[0]).unwrap();
        assert_eq!((h1.vertex_count(), h1.edge_count()), (2, 0));
        assert_eq!(h1.degrees(), vec![0, 0]);

        assert_eq!(g3().weak_delete_edges(&[]).unwrap(), g3());
        assert!(matches!(
            g3().weak_delete_edges(&[5]),
            Err(Error::BadEdgeIndex { index: 5, m: 1 })
        ));
    }

    #[test]
    fn switching() {
        let zeta = SwitchingFunction::vertex(vec![Phase::ONE, Phase::I]);
        let switched = g1().switch(&zeta).unwrap();
        assert!(switched.phase(1, 0).unwrap().dist(Phase::ONE) < 1e-15);
        assert!(switched.phase(0, 0).unwrap().dist(Phase::ONE) < 1e-15);

        let xi = SwitchingFunction::edge(vec![Phase::MINUS_ONE]);
        let s3 = g3().switch(&xi).unwrap();
        for v in 0..3 {
            assert!(s3.phase(v, 0).unwrap().dist(Phase::MINUS_ONE) < 1e-15);
        }

        let id = SwitchingFunction::vertex(vec![Phase::ONE; 3]);
        assert_eq!(g3().switch(&id).unwrap(), g3());

        assert!(matches!(
            g3().switch(&SwitchingFunction::vertex(vec![Phase::ONE])),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn independence() {
        let (alpha, witness) = g3().independence_number().unwrap();
        assert_eq!((alpha, witness), (1, vec![0]));

        let edgeless = Hypergraph::empty(4);
        assert_eq!(
            edgeless.independence_number().unwrap(),
            (4, vec![0, 1, 2, 3])
        );

        let (a2, _) = g2().independence_number().unwrap();
        assert_eq!(a2, 1);

        assert!(matches!(
            Hypergraph::empty(25).independence_number(),
            Err(Error::TooLarge { n: 25, limit: 24 })
        ));
    }

    #[test]
    fn lex_order_on_masks() {
        assert!(lex_less(0b1001, 0b0110)); // {0,3} < {1,2}
        assert!(lex_less(0b0001, 0b0011)); // {0} < {0,1}
        assert!(!lex_less(0b0110, 0b1001));
        assert!(!lex_less(0b0011, 0b0011));
    }
}
