//! Property-based structural invariants.

use proptest::prelude::*;

use cuhg::generate::{gen_random, PhaseMode};
use cuhg::hypergraph::{Hypergraph, SwitchingFunction};
use cuhg::io;
use cuhg::phase::Phase;

fn arb_mode() -> impl Strategy<Value = PhaseMode> {
    prop_oneof![
        Just(PhaseMode::Continuous),
        (1u32..6).prop_map(PhaseMode::RootsOfUnity),
    ]
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..9, 0usize..7, 1u32..=10, arb_mode(), any::<u64>()).prop_map(
        |(n, m, p10, mode, seed)| {
            gen_random(n, m, f64::from(p10) / 10.0, mode, seed)
                .unwrap()
                .graph
        },
    )
}

proptest! {
    #[test]
    fn dual_is_an_involution(g in arb_hypergraph()) {
        prop_assert_eq!(g.dual().dual(), g);
    }

    #[test]
    fn underlying_is_idempotent(g in arb_hypergraph()) {
        let u = g.underlying();
        prop_assert_eq!(u.underlying(), u);
    }

    #[test]
    fn switch_then_inverse_restores(g in arb_hypergraph(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let zeta = SwitchingFunction::vertex(
            (0..g.vertex_count())
                .map(|_| Phase::from_angle(rng.gen::<f64>() * 6.28))
                .collect(),
        );
        let back = g.switch(&zeta).unwrap().switch(&zeta.inverse()).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        for (e, edge) in g.edges().iter().enumerate() {
            for (&v, &p) in edge {
                let q = back.phase(v, e).unwrap();
                prop_assert!(p.dist(q) <= 1e-15, "phase drift {} at ({v},{e})", p.dist(q));
            }
        }
    }

    #[test]
    fn adjacency_gains_are_reciprocal(g in arb_hypergraph()) {
        for (e, edge) in g.edges().iter().enumerate() {
            let vs: Vec<usize> = edge.keys().copied().collect();
            for &i in &vs {
                for &j in &vs {
                    if i == j {
                        continue;
                    }
                    let fwd = g.adjacency_gain(e, i, j).unwrap();
                    let bwd = g.adjacency_gain(e, j, i).unwrap();
                    prop_assert!(fwd.inv().dist(bwd) <= 1e-15);
                }
            }
        }
    }

    #[test]
    fn roots_mode_stays_on_roots(
        n in 1usize..8,
        m in 1usize..6,
        k in 1u32..7,
        seed in any::<u64>(),
    ) {
        let g = gen_random(n, m, 0.7, PhaseMode::RootsOfUnity(k), seed).unwrap().graph;
        for edge in g.edges() {
            for p in edge.values() {
                let on_root = (0..k).any(|j| p.dist(Phase::root_of_unity(j, k)) <= 1e-12);
                prop_assert!(on_root);
            }
        }
    }

    #[test]
    fn serialize_parse_is_identity(g in arb_hypergraph()) {
        let text = io::serialize(&g);
        let back = io::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::serialize(&back), text);
    }

    #[test]
    fn weak_vertex_deletion_drops_degrees(g in arb_hypergraph()) {
        let n = g.vertex_count();
        if n >= 2 {
            let (hat, map) = g.weak_delete_vertices(&[0]).unwrap();
            prop_assert_eq!(hat.vertex_count(), n - 1);
            prop_assert_eq!(hat.edge_count(), g.edge_count());
            prop_assert_eq!(map[0], None);
            for v in 1..n {
                prop_assert_eq!(map[v], Some(v - 1));
            }
        }
    }
}
