//! Property-based invariants over randomly generated instances.

use std::collections::BTreeSet;

use proptest::prelude::*;

use arcanon::canonizer::{canonical_string, recognize};
use arcanon::graph::{Graph, Vertex};
use arcanon::graphfile::{parse_graph, write_graph};
use arcanon::intersection::{flip_matrix, neighborhood_matrix};
use arcanon::model::{graph_of_model, matrix_of_model, Representation};
use arcanon::oracle::{oracle_is_ca, random_model};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n.max(1) - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 1..=n as Vertex {
                for v in (u + 1)..=n as Vertex {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<Vertex>> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut perm: Vec<Vertex> = (1..=n as Vertex).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            perm.swap(i, j);
        }
        perm
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recognition_agrees_with_oracle(g in arb_graph(6)) {
        prop_assert_eq!(recognize(&g, 20).unwrap(), oracle_is_ca(&g, 8).unwrap());
    }

    #[test]
    fn random_models_canonize_invariantly(n in 1..10usize, seed in any::<u64>()) {
        let g = graph_of_model(&Representation::identity(random_model(n, seed)));
        let s = canonical_string(&g, 20).unwrap();
        prop_assert!(s.is_some());
        let h = g.permuted(&((1..=n as Vertex).rev().collect::<Vec<_>>()));
        prop_assert_eq!(canonical_string(&h, 20).unwrap(), s);
    }

    #[test]
    fn canonical_string_is_permutation_invariant(
        (g, perm) in arb_graph(6).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_perm(n))
        })
    ) {
        let s = canonical_string(&g, 20).unwrap();
        prop_assert_eq!(canonical_string(&g.permuted(&perm), 20).unwrap(), s);
    }

    #[test]
    fn matrix_flips_are_involutions(g in arb_graph(7), mask in any::<u32>()) {
        let m = neighborhood_matrix(&g);
        let x: BTreeSet<Vertex> = g.vertices().filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let once = flip_matrix(&m, &x).unwrap();
        prop_assert_eq!(flip_matrix(&once, &x).unwrap(), m);
    }

    #[test]
    fn graph_files_round_trip(g in arb_graph(8), colors in proptest::collection::vec(0u64..5, 8)) {
        let mut g = g;
        for v in 1..=g.n() as Vertex {
            g.set_color(v, colors[v as usize - 1]).unwrap();
        }
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn models_realize_their_own_matrices(n in 1..8usize, seed in any::<u64>()) {
        let rep = Representation::identity(random_model(n, seed));
        let m = matrix_of_model(&rep);
        prop_assert!(m.is_dual_symmetric());
        // The derived graph's edges are exactly the non-disjoint pairs.
        let g = graph_of_model(&rep);
        for u in g.vertices() {
            for v in g.vertices() {
                if u < v {
                    let di = m.get(u, v) == arcanon::intersection::IntersectionType::Di;
                    prop_assert_eq!(g.is_edge(u, v), !di);
                }
            }
        }
    }
}
