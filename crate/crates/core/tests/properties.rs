use proptest::prelude::*;

use tk5::discharging::{apply_discharging, initial_charges, Charge};
use tk5::generate::{plane_2conn, triangulation};
use tk5::graph::format::{parse_adjacency_list, parse_graph6, to_adjacency_list, to_graph6};
use tk5::graph::{find_k4_minus, Graph};
use tk5::hammock::Hammock;
use tk5::oracle::has_topological_k5;
use tk5::pipeline::verify_certificate;
use tk5::planar::{is_planar, planar_embed};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formats_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        let back = parse_adjacency_list(&to_adjacency_list(&g)).unwrap();
        // isolated trailing vertices are not recoverable from an adjacency list
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn embeddings_satisfy_euler(g in arb_graph(9)) {
        if g.is_connected() {
            match planar_embed(&g).unwrap() {
                Some(e) => prop_assert_eq!(e.euler_characteristic(), 2),
                None => prop_assert!(!is_planar(&g)),
            }
        }
    }

    #[test]
    fn oracle_certificates_verify(g in arb_graph(8)) {
        if let Some(c) = has_topological_k5(&g).unwrap() {
            prop_assert!(verify_certificate(&g, &c));
            prop_assert!(!is_planar(&g));
        }
    }

    #[test]
    fn discharging_conserves(seed in any::<u64>(), n in 4usize..25) {
        let p = plane_2conn(n, seed).unwrap();
        let e = p.embedding().with_outer(0);
        let bnd: Vec<usize> = (0..4).collect();
        let h = Hammock::with_boundary(p.graph.clone(), (0..n).collect(), bnd).unwrap();
        let l = initial_charges(&e, &h).unwrap();
        prop_assert_eq!(l.initial_total(), Charge::thirds(1));
        prop_assert_eq!(apply_discharging(&l, &e, &h).unwrap().final_total(), Charge::thirds(1));
    }

    #[test]
    fn delta5_triangulations_contain_k4_minus(seed in any::<u64>(), n in 14usize..30) {
        let t = triangulation(n, 5, seed).unwrap();
        prop_assert!(find_k4_minus(&t.graph).is_some());
    }
}
