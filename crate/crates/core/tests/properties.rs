mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use secdom::graph::{canonical_form, EdgeList};
use secdom::outerplanar::is_outerplanar;
use secdom::random::random_connected_outerplanar;
use secdom::secure::{epn, is_secure_dominating};
use secdom::solver::{gamma, gamma_s};
use secdom::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn outerplanar_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0..0.6f64).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_connected_outerplanar(&mut rng, n, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjacency_is_symmetric(g in graph(20)) {
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.edges().count(), g.m());
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(11)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_separates_classes(a in graph(7), b in graph(7)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, common::isomorphic(&a, &b));
    }

    #[test]
    fn induced_subgraph_on_everything_is_identity(g in graph(16)) {
        let (h, map) = g.induced_subgraph(g.vertices()).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn completeness_counts_edges(g in graph(12), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits) & g.vertices();
        let (h, _) = g.induced_subgraph(s).unwrap();
        let k = s.len();
        prop_assert_eq!(g.is_complete_on(s).unwrap(), h.m() == k * k.saturating_sub(1) / 2);
    }

    #[test]
    fn outerplanarity_is_hereditary(g in graph(10), v in any::<usize>()) {
        if is_outerplanar(&g) && g.n() > 1 {
            prop_assert!(is_outerplanar(&g.without_vertex(v % g.n())));
            if let Some((a, b)) = g.edges().next() {
                prop_assert!(is_outerplanar(&g.without_edge(a, b)));
            }
        }
    }

    #[test]
    fn outerplanar_edge_count(g in outerplanar_graph(30)) {
        prop_assert!(is_outerplanar(&g));
        prop_assert!(g.m() <= 2 * g.n() - 3);
    }

    #[test]
    fn adding_an_edge_never_raises_gamma_s(g in graph(10), a in any::<usize>(), b in any::<usize>()) {
        let (a, b) = (a % g.n(), b % g.n());
        if a != b {
            let before = gamma_s(&g).unwrap().value;
            let after = gamma_s(&g.with_edge(a, b)).unwrap().value;
            prop_assert!(after <= before);
        }
    }

    #[test]
    fn gamma_s_adds_over_components(a in graph(8), b in graph(8)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(
            gamma_s(&u).unwrap().value,
            gamma_s(&a).unwrap().value + gamma_s(&b).unwrap().value
        );
    }

    #[test]
    fn secure_set_stays_secure_with_an_extra_edge(g in graph(10), a in any::<usize>(), b in any::<usize>()) {
        let r = gamma_s(&g).unwrap();
        let (a, b) = (a % g.n(), b % g.n());
        if a != b {
            prop_assert!(is_secure_dominating(&g.with_edge(a, b), r.set).unwrap().is_some());
        }
    }

    #[test]
    fn gamma_between_bounds(g in graph(12)) {
        let d = gamma(&g).unwrap().value;
        let s = gamma_s(&g).unwrap();
        prop_assert!(d <= s.value && s.value <= g.n());
        prop_assert!(s.certificate.unwrap().verify(&g));
    }

    #[test]
    fn private_neighbors_of_outerplanar_secure_sets(g in outerplanar_graph(14)) {
        let s = gamma_s(&g).unwrap().set;
        for v in s {
            prop_assert!(epn(&g, v, s).unwrap().len() <= 2);
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = g.to_graph6();
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(30)) {
        let text = g.to_edge_list().to_edge_list_string();
        let parsed = EdgeList::parse_edge_list(&text).unwrap().to_graph().unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(parsed.to_edge_list().to_edge_list_string(), text);
    }
}

#[test]
fn large_graph6_round_trip() {
    let list = EdgeList::new(200, (0..199).map(|v| (v, v + 1))).unwrap();
    let text = list.to_graph6();
    assert_eq!(EdgeList::from_graph6(&text).unwrap(), list);
    assert!(list.to_graph().is_err());
}
