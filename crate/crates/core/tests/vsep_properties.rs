mod common;

use common::{product, random_graph, rng};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use sweepkit::pathdecomp::validate_path_decomposition;
use sweepkit::vsep::{layout_to_decomposition, pathwidth_exact, vertex_separation_exact, Layout};
use sweepkit::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.1..0.9f64)
        .prop_map(|(n, seed, prob)| random_graph(&mut rng(seed), n, prob))
}

#[test]
fn random_orderings_never_beat_the_dp() {
    let mut rng = rng(12);
    for _ in 0..20 {
        let n = rand::Rng::gen_range(&mut rng, 2..=12);
        let g = random_graph(&mut rng, n, 0.35);
        let vs = pathwidth_exact(&g).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        for _ in 0..5000 {
            order.shuffle(&mut rng);
            assert!(Layout::new(&g, order.clone()).unwrap().cost() >= vs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witness_decomposition_has_width_vs(g in arb_graph(12)) {
        let layout = vertex_separation_exact(&g).unwrap();
        let d = layout_to_decomposition(&g, &layout).unwrap();
        prop_assert!(validate_path_decomposition(&g, &d).unwrap().is_valid());
        prop_assert_eq!(d.width().unwrap(), layout.cost());
    }

    #[test]
    fn relabelling_preserves_pathwidth(g in arb_graph(10), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng(seed));
        prop_assert_eq!(
            pathwidth_exact(&g.relabel(&perm).unwrap()).unwrap(),
            pathwidth_exact(&g).unwrap()
        );
    }

    #[test]
    fn minors_do_not_raise_pathwidth(g in arb_graph(10), pick in any::<prop::sample::Index>()) {
        let pw = pathwidth_exact(&g).unwrap();
        if g.vertex_count() > 1 {
            let v = pick.index(g.vertex_count());
            prop_assert!(pathwidth_exact(&g.without_vertex(v)).unwrap() <= pw);
        }
        if g.edge_count() > 0 {
            let (u, v) = g.edges()[pick.index(g.edge_count())];
            prop_assert!(pathwidth_exact(&g.without_edge(u, v)).unwrap() <= pw);
            prop_assert!(pathwidth_exact(&g.contract_edge(u, v).unwrap()).unwrap() <= pw);
        }
    }
}

#[test]
fn grids_have_pathwidth_min_side() {
    for m in 2..=4 {
        for n in m..=5 {
            let g = product(&common::p(m), &common::p(n));
            assert_eq!(pathwidth_exact(&g).unwrap(), m, "P_{m} □ P_{n}");
        }
    }
}
