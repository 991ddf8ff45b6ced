use netcover_core::oracle::{brute_force_max_connected_cover, brute_force_max_coverage, min_recruits_full_cover};
use netcover_core::{gen_erdos_renyi, Graph, MinCover, NodeSet};

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.node_count(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

#[test]
fn connected_never_beats_unconstrained() {
    for seed in 0..15 {
        let g = gen_erdos_renyi(11, 0.25, seed);
        for k in 1..=4 {
            let free = brute_force_max_coverage(&g, k).unwrap();
            let conn = brute_force_max_connected_cover(&g, k).unwrap();
            assert!(conn.cover_size <= free.cover_size);
            if conn.optimal {
                let s = NodeSet::from_ids(11, conn.best_set.iter().copied());
                assert!(g.is_connected_subset(&s).unwrap());
            }
        }
    }
}

#[test]
fn coverage_is_monotone_in_budget() {
    let g = gen_erdos_renyi(12, 0.2, 4);
    let values: Vec<usize> = (0..=5).map(|k| brute_force_max_coverage(&g, k).unwrap().cover_size).collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
}

#[test]
fn value_is_invariant_under_relabeling() {
    let perm = [3, 7, 0, 5, 1, 6, 2, 4];
    for g in [Graph::cycle(8), Graph::complete(8), Graph::path(8), gen_erdos_renyi(8, 0.3, 2)] {
        let h = relabel(&g, &perm);
        for k in 1..=3 {
            assert_eq!(
                brute_force_max_coverage(&g, k).unwrap().cover_size,
                brute_force_max_coverage(&h, k).unwrap().cover_size
            );
            assert_eq!(
                brute_force_max_connected_cover(&g, k).unwrap().cover_size,
                brute_force_max_connected_cover(&h, k).unwrap().cover_size
            );
        }
    }
}

#[test]
fn complete_graph_needs_one_recruit() {
    match min_recruits_full_cover(&Graph::complete(9), true).unwrap() {
        MinCover::Found(r) => assert_eq!(r.best_set, vec![0]),
        MinCover::Infeasible { .. } => panic!("complete graph is coverable"),
    }
}

#[test]
fn disconnected_graph_has_no_connected_full_cover() {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert!(matches!(min_recruits_full_cover(&g, true).unwrap(), MinCover::Infeasible { .. }));
    match min_recruits_full_cover(&g, false).unwrap() {
        MinCover::Found(r) => assert_eq!(r.best_set.len(), 2),
        MinCover::Infeasible { .. } => panic!("two recruits cover both components"),
    }
}
