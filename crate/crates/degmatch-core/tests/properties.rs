//! Property tests over randomly generated graphs and sequences.

use proptest::prelude::*;

use degmatch_core::graph::{havel_hakimi_realization, maximum_matching, minimum_vertex_cover};
use degmatch_core::swap::{apply_swap, swap_path, SwapStep};
use degmatch_core::{BipartiteDegreeSequence, DegreeSequence, LabeledBipartiteGraph};

fn arb_bipartite_graph(max_side: usize) -> impl Strategy<Value = LabeledBipartiteGraph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(n, m)| {
            (
                Just(n),
                Just(m),
                proptest::collection::vec(proptest::bool::ANY, n * m),
            )
        })
        .prop_map(|(n, m, cells)| {
            let edges = cells
                .iter()
                .enumerate()
                .filter(|&(_, &on)| on)
                .map(|(idx, _)| (idx / m + 1, idx % m + 1));
            LabeledBipartiteGraph::new(n, m, edges).unwrap()
        })
}

fn degree_pair(g: &LabeledBipartiteGraph) -> BipartiteDegreeSequence {
    let (da, db) = g.degree_vectors();
    let (a, _) = DegreeSequence::from_unsorted(da);
    let (b, _) = DegreeSequence::from_unsorted(db);
    BipartiteDegreeSequence::new(a, b)
}

proptest! {
    /// König equality and cover validity on arbitrary bipartite graphs.
    #[test]
    fn cover_size_equals_matching_size(g in arb_bipartite_graph(6)) {
        let matching = maximum_matching(&g);
        let cover = minimum_vertex_cover(&g, &matching).unwrap();
        prop_assert_eq!(cover.len(), matching.len());
        prop_assert!(cover.covers(&g));
    }

    /// Every applicable swap preserves all degrees and moves the matching
    /// number by at most one.
    #[test]
    fn swaps_preserve_degrees_and_barely_move_nu(g in arb_bipartite_graph(5)) {
        let nu = maximum_matching(&g).len();
        for i in 1..=g.n() {
            for i_prime in 1..=g.n() {
                for j in 1..=g.m() {
                    for j_prime in 1..=g.m() {
                        let step = SwapStep { i, i_prime, j, j_prime };
                        if let Ok(swapped) = apply_swap(&g, &step) {
                            prop_assert_eq!(g.degree_vectors(), swapped.degree_vectors());
                            let nu_after = maximum_matching(&swapped).len();
                            prop_assert!(nu_after.abs_diff(nu) <= 1);
                        }
                    }
                }
            }
        }
    }

    /// Degree sequences read off a graph are graphical, and the greedy
    /// realization reproduces them exactly.
    #[test]
    fn greedy_realization_reproduces_observed_degrees(g in arb_bipartite_graph(6)) {
        let dd = degree_pair(&g);
        let canon = havel_hakimi_realization(&dd).expect("observed degrees are graphical");
        let (da, db) = canon.degree_vectors();
        prop_assert_eq!(da, dd.a.values());
        prop_assert_eq!(db, dd.b.values());
    }

    /// Paths between realizations of the same sequence replay exactly.
    #[test]
    fn swap_paths_replay(g in arb_bipartite_graph(5)) {
        let dd = degree_pair(&g);
        let canon = havel_hakimi_realization(&dd).unwrap();
        let path = swap_path(&canon, &canon).unwrap();
        prop_assert!(path.is_empty());
        // a nontrivial pair: canonical graph vs a one-swap variant, if any
        'outer: for i in 1..=canon.n() {
            for i_prime in 1..=canon.n() {
                for j in 1..=canon.m() {
                    for j_prime in 1..=canon.m() {
                        let step = SwapStep { i, i_prime, j, j_prime };
                        if let Ok(variant) = apply_swap(&canon, &step) {
                            let path = swap_path(&variant, &canon).unwrap();
                            let mut current = variant;
                            for s in &path {
                                current = apply_swap(&current, s).unwrap();
                            }
                            prop_assert_eq!(current, canon);
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
}
