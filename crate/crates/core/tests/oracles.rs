//! Randomized comparisons of the library against the naive oracles in
//! `common`, including the parallel search paths.

mod common;

use common::*;
use proptest::prelude::*;
use rainbow_core::constructions::{random_colored_graph, random_digraph, random_multigraph};
use rainbow_core::patterns::{
    find_digraph_pattern, find_multigraph_pattern, find_rainbow_clique, find_rainbow_join, MatchMode, SearchLimits,
};
use rainbow_core::transforms::{build_gcm_digraph, digraph_to_multigraph, edge_minimal_reduce, two_cycle_graph, GcmCap};

const PARALLEL: SearchLimits = SearchLimits { node_cap: None, parallel: true };

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parallel_rainbow_search_matches_oracle(n in 3usize..8, p in 0.5f64..=1.0, palette in 3u32..15, seed: u64) {
        let g = random_colored_graph(n, p, palette, seed).unwrap();
        for s in 3..=4 {
            let out = find_rainbow_clique(&g, s, &PARALLEL).unwrap();
            prop_assert_eq!(out.is_found(), naive_rainbow_clique(&g, s));
        }
        let out = find_rainbow_join(&g, 1, 3, 2, &PARALLEL).unwrap();
        prop_assert_eq!(out.is_found(), naive_rainbow_join(&g, 1, 3, 2));
    }

    #[test]
    fn parallel_near_clique_search_matches_oracle(n in 3usize..7, seed: u64, induced: bool) {
        let m = random_multigraph(n, [1, 2, 5], seed).unwrap();
        let mode = if induced { MatchMode::Induced } else { MatchMode::Subgraph };
        let out = find_multigraph_pattern(&m, 3, 1, mode, &PARALLEL).unwrap();
        prop_assert_eq!(out.is_found(), naive_multigraph_pattern(&m, 3, 1, induced));
        let d = random_digraph(n, 0.85, seed).unwrap();
        let out = find_digraph_pattern(&d, 3, 0, true, mode, &PARALLEL).unwrap();
        prop_assert_eq!(out.is_found(), naive_digraph_pattern(&d, 3, 0, true, induced));
    }

    #[test]
    fn reduction_keeps_color_degrees(n in 2usize..12, p in 0.2f64..=1.0, palette in 1u32..6, seed: u64) {
        let g = random_colored_graph(n, p, palette, seed).unwrap();
        let (f, trace) = edge_minimal_reduce(&g);
        let before: Vec<_> = g.edges().collect();
        let after: Vec<_> = f.edges().collect();
        prop_assert_eq!(color_degrees(n, &before), color_degrees(n, &after));
        prop_assert_eq!(before.len(), after.len() + trace.deleted_edges.len());
        // no monochromatic path on three edges: a middle edge whose color
        // repeats at both ends
        for &(u, v, c) in &after {
            let repeats = |x: usize| after.iter().filter(|&&(a, b, k)| k == c && (a == x || b == x)).count() >= 2;
            prop_assert!(!(repeats(u) && repeats(v)));
        }
    }

    #[test]
    fn max_cap_digraph_out_degree_is_color_degree(n in 2usize..12, p in 0.2f64..=1.0, palette in 1u32..6, seed: u64) {
        let g = random_colored_graph(n, p, palette, seed).unwrap();
        let d = build_gcm_digraph(&g, GcmCap::max_for(n));
        let edges: Vec<_> = g.edges().collect();
        let dc = color_degrees(n, &edges);
        for v in 0..n {
            prop_assert_eq!(d.out_degree(v), dc[v]);
        }
    }

    #[test]
    fn two_cycles_and_multiplicities(n in 2usize..10, p in 0.0f64..=1.0, seed: u64) {
        let d = random_digraph(n, p, seed).unwrap();
        let h = two_cycle_graph(&d);
        let m = digraph_to_multigraph(&d);
        for (u, v) in pairs(n) {
            let arcs = d.has_arc(u, v) as u8 + d.has_arc(v, u) as u8;
            prop_assert_eq!(m.multiplicity(u, v), arcs);
            prop_assert_eq!(h.has_edge(u, v), arcs == 2);
        }
    }
}
