//! Canonical forms of small simple graphs by color refinement and
//! individualization, and enumeration of graphs up to isomorphism.

use std::collections::BTreeSet;

use crate::graph::SimpleGraph;

/// Largest order with a `u64` adjacency code.
pub const MAX_CANON_N: usize = 11;

/// Ordered partition of the vertex set, refined to equitability.
type Cells = Vec<Vec<usize>>;

fn refine(g: &SimpleGraph, mut cells: Cells) -> Cells {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; k];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_of(g: &SimpleGraph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn search(g: &SimpleGraph, cells: Cells, best: &mut Option<(u64, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(g, refine(g, split), best);
    }
}

/// Canonical labeling: `order[i]` is the vertex that gets label `i`.
/// Two graphs are isomorphic iff their canonical codes agree.
pub fn canonical_labeling(g: &SimpleGraph) -> (u64, Vec<usize>) {
    assert!(g.n() <= MAX_CANON_N, "canonical codes only cover n <= {MAX_CANON_N}");
    if g.n() == 0 {
        return (0, Vec::new());
    }
    let mut best = None;
    search(g, refine(g, vec![(0..g.n()).collect()]), &mut best);
    best.expect("at least one leaf")
}

pub fn canonical_code(g: &SimpleGraph) -> u64 {
    canonical_labeling(g).0
}

/// Rebuilds the graph on `n` vertices with adjacency code `code`.
pub fn graph_from_code(n: usize, code: u64) -> SimpleGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = pairs.len();
    let edges = pairs
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| code >> (total - 1 - k) & 1 == 1)
        .map(|(_, e)| e);
    SimpleGraph::new(n, edges).expect("code pairs are distinct")
}

pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    graph_from_code(g.n(), canonical_code(g))
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// One representative per isomorphism class of `n`-vertex graphs, in
/// canonical form, sorted by canonical code. Built by adding one vertex at
/// a time to every smaller representative.
pub fn graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= MAX_CANON_N, "graph enumeration only covers n <= {MAX_CANON_N}");
    if n == 0 {
        return vec![SimpleGraph::empty(0)];
    }
    let mut layer: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &layer {
            let base = graph_from_code(k, code);
            let edges: Vec<(usize, usize)> = base.edges().collect();
            for mask in 0u32..1 << k {
                let mut grown = edges.clone();
                grown.extend((0..k).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k)));
                let g = SimpleGraph::new(k + 1, grown).expect("new vertex adds fresh pairs");
                next.insert(canonical_code(&g));
            }
        }
        layer = next;
    }
    layer.into_iter().map(|code| graph_from_code(n, code)).collect()
}

/// Representatives with minimum degree at least `d`.
pub fn graphs_with_min_degree(n: usize, d: usize) -> Vec<SimpleGraph> {
    graphs_up_to_iso(n).into_iter().filter(|g| n == 0 || g.min_degree() >= d).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn class_counts_match_known_sequence() {
        // number of unlabeled graphs on n vertices
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(graphs_up_to_iso(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn code_is_invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for g in graphs_up_to_iso(6) {
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            let h = SimpleGraph::new(6, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
            assert_eq!(canonical_code(&h), canonical_code(&g));
            assert_eq!(canonical_form(&h), g);
        }
    }

    #[test]
    fn labeling_maps_onto_canonical_form() {
        let g = SimpleGraph::new(5, [(0, 3), (3, 4), (1, 2)]).unwrap();
        let (code, order) = canonical_labeling(&g);
        let mut label = [0; 5];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let relabeled = SimpleGraph::new(5, g.edges().map(|(u, v)| (label[u], label[v]))).unwrap();
        assert_eq!(relabeled, graph_from_code(5, code));
    }

    #[test]
    fn distinguishes_non_isomorphic_regular_graphs() {
        // C6 and two disjoint triangles are both 2-regular
        let c6 = SimpleGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let two_k3 = SimpleGraph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_k3));
        let k33 = SimpleGraph::complete_multipartite(&[3, 3]);
        let prism = SimpleGraph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        assert!(!are_isomorphic(&k33, &prism));
    }

    #[test]
    fn min_degree_filter() {
        let hosts = graphs_with_min_degree(4, 2);
        let mut sizes: Vec<usize> = hosts.iter().map(|g| g.edge_count()).collect();
        sizes.sort();
        // C4, K4 − e, K4
        assert_eq!(sizes, vec![4, 5, 6]);
    }
}
