//! Growing rainbow structures one vertex at a time.

use std::collections::HashSet;

use super::rainbow::is_rainbow_join;
use crate::graph::{Color, EdgeColoredGraph};

fn colors_inside(graph: &EdgeColoredGraph, set: &[usize]) -> HashSet<Color> {
    let mut colors = HashSet::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if let Some(c) = graph.color(u, v) {
                colors.insert(c);
            }
        }
    }
    colors
}

/// Hypothesis for [`find_fresh_vertex`]: `A` and `B` disjoint,
/// `|B| > |A| · e(G[A])`, and `G[A, B]` properly colored.
pub fn fresh_vertex_hypothesis_holds(graph: &EdgeColoredGraph, a: &[usize], b: &[usize]) -> bool {
    let a_set: HashSet<usize> = a.iter().copied().collect();
    if b.iter().any(|v| a_set.contains(v)) {
        return false;
    }
    let inside = a
        .iter()
        .enumerate()
        .map(|(i, &u)| a[i + 1..].iter().filter(|&&v| graph.has_edge(u, v)).count())
        .sum::<usize>();
    if b.len() <= a.len() * inside {
        return false;
    }
    let proper_at = |x: usize, other: &[usize]| {
        let mut seen = HashSet::new();
        other.iter().filter_map(|&y| graph.color(x, y)).all(|c| seen.insert(c))
    };
    a.iter().all(|&x| proper_at(x, b)) && b.iter().all(|&y| proper_at(y, a))
}

/// Smallest `b₀ ∈ B` such that no edge `ab₀` (`a ∈ A`) uses a color of
/// `E(G[A])`. Always exists under [`fresh_vertex_hypothesis_holds`].
pub fn find_fresh_vertex(graph: &EdgeColoredGraph, a: &[usize], b: &[usize]) -> Option<usize> {
    let used = colors_inside(graph, a);
    let mut pool = b.to_vec();
    pool.sort_unstable();
    pool.into_iter().find(|&y| {
        a.iter()
            .filter_map(|&x| graph.color(x, y))
            .all(|c| !used.contains(&c))
    })
}

/// Extends a rainbow join `core` (given by its parts) by `k` vertices taken
/// from each part of `pool`, one vertex at a time. Each new vertex must see
/// every already placed vertex outside its own part, on colors that are new
/// and pairwise distinct. Returns the parts of the grown rainbow join, or
/// `None` when the greedy growth gets stuck.
pub fn grow_rainbow_join(
    graph: &EdgeColoredGraph,
    core: &[Vec<usize>],
    pool: &[Vec<usize>],
    k: usize,
) -> Option<Vec<Vec<usize>>> {
    if !is_rainbow_join(graph, core) {
        return None;
    }
    let mut parts: Vec<Vec<usize>> = core.to_vec();
    let mut used: HashSet<Color> = HashSet::new();
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            for &u in p {
                for &v in q {
                    used.insert(graph.color(u, v)?);
                }
            }
        }
    }
    let mut placed: HashSet<usize> = parts.iter().flatten().copied().collect();
    for candidates in pool {
        let mut grown = Vec::with_capacity(k);
        for _ in 0..k {
            let anchors: Vec<usize> = parts.iter().flatten().copied().collect();
            let mut sorted = candidates.clone();
            sorted.sort_unstable();
            let pick = sorted.into_iter().filter(|v| !placed.contains(v)).find(|&v| {
                let mut local = HashSet::new();
                anchors.iter().all(|&x| match graph.color(x, v) {
                    Some(c) => !used.contains(&c) && local.insert(c),
                    None => false,
                })
            })?;
            for &x in &anchors {
                used.insert(graph.color(x, pick).expect("checked adjacency"));
            }
            placed.insert(pick);
            grown.push(pick);
        }
        // later parts see this one in full
        parts.push(grown);
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn fresh_vertex_on_proper_bipartite() {
        // A = {0, 1} with edge color 0; B = {2..6}; a_i b_j colored (i + j) % 5 + 1
        let mut edges = vec![(0, 1, 0)];
        for i in 0..2 {
            for j in 0..5 {
                edges.push((i, 2 + j, ((i + j) % 5 + 1) as u32));
            }
        }
        let g = EdgeColoredGraph::new(7, edges).unwrap();
        let a = [0, 1];
        let b = [2, 3, 4, 5, 6];
        assert!(fresh_vertex_hypothesis_holds(&g, &a, &b));
        assert_eq!(find_fresh_vertex(&g, &a, &b), Some(2));
    }

    #[test]
    fn hypothesis_rejects_overlap_and_improper() {
        let g = EdgeColoredGraph::from_graph(&SimpleGraph::complete(4), |_, _| 0);
        assert!(!fresh_vertex_hypothesis_holds(&g, &[0], &[0, 1]));
        assert!(!fresh_vertex_hypothesis_holds(&g, &[0], &[1, 2, 3]));
    }

    #[test]
    fn grow_star_from_single_vertex() {
        // K_1 ∨ K_1^3: a star, rainbow as soon as the center's edges are proper
        let g = EdgeColoredGraph::new(5, [(0, 1, 7), (0, 2, 8), (0, 3, 9), (0, 4, 7)]).unwrap();
        let parts = grow_rainbow_join(&g, &[vec![0]], &[vec![1, 2, 3, 4]], 3).unwrap();
        assert_eq!(parts, vec![vec![0], vec![1, 2, 3]]);
        assert!(is_rainbow_join(&g, &parts));
        assert!(grow_rainbow_join(&g, &[vec![0]], &[vec![1, 4]], 2).is_none());
    }
}
