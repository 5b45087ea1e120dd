//! Explicit colorings and generators used as positive and negative controls.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GraphError, Result};
use crate::graph::{Color, EdgeColoredGraph, SimpleDigraph, SimpleGraph, StandardMultigraph};
use crate::transforms::orientation_coloring;

/// Parameters of every named construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionParams {
    /// Properly colored `K^L_parts`.
    ProperMultipartite { parts: usize, class_size: usize },
    /// Head coloring of the rotational regular tournament on `n` (odd) vertices.
    RegularTournament { n: usize },
    /// Sharpness instance for rainbow joins: `n = L(s − 1 − r)`.
    StatementII { s: usize, r: usize, l: usize, class_size: usize },
    /// `K_n` with `c(ij) = max(i, j)`.
    LiAverage { n: usize },
    /// Rainbow `K^L_{s−1}`.
    RainbowTuranPartite { s: usize, class_size: usize },
}

impl ConstructionParams {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstructionParams::ProperMultipartite { parts, class_size } => {
                if parts == 0 || class_size == 0 {
                    return invalid("proper multipartite needs parts >= 1 and L >= 1");
                }
            }
            ConstructionParams::RegularTournament { n } => {
                if n % 2 == 0 {
                    return invalid(format!("regular tournament needs odd n, got {n}"));
                }
            }
            ConstructionParams::StatementII { s, r, l, class_size } => {
                if s < (1 + 2 * r).max(2) {
                    return invalid(format!("need s >= max(1 + 2r, 2), got s={s} r={r}"));
                }
                if l < 1 + s - r {
                    return invalid(format!("need l >= 1 + s - r = {}, got l={l}", 1 + s - r));
                }
                if class_size % 2 == 0 {
                    return invalid(format!("need odd L, got L={class_size}"));
                }
            }
            ConstructionParams::LiAverage { n } => {
                if n < 2 {
                    return invalid("li-average construction needs n >= 2");
                }
            }
            ConstructionParams::RainbowTuranPartite { s, class_size } => {
                if s < 2 || class_size == 0 {
                    return invalid("rainbow multipartite needs s >= 2 and L >= 1");
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<EdgeColoredGraph> {
        self.validate()?;
        match *self {
            ConstructionParams::ProperMultipartite { parts, class_size } => {
                proper_multipartite(parts, class_size)
            }
            ConstructionParams::RegularTournament { n } => {
                orientation_coloring(&regular_tournament(n)?)
            }
            ConstructionParams::StatementII {
                s,
                r,
                l,
                class_size,
            } => statement_ii_construction(s, r, l, class_size),
            ConstructionParams::LiAverage { n } => li_average_construction(n),
            ConstructionParams::RainbowTuranPartite { s, class_size } => {
                rainbow_turan_partite(s, class_size)
            }
        }
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(GraphError::InvalidParameter(msg.into()))
}

/// Round-robin 1-factorization color of `uv` in `K_order`, `order` even.
fn round_robin_color(u: usize, v: usize, order: usize) -> Color {
    let last = order - 1;
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    if v == last {
        ((2 * u) % last) as Color
    } else {
        ((u + v) % last) as Color
    }
}

/// `K^L_parts` (classes are consecutive blocks of `L` vertices) colored by
/// the round-robin 1-factorization of the complete graph on its vertices.
pub fn proper_multipartite(parts: usize, class_size: usize) -> Result<EdgeColoredGraph> {
    ConstructionParams::ProperMultipartite { parts, class_size }.validate()?;
    let n = parts * class_size;
    let order = if n.is_multiple_of(2) { n } else { n + 1 };
    let g = SimpleGraph::complete_multipartite(&vec![class_size; parts]);
    Ok(EdgeColoredGraph::from_graph(&g, |u, v| round_robin_color(u, v, order.max(2))))
}

/// Rotational tournament: arc `(i, i + j mod n)` for `j = 1..=(n − 1)/2`.
pub fn regular_tournament(n: usize) -> Result<SimpleDigraph> {
    ConstructionParams::RegularTournament { n }.validate()?;
    let half = (n - 1) / 2;
    let arcs = (0..n).flat_map(|i| (1..=half).map(move |j| (i, (i + j) % n)));
    SimpleDigraph::new(n, arcs)
}

/// Head coloring of [`regular_tournament`].
pub fn tournament_coloring(n: usize) -> Result<EdgeColoredGraph> {
    orientation_coloring(&regular_tournament(n)?)
}

/// `K_n` with `n = L(s − 1 − r)` split into classes of size `L`. Each class
/// carries the head coloring of a regular tournament (colors are vertex ids,
/// all below `n`); the cross-class edges get pairwise distinct colors
/// `n, n + 1, …` in lexicographic edge order.
///
/// `l` does not shape the graph; it is validated because the instance is
/// only a control for joins with parts of size `l ≥ 1 + s − r`.
pub fn statement_ii_construction(
    s: usize,
    r: usize,
    l: usize,
    class_size: usize,
) -> Result<EdgeColoredGraph> {
    ConstructionParams::StatementII { s, r, l, class_size }.validate()?;
    let classes = s - 1 - r;
    let n = classes * class_size;
    let half = (class_size - 1) / 2;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for class in 0..classes {
        let base = class * class_size;
        for i in 0..class_size {
            for j in 1..=half {
                let head = base + (i + j) % class_size;
                let tail = base + i;
                edges.push((tail, head, head as Color));
            }
        }
    }
    let mut fresh = n as Color;
    for u in 0..n {
        for v in u + 1..n {
            if u / class_size != v / class_size {
                edges.push((u, v, fresh));
                fresh += 1;
            }
        }
    }
    EdgeColoredGraph::new(n, edges)
}

/// `K_n` with `c(ij) = max(i, j)` on 0-based labels.
pub fn li_average_construction(n: usize) -> Result<EdgeColoredGraph> {
    ConstructionParams::LiAverage { n }.validate()?;
    Ok(EdgeColoredGraph::from_graph(&SimpleGraph::complete(n), |_, v| v as Color))
}

/// Rainbow `K^L_{s−1}`.
pub fn rainbow_turan_partite(s: usize, class_size: usize) -> Result<EdgeColoredGraph> {
    ConstructionParams::RainbowTuranPartite { s, class_size }.validate()?;
    let g = SimpleGraph::complete_multipartite(&vec![class_size; s - 1]);
    let mut next = 0;
    Ok(EdgeColoredGraph::from_graph(&g, |_, _| {
        next += 1;
        next - 1
    }))
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("edge probability {p} outside [0, 1]"));
    }
    Ok(())
}

/// Each pair (lexicographic order) becomes an edge with probability
/// `edge_prob` and gets a uniform color from `0..palette`.
pub fn random_colored_graph(
    n: usize,
    edge_prob: f64,
    palette: u32,
    seed: u64,
) -> Result<EdgeColoredGraph> {
    check_probability(edge_prob)?;
    if palette == 0 {
        return invalid("palette must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v, rng.gen_range(0..palette)));
            }
        }
    }
    EdgeColoredGraph::new(n, edges)
}

/// Each ordered pair becomes an arc with probability `arc_prob`.
pub fn random_digraph(n: usize, arc_prob: f64, seed: u64) -> Result<SimpleDigraph> {
    check_probability(arc_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(arc_prob) {
                arcs.push((u, v));
            }
        }
    }
    SimpleDigraph::new(n, arcs)
}

/// Random tournament: each pair oriented by a fair coin.
pub fn random_tournament(n: usize, seed: u64) -> SimpleDigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    SimpleDigraph::new(n, arcs).expect("one arc per pair")
}

/// Each pair gets multiplicity 0, 1, 2 with weights `weights`.
pub fn random_multigraph(n: usize, weights: [u32; 3], seed: u64) -> Result<StandardMultigraph> {
    let total: u32 = weights.iter().sum();
    if total == 0 {
        return invalid("multiplicity weights must not all be zero");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    StandardMultigraph::from_fn(n, |_, _| {
        let x = rng.gen_range(0..total);
        if x < weights[0] {
            0
        } else if x < weights[0] + weights[1] {
            1
        } else {
            2
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Rational;
    use crate::patterns::{find_rainbow_clique, is_properly_colored, SearchLimits, SearchOutcome};

    fn all(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn proper_k22_uses_two_colors() {
        let g = proper_multipartite(2, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.palette().len(), 2);
        assert!(is_properly_colored(&g, &all(4)).unwrap());
    }

    #[test]
    fn proper_multipartite_is_proper_with_full_color_degree() {
        for parts in 1..=4 {
            for l in 1..=4 {
                let g = proper_multipartite(parts, l).unwrap();
                let n = parts * l;
                assert!(is_properly_colored(&g, &all(n)).unwrap());
                assert!(g.palette().len() <= n);
                if n > 0 {
                    assert_eq!(g.min_color_degree(), n - l);
                }
            }
        }
    }

    #[test]
    fn proper_k3_3_3_has_no_rainbow_k4() {
        let g = proper_multipartite(3, 3).unwrap();
        let out = find_rainbow_clique(&g, 4, &SearchLimits::default()).unwrap();
        assert_eq!(out, SearchOutcome::Absent);
    }

    #[test]
    fn regular_tournament_degrees() {
        let t3 = regular_tournament(3).unwrap();
        assert_eq!(t3.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        for n in [1, 3, 5, 7, 9, 11] {
            let t = regular_tournament(n).unwrap();
            assert!(t.is_tournament());
            for v in 0..n {
                assert_eq!(t.out_degree(v), (n - 1) / 2);
                assert_eq!(t.in_degree(v), (n - 1) / 2);
            }
        }
        assert!(regular_tournament(4).is_err());
        assert_eq!(tournament_coloring(7).unwrap().min_color_degree(), 4);
    }

    #[test]
    fn join_sharpness_color_degree_is_uniform() {
        // s=3, r=1, L=5: n = 5, every color degree n − L + (L+1)/2 = 3
        let g = statement_ii_construction(3, 1, 3, 5).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.color_degrees(), vec![3; 5]);
        for (s, r, l, big_l) in [(4, 1, 4, 3), (5, 0, 6, 3), (5, 2, 4, 5), (3, 0, 4, 7)] {
            let g = statement_ii_construction(s, r, l, big_l).unwrap();
            let n = big_l * (s - 1 - r);
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), n * (n - 1) / 2);
            assert_eq!(g.color_degrees(), vec![n - big_l + big_l.div_ceil(2); n]);
        }
    }

    #[test]
    fn join_sharpness_cross_edges_are_injective() {
        let g = statement_ii_construction(4, 1, 4, 3).unwrap();
        assert_eq!(g.n(), 6);
        let cross: Vec<_> = g.edges().filter(|&(u, v, _)| u / 3 != v / 3).map(|e| e.2).collect();
        assert_eq!(cross.len(), 9);
        let mut sorted = cross.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
        assert!(cross.iter().all(|&c| c >= 6));
        let inside: Vec<_> = g.edges().filter(|&(u, v, _)| u / 3 == v / 3).collect();
        assert!(inside.iter().all(|&(u, v, c)| c as usize == u || c as usize == v));
    }

    #[test]
    fn join_sharpness_parameter_errors() {
        assert!(statement_ii_construction(3, 1, 3, 4).is_err());
        assert!(statement_ii_construction(3, 1, 2, 5).is_err());
        assert!(statement_ii_construction(2, 1, 5, 5).is_err());
    }

    #[test]
    fn li_average_small() {
        let g = li_average_construction(3).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, 1), (0, 2, 2), (1, 2, 2)]);
        for n in 2..=9 {
            let g = li_average_construction(n).unwrap();
            let p = g.color_degree_profile().unwrap();
            // vertex 0 sees n−1 colors, vertex i ≥ 1 sees n − i
            let direct: usize = (n - 1) + (1..n).map(|i| n - i).sum::<usize>();
            assert_eq!(p.average, Rational::new(direct as i64, n as i64));
            assert_eq!(
                p.average,
                Rational::new(n as i64 + 1, 2) - Rational::new(1, n as i64)
            );
            assert_eq!(p.minimum, 1);
        }
    }

    #[test]
    fn random_generators_are_deterministic() {
        assert_eq!(random_colored_graph(8, 0.0, 3, 1).unwrap().edge_count(), 0);
        let mono = random_colored_graph(6, 1.0, 1, 1).unwrap();
        assert_eq!(mono.edge_count(), 15);
        assert_eq!(mono.palette(), vec![0]);
        assert_eq!(
            random_colored_graph(12, 0.4, 5, 99).unwrap(),
            random_colored_graph(12, 0.4, 5, 99).unwrap()
        );
        assert!(random_colored_graph(3, 1.5, 2, 0).is_err());
        assert!(random_colored_graph(3, 0.5, 0, 0).is_err());
        assert_eq!(random_multigraph(7, [1, 1, 1], 5).unwrap(), random_multigraph(7, [1, 1, 1], 5).unwrap());
        assert!(random_tournament(9, 3).is_tournament());
    }

    #[test]
    fn rainbow_turan_partite_is_rainbow() {
        let g = rainbow_turan_partite(4, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.palette().len(), 12);
    }
}
