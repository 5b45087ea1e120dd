//! Exact searchers for rainbow cliques and joins, doubled near-cliques in
//! multigraphs and digraphs, and cyclic triangles.
//!
//! Every searcher is exact: [`SearchOutcome::Absent`] is only reported after
//! the whole space has been explored. A node cap turns an unfinished search
//! into [`SearchOutcome::Exhausted`].

mod budget;
mod fresh;
mod near_clique;
mod rainbow;
mod triangle;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{EdgeColoredGraph, SimpleDigraph, StandardMultigraph};

pub use fresh::{find_fresh_vertex, fresh_vertex_hypothesis_holds, grow_rainbow_join};
pub use near_clique::{
    digraph_pattern_labeling, find_digraph_pattern, find_multigraph_pattern,
    multigraph_pattern_matching,
};
pub use rainbow::{find_rainbow_clique, find_rainbow_join, is_rainbow_join};
pub use triangle::find_cyclic_triangle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("infeasible pattern parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = PatternError> = std::result::Result<T, E>;

/// How a near-clique pattern must sit inside the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum MatchMode {
    /// Host contains the pattern (extra arcs / multiplicity allowed), so at
    /// most `r` matching defects are used.
    #[default]
    Subgraph,
    /// Host restricted to the vertex set equals the pattern exactly.
    Induced,
}

/// Declarative target structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternSpec {
    RainbowClique { s: usize },
    /// Rainbow `K_r ∨ K^l_{s−r}`.
    RainbowJoin { r: usize, s: usize, l: usize },
    /// `𝕂_s − ℳ_r` in a standard multigraph.
    MultigraphKsMr { s: usize, r: usize, mode: MatchMode },
    /// `𝕂_s − ℳ_r` or, with the triangle, `𝕂_s − △ − ℳ_r` in a digraph.
    DigraphKsTriMr { s: usize, r: usize, with_triangle: bool, mode: MatchMode },
    CyclicTriangle,
}

impl PatternSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(PatternError::InvalidParameters(msg));
        match *self {
            PatternSpec::RainbowClique { s } if s < 2 => bad(format!("rainbow clique needs s >= 2, got {s}")),
            PatternSpec::RainbowJoin { r, s, l } => {
                if s < (1 + 2 * r).max(2) {
                    bad(format!("rainbow join needs s >= max(1 + 2r, 2), got r={r} s={s}"))
                } else if l < 1 {
                    bad("rainbow join needs l >= 1".into())
                } else {
                    Ok(())
                }
            }
            PatternSpec::MultigraphKsMr { s, r, .. } => {
                if s < 2 || 2 * r > s {
                    bad(format!("multigraph pattern needs s >= 2 and r <= s/2, got s={s} r={r}"))
                } else {
                    Ok(())
                }
            }
            PatternSpec::DigraphKsTriMr { s, r, with_triangle, .. } => {
                if with_triangle && (s < 3 || 2 * r + 3 > s) {
                    bad(format!("triangle pattern needs r <= (s-3)/2, got s={s} r={r}"))
                } else if !with_triangle && (s < 2 || 2 * r > s) {
                    bad(format!("digraph pattern needs s >= 2 and r <= s/2, got s={s} r={r}"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Runs the matching searcher; errors if the host kind does not fit.
    pub fn search(&self, host: Host<'_>, limits: &SearchLimits) -> Result<SearchOutcome> {
        self.validate()?;
        match (*self, host) {
            (PatternSpec::RainbowClique { s }, Host::Colored(g)) => find_rainbow_clique(g, s, limits),
            (PatternSpec::RainbowJoin { r, s, l }, Host::Colored(g)) => find_rainbow_join(g, r, s, l, limits),
            (PatternSpec::MultigraphKsMr { s, r, mode }, Host::Multi(m)) => {
                find_multigraph_pattern(m, s, r, mode, limits)
            }
            (PatternSpec::DigraphKsTriMr { s, r, with_triangle, mode }, Host::Di(d)) => {
                find_digraph_pattern(d, s, r, with_triangle, mode, limits)
            }
            (PatternSpec::CyclicTriangle, Host::Di(d)) => Ok(find_cyclic_triangle(d)
                .map_or(SearchOutcome::Absent, SearchOutcome::Found)),
            (spec, host) => Err(PatternError::InvalidParameters(format!(
                "{spec:?} cannot be searched in a {} host",
                host.kind()
            ))),
        }
    }

    /// Re-validates `witness` against `host` by direct predicate evaluation.
    pub fn check(&self, host: Host<'_>, witness: &Witness) -> bool {
        let distinct = witness.vertices.iter().collect::<HashSet<_>>().len() == witness.vertices.len();
        if !distinct || witness.vertices.iter().any(|&v| v >= host.n()) {
            return false;
        }
        match (*self, host) {
            (PatternSpec::RainbowClique { s }, Host::Colored(g)) => {
                witness.vertices.len() == s
                    && witness
                        .vertices
                        .iter()
                        .enumerate()
                        .all(|(i, &u)| witness.vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
                    && is_rainbow(g, &witness.vertices).unwrap_or(false)
            }
            (PatternSpec::RainbowJoin { r, s, l }, Host::Colored(g)) => match &witness.parts {
                Some(PartStructure::JoinParts(parts)) => {
                    parts.len() == s
                        && parts[..r].iter().all(|p| p.len() == 1)
                        && parts[r..].iter().all(|p| p.len() == l)
                        && is_rainbow_join(g, parts)
                }
                _ => false,
            },
            (PatternSpec::MultigraphKsMr { s, r, mode }, Host::Multi(m)) => {
                witness.vertices.len() == s
                    && multigraph_pattern_matching(m, &witness.vertices, r, mode).is_some()
            }
            (PatternSpec::DigraphKsTriMr { s, r, with_triangle, mode }, Host::Di(d)) => {
                witness.vertices.len() == s
                    && digraph_pattern_labeling(d, &witness.vertices, r, with_triangle, mode).is_some()
            }
            (PatternSpec::CyclicTriangle, Host::Di(d)) => match witness.vertices[..] {
                [x, y, z] => d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x),
                _ => false,
            },
            _ => false,
        }
    }
}

/// Borrowed host object for [`PatternSpec::search`].
#[derive(Debug, Clone, Copy)]
pub enum Host<'a> {
    Colored(&'a EdgeColoredGraph),
    Multi(&'a StandardMultigraph),
    Di(&'a SimpleDigraph),
}

impl Host<'_> {
    pub fn n(&self) -> usize {
        match self {
            Host::Colored(g) => g.n(),
            Host::Multi(m) => m.n(),
            Host::Di(d) => d.n(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Host::Colored(_) => "edge-colored",
            Host::Multi(_) => "multigraph",
            Host::Di(_) => "digraph",
        }
    }
}

/// Extra labeling carried by a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartStructure {
    /// Parts of a join: `r` singletons first, then the parts of size `l`.
    JoinParts(Vec<Vec<usize>>),
    /// Light pairs of a multigraph near-clique.
    Matching(Vec<(usize, usize)>),
    /// Missing arcs of a digraph near-clique: the cyclic triangle `(i, j, k)`
    /// meaning arcs `(i,j), (j,k), (k,i)`, and the oriented matching arcs.
    NearClique {
        triangle: Option<[usize; 3]>,
        matching: Vec<(usize, usize)>,
    },
}

/// A located copy of a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub parts: Option<PartStructure>,
}

impl Witness {
    pub fn plain(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Witness { vertices, parts: None }
    }
}

/// Node cap and parallelism for a search.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    /// Maximum number of search nodes before giving up.
    pub node_cap: Option<u64>,
    /// Fan the top-level branches out over the current rayon pool.
    pub parallel: bool,
}

impl SearchLimits {
    pub fn with_cap(cap: u64) -> Self {
        SearchLimits {
            node_cap: Some(cap),
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Witness),
    Absent,
    Exhausted { nodes: u64 },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }
}

fn check_vertices(n: usize, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= n) {
        Some(&v) => Err(GraphError::VertexOutOfRange { vertex: v, n }.into()),
        None => Ok(()),
    }
}

/// True iff the edges of `G[S]` carry pairwise distinct colors.
pub fn is_rainbow(graph: &EdgeColoredGraph, set: &[usize]) -> Result<bool> {
    check_vertices(graph.n(), set)?;
    let mut seen = HashSet::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if let Some(c) = graph.color(u, v) {
                if !seen.insert(c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// True iff no two edges of `G[S]` sharing an endpoint share a color.
pub fn is_properly_colored(graph: &EdgeColoredGraph, set: &[usize]) -> Result<bool> {
    check_vertices(graph.n(), set)?;
    for &u in set {
        let mut seen = HashSet::new();
        for &v in set {
            if let Some(c) = graph.color(u, v) {
                if !seen.insert(c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn rainbow_complete(n: usize) -> EdgeColoredGraph {
        let mut next = 0;
        EdgeColoredGraph::from_graph(&SimpleGraph::complete(n), |_, _| {
            next += 1;
            next - 1
        })
    }

    #[test]
    fn rainbow_predicates() {
        let k4 = rainbow_complete(4);
        assert!(is_rainbow(&k4, &[0, 1, 2, 3]).unwrap());
        assert!(is_properly_colored(&k4, &[0, 1, 2, 3]).unwrap());
        let mono = EdgeColoredGraph::from_graph(&SimpleGraph::complete(3), |_, _| 5);
        assert!(!is_rainbow(&mono, &[0, 1, 2]).unwrap());
        let p3 = EdgeColoredGraph::new(3, [(0, 1, 0), (1, 2, 0)]).unwrap();
        assert!(!is_properly_colored(&p3, &[0, 1, 2]).unwrap());
        assert!(is_rainbow(&k4, &[9]).is_err());
    }

    #[test]
    fn proper_k33_four_cycle_is_not_rainbow() {
        // 1-factorization of K_{3,3}: a_i b_j colored (i + j) mod 3
        let edges: Vec<_> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, 3 + j, ((i + j) % 3) as u32)))
            .collect();
        let g = EdgeColoredGraph::new(6, edges).unwrap();
        assert!(is_properly_colored(&g, &[0, 1, 2, 3, 4, 5]).unwrap());
        // C_4 on a0 a1 b0 b1: a0b0=0, a1b1=2, a0b1=1, a1b0=1; opposite edges share 1
        assert!(!is_rainbow(&g, &[0, 1, 3, 4]).unwrap());
        // a0 a1 b0 b2: a0b0=0, a0b2=2, a1b0=1, a1b2=0; repeats 0
        assert!(!is_rainbow(&g, &[0, 1, 3, 5]).unwrap());
        // every C_4 in a proper 3-coloring of K_{3,3} repeats a color
        for a in [[0, 1], [0, 2], [1, 2]] {
            for b in [[3, 4], [3, 5], [4, 5]] {
                assert!(!is_rainbow(&g, &[a[0], a[1], b[0], b[1]]).unwrap());
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(PatternSpec::RainbowClique { s: 1 }.validate().is_err());
        assert!(PatternSpec::RainbowJoin { r: 1, s: 2, l: 1 }.validate().is_err());
        assert!(PatternSpec::RainbowJoin { r: 1, s: 3, l: 0 }.validate().is_err());
        assert!(PatternSpec::RainbowJoin { r: 1, s: 3, l: 2 }.validate().is_ok());
        assert!(PatternSpec::MultigraphKsMr { s: 4, r: 3, mode: MatchMode::Subgraph }.validate().is_err());
        let tri = |s, r| PatternSpec::DigraphKsTriMr { s, r, with_triangle: true, mode: MatchMode::Subgraph };
        assert!(tri(3, 0).validate().is_ok());
        assert!(tri(4, 1).validate().is_err());
        assert!(tri(5, 1).validate().is_ok());
        assert!(tri(2, 0).validate().is_err());
    }

    #[test]
    fn host_mismatch_is_an_error() {
        let k3 = rainbow_complete(3);
        let err = PatternSpec::CyclicTriangle.search(Host::Colored(&k3), &SearchLimits::default());
        assert!(matches!(err, Err(PatternError::InvalidParameters(_))));
    }
}
