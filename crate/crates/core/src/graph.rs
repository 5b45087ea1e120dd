//! Immutable graph types and their degree arithmetic.
//!
//! Vertices are always `0..n`. Every type keeps one [`VertexSet`] row per
//! vertex so the searchers can intersect neighbourhoods word-at-a-time.
//! Degrees and averages are exact: integers or [`Rational`].

use std::collections::HashMap;

use num_rational::Ratio;

use crate::bitset::VertexSet;
use crate::error::{GraphError, Result};

/// Exact rational used for every threshold comparison.
pub type Rational = Ratio<i64>;

/// Color id. Palettes are small nonnegative integers.
pub type Color = u32;

const NO_COLOR: Color = Color::MAX;

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn vertex_set(n: usize, vertices: &[usize]) -> Result<VertexSet> {
    let mut set = VertexSet::new(n);
    for &v in vertices {
        check_vertex(v, n)?;
        set.insert(v);
    }
    Ok(set)
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                let (a, b) = ordered(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(SimpleGraph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        SimpleGraph { n, adj }
    }

    /// Complete multipartite graph with the given part sizes, parts laid out
    /// as consecutive vertex blocks.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Self {
        let n = part_sizes.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (i, &size) in part_sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, size));
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part[u] != part[v]);
        SimpleGraph::new(n, edges).expect("multipartite edges are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.adj[v].intersection_len(set)).sum::<usize>() / 2
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A simple graph together with a total edge coloring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoredGraph {
    n: usize,
    adj: Vec<VertexSet>,
    color: Vec<Color>,
}

/// Minimum and exact average color degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorDegreeProfile {
    pub minimum: usize,
    pub average: Rational,
}

impl EdgeColoredGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        let mut color = vec![NO_COLOR; n * n];
        for (u, v, c) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                let (a, b) = ordered(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
            if c == NO_COLOR {
                return Err(GraphError::InvalidParameter(format!(
                    "color id {c} is reserved"
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            color[u * n + v] = c;
            color[v * n + u] = c;
        }
        Ok(EdgeColoredGraph { n, adj, color })
    }

    /// Colors `graph` by `f(u, v)` for every edge `u < v`.
    pub fn from_graph<F>(graph: &SimpleGraph, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Color,
    {
        let edges: Vec<_> = graph.edges().map(|(u, v)| (u, v, f(u, v))).collect();
        EdgeColoredGraph::new(graph.n(), edges).expect("edges come from a simple graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let c = self.color[u * self.n + v];
        (c != NO_COLOR).then_some(c)
    }

    /// Color of an edge known to exist.
    #[inline]
    pub(crate) fn color_unchecked(&self, u: usize, v: usize) -> Color {
        self.color[u * self.n + v]
    }

    /// Edges `(u, v, c)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v, self.color_unchecked(u, v)))
        })
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            adj: self.adj.clone(),
        }
    }

    /// Distinct colors in use, ascending.
    pub fn palette(&self) -> Vec<Color> {
        let mut colors: Vec<Color> = self.edges().map(|(_, _, c)| c).collect();
        colors.sort_unstable();
        colors.dedup();
        colors
    }

    /// Relabels the palette to `0..k` in order of first appearance along the
    /// lexicographic edge order.
    pub fn canonicalize_colors(&self) -> EdgeColoredGraph {
        let mut relabel: HashMap<Color, Color> = HashMap::new();
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v, c)| {
                let next = relabel.len() as Color;
                (u, v, *relabel.entry(c).or_insert(next))
            })
            .collect();
        EdgeColoredGraph::new(self.n, edges).expect("relabeling keeps the graph simple")
    }

    /// Spanning subgraph keeping the edges for which `keep` holds.
    pub fn filter_edges<F>(&self, mut keep: F) -> EdgeColoredGraph
    where
        F: FnMut(usize, usize, Color) -> bool,
    {
        let edges: Vec<_> = self.edges().filter(|&(u, v, c)| keep(u, v, c)).collect();
        EdgeColoredGraph::new(self.n, edges).expect("subgraph of a simple graph")
    }

    /// Number of distinct colors on the edges at `v`.
    pub fn color_degree(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.n)?;
        Ok(self.color_degree_unchecked(v))
    }

    pub(crate) fn color_degree_unchecked(&self, v: usize) -> usize {
        let mut seen: Vec<Color> = self.adj[v].iter().map(|w| self.color_unchecked(v, w)).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Number of edges at `v` carrying color `c`.
    pub fn color_multiplicity_at(&self, v: usize, c: Color) -> usize {
        self.adj[v]
            .iter()
            .filter(|&w| self.color_unchecked(v, w) == c)
            .count()
    }

    pub fn color_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.color_degree_unchecked(v)).collect()
    }

    /// Minimum color degree and the exact average color degree.
    pub fn color_degree_profile(&self) -> Result<ColorDegreeProfile> {
        if self.n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let degrees = self.color_degrees();
        let minimum = *degrees.iter().min().expect("n >= 1");
        let total: usize = degrees.iter().sum();
        Ok(ColorDegreeProfile {
            minimum,
            average: Rational::new(total as i64, self.n as i64),
        })
    }

    pub fn min_color_degree(&self) -> usize {
        self.color_degrees().into_iter().min().unwrap_or(0)
    }
}

impl std::fmt::Debug for EdgeColoredGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoredGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Loop-free digraph with at most one copy of each ordered pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleDigraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl SimpleDigraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = SimpleDigraph::empty(n);
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if d.out[u].contains(v) {
                return Err(GraphError::DuplicateArc(u, v));
            }
            d.out[u].insert(v);
            d.inn[v].insert(u);
        }
        Ok(d)
    }

    pub fn empty(n: usize) -> Self {
        SimpleDigraph {
            n,
            out: vec![VertexSet::new(n); n],
            inn: vec![VertexSet::new(n); n],
        }
    }

    /// All non-diagonal ordered pairs.
    pub fn complete(n: usize) -> Self {
        SimpleDigraph::empty(n).complement()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    /// Per-ordered-pair complement over the non-diagonal pairs.
    pub fn complement(&self) -> SimpleDigraph {
        let mut d = SimpleDigraph::empty(self.n);
        for u in 0..self.n {
            let mut row = VertexSet::full(self.n);
            row.remove(u);
            row.difference_with(&self.out[u]);
            for v in &row {
                d.inn[v].insert(u);
            }
            d.out[u] = row;
        }
        d
    }

    /// Simple graph obtained by forgetting orientations.
    pub fn underlying(&self) -> SimpleGraph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.out[v].clone();
                row.union_with(&self.inn[v]);
                row
            })
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// True when no pair carries both arcs.
    pub fn is_orientation(&self) -> bool {
        self.first_two_cycle().is_none()
    }

    pub fn first_two_cycle(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| {
            self.out[u]
                .intersection(&self.inn[u])
                .iter()
                .find(|&v| v > u)
                .map(|v| (u, v))
        })
    }

    pub fn is_tournament(&self) -> bool {
        self.is_orientation() && self.arc_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Sub-digraph induced on `vertices`, relabeled to `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleDigraph {
        let arcs: Vec<_> = vertices
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(move |&(_, &v)| self.has_arc(u, v))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        SimpleDigraph::new(vertices.len(), arcs).expect("induced sub-digraph is simple")
    }
}

impl std::fmt::Debug for SimpleDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleDigraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// Loop-free multigraph with every multiplicity in `{0, 1, 2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardMultigraph {
    n: usize,
    mult: Vec<u8>,
    support: Vec<VertexSet>,
    heavy: Vec<VertexSet>,
}

/// Degree extremes, edge count and a cross count `e_M(U, U')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultigraphStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub edge_count: usize,
    pub cross_count: usize,
}

impl StandardMultigraph {
    /// Builds from `(u, v, multiplicity)` triples. Pairs not listed have
    /// multiplicity 0; listing a pair twice is an error.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u8)>,
    {
        let mut mult = vec![0u8; n * n];
        let mut listed = vec![false; n * n];
        for (u, v, m) in pairs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = ordered(u, v);
            if listed[a * n + b] {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            if m > 2 {
                return Err(GraphError::Multiplicity { u: a, v: b, mult: m });
            }
            listed[a * n + b] = true;
            mult[a * n + b] = m;
            mult[b * n + a] = m;
        }
        Ok(Self::from_matrix(n, mult))
    }

    /// Builds from a multiplicity function on pairs `u < v`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> u8,
    {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| (u, v, f(u, v)))
            .collect();
        Self::new(n, pairs)
    }

    fn from_matrix(n: usize, mult: Vec<u8>) -> Self {
        let mut support = vec![VertexSet::new(n); n];
        let mut heavy = vec![VertexSet::new(n); n];
        for u in 0..n {
            for v in 0..n {
                match mult[u * n + v] {
                    0 => {}
                    1 => support[u].insert(v),
                    _ => {
                        support[u].insert(v);
                        heavy[u].insert(v);
                    }
                }
            }
        }
        StandardMultigraph {
            n,
            mult,
            support,
            heavy,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![0; n * n])
    }

    /// Every pair heavy.
    pub fn complete_heavy(n: usize) -> Self {
        StandardMultigraph::empty(n).complement()
    }

    /// Multigraph whose multiplicities are the 0/1 adjacency of `g`.
    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self::from_fn(g.n(), |u, v| g.has_edge(u, v) as u8).expect("0/1 multiplicities")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        if u >= self.n || v >= self.n {
            return 0;
        }
        self.mult[u * self.n + v]
    }

    /// Vertices joined to `v` by at least one edge.
    pub fn support_neighbors(&self, v: usize) -> &VertexSet {
        &self.support[v]
    }

    pub fn heavy_neighbors(&self, v: usize) -> &VertexSet {
        &self.heavy[v]
    }

    /// `d_M(v) = Σ_u μ(uv)`.
    pub fn degree(&self, v: usize) -> usize {
        self.support[v].len() + self.heavy[v].len()
    }

    /// `d_M(v, U) = Σ_{u ∈ U} μ(uv)`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.support[v].intersection_len(set) + self.heavy[v].intersection_len(set)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `e(M) = Σ_e μ(e)`.
    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// `e_M(U, U') = Σ_{u ∈ U} d_M(u, U')`.
    pub fn cross_count(&self, set: &VertexSet, other: &VertexSet) -> usize {
        set.iter().map(|u| self.degree_into(u, other)).sum()
    }

    /// `e_M(U)`: multiplicity total of pairs inside `U`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        self.cross_count(set, set) / 2
    }

    pub fn stats(&self, set: &[usize], other: &[usize]) -> Result<MultigraphStats> {
        let a = vertex_set(self.n, set)?;
        let b = vertex_set(self.n, other)?;
        Ok(MultigraphStats {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            edge_count: self.edge_count(),
            cross_count: self.cross_count(&a, &b),
        })
    }

    /// `μ(e) ↦ 2 − μ(e)` on every pair.
    pub fn complement(&self) -> StandardMultigraph {
        let mut mult = vec![0u8; self.n * self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    mult[u * self.n + v] = 2 - self.mult[u * self.n + v];
                }
            }
        }
        Self::from_matrix(self.n, mult)
    }

    /// Simple graph of heavy edges, `H(M)`.
    pub fn heavy_edge_graph(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            adj: self.heavy.clone(),
        }
    }

    /// Simple graph of light edges.
    pub fn light_edge_graph(&self) -> SimpleGraph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.support[v].clone();
                row.difference_with(&self.heavy[v]);
                row
            })
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Underlying simple graph `G(M)`.
    pub fn support_graph(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            adj: self.support.clone(),
        }
    }

    /// Pairs `(u, v, μ)` with `u < v` and `μ ≥ 1`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.support[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v, self.multiplicity(u, v)))
        })
    }

    /// Sub-multigraph induced on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> StandardMultigraph {
        let k = vertices.len();
        let mut mult = vec![0u8; k * k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j {
                    mult[i * k + j] = self.multiplicity(u, v);
                }
            }
        }
        Self::from_matrix(k, mult)
    }
}

impl std::fmt::Debug for StandardMultigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StandardMultigraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Number of distinct colors on the edges at `v`.
pub fn color_degree(graph: &EdgeColoredGraph, v: usize) -> Result<usize> {
    graph.color_degree(v)
}

pub fn color_degree_profile(graph: &EdgeColoredGraph) -> Result<ColorDegreeProfile> {
    graph.color_degree_profile()
}

pub fn multigraph_stats(
    m: &StandardMultigraph,
    set: &[usize],
    other: &[usize],
) -> Result<MultigraphStats> {
    m.stats(set, other)
}

pub fn multigraph_complement(m: &StandardMultigraph) -> StandardMultigraph {
    m.complement()
}

pub fn heavy_edge_graph(m: &StandardMultigraph) -> SimpleGraph {
    m.heavy_edge_graph()
}
