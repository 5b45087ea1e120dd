//! Enumeration of edge-colorings of a fixed graph as set partitions of its
//! edge set (restricted growth strings), with optional pruning.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::graph::{Color, EdgeColoredGraph, SimpleGraph};

/// Knobs for [`enumerate_colorings`].
#[derive(Debug, Clone)]
pub struct ColoringOptions {
    /// Leaves must have every color degree at least this value; subtrees
    /// that cannot reach it are cut.
    pub min_color_degree: usize,
    /// Cut every partial coloring that already contains a rainbow triangle.
    pub rainbow_triangle_cut: bool,
    /// `true`: one coloring per set partition (restricted growth strings).
    /// `false`: every map from edges to `0..m`.
    pub dedup: bool,
    pub node_cap: Option<u64>,
    /// Worker count; `1` runs the same task split on the calling thread.
    pub threads: usize,
    /// Depth of the prefixes handed out as independent tasks.
    pub split_depth: usize,
}

impl Default for ColoringOptions {
    fn default() -> Self {
        ColoringOptions {
            min_color_degree: 0,
            rainbow_triangle_cut: false,
            dedup: true,
            node_cap: None,
            threads: 1,
            split_depth: 6,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub leaves: u64,
    pub nodes: u64,
    pub exhausted: bool,
}

/// A complete coloring handed to the visitor: `colors[i]` colors `edges[i]`.
pub struct Leaf<'a> {
    pub n: usize,
    pub edges: &'a [(usize, usize)],
    pub colors: &'a [Color],
}

impl Leaf<'_> {
    pub fn to_graph(&self) -> EdgeColoredGraph {
        EdgeColoredGraph::new(self.n, self.edges.iter().zip(self.colors).map(|(&(u, v), &c)| (u, v, c)))
            .expect("edges of a simple graph")
    }
}

/// Edge order used by the enumerator: sorted by larger endpoint, then by
/// smaller one, so each triangle closes as early as possible.
pub fn enumeration_edge_order(graph: &SimpleGraph) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = graph.edges().collect();
    edges.sort_by_key(|&(u, v)| (v, u));
    edges
}

struct Shape {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// For edge `i`, pairs `(j, k)` with `j, k < i` closing a triangle.
    closes: Vec<Vec<(usize, usize)>>,
    degree: Vec<usize>,
}

impl Shape {
    fn new(graph: &SimpleGraph) -> Self {
        let edges = enumeration_edge_order(graph);
        let n = graph.n();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i;
            index[v * n + u] = i;
        }
        let closes = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                (0..n)
                    .filter_map(|w| {
                        let (a, b) = (index[u * n + w], index[v * n + w]);
                        (w != u && w != v && a < i && b < i).then_some((a, b))
                    })
                    .collect()
            })
            .collect();
        let degree = (0..n).map(|v| graph.degree(v)).collect();
        Shape { n, edges, closes, degree }
    }
}

struct Shared<'a> {
    shape: &'a Shape,
    opts: &'a ColoringOptions,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.opts.node_cap {
            Some(cap) if used > cap => {
                self.exhausted.store(true, Ordering::Relaxed);
                false
            }
            _ => true,
        }
    }
}

struct State {
    colors: Vec<Color>,
    /// `count[v * m + c]`: edges of color `c` at `v`.
    count: Vec<u16>,
    distinct: Vec<usize>,
    uncolored: Vec<usize>,
    used: usize,
    used_before: Vec<usize>,
    m: usize,
    leaves: u64,
}

impl State {
    fn new(shape: &Shape) -> Self {
        let m = shape.edges.len();
        State {
            colors: Vec::with_capacity(m),
            count: vec![0; shape.n * m.max(1)],
            distinct: vec![0; shape.n],
            uncolored: shape.degree.clone(),
            used: 0,
            used_before: Vec::with_capacity(m),
            m,
            leaves: 0,
        }
    }

    fn palette_limit(&self, dedup: bool) -> usize {
        if dedup {
            (self.used + 1).min(self.m)
        } else {
            self.m
        }
    }

    /// Tries to color the next edge with `c`; returns false (and leaves the
    /// state untouched) when the choice is cut.
    fn push(&mut self, shape: &Shape, opts: &ColoringOptions, c: Color) -> bool {
        let i = self.colors.len();
        if opts.rainbow_triangle_cut {
            for &(j, k) in &shape.closes[i] {
                let (a, b) = (self.colors[j], self.colors[k]);
                if a != b && a != c && b != c {
                    return false;
                }
            }
        }
        let (u, v) = shape.edges[i];
        for x in [u, v] {
            let slot = x * self.m + c as usize;
            self.count[slot] += 1;
            if self.count[slot] == 1 {
                self.distinct[x] += 1;
            }
            self.uncolored[x] -= 1;
        }
        self.colors.push(c);
        self.used_before.push(self.used);
        self.used = self.used.max(c as usize + 1);
        let t = opts.min_color_degree;
        if self.distinct[u] + self.uncolored[u] < t || self.distinct[v] + self.uncolored[v] < t {
            self.pop(shape);
            return false;
        }
        true
    }

    fn pop(&mut self, shape: &Shape) {
        let c = self.colors.pop().expect("nonempty prefix");
        let (u, v) = shape.edges[self.colors.len()];
        for x in [u, v] {
            let slot = x * self.m + c as usize;
            self.count[slot] -= 1;
            if self.count[slot] == 0 {
                self.distinct[x] -= 1;
            }
            self.uncolored[x] += 1;
        }
        self.used = self.used_before.pop().expect("paired with push");
    }
}

fn descend<S, V>(shared: &Shared<'_>, st: &mut State, acc: &mut S, visit: &V)
where
    V: Fn(&mut S, &Leaf<'_>),
{
    if !shared.tick() {
        return;
    }
    if st.colors.len() == st.m {
        st.leaves += 1;
        let leaf = Leaf { n: shared.shape.n, edges: &shared.shape.edges, colors: &st.colors };
        visit(acc, &leaf);
        return;
    }
    for c in 0..st.palette_limit(shared.opts.dedup) {
        if st.push(shared.shape, shared.opts, c as Color) {
            descend(shared, st, acc, visit);
            st.pop(shared.shape);
        }
    }
}

fn collect_prefixes(shared: &Shared<'_>, st: &mut State, depth: usize, out: &mut Vec<Vec<Color>>) {
    if st.colors.len() == depth {
        out.push(st.colors.clone());
        return;
    }
    if !shared.tick() {
        return;
    }
    for c in 0..st.palette_limit(shared.opts.dedup) {
        if st.push(shared.shape, shared.opts, c as Color) {
            collect_prefixes(shared, st, depth, out);
            st.pop(shared.shape);
        }
    }
}

/// Visits every coloring of `graph` allowed by `opts`. The search space is
/// cut into prefix subtrees; each subtree gets its own accumulator from
/// `init`, and the accumulators come back in prefix order, so the merged
/// result does not depend on the number of threads.
pub fn enumerate_colorings<S, I, V>(
    graph: &SimpleGraph,
    opts: &ColoringOptions,
    init: I,
    visit: V,
) -> (Vec<S>, EnumerationStats)
where
    S: Send,
    I: Fn() -> S + Sync,
    V: Fn(&mut S, &Leaf<'_>) + Sync,
{
    let shape = Shape::new(graph);
    let shared = Shared { shape: &shape, opts, nodes: AtomicU64::new(0), exhausted: AtomicBool::new(false) };
    if (0..shape.n).any(|v| shape.degree[v] < opts.min_color_degree) {
        return (Vec::new(), EnumerationStats::default());
    }
    let depth = opts.split_depth.min(shape.edges.len());
    let mut prefixes = Vec::new();
    collect_prefixes(&shared, &mut State::new(&shape), depth, &mut prefixes);

    let task = |prefix: &Vec<Color>| {
        let mut st = State::new(&shape);
        for &c in prefix {
            let ok = st.push(&shape, opts, c);
            debug_assert!(ok, "prefix was admitted once already");
        }
        let mut acc = init();
        descend(&shared, &mut st, &mut acc, &visit);
        (acc, st.leaves)
    };
    let results: Vec<(S, u64)> = if opts.threads <= 1 {
        prefixes.iter().map(task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| prefixes.par_iter().map(task).collect())
    };
    let leaves = results.iter().map(|r| r.1).sum();
    let stats = EnumerationStats {
        leaves,
        nodes: shared.nodes.load(Ordering::Relaxed),
        exhausted: shared.exhausted.load(Ordering::Relaxed),
    };
    (results.into_iter().map(|r| r.0).collect(), stats)
}

/// Counts the colorings allowed by `opts`.
pub fn count_colorings(graph: &SimpleGraph, opts: &ColoringOptions) -> EnumerationStats {
    enumerate_colorings(graph, opts, || (), |_, _| ()).1
}

/// True iff some triangle of the colored graph uses three distinct colors.
pub fn has_rainbow_triangle(graph: &EdgeColoredGraph) -> bool {
    let n = graph.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (b + 1..n).any(|c| match (graph.color(a, b), graph.color(a, c), graph.color(b, c)) {
                (Some(x), Some(y), Some(z)) => x != y && x != z && y != z,
                _ => false,
            })
        })
    })
}

/// True iff no two edges at a common vertex share a color.
pub fn is_proper(graph: &EdgeColoredGraph) -> bool {
    (0..graph.n()).all(|v| graph.color_degree_unchecked(v) == graph.degree(v))
}
