use std::collections::{HashMap, HashSet};

use super::budget::Budget;
use super::{PartStructure, PatternSpec, Result, SearchLimits, SearchOutcome, Witness};
use crate::bitset::VertexSet;
use crate::graph::EdgeColoredGraph;

/// Host relabeled for searching: vertices sorted by decreasing degree and
/// colors compacted to `0..k`.
struct Relabeled {
    order: Vec<usize>,
    adj: Vec<VertexSet>,
    color: Vec<u32>,
    colors: usize,
}

impl Relabeled {
    fn new(graph: &EdgeColoredGraph) -> Self {
        let n = graph.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut dense: HashMap<u32, u32> = HashMap::new();
        let mut adj = vec![VertexSet::new(n); n];
        let mut color = vec![u32::MAX; n * n];
        for (u, v, c) in graph.edges() {
            let next = dense.len() as u32;
            let c = *dense.entry(c).or_insert(next);
            let (a, b) = (pos[u], pos[v]);
            adj[a].insert(b);
            adj[b].insert(a);
            color[a * n + b] = c;
            color[b * n + a] = c;
        }
        Relabeled {
            order,
            adj,
            color,
            colors: dense.len(),
        }
    }

    #[inline]
    fn c(&self, u: usize, v: usize) -> u32 {
        self.color[u * self.order.len() + v]
    }

    /// Colors from `u` to every vertex of `anchors` are pairwise distinct and
    /// absent from `used`.
    fn fresh_to(&self, u: usize, anchors: &[usize], used: &[bool]) -> bool {
        for (i, &x) in anchors.iter().enumerate() {
            let c = self.c(u, x);
            if used[c as usize] || anchors[..i].iter().any(|&y| self.c(u, y) == c) {
                return false;
            }
        }
        true
    }
}

/// Exact search for a rainbow `K_s`.
pub fn find_rainbow_clique(
    graph: &EdgeColoredGraph,
    s: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    PatternSpec::RainbowClique { s }.validate()?;
    let n = graph.n();
    if s > n || graph.palette().len() < s * (s - 1) / 2 {
        return Ok(SearchOutcome::Absent);
    }
    let host = Relabeled::new(graph);
    let budget = Budget::new(limits.node_cap);
    Ok(budget.run(n, limits, |first| {
        let mut clique = vec![first];
        let mut used = vec![false; host.colors];
        let mut cand = host.adj[first].clone();
        cand.retain_above(first);
        if extend_clique(&host, &budget, first, s, &mut clique, &mut used, &cand) {
            Some(Witness::plain(clique.iter().map(|&p| host.order[p]).collect()))
        } else {
            None
        }
    }))
}

fn extend_clique(
    host: &Relabeled,
    budget: &Budget,
    branch: usize,
    s: usize,
    clique: &mut Vec<usize>,
    used: &mut [bool],
    cand: &VertexSet,
) -> bool {
    if clique.len() == s {
        return true;
    }
    if !budget.tick(branch) {
        return false;
    }
    let need = s - clique.len();
    let mut left = cand.len();
    if left < need {
        return false;
    }
    for v in cand {
        if left < need {
            break;
        }
        left -= 1;
        for &x in clique.iter() {
            used[host.c(v, x) as usize] = true;
        }
        clique.push(v);
        let mut next = cand.intersection(&host.adj[v]);
        next.retain_above(v);
        if next.len() + 1 >= need {
            for u in next.clone().iter() {
                if !host.fresh_to(u, clique, used) {
                    next.remove(u);
                }
            }
            if extend_clique(host, budget, branch, s, clique, used, &next) {
                return true;
            }
        }
        clique.pop();
        for &x in clique.iter() {
            used[host.c(v, x) as usize] = false;
        }
    }
    false
}

/// True when `parts` are disjoint, every pair of vertices in different parts
/// is an edge, and those edges are rainbow.
pub fn is_rainbow_join(graph: &EdgeColoredGraph, parts: &[Vec<usize>]) -> bool {
    let all: Vec<usize> = parts.iter().flatten().copied().collect();
    if all.iter().collect::<HashSet<_>>().len() != all.len() || all.iter().any(|&v| v >= graph.n()) {
        return false;
    }
    let mut seen = HashSet::new();
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            for &u in p {
                for &v in q {
                    match graph.color(u, v) {
                        Some(c) if seen.insert(c) => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

struct JoinLayout {
    /// Part of each slot; slots of one part are consecutive.
    slot_part: Vec<usize>,
    /// First slot of each part.
    part_start: Vec<usize>,
    singles: usize,
}

impl JoinLayout {
    fn new(r: usize, s: usize, l: usize) -> Self {
        let mut slot_part = Vec::new();
        let mut part_start = Vec::new();
        for p in 0..s {
            part_start.push(slot_part.len());
            let size = if p < r { 1 } else { l };
            slot_part.extend(std::iter::repeat_n(p, size));
        }
        JoinLayout {
            slot_part,
            part_start,
            singles: r,
        }
    }

    /// Whether part `p` is interchangeable with part `p − 1`.
    fn same_kind_as_previous(&self, p: usize) -> bool {
        p > 0 && (p < self.singles) == (p - 1 < self.singles)
    }
}

/// Exact search for a rainbow `K_r ∨ K^l_{s−r}`: `r` singleton parts and
/// `s − r` parts of exactly `l` vertices, every cross-part pair an edge and
/// all those edges rainbow. Pairs inside a part are unconstrained.
pub fn find_rainbow_join(
    graph: &EdgeColoredGraph,
    r: usize,
    s: usize,
    l: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    PatternSpec::RainbowJoin { r, s, l }.validate()?;
    let layout = JoinLayout::new(r, s, l);
    let total = layout.slot_part.len();
    let pattern_edges = join_edge_count(r, s, l);
    if total > graph.n() || graph.palette().len() < pattern_edges {
        return Ok(SearchOutcome::Absent);
    }
    let host = Relabeled::new(graph);
    let budget = Budget::new(limits.node_cap);
    Ok(budget.run(graph.n(), limits, |first| {
        let mut state = JoinState {
            host: &host,
            layout: &layout,
            budget: &budget,
            branch: first,
            assigned: vec![first],
            used_vertices: VertexSet::from_iter(graph.n(), [first]),
            used_colors: vec![false; host.colors],
        };
        if state.extend() {
            let mut parts: Vec<Vec<usize>> = vec![Vec::new(); s];
            for (slot, &p) in state.assigned.iter().enumerate() {
                parts[layout.slot_part[slot]].push(host.order[p]);
            }
            let mut vertices: Vec<usize> = parts.iter().flatten().copied().collect();
            vertices.sort_unstable();
            for p in parts.iter_mut() {
                p.sort_unstable();
            }
            parts[..r].sort();
            parts[r..].sort();
            Some(Witness {
                vertices,
                parts: Some(PartStructure::JoinParts(parts)),
            })
        } else {
            None
        }
    }))
}

fn join_edge_count(r: usize, s: usize, l: usize) -> usize {
    let sizes: Vec<usize> = (0..s).map(|p| if p < r { 1 } else { l }).collect();
    let total: usize = sizes.iter().sum();
    (total * total - sizes.iter().map(|x| x * x).sum::<usize>()) / 2
}

struct JoinState<'a> {
    host: &'a Relabeled,
    layout: &'a JoinLayout,
    budget: &'a Budget,
    branch: usize,
    assigned: Vec<usize>,
    used_vertices: VertexSet,
    used_colors: Vec<bool>,
}

impl JoinState<'_> {
    fn extend(&mut self) -> bool {
        let slot = self.assigned.len();
        if slot == self.layout.slot_part.len() {
            return true;
        }
        if !self.budget.tick(self.branch) {
            return false;
        }
        let part = self.layout.slot_part[slot];
        let start = self.layout.part_start[part];
        let lower = if slot > start {
            Some(self.assigned[slot - 1])
        } else if self.layout.same_kind_as_previous(part) {
            Some(self.assigned[self.layout.part_start[part - 1]])
        } else {
            None
        };
        let anchors: Vec<usize> = self.assigned[..start].to_vec();
        let n = self.host.order.len();
        let mut cand = VertexSet::full(n);
        cand.difference_with(&self.used_vertices);
        if let Some(lb) = lower {
            cand.retain_above(lb);
        }
        for &x in &anchors {
            cand.intersect_with(&self.host.adj[x]);
        }
        for v in cand.iter() {
            if !self.host.fresh_to(v, &anchors, &self.used_colors) {
                continue;
            }
            for &x in &anchors {
                self.used_colors[self.host.c(v, x) as usize] = true;
            }
            self.assigned.push(v);
            self.used_vertices.insert(v);
            if self.extend() {
                return true;
            }
            self.used_vertices.remove(v);
            self.assigned.pop();
            for &x in &anchors {
                self.used_colors[self.host.c(v, x) as usize] = false;
            }
        }
        false
    }
}
