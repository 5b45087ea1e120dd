//! Doubled near-cliques: `𝕂_s − ℳ_r` in standard multigraphs and
//! `𝕂_s − ℳ_r`, `𝕂_s − △ − ℳ_r` in simple digraphs.
//!
//! In [`MatchMode::Subgraph`] the host must contain the pattern: every pair of
//! the vertex set is present, the defects (light pairs, or pairs missing one
//! direction) fit inside the allowed triangle and a matching of at most `r`
//! pairs. [`MatchMode::Induced`] asks for the pattern exactly.

use super::budget::Budget;
use super::{MatchMode, PartStructure, PatternSpec, Result, SearchLimits, SearchOutcome, Witness};
use crate::bitset::VertexSet;
use crate::graph::{SimpleDigraph, StandardMultigraph};

/// Light pairs of `M[S]` when they form a matching that fits the pattern.
pub fn multigraph_pattern_matching(
    m: &StandardMultigraph,
    set: &[usize],
    r: usize,
    mode: MatchMode,
) -> Option<Vec<(usize, usize)>> {
    let mut light = Vec::new();
    let mut touched = std::collections::HashSet::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            match m.multiplicity(u, v) {
                0 => return None,
                1 => {
                    if !touched.insert(u) || !touched.insert(v) {
                        return None;
                    }
                    light.push((u.min(v), u.max(v)));
                }
                _ => {}
            }
        }
    }
    let fits = match mode {
        MatchMode::Subgraph => light.len() <= r,
        MatchMode::Induced => light.len() == r,
    };
    fits.then(|| {
        light.sort_unstable();
        light
    })
}

/// Exact search for an `s`-set `S` with `M[S] ⊇ 𝕂_s − ℳ_r` (or `=` when
/// induced).
pub fn find_multigraph_pattern(
    m: &StandardMultigraph,
    s: usize,
    r: usize,
    mode: MatchMode,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    PatternSpec::MultigraphKsMr { s, r, mode }.validate()?;
    let n = m.n();
    if s > n {
        return Ok(SearchOutcome::Absent);
    }
    let budget = Budget::new(limits.node_cap);
    Ok(budget.run(n, limits, |first| {
        let mut search = MultiSearch {
            m,
            budget: &budget,
            branch: first,
            s,
            r,
            mode,
            chosen: vec![first],
            matched: VertexSet::new(n),
            light: 0,
        };
        let mut cand = m.support_neighbors(first).clone();
        cand.retain_above(first);
        search.extend(&cand).then(|| {
            let light = multigraph_pattern_matching(m, &search.chosen, r, mode).expect("search invariant");
            Witness {
                vertices: search.chosen.clone(),
                parts: Some(PartStructure::Matching(light)),
            }
        })
    }))
}

struct MultiSearch<'a> {
    m: &'a StandardMultigraph,
    budget: &'a Budget,
    branch: usize,
    s: usize,
    r: usize,
    mode: MatchMode,
    chosen: Vec<usize>,
    matched: VertexSet,
    light: usize,
}

impl MultiSearch<'_> {
    fn extend(&mut self, cand: &VertexSet) -> bool {
        if self.chosen.len() == self.s {
            return self.mode == MatchMode::Subgraph || self.light == self.r;
        }
        if !self.budget.tick(self.branch) {
            return false;
        }
        let need = self.s - self.chosen.len();
        if cand.len() < need {
            return false;
        }
        for v in cand.iter() {
            let light_to: Vec<usize> = self
                .chosen
                .iter()
                .copied()
                .filter(|&x| self.m.multiplicity(v, x) == 1)
                .collect();
            let ok = match light_to[..] {
                [] => true,
                [x] => !self.matched.contains(x) && self.light < self.r,
                _ => false,
            };
            if !ok {
                continue;
            }
            if let Some(&x) = light_to.first() {
                self.matched.insert(x);
                self.matched.insert(v);
                self.light += 1;
            }
            self.chosen.push(v);
            let mut next = cand.intersection(self.m.support_neighbors(v));
            next.retain_above(v);
            if self.extend(&next) {
                return true;
            }
            self.chosen.pop();
            if let Some(&x) = light_to.first() {
                self.matched.remove(x);
                self.matched.remove(v);
                self.light -= 1;
            }
        }
        false
    }
}

/// Labeling of `D[S]` as the requested near-clique, if one exists. The
/// triangle `[i, j, k]` stands for the complement arcs `(i,j), (j,k), (k,i)`;
/// the matching lists the missing arcs `(g, h)`.
pub fn digraph_pattern_labeling(
    d: &SimpleDigraph,
    set: &[usize],
    r: usize,
    with_triangle: bool,
    mode: MatchMode,
) -> Option<PartStructure> {
    let mut missing = Vec::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            match (d.has_arc(u, v), d.has_arc(v, u)) {
                (false, false) => return None,
                (false, true) => missing.push((u, v)),
                (true, false) => missing.push((v, u)),
                (true, true) => {}
            }
        }
    }
    if !with_triangle {
        return oriented_matching(&missing, r, mode).map(|matching| PartStructure::NearClique {
            triangle: None,
            matching,
        });
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    for (a, &i) in sorted.iter().enumerate() {
        for (b, &j) in sorted.iter().enumerate().skip(a + 1) {
            for &k in &sorted[b + 1..] {
                for tri in [[i, j, k], [i, k, j]] {
                    let arcs = [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])];
                    let on_triangle = |(x, y): (usize, usize)| tri.contains(&x) || tri.contains(&y);
                    let (inside, rest): (Vec<_>, Vec<_>) =
                        missing.iter().copied().partition(|&arc| on_triangle(arc));
                    let inside_ok = inside.iter().all(|arc| arcs.contains(arc))
                        && (mode == MatchMode::Subgraph || inside.len() == 3);
                    if !inside_ok {
                        continue;
                    }
                    if let Some(matching) = oriented_matching(&rest, r, mode) {
                        return Some(PartStructure::NearClique {
                            triangle: Some(tri),
                            matching,
                        });
                    }
                }
            }
        }
    }
    None
}

fn oriented_matching(arcs: &[(usize, usize)], r: usize, mode: MatchMode) -> Option<Vec<(usize, usize)>> {
    let mut seen = std::collections::HashSet::new();
    if !arcs.iter().all(|&(g, h)| seen.insert(g) && seen.insert(h)) {
        return None;
    }
    let fits = match mode {
        MatchMode::Subgraph => arcs.len() <= r,
        MatchMode::Induced => arcs.len() == r,
    };
    fits.then(|| {
        let mut out = arcs.to_vec();
        out.sort_unstable();
        out
    })
}

/// Exact search for an `s`-set `S` such that `D[S]` contains (or equals) the
/// near-clique with an optional cyclic triangle and an `r`-matching removed.
pub fn find_digraph_pattern(
    d: &SimpleDigraph,
    s: usize,
    r: usize,
    with_triangle: bool,
    mode: MatchMode,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    PatternSpec::DigraphKsTriMr { s, r, with_triangle, mode }.validate()?;
    let n = d.n();
    if s > n {
        return Ok(SearchOutcome::Absent);
    }
    let underlying = d.underlying();
    let budget = Budget::new(limits.node_cap);
    let (max_defect_degree, max_defects) = if with_triangle { (2, r + 3) } else { (1, r) };
    Ok(budget.run(n, limits, |first| {
        let mut search = DiSearch {
            d,
            underlying: &underlying,
            budget: &budget,
            branch: first,
            s,
            r,
            with_triangle,
            mode,
            max_defect_degree,
            max_defects,
            chosen: vec![first],
            defect_degree: vec![0; n],
            defects: 0,
            labeling: None,
        };
        let mut cand = underlying.neighbors(first).clone();
        cand.retain_above(first);
        search.extend(&cand).then(|| Witness {
            vertices: search.chosen.clone(),
            parts: search.labeling.take(),
        })
    }))
}

struct DiSearch<'a> {
    d: &'a SimpleDigraph,
    underlying: &'a crate::graph::SimpleGraph,
    budget: &'a Budget,
    branch: usize,
    s: usize,
    r: usize,
    with_triangle: bool,
    mode: MatchMode,
    max_defect_degree: usize,
    max_defects: usize,
    chosen: Vec<usize>,
    defect_degree: Vec<usize>,
    defects: usize,
    labeling: Option<PartStructure>,
}

impl DiSearch<'_> {
    fn extend(&mut self, cand: &VertexSet) -> bool {
        if self.chosen.len() == self.s {
            self.labeling = digraph_pattern_labeling(self.d, &self.chosen, self.r, self.with_triangle, self.mode);
            return self.labeling.is_some();
        }
        if !self.budget.tick(self.branch) {
            return false;
        }
        if cand.len() < self.s - self.chosen.len() {
            return false;
        }
        for v in cand.iter() {
            let defective: Vec<usize> = self
                .chosen
                .iter()
                .copied()
                .filter(|&x| !(self.d.has_arc(v, x) && self.d.has_arc(x, v)))
                .collect();
            if defective.len() > self.max_defect_degree
                || self.defects + defective.len() > self.max_defects
                || defective.iter().any(|&x| self.defect_degree[x] >= self.max_defect_degree)
            {
                continue;
            }
            for &x in &defective {
                self.defect_degree[x] += 1;
            }
            self.defect_degree[v] = defective.len();
            self.defects += defective.len();
            self.chosen.push(v);
            let mut next = cand.intersection(self.underlying.neighbors(v));
            next.retain_above(v);
            if self.extend(&next) {
                return true;
            }
            self.chosen.pop();
            self.defects -= defective.len();
            self.defect_degree[v] = 0;
            for &x in &defective {
                self.defect_degree[x] -= 1;
            }
        }
        false
    }
}
