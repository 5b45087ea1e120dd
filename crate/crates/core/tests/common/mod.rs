//! Naive oracles shared by the integration tests. Everything here works
//! from raw edge lists and plain subset enumeration, never through the
//! searchers or predicates it is compared against.
#![allow(dead_code)]

use std::collections::HashSet;

use rainbow_core::{EdgeColoredGraph, SimpleDigraph, StandardMultigraph};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every set partition of `0..m`, as a block index per element.
pub fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; m];
    fn go(i: usize, blocks: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels[i] = b;
            go(i + 1, blocks.max(b + 1), labels, out);
        }
    }
    go(0, 0, &mut labels, &mut out);
    out
}

pub fn color_of(edges: &[(usize, usize, u32)], u: usize, v: usize) -> Option<u32> {
    edges.iter().find(|&&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u)).map(|&(_, _, c)| c)
}

/// Distinct colors at each vertex, straight from the edge list.
pub fn color_degrees(n: usize, edges: &[(usize, usize, u32)]) -> Vec<usize> {
    let mut seen: Vec<HashSet<u32>> = vec![HashSet::new(); n];
    for &(u, v, c) in edges {
        seen[u].insert(c);
        seen[v].insert(c);
    }
    seen.iter().map(HashSet::len).collect()
}

pub fn has_rainbow_triangle(n: usize, edges: &[(usize, usize, u32)]) -> bool {
    subsets(n, 3).iter().any(|t| {
        let (a, b, c) = (color_of(edges, t[0], t[1]), color_of(edges, t[1], t[2]), color_of(edges, t[0], t[2]));
        matches!((a, b, c), (Some(x), Some(y), Some(z)) if x != y && y != z && x != z)
    })
}

pub fn is_proper(n: usize, edges: &[(usize, usize, u32)]) -> bool {
    let degrees = {
        let mut d = vec![0usize; n];
        for &(u, v, _) in edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    };
    color_degrees(n, edges) == degrees
}

/// Smallest edge bitmask over all relabelings: equal iff isomorphic.
pub fn brute_canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let bit = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        1u64 << (b * (b - 1) / 2 + a)
    };
    perms
        .iter()
        .map(|p| edges.iter().map(|&(u, v)| bit(p[u], p[v])).sum())
        .min()
        .expect("at least one permutation")
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// One labeled representative (smallest mask) per isomorphism class of
/// graphs on `n` vertices with minimum degree at least `d`.
pub fn hosts_with_min_degree(n: usize, d: usize) -> Vec<Vec<(usize, usize)>> {
    let all = pairs(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << all.len()) {
        let edges: Vec<(usize, usize)> = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&x| x < d) {
            continue;
        }
        if seen.insert(brute_canonical(&edges, &perms)) {
            out.push(edges);
        }
    }
    out
}

// ---- rainbow patterns ----

pub fn naive_rainbow_clique(g: &EdgeColoredGraph, s: usize) -> bool {
    let edges: Vec<_> = g.edges().collect();
    subsets(g.n(), s).iter().any(|set| rainbow_clique_at(&edges, set))
}

pub fn rainbow_clique_at(edges: &[(usize, usize, u32)], set: &[usize]) -> bool {
    let mut colors = HashSet::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            match color_of(edges, u, v) {
                Some(c) if colors.insert(c) => {}
                _ => return false,
            }
        }
    }
    true
}

/// `parts[i]` lists the vertices of part `i`; pairs across parts must be
/// edges with pairwise distinct colors.
pub fn rainbow_join_at(edges: &[(usize, usize, u32)], parts: &[Vec<usize>]) -> bool {
    let mut colors = HashSet::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for &u in &parts[i] {
                for &v in &parts[j] {
                    match color_of(edges, u, v) {
                        Some(c) if colors.insert(c) => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// Every way to label `set` with part ids: `r` singleton parts then
/// `s − r` parts of size `l`.
fn join_assignments(set: &[usize], r: usize, s: usize, l: usize) -> Vec<Vec<Vec<usize>>> {
    let sizes: Vec<usize> = (0..s).map(|i| if i < r { 1 } else { l }).collect();
    let mut out = Vec::new();
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); s];
    fn go(i: usize, set: &[usize], sizes: &[usize], parts: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == set.len() {
            out.push(parts.clone());
            return;
        }
        for p in 0..sizes.len() {
            if parts[p].len() < sizes[p] {
                parts[p].push(set[i]);
                go(i + 1, set, sizes, parts, out);
                parts[p].pop();
            }
        }
    }
    go(0, set, &sizes, &mut parts, &mut out);
    out
}

pub fn naive_rainbow_join(g: &EdgeColoredGraph, r: usize, s: usize, l: usize) -> bool {
    let edges: Vec<_> = g.edges().collect();
    let size = r + (s - r) * l;
    subsets(g.n(), size)
        .iter()
        .any(|set| join_assignments(set, r, s, l).iter().any(|parts| rainbow_join_at(&edges, parts)))
}

// ---- near-cliques ----

/// All matchings with exactly `r` pairs on `set`.
pub fn matchings(set: &[usize], r: usize) -> Vec<Vec<(usize, usize)>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            let rest: Vec<usize> = set[i + 1..].iter().copied().filter(|&x| x != set[j]).collect();
            for mut m in matchings(&rest, r - 1) {
                m.insert(0, (set[i], set[j]));
                out.push(m);
            }
        }
    }
    out
}

/// The doubled clique on `set` with the pairs of `light` at multiplicity 1
/// sits in `m` (pairwise `≥`), or equals `m[set]` when `induced`.
pub fn multigraph_placement(m: &StandardMultigraph, set: &[usize], light: &[(usize, usize)], induced: bool) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            let want = if light.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) { 1 } else { 2 };
            let have = m.multiplicity(u, v);
            if (induced && have != want) || have < want {
                return false;
            }
        }
    }
    true
}

pub fn naive_multigraph_pattern(m: &StandardMultigraph, s: usize, r: usize, induced: bool) -> bool {
    subsets(m.n(), s)
        .iter()
        .any(|set| matchings(set, r).iter().any(|light| multigraph_placement(m, set, light, induced)))
}

/// Arc set of the complete digraph on `set` minus `missing`.
pub fn digraph_placement(d: &SimpleDigraph, set: &[usize], missing: &[(usize, usize)], induced: bool) -> bool {
    for &u in set {
        for &v in set {
            if u == v {
                continue;
            }
            let want = !missing.contains(&(u, v));
            let have = d.has_arc(u, v);
            if (induced && have != want) || (want && !have) {
                return false;
            }
        }
    }
    true
}

/// Missing-arc sets of every placement: an optional cyclic triangle plus an
/// oriented `r`-matching on the remaining vertices.
pub fn digraph_missing_sets(set: &[usize], r: usize, with_triangle: bool) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let triangles: Vec<Option<[usize; 3]>> = if with_triangle {
        subsets(set.len(), 3)
            .into_iter()
            .flat_map(|t| {
                let [a, b, c] = [set[t[0]], set[t[1]], set[t[2]]];
                [Some([a, b, c]), Some([a, c, b])]
            })
            .collect()
    } else {
        vec![None]
    };
    for tri in triangles {
        let rest: Vec<usize> = set.iter().copied().filter(|v| tri.is_none_or(|t| !t.contains(v))).collect();
        for m in matchings(&rest, r) {
            // each matched pair can point either way
            for mask in 0u32..(1 << r) {
                let mut missing = Vec::new();
                if let Some([a, b, c]) = tri {
                    missing.extend([(a, b), (b, c), (c, a)]);
                }
                for (i, &(a, b)) in m.iter().enumerate() {
                    missing.push(if mask >> i & 1 == 1 { (b, a) } else { (a, b) });
                }
                out.push(missing);
            }
        }
    }
    out
}

pub fn naive_digraph_pattern(d: &SimpleDigraph, s: usize, r: usize, with_triangle: bool, induced: bool) -> bool {
    subsets(d.n(), s).iter().any(|set| {
        digraph_missing_sets(set, r, with_triangle)
            .iter()
            .any(|missing| digraph_placement(d, set, missing, induced))
    })
}

pub fn naive_cyclic_triangle(d: &SimpleDigraph) -> bool {
    subsets(d.n(), 3).iter().any(|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a)) || (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a))
    })
}
