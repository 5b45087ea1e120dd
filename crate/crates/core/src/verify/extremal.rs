//! `(K_s, β)`-extremality: `s − 1` disjoint vertex sets, each of size at
//! least `n/(s−1) − βn` and spanning fewer than `βn²` edges.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::graph::{Rational, SimpleGraph};

/// Largest order decided by exhaustive search.
pub const EXACT_EXTREMAL_MAX_N: usize = 16;
const RESTARTS: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extremality {
    /// Verified witness parts, each sorted, ordered by smallest vertex.
    Extremal(Vec<Vec<usize>>),
    /// Exhaustive search proved there is no witness.
    NotExtremal,
    /// Local search found no witness and the order is beyond exact search.
    Unknown,
}

struct Limits {
    parts: usize,
    /// Every part needs at least this many vertices.
    size: usize,
    /// Every part spans at most this many edges.
    max_edges: usize,
}

fn limits(n: usize, s: usize, beta: Rational) -> Option<Limits> {
    let nn = Rational::from_integer(n as i64);
    let size = (nn / Rational::from_integer(s as i64 - 1) - beta * nn).ceil().to_integer().max(0) as usize;
    let cap = beta * nn * nn;
    if cap <= Rational::from_integer(0) {
        return None;
    }
    // largest integer strictly below βn²
    let max_edges = (cap.ceil().to_integer() - 1) as usize;
    Some(Limits { parts: s - 1, size, max_edges })
}

/// Re-checks a witness against the two defining inequalities.
pub fn verify_extremal_witness(g: &SimpleGraph, s: usize, beta: Rational, parts: &[Vec<usize>]) -> bool {
    let n = g.n();
    if s < 2 || parts.len() != s - 1 {
        return false;
    }
    let nn = Rational::from_integer(n as i64);
    let need = nn / Rational::from_integer(s as i64 - 1) - beta * nn;
    let mut seen = VertexSet::new(n);
    for part in parts {
        for &v in part {
            if v >= n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        let set = VertexSet::from_iter(n, part.iter().copied());
        if Rational::from_integer(part.len() as i64) < need
            || Rational::from_integer(g.edges_within(&set) as i64) >= beta * nn * nn
        {
            return false;
        }
    }
    true
}

struct Exact<'a> {
    g: &'a SimpleGraph,
    lim: &'a Limits,
    used: VertexSet,
    parts: Vec<Vec<usize>>,
}

impl Exact<'_> {
    fn place_part(&mut self, prev_min: Option<usize>) -> bool {
        if self.parts.len() == self.lim.parts {
            return true;
        }
        let n = self.g.n();
        let free = n - self.used.len();
        if free < (self.lim.parts - self.parts.len()) * self.lim.size {
            return false;
        }
        let start = prev_min.map_or(0, |m| m + 1);
        for first in start..n {
            if self.used.contains(first) {
                continue;
            }
            if self.grow(vec![first], 0) {
                return true;
            }
        }
        false
    }

    fn grow(&mut self, part: Vec<usize>, edges: usize) -> bool {
        if part.len() == self.lim.size {
            for &v in &part {
                self.used.insert(v);
            }
            let first = part[0];
            self.parts.push(part);
            if self.place_part(Some(first)) {
                return true;
            }
            let part = self.parts.pop().expect("just pushed");
            for &v in &part {
                self.used.remove(v);
            }
            return false;
        }
        let last = *part.last().expect("nonempty");
        for v in last + 1..self.g.n() {
            if self.used.contains(v) {
                continue;
            }
            let added = part.iter().filter(|&&u| self.g.has_edge(u, v)).count();
            if edges + added > self.lim.max_edges {
                continue;
            }
            let mut next = part.clone();
            next.push(v);
            if self.grow(next, edges + added) {
                return true;
            }
        }
        false
    }
}

fn excess(g: &SimpleGraph, part: &[usize], max_edges: usize) -> usize {
    let inside: usize = part
        .iter()
        .enumerate()
        .map(|(i, &u)| part[i + 1..].iter().filter(|&&v| g.has_edge(u, v)).count())
        .sum();
    inside.saturating_sub(max_edges)
}

fn local_search(g: &SimpleGraph, lim: &Limits, seed: u64) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut used = vec![false; n];
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(lim.parts);
    for _ in 0..lim.parts {
        let mut part = Vec::with_capacity(lim.size);
        while part.len() < lim.size {
            let v = *order
                .iter()
                .filter(|&&v| !used[v])
                .min_by_key(|&&v| part.iter().filter(|&&u| g.has_edge(u, v)).count())
                .expect("enough vertices");
            used[v] = true;
            part.push(v);
        }
        parts.push(part);
    }
    let cost = |parts: &[Vec<usize>]| parts.iter().map(|p| excess(g, p, lim.max_edges)).sum::<usize>();
    let mut current = cost(&parts);
    while current > 0 {
        let mut improved = false;
        'moves: for i in 0..parts.len() {
            for slot in 0..parts[i].len() {
                let x = parts[i][slot];
                for y in 0..n {
                    if y == x {
                        continue;
                    }
                    let owner = if used[y] { parts.iter().position(|p| p.contains(&y)) } else { None };
                    if owner == Some(i) {
                        continue;
                    }
                    let mut trial = parts.clone();
                    trial[i][slot] = y;
                    if let Some(j) = owner {
                        let at = trial[j].iter().position(|&w| w == y).expect("owner holds y");
                        trial[j][at] = x;
                    }
                    let c = cost(&trial);
                    if c < current {
                        if owner.is_none() {
                            used[x] = false;
                            used[y] = true;
                        }
                        parts = trial;
                        current = c;
                        improved = true;
                        break 'moves;
                    }
                }
            }
        }
        if !improved {
            return None;
        }
    }
    Some(parts)
}

fn normalize(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort();
    parts
}

/// Decides `(K_s, β)`-extremality. Exhaustive for `n ≤ 16`; above that,
/// seeded restarts of a swap local search, reporting
/// [`Extremality::Unknown`] when nothing is found. Every returned witness
/// has passed [`verify_extremal_witness`].
pub fn extremality_check(g: &SimpleGraph, s: usize, beta: Rational) -> Extremality {
    assert!(s >= 2, "extremality needs s >= 2");
    let n = g.n();
    let Some(lim) = limits(n, s, beta) else {
        return Extremality::NotExtremal;
    };
    if lim.size == 0 {
        return Extremality::Extremal(vec![Vec::new(); lim.parts]);
    }
    if lim.parts * lim.size > n {
        return Extremality::NotExtremal;
    }
    let found = if n <= EXACT_EXTREMAL_MAX_N {
        let mut exact = Exact { g, lim: &lim, used: VertexSet::new(n), parts: Vec::new() };
        if !exact.place_part(None) {
            return Extremality::NotExtremal;
        }
        Some(exact.parts)
    } else {
        (0..RESTARTS).find_map(|seed| local_search(g, &lim, seed))
    };
    match found.map(normalize) {
        Some(parts) => {
            assert!(verify_extremal_witness(g, s, beta, &parts), "search returned an invalid witness");
            Extremality::Extremal(parts)
        }
        None => Extremality::Unknown,
    }
}
