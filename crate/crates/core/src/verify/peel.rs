//! Peeling low-degree vertices off a dense standard multigraph.

use crate::bitset::VertexSet;
use crate::graph::{Rational, StandardMultigraph};

/// Output of [`peel_to_min_degree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peeled {
    /// Induced multigraph on `kept`, relabeled `0..kept.len()`.
    pub multigraph: StandardMultigraph,
    /// Surviving original vertices, ascending.
    pub kept: Vec<usize>,
    /// Removed original vertices, in removal order.
    pub removed: Vec<usize>,
}

/// Repeatedly deletes a vertex of degree below `2(d − β)·k`, where `k` is
/// the current order, until none is left. The victim is the vertex of
/// lowest current degree, ties broken by lowest id. Returns the first
/// iterate meeting the bound, possibly the empty multigraph.
pub fn peel_to_min_degree(m: &StandardMultigraph, d: Rational, beta: Rational) -> Peeled {
    let n = m.n();
    let mut alive = VertexSet::full(n);
    let mut degree: Vec<usize> = (0..n).map(|v| m.degree(v)).collect();
    let mut removed = Vec::new();
    let two = Rational::from_integer(2);
    loop {
        let k = alive.len();
        if k == 0 {
            break;
        }
        let bound = two * (d - beta) * Rational::from_integer(k as i64);
        let victim = alive.iter().min_by_key(|&v| (degree[v], v)).expect("nonempty");
        if Rational::from_integer(degree[victim] as i64) >= bound {
            break;
        }
        alive.remove(victim);
        removed.push(victim);
        for w in alive.iter() {
            degree[w] -= m.multiplicity(victim, w) as usize;
        }
    }
    let kept = alive.to_vec();
    Peeled { multigraph: m.induced(&kept), kept, removed }
}

/// Sufficient check that every induced `M'` on `m' ≥ (1 − β)n` vertices has
/// `e(M') ≤ d·m'²`: deleting `k` vertices removes at least the sum of the
/// `k` smallest degrees minus `k(k − 1)` (the most the deleted set can span),
/// so `e(M) − Σ_k + k(k − 1) ≤ d(n − k)²` for every admissible `k` suffices.
pub fn peel_hypothesis_certified(m: &StandardMultigraph, d: Rational, beta: Rational) -> bool {
    let n = m.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| m.degree(v)).collect();
    degrees.sort_unstable();
    let e = m.edge_count() as i64;
    let nn = Rational::from_integer(n as i64);
    let mut smallest = 0i64;
    for k in 0..=n {
        let order = Rational::from_integer((n - k) as i64);
        if order < (Rational::from_integer(1) - beta) * nn {
            break;
        }
        let bound = e - smallest + (k * k.saturating_sub(1)) as i64;
        if Rational::from_integer(bound) > d * order * order {
            return false;
        }
        if k < n {
            smallest += degrees[k] as i64;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random_multigraph;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn already_dense_is_unchanged() {
        let m = StandardMultigraph::complete_heavy(6);
        let out = peel_to_min_degree(&m, r(1, 2), r(1, 10));
        assert_eq!(out.multigraph, m);
        assert!(out.removed.is_empty());
    }

    #[test]
    fn star_loses_leaves_first() {
        // heavy triangle 0,1,2 plus pendant light leaves 3,4 on vertex 0
        let m = StandardMultigraph::new(5, [(0, 1, 2), (1, 2, 2), (0, 2, 2), (0, 3, 1), (0, 4, 1)]).unwrap();
        let out = peel_to_min_degree(&m, r(3, 4), r(1, 4));
        assert_eq!(out.removed, vec![3, 4]);
        assert_eq!(out.kept, vec![0, 1, 2]);
        assert_eq!(out.multigraph, StandardMultigraph::complete_heavy(3));
    }

    #[test]
    fn hopeless_bound_peels_everything() {
        let m = StandardMultigraph::complete_heavy(4);
        let out = peel_to_min_degree(&m, r(2, 1), r(1, 4));
        assert_eq!(out.kept, Vec::<usize>::new());
        assert_eq!(out.multigraph.n(), 0);
        assert_eq!(out.removed, vec![0, 1, 2, 3]);
    }

    #[test]
    fn dense_multigraph_keeps_most_vertices() {
        // random dense M on 60 vertices with one sparse vertex planted
        let n = 60;
        let beta = r(1, 4);
        let base = random_multigraph(n, [0, 1, 8], 17).unwrap();
        let m = StandardMultigraph::from_fn(n, |u, v| if u == 0 { v as u8 % 2 } else { base.multiplicity(u, v) })
            .unwrap();
        let e = m.edge_count() as i64;
        let n2 = (n * n) as i64;
        // smallest d the certificate accepts, to a 1/1000 grid
        let d = (0..=1000)
            .map(|i| r(i, 1000))
            .find(|&d| d >= r(e, n2) && peel_hypothesis_certified(&m, d, beta))
            .expect("some d works");
        let alpha = d - r(e, n2);
        assert!(alpha < beta * beta, "alpha = {alpha}");
        let out = peel_to_min_degree(&m, d, beta);
        assert_eq!(out.removed, vec![0], "only the planted vertex goes");
        assert!(Rational::from_integer(out.kept.len() as i64) >= (Rational::from_integer(1) - beta) * r(n as i64, 1));
        let k = out.kept.len() as i64;
        assert!(r(out.multigraph.min_degree() as i64, 1) >= r(2, 1) * (d - beta) * r(k, 1));
    }
}
