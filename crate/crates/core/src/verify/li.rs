//! Rainbow triangles under a color-degree condition: every coloring with
//! `δ^c > n/2` has one, and the rainbow-triangle-free colorings with
//! `δ^c ≥ n/2` are proper colorings of `K_{n/2,n/2}` (for `n ≠ 4`).

use std::time::Instant;

use super::colorings::{enumerate_colorings, has_rainbow_triangle, is_proper, ColoringOptions};
use super::iso::graphs_with_min_degree;
use super::{
    Counterexample, InstanceRecord, Result, VerificationReport, VerifyError, MAX_EXHAUSTIVE_COLORED_N,
    MAX_PRUNED_COLORED_N, STORED_WITNESS_CAP,
};
use crate::graph::{EdgeColoredGraph, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiMode {
    /// Visit every coloring with `δ^c ≥ ⌈n/2⌉` and test it for a rainbow
    /// triangle.
    Exhaustive,
    /// Cut partial colorings as soon as they contain a rainbow triangle;
    /// only the rainbow-triangle-free colorings are visited.
    Pruned,
}

fn is_balanced_complete_bipartite(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 || n % 2 == 1 || g.edge_count() != n * n / 4 {
        return false;
    }
    let side: Vec<bool> = (0..n).map(|v| g.has_edge(0, v)).collect();
    if side.iter().filter(|&&s| s).count() != n / 2 {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == (side[u] != side[v])))
}

fn exception_host(g: &SimpleGraph) -> Option<&'static str> {
    match (g.n(), g.edge_count()) {
        (4, 6) => Some("K4"),
        (4, 5) => Some("K4-e"),
        _ => None,
    }
}

/// Which statement `g` breaks, if any: `"rainbow-triangle"` when
/// `δ^c > n/2` without a rainbow triangle, `"characterization"` when a
/// rainbow-triangle-free coloring with `δ^c ≥ n/2` is not a proper
/// `K_{n/2,n/2}` and not one of the improper `n = 4` colorings of `K_4` or
/// `K_4 − e`.
pub fn li_violation(g: &EdgeColoredGraph) -> Option<&'static str> {
    let n = g.n();
    if n == 0 || has_rainbow_triangle(g) {
        return None;
    }
    let dc = g.min_color_degree();
    if 2 * dc > n {
        return Some("rainbow-triangle");
    }
    if 2 * dc < n {
        return None;
    }
    let host = g.underlying();
    let conforming = is_proper(g) && is_balanced_complete_bipartite(&host);
    let exception = n == 4 && !is_proper(g) && exception_host(&host).is_some();
    (!conforming && !exception).then_some("characterization")
}

fn survivor_label(g: &EdgeColoredGraph) -> String {
    let host = g.underlying();
    if is_proper(g) && is_balanced_complete_bipartite(&host) {
        format!("proper K{},{}", g.n() / 2, g.n() / 2)
    } else if let (4, false, Some(name)) = (g.n(), is_proper(g), exception_host(&host)) {
        format!("improper {name}")
    } else {
        format!("other m={}", host.edge_count())
    }
}

#[derive(Default)]
struct Acc {
    examined: u64,
    with_triangle: u64,
    survivors: Vec<(String, InstanceRecord)>,
    survivor_counts: std::collections::BTreeMap<String, u64>,
    counterexamples: Vec<Counterexample>,
}

/// Runs the campaign over every `n`-vertex graph (up to isomorphism) of
/// minimum degree at least `⌈n/2⌉` and every coloring of it with
/// `δ^c ≥ ⌈n/2⌉`, up to color relabeling.
pub fn check_li_triangle(n: usize, mode: LiMode, threads: usize, budget: Option<u64>) -> Result<VerificationReport> {
    let bound = match mode {
        LiMode::Exhaustive => MAX_EXHAUSTIVE_COLORED_N,
        LiMode::Pruned => MAX_PRUNED_COLORED_N,
    };
    if n > bound {
        let what = if mode == LiMode::Exhaustive { "exhaustive coloring" } else { "pruned coloring" };
        return Err(VerifyError::Infeasible { n, bound, what });
    }
    if n < 3 {
        return Err(VerifyError::InvalidParameters(format!("n = {n}: no triangles below 3 vertices")));
    }
    let start = Instant::now();
    let t = n.div_ceil(2);
    let hosts = graphs_with_min_degree(n, t);
    let mut report = VerificationReport::new("li-triangle");
    report.param("n", n);
    report.param("mode", if mode == LiMode::Exhaustive { "exhaustive" } else { "pruned" });
    report.param("min_color_degree", t);
    report.param("hosts", hosts.len());
    if let Some(b) = budget {
        report.param("budget", b);
    }

    let mut exhausted = false;
    let mut nodes = 0u64;
    let mut examined = 0u64;
    let mut with_triangle = 0u64;
    for host in &hosts {
        let opts = ColoringOptions {
            min_color_degree: t,
            rainbow_triangle_cut: mode == LiMode::Pruned,
            dedup: true,
            node_cap: budget.map(|b| b.saturating_sub(nodes)),
            threads: threads.max(1),
            split_depth: 6,
        };
        let (accs, stats) = enumerate_colorings(host, &opts, Acc::default, |acc: &mut Acc, leaf| {
            acc.examined += 1;
            let g = leaf.to_graph();
            if has_rainbow_triangle(&g) {
                acc.with_triangle += 1;
                return;
            }
            if let Some(rule) = li_violation(&g) {
                acc.counterexamples.push(Counterexample {
                    rule: format!("li-{rule}"),
                    detail: format!("no rainbow triangle, min color degree {}", g.min_color_degree()),
                    instance: InstanceRecord::colored(&g),
                });
                return;
            }
            let label = survivor_label(&g);
            *acc.survivor_counts.entry(label.clone()).or_default() += 1;
            if acc.survivors.len() < STORED_WITNESS_CAP {
                acc.survivors.push((label, InstanceRecord::colored(&g)));
            }
        });
        nodes += stats.nodes;
        exhausted |= stats.exhausted;
        for acc in accs {
            examined += acc.examined;
            with_triangle += acc.with_triangle;
            report.counterexamples.extend(acc.counterexamples);
            for (label, count) in acc.survivor_counts {
                *report.witness_counts.entry(label).or_default() += count;
            }
            for (label, instance) in acc.survivors {
                if report.extremal_witnesses.len() < STORED_WITNESS_CAP {
                    report.extremal_witnesses.push(super::LabeledInstance { label, instance });
                }
            }
        }
        if exhausted {
            break;
        }
    }
    report.instances_examined = examined;
    report.nodes = nodes;
    let survivors = examined - with_triangle;
    let failed = report.counterexamples.len() as u64;
    report.checks.insert(
        "rainbow-triangle-or-characterized".into(),
        super::CheckTally { passed: examined - failed, skipped: 0, failed },
    );
    report.notes.push(format!("checked n = {n} only"));
    report.notes.push(format!(
        "{} colorings visited, {survivors} without a rainbow triangle",
        if mode == LiMode::Exhaustive { "all" } else { "rainbow-triangle-free" }
    ));
    report.conclude(exhausted);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn violation_rules() {
        // monochromatic triangle: δ^c = 1 ≤ 3/2
        let mono = EdgeColoredGraph::new(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        assert_eq!(li_violation(&mono), None);
        // proper C4 = K_{2,2}
        let c4 = EdgeColoredGraph::new(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1)]).unwrap();
        assert_eq!(li_violation(&c4), None);
        // two-colored C6 is proper but not K_{3,3}; δ^c = 2 < 3
        let c6 = EdgeColoredGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6, (i % 2) as u32))).unwrap();
        assert_eq!(li_violation(&c6), None);
        // improper K4 − e, δ^c = 2, no rainbow triangle: archived exception
        let k4e = EdgeColoredGraph::new(4, [(0, 2, 1), (1, 2, 2), (0, 1, 1), (0, 3, 3), (1, 3, 1)]).unwrap();
        assert!(!has_rainbow_triangle(&k4e));
        assert_eq!(k4e.min_color_degree(), 2);
        assert_eq!(li_violation(&k4e), None);
    }

    #[test]
    fn n4_survivors_are_c4_or_exceptions() {
        let report = check_li_triangle(4, LiMode::Exhaustive, 1, None).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        let labels: Vec<&String> = report.witness_counts.keys().collect();
        assert_eq!(labels, vec!["improper K4", "improper K4-e", "proper K2,2"]);
    }

    #[test]
    fn modes_agree_at_n4_and_n5() {
        for n in [4, 5] {
            let a = check_li_triangle(n, LiMode::Exhaustive, 1, None).unwrap();
            let b = check_li_triangle(n, LiMode::Pruned, 2, None).unwrap();
            assert_eq!(a.verdict, b.verdict);
            assert_eq!(a.witness_counts, b.witness_counts);
            assert_eq!(a.extremal_witnesses, b.extremal_witnesses);
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let report = check_li_triangle(5, LiMode::Exhaustive, 1, Some(50)).unwrap();
        assert_eq!(report.verdict, Verdict::ExhaustedBudget);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            check_li_triangle(6, LiMode::Exhaustive, 1, None),
            Err(VerifyError::Infeasible { bound: 5, .. })
        ));
        assert!(check_li_triangle(9, LiMode::Pruned, 1, None).is_err());
    }
}
