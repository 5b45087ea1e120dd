//! Desk-scale verification campaigns: exhaustive and pruned enumeration of
//! small colored graphs and multigraphs, plus the multigraph structure
//! predicates used by the density arguments.
//!
//! Campaign results are [`VerificationReport`]s. A report never claims more
//! than was checked: budget exhaustion is a verdict of its own, and every
//! stored counterexample carries the rule it breaks so it can be re-checked
//! from the serialized instance alone.

pub mod colorings;
mod extremal;
pub mod iso;
mod li;
mod peel;
mod suite;
mod turan;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{Color, EdgeColoredGraph, Rational, SimpleGraph, StandardMultigraph};

pub use extremal::{extremality_check, verify_extremal_witness, Extremality, EXACT_EXTREMAL_MAX_N};
pub use li::{check_li_triangle, li_violation, LiMode};
pub use peel::{peel_hypothesis_certified, peel_to_min_degree, Peeled};
pub use suite::property_suite;
pub use turan::{check_multigraph_turan, turan_threshold_exceeded, TuranMode, TuranStatement};

/// Largest `n` for exhaustive coloring campaigns.
pub const MAX_EXHAUSTIVE_COLORED_N: usize = 5;
/// Largest `n` for pruned coloring campaigns.
pub const MAX_PRUNED_COLORED_N: usize = 8;
/// Largest `n` for exhaustive multigraph campaigns (`3^(n choose 2)` hosts).
pub const MAX_EXHAUSTIVE_MULTIGRAPH_N: usize = 5;
/// Extremal witnesses kept verbatim in a report; the rest are only counted.
pub const STORED_WITNESS_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("n = {n} is beyond the {what} bound of {bound}")]
    Infeasible { n: usize, bound: usize, what: &'static str },
    #[error("invalid campaign parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;

/// Host class of an enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostClass {
    /// Every `n`-vertex graph up to isomorphism.
    AllGraphs,
    FixedGraph(SimpleGraph),
    /// Every standard multigraph on `n` labeled vertices.
    AllMultigraphs,
}

/// What an enumeration ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub host: HostClass,
    /// Minimum color degree, or minimum multidegree for multigraph hosts.
    pub constraint: Rational,
    /// One coloring per set partition of the edge set.
    pub dedup: bool,
    pub budget: Option<u64>,
}

impl EnumerationSpec {
    /// Checks `n` against the documented feasibility bound; `pruned`
    /// selects the looser bound for colorings explored with cuts.
    pub fn validate(&self, pruned: bool) -> Result<()> {
        let (bound, what) = match self.host {
            HostClass::AllMultigraphs => (MAX_EXHAUSTIVE_MULTIGRAPH_N, "exhaustive multigraph"),
            _ if pruned => (MAX_PRUNED_COLORED_N, "pruned coloring"),
            _ => (MAX_EXHAUSTIVE_COLORED_N, "exhaustive coloring"),
        };
        if self.n > bound {
            return Err(VerifyError::Infeasible { n: self.n, bound, what });
        }
        if let HostClass::FixedGraph(g) = &self.host {
            if g.n() != self.n {
                return Err(VerifyError::InvalidParameters(format!(
                    "fixed host has {} vertices, enumeration asks for {}",
                    g.n(),
                    self.n
                )));
            }
        }
        if self.constraint < Rational::from_integer(0) {
            return Err(VerifyError::InvalidParameters("constraint must be nonnegative".into()));
        }
        Ok(())
    }

    /// Smallest integer meeting the (rational) constraint.
    pub fn integer_constraint(&self) -> usize {
        self.constraint.ceil().to_integer().max(0) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    ExhaustedBudget,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::ExhaustedBudget => "exhausted-budget",
        }
    }
}

/// Serialized instance, small enough to archive verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceRecord {
    Colored { n: usize, edges: Vec<(usize, usize, Color)> },
    Multigraph { n: usize, edges: Vec<(usize, usize, u8)> },
}

impl InstanceRecord {
    pub fn colored(g: &EdgeColoredGraph) -> Self {
        InstanceRecord::Colored { n: g.n(), edges: g.edges().collect() }
    }

    pub fn multigraph(m: &StandardMultigraph) -> Self {
        InstanceRecord::Multigraph { n: m.n(), edges: m.edges().collect() }
    }

    pub fn to_colored(&self) -> Option<EdgeColoredGraph> {
        match self {
            InstanceRecord::Colored { n, edges } => EdgeColoredGraph::new(*n, edges.iter().copied()).ok(),
            _ => None,
        }
    }

    pub fn to_multigraph(&self) -> Option<StandardMultigraph> {
        match self {
            InstanceRecord::Multigraph { n, edges } => StandardMultigraph::new(*n, edges.iter().copied()).ok(),
            _ => None,
        }
    }
}

/// Instance breaking the rule named by `rule`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub rule: String,
    pub instance: InstanceRecord,
    pub detail: String,
}

/// Instance recorded as evidence rather than as a violation: sharpness
/// examples, rainbow-free survivors, archived exceptions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledInstance {
    pub label: String,
    pub instance: InstanceRecord,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
}

impl CheckTally {
    pub fn merge(&mut self, other: &CheckTally) {
        self.passed += other.passed;
        self.skipped += other.skipped;
        self.failed += other.failed;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub params: BTreeMap<String, String>,
    pub instances_examined: u64,
    pub counterexamples: Vec<Counterexample>,
    /// At most [`STORED_WITNESS_CAP`] instances, in enumeration order.
    pub extremal_witnesses: Vec<LabeledInstance>,
    /// Number of witnesses per label, including those not stored.
    pub witness_counts: BTreeMap<String, u64>,
    pub checks: BTreeMap<String, CheckTally>,
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(campaign: &str) -> Self {
        VerificationReport {
            campaign: campaign.to_string(),
            params: BTreeMap::new(),
            instances_examined: 0,
            counterexamples: Vec::new(),
            extremal_witnesses: Vec::new(),
            witness_counts: BTreeMap::new(),
            checks: BTreeMap::new(),
            nodes: 0,
            elapsed_ms: 0,
            verdict: Verdict::Confirmed,
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn witness(&mut self, label: &str, instance: InstanceRecord) {
        *self.witness_counts.entry(label.to_string()).or_default() += 1;
        if self.extremal_witnesses.len() < STORED_WITNESS_CAP {
            self.extremal_witnesses.push(LabeledInstance { label: label.to_string(), instance });
        }
    }

    pub fn total_witnesses(&self) -> u64 {
        self.witness_counts.values().sum()
    }

    /// Sets the verdict from the counterexamples and the exhaustion flag.
    pub fn conclude(&mut self, exhausted: bool) {
        self.verdict = if !self.counterexamples.is_empty() {
            Verdict::Refuted
        } else if exhausted {
            Verdict::ExhaustedBudget
        } else {
            Verdict::Confirmed
        };
    }

    /// Re-checks every stored counterexample from its serialized form.
    /// Returns the indices of those that do not violate their rule.
    pub fn revalidate(&self) -> Vec<usize> {
        self.counterexamples
            .iter()
            .enumerate()
            .filter(|(_, cx)| !counterexample_holds(cx))
            .map(|(i, _)| i)
            .collect()
    }

    /// Line-oriented `key=value` summary.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "campaign={} verdict={} counterexamples={} instances={} witnesses={} nodes={} elapsed_ms={}\n",
            self.campaign,
            self.verdict.as_str(),
            self.counterexamples.len(),
            self.instances_examined,
            self.total_witnesses(),
            self.nodes,
            self.elapsed_ms
        );
        for (k, v) in &self.params {
            out.push_str(&format!("param {k}={v}\n"));
        }
        for (name, t) in &self.checks {
            out.push_str(&format!("check={name} passed={} skipped={} failed={}\n", t.passed, t.skipped, t.failed));
        }
        for (label, count) in &self.witness_counts {
            out.push_str(&format!("witness label={label:?} count={count}\n"));
        }
        for cx in &self.counterexamples {
            out.push_str(&format!("counterexample rule={} detail={:?}\n", cx.rule, cx.detail));
        }
        for note in &self.notes {
            out.push_str(&format!("note {note}\n"));
        }
        out
    }
}

/// Per-trial seed so that trial `i` does not depend on the order trials run in.
pub(crate) fn trial_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn counterexample_holds(cx: &Counterexample) -> bool {
    if let Some(rule) = cx.rule.strip_prefix("li-") {
        return match cx.instance.to_colored() {
            Some(g) => li_violation(&g).is_some_and(|r| r == rule),
            None => false,
        };
    }
    if let Some(rest) = cx.rule.strip_prefix("turan-") {
        let Some(m) = cx.instance.to_multigraph() else { return false };
        return turan::violation_from_rule(rest, &m);
    }
    if cx.rule.starts_with("suite-") {
        return suite::violation_holds(&cx.rule, &cx.instance, &cx.detail);
    }
    false
}
