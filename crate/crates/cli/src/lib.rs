//! The `rf` command line: generate instances, search them for patterns,
//! apply the reductions and run the verification campaigns.
//!
//! Everything goes through [`run`], which takes the argument list and two
//! writers and returns the process exit code, so the whole surface can be
//! tested in-process.

pub mod format;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::constructions::{self, ConstructionParams};
use rainbow_core::patterns::{Host, MatchMode, PartStructure, PatternSpec, SearchLimits, SearchOutcome, Witness};
use rainbow_core::transforms::{build_gcm_digraph, digraph_to_multigraph, edge_minimal_reduce, two_cycle_graph, GcmCap};
use rainbow_core::verify::{
    check_li_triangle, check_multigraph_turan, property_suite, LiMode, TuranMode, TuranStatement, Verdict,
    VerificationReport, VerifyError,
};
use rainbow_core::{EdgeColoredGraph, Rational, SimpleDigraph, StandardMultigraph};
use thiserror::Error;

pub use format::{parse_instance, FormatError, Instance};

/// Exit codes. Stable: scripts depend on them.
pub mod exit {
    /// Pattern found, campaign confirmed, or command succeeded.
    pub const OK: i32 = 0;
    /// Pattern exhaustively absent, or campaign refuted.
    pub const ABSENT: i32 = 1;
    /// Node budget ran out before an answer.
    pub const BUDGET: i32 = 2;
    /// Bad arguments, bad parameters or an unparsable instance file.
    pub const USAGE: i32 = 64;
    /// The instance kind does not fit the requested operation.
    pub const TYPE_MISMATCH: i32 = 65;
    /// A file could not be read or written.
    pub const IO: i32 = 74;
}

/// Version tag written into every JSON report.
pub const REPORT_SCHEMA: &str = "rf-report/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: FormatError },
    #[error("{0}")]
    TypeMismatch(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => exit::USAGE,
            CliError::TypeMismatch(_) => exit::TYPE_MISMATCH,
            CliError::Io { .. } => exit::IO,
        }
    }
}

type Result<T, E = CliError> = std::result::Result<T, E>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Parser)]
#[command(name = "rf", version, about = "Edge-colored graphs, rainbow patterns and small-n verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named construction or a seeded random instance.
    Generate {
        kind: GenerateKind,
        /// Parameters as key=value, e.g. `n=7` or `parts=3 L=2`.
        params: Vec<String>,
        /// Output file; the instance goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search an instance file for one pattern.
    Search(SearchArgs),
    /// Run a verification campaign and emit its report.
    Verify {
        campaign: Campaign,
        /// Parameters as key=value, e.g. `n=5` or `trials=10000 seed=1`.
        params: Vec<String>,
        #[arg(long, env = "RF_THREADS", default_value_t = 1)]
        threads: usize,
        /// Node budget (li-triangle only).
        #[arg(long)]
        budget: Option<u64>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one reduction to an instance file.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        mode: ReduceMode,
        /// Class cap for gcm-digraph: `max`, `sqrt`, an integer, `p/q` or a decimal.
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    /// Head coloring of the rotational regular tournament (n odd).
    TournamentColoring,
    /// The rotational regular tournament itself, as a digraph (n odd).
    Tournament,
    /// Properly colored complete multipartite graph (parts, L).
    ProperMultipartite,
    /// Sharpness instance for rainbow joins (s, r, l, L with L odd).
    StatementIi,
    /// K_n colored by the larger endpoint (n).
    LiAverage,
    /// Rainbow complete multipartite graph with s-1 classes (s, L).
    RainbowTuranPartite,
    /// Random colored graph (n, p, palette, seed).
    Random,
    /// Random standard multigraph (n, seed, w0, w1, w2).
    RandomMultigraph,
    /// Random digraph (n, p, seed).
    RandomDigraph,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("pattern").required(true).multiple(false))]
pub struct SearchArgs {
    pub input: PathBuf,
    /// Rainbow K_S.
    #[arg(long, value_name = "S", group = "pattern")]
    pub rainbow_clique: Option<usize>,
    /// Rainbow K_R joined with K^L_(S-R).
    #[arg(long, num_args = 3, value_names = ["R", "S", "L"], group = "pattern")]
    pub rainbow_join: Option<Vec<usize>>,
    /// Doubled K_s minus an r-matching in a multigraph: `s=3 r=1` or `3 1`.
    #[arg(long, num_args = 1..=2, value_name = "s=S r=R", group = "pattern")]
    pub mg_pattern: Option<Vec<String>>,
    /// Complete digraph on s vertices minus an r-arc matching: `s=4 r=1` or `4 1`.
    #[arg(long, num_args = 1..=2, value_name = "s=S r=R", group = "pattern")]
    pub dg_pattern: Option<Vec<String>>,
    /// With --dg-pattern: also remove one cyclic triangle.
    #[arg(long, requires = "dg_pattern")]
    pub triangle: bool,
    #[arg(long, group = "pattern")]
    pub cyclic_triangle: bool,
    /// Near-clique patterns must be induced.
    #[arg(long)]
    pub induced: bool,
    /// Maximum number of search nodes.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, env = "RF_THREADS", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Campaign {
    LiTriangle,
    MultigraphTuran,
    PropertySuite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceMode {
    /// ecg to ecg: delete edges until no monochromatic path on three edges.
    EdgeMinimal,
    /// ecg to dg: one arc per small color class at each vertex.
    GcmDigraph,
    /// dg to mg: the 2-cycles as a simple graph.
    TwoCycle,
    /// dg to mg: μ(uv) = number of arcs between u and v.
    ToMultigraph,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Instances and summaries go to `out`, diagnostics
/// to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    exit::OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    exit::USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "rf: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate { kind, params, out: path } => {
            let (instance, summary) = generate(kind, &Params::parse(&params)?)?;
            emit(path.as_deref(), &instance.to_string(), &summary, out, err)?;
            Ok(exit::OK)
        }
        Command::Search(args) => search(&args, out),
        Command::Verify { campaign, params, threads, budget, out: path } => {
            let report = verify(campaign, &Params::parse(&params)?, threads, budget)?;
            write_out(out, report.summary().trim_end())?;
            if let Some(path) = path {
                write_file(&path, &report_json(&report))?;
            }
            Ok(match report.verdict {
                Verdict::Confirmed => exit::OK,
                Verdict::Refuted => exit::ABSENT,
                Verdict::ExhaustedBudget => exit::BUDGET,
            })
        }
        Command::Reduce { input, mode, m, out: path } => {
            let instance = read_instance(&input)?;
            let (result, summary) = reduce(&instance, mode, m.as_deref())?;
            emit(path.as_deref(), &result.to_string(), &summary, out, err)?;
            Ok(exit::OK)
        }
    }
}

/// `key=value` parameters; every key must be consumed.
#[derive(Debug, Default)]
pub struct Params {
    map: BTreeMap<String, String>,
}

impl Params {
    pub fn parse(tokens: &[String]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for t in tokens {
            let Some((k, v)) = t.split_once('=') else {
                return usage(format!("parameter {t:?} is not of the form key=value"));
            };
            if map.insert(k.to_string(), v.to_string()).is_some() {
                return usage(format!("parameter {k} given twice"));
            }
        }
        Ok(Params { map })
    }

    fn take<T: std::str::FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("parameter {key}={v} has the wrong type"))),
        }
    }

    fn need<T: std::str::FromStr>(&mut self, key: &str) -> Result<T> {
        self.take(key)?.ok_or_else(|| CliError::Usage(format!("missing parameter {key}=...")))
    }

    fn or<T: std::str::FromStr>(&mut self, key: &str, default: T) -> Result<T> {
        Ok(self.take(key)?.unwrap_or(default))
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            Some(k) => usage(format!("unknown parameter {k}")),
            None => Ok(()),
        }
    }
}

fn colored_summary(g: &EdgeColoredGraph) -> String {
    let (min, avg) = match g.color_degree_profile() {
        Ok(p) => (p.minimum, p.average),
        Err(_) => (0, Rational::from_integer(0)),
    };
    format!(
        "kind=ecg n={} edges={} colors={} delta_c={min} avg_dc={avg}",
        g.n(),
        g.edge_count(),
        g.palette().len()
    )
}

fn multigraph_summary(m: &StandardMultigraph) -> String {
    let min = if m.n() == 0 { 0 } else { m.min_degree() };
    format!("kind=mg n={} edges={} pairs={} min_degree={min}", m.n(), m.edge_count(), m.edges().count())
}

fn digraph_summary(d: &SimpleDigraph) -> String {
    let min_out = (0..d.n()).map(|v| d.out_degree(v)).min().unwrap_or(0);
    format!("kind=dg n={} arcs={} min_out={min_out}", d.n(), d.arc_count())
}

fn built<T>(r: rainbow_core::error::Result<T>) -> Result<T> {
    r.map_err(|e| CliError::Usage(e.to_string()))
}

pub fn generate(kind: GenerateKind, params: &Params) -> Result<(Instance, String)> {
    let mut p = Params { map: params.map.clone() };
    let instance = match kind {
        GenerateKind::TournamentColoring => {
            Instance::Colored(built(ConstructionParams::RegularTournament { n: p.need("n")? }.build())?)
        }
        GenerateKind::Tournament => Instance::Di(built(constructions::regular_tournament(p.need("n")?))?),
        GenerateKind::ProperMultipartite => Instance::Colored(built(
            ConstructionParams::ProperMultipartite { parts: p.need("parts")?, class_size: p.need("L")? }.build(),
        )?),
        GenerateKind::StatementIi => Instance::Colored(built(
            ConstructionParams::StatementII { s: p.need("s")?, r: p.need("r")?, l: p.need("l")?, class_size: p.need("L")? }
                .build(),
        )?),
        GenerateKind::LiAverage => Instance::Colored(built(ConstructionParams::LiAverage { n: p.need("n")? }.build())?),
        GenerateKind::RainbowTuranPartite => Instance::Colored(built(
            ConstructionParams::RainbowTuranPartite { s: p.need("s")?, class_size: p.need("L")? }.build(),
        )?),
        GenerateKind::Random => Instance::Colored(built(constructions::random_colored_graph(
            p.need("n")?,
            p.or("p", 0.5)?,
            p.or("palette", 3)?,
            p.or("seed", 0)?,
        ))?),
        GenerateKind::RandomMultigraph => {
            let n = p.need("n")?;
            let seed = p.or("seed", 0)?;
            let weights = [p.or("w0", 1)?, p.or("w1", 1)?, p.or("w2", 1)?];
            Instance::Multi(built(constructions::random_multigraph(n, weights, seed))?)
        }
        GenerateKind::RandomDigraph => {
            Instance::Di(built(constructions::random_digraph(p.need("n")?, p.or("p", 0.5)?, p.or("seed", 0)?))?)
        }
    };
    p.finish()?;
    let summary = instance_summary(&instance);
    Ok((instance, summary))
}

pub fn instance_summary(instance: &Instance) -> String {
    match instance {
        Instance::Colored(g) => colored_summary(g),
        Instance::Multi(m) => multigraph_summary(m),
        Instance::Di(d) => digraph_summary(d),
    }
}

fn near_clique_params(tokens: &[String]) -> Result<(usize, usize)> {
    let named = tokens.iter().all(|t| t.contains('='));
    let (s, r) = if named {
        let mut p = Params::parse(tokens)?;
        let sr = (p.need("s")?, p.or("r", 0)?);
        p.finish()?;
        sr
    } else {
        let nums: Vec<usize> = tokens
            .iter()
            .map(|t| t.parse().map_err(|_| CliError::Usage(format!("pattern size {t:?} is not an integer"))))
            .collect::<Result<_>>()?;
        (nums[0], nums.get(1).copied().unwrap_or(0))
    };
    Ok((s, r))
}

fn pattern_of(args: &SearchArgs) -> Result<PatternSpec> {
    let mode = if args.induced { MatchMode::Induced } else { MatchMode::Subgraph };
    if args.induced && args.mg_pattern.is_none() && args.dg_pattern.is_none() {
        return usage("--induced applies only to --mg-pattern and --dg-pattern");
    }
    Ok(if let Some(s) = args.rainbow_clique {
        PatternSpec::RainbowClique { s }
    } else if let Some(v) = &args.rainbow_join {
        PatternSpec::RainbowJoin { r: v[0], s: v[1], l: v[2] }
    } else if let Some(t) = &args.mg_pattern {
        let (s, r) = near_clique_params(t)?;
        PatternSpec::MultigraphKsMr { s, r, mode }
    } else if let Some(t) = &args.dg_pattern {
        let (s, r) = near_clique_params(t)?;
        PatternSpec::DigraphKsTriMr { s, r, with_triangle: args.triangle, mode }
    } else {
        PatternSpec::CyclicTriangle
    })
}

fn expected_kind(spec: &PatternSpec) -> &'static str {
    match spec {
        PatternSpec::RainbowClique { .. } | PatternSpec::RainbowJoin { .. } => "ecg",
        PatternSpec::MultigraphKsMr { .. } => "mg",
        PatternSpec::DigraphKsTriMr { .. } | PatternSpec::CyclicTriangle => "dg",
    }
}

fn host(instance: &Instance) -> Host<'_> {
    match instance {
        Instance::Colored(g) => Host::Colored(g),
        Instance::Multi(m) => Host::Multi(m),
        Instance::Di(d) => Host::Di(d),
    }
}

fn join_list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn pairs_list(v: &[(usize, usize)]) -> String {
    v.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
}

/// One `key=value` line describing a witness.
pub fn witness_line(w: &Witness) -> String {
    let mut line = format!("found vertices={}", join_list(&w.vertices));
    match &w.parts {
        Some(PartStructure::JoinParts(parts)) => {
            let parts: Vec<String> = parts.iter().map(|p| join_list(p)).collect();
            line += &format!(" parts={}", parts.join("|"));
        }
        Some(PartStructure::Matching(m)) => line += &format!(" matching={}", pairs_list(m)),
        Some(PartStructure::NearClique { triangle, matching }) => {
            if let Some(t) = triangle {
                line += &format!(" triangle={}", join_list(t));
            }
            line += &format!(" matching={}", pairs_list(matching));
        }
        None => {}
    }
    line
}

fn search(args: &SearchArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = pattern_of(args)?;
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let instance = read_instance(&args.input)?;
    if instance.kind() != expected_kind(&spec) {
        return Err(CliError::TypeMismatch(format!(
            "{}: pattern needs a .{} instance, got .{}",
            args.input.display(),
            expected_kind(&spec),
            instance.kind()
        )));
    }
    if args.threads == 0 {
        return usage("--threads must be at least 1");
    }
    let limits = SearchLimits { node_cap: args.budget, parallel: args.threads > 1 };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} threads: {e}", args.threads)))?;
    let outcome = pool
        .install(|| spec.search(host(&instance), &limits))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    match outcome {
        SearchOutcome::Found(w) => {
            debug_assert!(spec.check(host(&instance), &w));
            write_out(out, &witness_line(&w))?;
            Ok(exit::OK)
        }
        SearchOutcome::Absent => {
            write_out(out, "absent")?;
            Ok(exit::ABSENT)
        }
        SearchOutcome::Exhausted { nodes } => {
            write_out(out, &format!("budget-exhausted nodes={nodes}"))?;
            Ok(exit::BUDGET)
        }
    }
}

fn campaign_error(e: VerifyError) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn verify(campaign: Campaign, params: &Params, threads: usize, budget: Option<u64>) -> Result<VerificationReport> {
    if threads == 0 {
        return usage("--threads must be at least 1");
    }
    if budget.is_some() && campaign != Campaign::LiTriangle {
        return usage("--budget applies only to li-triangle");
    }
    let mut p = Params { map: params.map.clone() };
    let report = match campaign {
        Campaign::LiTriangle => {
            let n: usize = p.need("n")?;
            let mode = match p.take::<String>("mode")?.as_deref() {
                None if n <= rainbow_core::verify::MAX_EXHAUSTIVE_COLORED_N => LiMode::Exhaustive,
                None | Some("pruned") => LiMode::Pruned,
                Some("exhaustive") => LiMode::Exhaustive,
                Some(other) => return usage(format!("mode={other}: expected exhaustive or pruned")),
            };
            p.finish()?;
            check_li_triangle(n, mode, threads, budget).map_err(campaign_error)?
        }
        Campaign::MultigraphTuran => {
            let n = p.need("n")?;
            let s = p.need("s")?;
            let statement = match p.take("r")? {
                Some(r) => TuranStatement::Matching { r },
                None => TuranStatement::Partite,
            };
            let mode = match p.take("samples")? {
                Some(samples) => TuranMode::Sampled { samples, seed: p.or("seed", 0)? },
                None => TuranMode::Exhaustive,
            };
            p.finish()?;
            check_multigraph_turan(n, s, statement, mode, threads).map_err(campaign_error)?
        }
        Campaign::PropertySuite => {
            let trials = p.or("trials", 10_000)?;
            let seed = p.or("seed", 1)?;
            p.finish()?;
            property_suite(trials, seed, threads)
        }
    };
    Ok(report)
}

/// The report as JSON, tagged with [`REPORT_SCHEMA`].
pub fn report_json(report: &VerificationReport) -> String {
    let mut value = serde_json::to_value(report).expect("reports serialize");
    if let serde_json::Value::Object(map) = &mut value {
        map.insert("schema".into(), REPORT_SCHEMA.into());
    }
    serde_json::to_string_pretty(&value).expect("values serialize") + "\n"
}

/// Parses a cap: `max` (n − 1), `sqrt` (⌊√n⌋), an integer, `p/q` or a decimal.
pub fn parse_cap(text: &str, n: usize) -> Result<GcmCap> {
    let value = match text {
        "max" => return Ok(GcmCap::max_for(n)),
        "sqrt" => return Ok(GcmCap::floor_sqrt(n)),
        t => match t.split_once('.') {
            Some((whole, frac)) if !frac.is_empty() && frac.len() <= 9 && frac.bytes().all(|b| b.is_ascii_digit()) => {
                let whole: i64 = whole.parse().map_err(|_| CliError::Usage(format!("bad cap m={t}")))?;
                let frac_num: i64 = frac.parse().expect("digits");
                let den = 10i64.pow(frac.len() as u32);
                Rational::new(whole * den + frac_num, den)
            }
            Some(_) => return usage(format!("bad cap m={t}")),
            None => t.parse::<Rational>().map_err(|_| CliError::Usage(format!("bad cap m={t}")))?,
        },
    };
    GcmCap::new(value).map_err(|e| CliError::Usage(e.to_string()))
}

fn mismatch<T>(mode: &str, needs: &str, got: &Instance) -> Result<T> {
    Err(CliError::TypeMismatch(format!("--mode {mode} needs a .{needs} instance, got .{}", got.kind())))
}

pub fn reduce(instance: &Instance, mode: ReduceMode, m: Option<&str>) -> Result<(Instance, String)> {
    if m.is_some() && mode != ReduceMode::GcmDigraph {
        return usage("--m applies only to --mode gcm-digraph");
    }
    match (mode, instance) {
        (ReduceMode::EdgeMinimal, Instance::Colored(g)) => {
            let (reduced, trace) = edge_minimal_reduce(g);
            let summary = format!(
                "deleted={} rounds={} edges={}",
                trace.deleted_edges.len(),
                trace.rounds,
                reduced.edge_count()
            );
            Ok((Instance::Colored(reduced), summary))
        }
        (ReduceMode::EdgeMinimal, other) => mismatch("edge-minimal", "ecg", other),
        (ReduceMode::GcmDigraph, Instance::Colored(g)) => {
            let cap = parse_cap(m.unwrap_or("max"), g.n())?;
            let d = build_gcm_digraph(g, cap);
            let summary = format!(
                "m={} arcs={} sum_out_degree={} sum_color_degree={}",
                cap.value(),
                d.arc_count(),
                (0..d.n()).map(|v| d.out_degree(v)).sum::<usize>(),
                g.color_degrees().iter().sum::<usize>()
            );
            Ok((Instance::Di(d), summary))
        }
        (ReduceMode::GcmDigraph, other) => mismatch("gcm-digraph", "ecg", other),
        (ReduceMode::TwoCycle, Instance::Di(d)) => {
            let h = StandardMultigraph::from_simple(&two_cycle_graph(d));
            let summary = format!("edges={}", h.edge_count());
            Ok((Instance::Multi(h), summary))
        }
        (ReduceMode::TwoCycle, other) => mismatch("two-cycle", "dg", other),
        (ReduceMode::ToMultigraph, Instance::Di(d)) => {
            let m = digraph_to_multigraph(d);
            let summary = multigraph_summary(&m);
            Ok((Instance::Multi(m), summary))
        }
        (ReduceMode::ToMultigraph, other) => mismatch("to-multigraph", "dg", other),
    }
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_instance(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write_out(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

/// With a path, writes the instance there and the summary to `out`;
/// otherwise the instance goes to `out` and the summary to `err`.
fn emit(path: Option<&Path>, instance: &str, summary: &str, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match path {
        Some(path) => {
            write_file(path, instance)?;
            write_out(out, summary)
        }
        None => {
            write!(out, "{instance}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
            writeln!(err, "{summary}").map_err(|source| CliError::Io { path: "<stderr>".into(), source })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("rf").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn generate_to_stdout_puts_summary_on_stderr() {
        let (code, out, err) = run_capture(&["generate", "tournament-coloring", "n=7"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.starts_with("ecg 7 21\n"));
        assert!(err.contains("delta_c=4"), "{err}");
    }

    #[test]
    fn bad_parameters_are_usage_errors() {
        for args in [
            &["generate", "tournament-coloring", "n=8"][..],
            &["generate", "li-average"],
            &["generate", "li-average", "n=4", "x=1"],
            &["generate", "li-average", "n=four"],
            &["generate", "li-average", "n"],
            &["verify", "li-triangle", "n=9"],
            &["verify", "property-suite", "trials=1", "--budget", "5"],
            &["bogus"],
        ] {
            let (code, _, err) = run_capture(args);
            assert_eq!(code, exit::USAGE, "{args:?}: {err}");
            assert!(!err.is_empty());
        }
    }

    #[test]
    fn infeasible_campaign_names_the_bound() {
        let (_, _, err) = run_capture(&["verify", "li-triangle", "n=6", "mode=exhaustive"]);
        assert!(err.contains("bound of 5"), "{err}");
    }

    #[test]
    fn caps_parse_exactly() {
        assert_eq!(parse_cap("5/2", 9).unwrap().value(), Rational::new(5, 2));
        assert_eq!(parse_cap("2.5", 9).unwrap().value(), Rational::new(5, 2));
        assert_eq!(parse_cap("3", 9).unwrap().value(), Rational::from_integer(3));
        assert_eq!(parse_cap("max", 9).unwrap().value(), Rational::from_integer(8));
        assert_eq!(parse_cap("sqrt", 10).unwrap().value(), Rational::from_integer(3));
        for bad in ["0", "1/2", "x", "2.", "1e3", "-3"] {
            assert!(parse_cap(bad, 9).is_err(), "{bad}");
        }
    }

    #[test]
    fn report_json_carries_schema() {
        let report = property_suite(3, 1, 1);
        let v: serde_json::Value = serde_json::from_str(&report_json(&report)).unwrap();
        assert_eq!(v["schema"], REPORT_SCHEMA);
        assert_eq!(v["campaign"], report.campaign.as_str());
        assert_eq!(v["verdict"], "confirmed");
    }

    #[test]
    fn witness_lines_are_key_value() {
        let w = Witness { vertices: vec![0, 1, 2], parts: Some(PartStructure::JoinParts(vec![vec![0], vec![1, 2]])) };
        assert_eq!(witness_line(&w), "found vertices=0,1,2 parts=0|1,2");
        let w = Witness {
            vertices: vec![0, 1, 2, 3],
            parts: Some(PartStructure::NearClique { triangle: Some([0, 1, 2]), matching: vec![] }),
        };
        assert_eq!(witness_line(&w), "found vertices=0,1,2,3 triangle=0,1,2 matching=");
    }
}
