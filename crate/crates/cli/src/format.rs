//! Plain-text instance files.
//!
//! ```text
//! ecg <n> <m>      mg <n> <m>         dg <n> <m>
//! <u> <v> <color>  <u> <v> <1|2>      <u> <v>
//! ```
//!
//! Vertices are 0-based. Blank lines and lines starting with `#` are
//! ignored. Exactly `m` item lines must follow the header; repeated pairs
//! (or repeated arcs) are rejected.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use rainbow_core::{Color, EdgeColoredGraph, SimpleDigraph, StandardMultigraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Colored(EdgeColoredGraph),
    Multi(StandardMultigraph),
    Di(SimpleDigraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Colored(_) => "ecg",
            Instance::Multi(_) => "mg",
            Instance::Di(_) => "dg",
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&match self {
            Instance::Colored(g) => write_ecg(g),
            Instance::Multi(m) => write_mg(m),
            Instance::Di(d) => write_dg(d),
        })
    }
}

pub fn write_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = format!("ecg {} {}\n", g.n(), g.edge_count());
    for (u, v, c) in g.edges() {
        writeln!(out, "{u} {v} {c}").expect("writing to a String");
    }
    out
}

pub fn write_mg(m: &StandardMultigraph) -> String {
    let edges: Vec<_> = m.edges().collect();
    let mut out = format!("mg {} {}\n", m.n(), edges.len());
    for (u, v, mult) in edges {
        writeln!(out, "{u} {v} {mult}").expect("writing to a String");
    }
    out
}

pub fn write_dg(d: &SimpleDigraph) -> String {
    let mut out = format!("dg {} {}\n", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| (i, l.split_whitespace().collect()))
            .collect();
        Lines { items }
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError { line, message: format!("{what} {token:?} is not a nonnegative integer") })
}

fn vertex(line: usize, token: &str, n: usize) -> Result<usize, FormatError> {
    let v: usize = number(line, token, "vertex")?;
    if v >= n {
        return err(line, format!("vertex {v} out of range for n = {n}"));
    }
    Ok(v)
}

/// Parses any of the three formats, dispatching on the header keyword.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let lines = Lines::new(text);
    let Some((hline, header)) = lines.items.first() else {
        return err(1, "empty file: expected a header `ecg|mg|dg <n> <m>`");
    };
    let hline = *hline;
    if header.len() != 3 {
        return err(hline, "header must be `<kind> <n> <m>`");
    }
    let n: usize = number(hline, header[1], "vertex count")?;
    let m: usize = number(hline, header[2], "item count")?;
    let body = &lines.items[1..];
    if body.len() != m {
        let line = body.get(m).map_or(hline, |(l, _)| *l);
        return err(line, format!("header announces {m} lines, found {}", body.len()));
    }
    let arity = match header[0] {
        "ecg" | "mg" => 3,
        "dg" => 2,
        other => return err(hline, format!("unknown kind {other:?}; expected ecg, mg or dg")),
    };
    let mut seen = HashSet::new();
    let mut triples = Vec::with_capacity(m);
    for (line, tokens) in body {
        let line = *line;
        if tokens.len() != arity {
            return err(line, format!("expected {arity} fields, found {}", tokens.len()));
        }
        let u = vertex(line, tokens[0], n)?;
        let v = vertex(line, tokens[1], n)?;
        if u == v {
            return err(line, format!("self-loop at vertex {u}"));
        }
        let key = if arity == 2 { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return err(line, format!("duplicate entry for {u} {v}"));
        }
        let third: u64 = if arity == 3 { number(line, tokens[2], "value")? } else { 0 };
        triples.push((line, u, v, third));
    }
    match header[0] {
        "ecg" => {
            let mut edges = Vec::with_capacity(m);
            for &(line, u, v, c) in &triples {
                if c >= Color::MAX as u64 {
                    return err(line, format!("color {c} out of range"));
                }
                edges.push((u, v, c as Color));
            }
            EdgeColoredGraph::new(n, edges).map(Instance::Colored).or_else(|e| err(hline, e.to_string()))
        }
        "mg" => {
            let mut pairs = Vec::with_capacity(m);
            for &(line, u, v, mult) in &triples {
                if !(1..=2).contains(&mult) {
                    return err(line, format!("multiplicity {mult} not in {{1, 2}}"));
                }
                pairs.push((u, v, mult as u8));
            }
            StandardMultigraph::new(n, pairs).map(Instance::Multi).or_else(|e| err(hline, e.to_string()))
        }
        _ => SimpleDigraph::new(n, triples.iter().map(|&(_, u, v, _)| (u, v)))
            .map(Instance::Di)
            .or_else(|e| err(hline, e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let g = parse_instance("ecg 3 2\n0 1 5\n# comment\n\n1 2 7\n").unwrap();
        assert_eq!(g, Instance::Colored(EdgeColoredGraph::new(3, [(0, 1, 5), (1, 2, 7)]).unwrap()));
        let m = parse_instance("mg 3 1\n2 0 2\n").unwrap();
        assert_eq!(m, Instance::Multi(StandardMultigraph::new(3, [(0, 2, 2)]).unwrap()));
        let d = parse_instance("dg 2 2\n0 1\n1 0\n").unwrap();
        assert_eq!(d, Instance::Di(SimpleDigraph::complete(2)));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("ecg 3 2\n0 1 1\n1 0 2\n", 3, "duplicate"),
            ("ecg 3 1\n\n0 3 1\n", 3, "out of range"),
            ("mg 3 1\n0 1 3\n", 2, "multiplicity"),
            ("dg 3 1\n0 0\n", 2, "self-loop"),
            ("dg 3 2\n0 1\n", 1, "announces"),
            ("ecg 3 1\n0 1 x\n", 2, "not a nonnegative"),
            ("xyz 3 0\n", 1, "unknown kind"),
            ("", 1, "empty"),
            ("dg 3 1\n0 1 2\n", 2, "expected 2 fields"),
        ];
        for (text, line, needle) in cases {
            let e = parse_instance(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
            assert!(e.message.contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn opposite_arcs_are_not_duplicates() {
        assert!(parse_instance("dg 2 2\n0 1\n1 0\n").is_ok());
        assert!(parse_instance("dg 2 2\n0 1\n0 1\n").is_err());
    }
}
