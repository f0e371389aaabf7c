//! Edge-list text format.
//!
//! The first non-comment line is `n m`, followed by `m` lines `u v`. A `#`
//! starts a comment. Integer labels below `n` keep their value as the
//! vertex id; any other label takes the lowest id not claimed by an integer
//! label, in order of first appearance.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use oddspan::graph::canonical;
use oddspan::{EdgeSet, Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: self-loop at {v}")]
    SelfLoop { line: usize, v: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

/// A parsed graph with the original label of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl Labeled {
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn plain(graph: Graph) -> Self {
        let labels = (0..graph.order()).map(|v| v.to_string()).collect();
        Labeled { graph, labels }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_count(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| syntax(line, format!("{what} must be a non-negative integer, got {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<Labeled, ParseError> {
    let mut lines = content_lines(text);
    let (head_line, head) = lines.next().ok_or_else(|| syntax(1, "missing header \"n m\""))?;
    if head.len() != 2 {
        return Err(syntax(head_line, "header must be \"n m\""));
    }
    let n = parse_count(head_line, head[0], "vertex count")?;
    let m = parse_count(head_line, head[1], "edge count")?;

    let mut raw = Vec::with_capacity(m);
    for (line, tokens) in lines {
        if tokens.len() != 2 {
            return Err(syntax(line, "edge lines must be \"u v\""));
        }
        raw.push((line, tokens[0].to_string(), tokens[1].to_string()));
    }
    if raw.len() != m {
        let line = raw.last().map_or(head_line, |r| r.0);
        return Err(syntax(line, format!("header promises {m} edges, found {}", raw.len())));
    }

    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut claimed = vec![false; n];
    for (_, a, b) in &raw {
        for t in [a, b] {
            if let Ok(v) = t.parse::<usize>() {
                if v < n {
                    ids.insert(t.clone(), v);
                    claimed[v] = true;
                }
            }
        }
    }
    let mut free = (0..n).filter(|&v| !claimed[v]);
    for (line, a, b) in &raw {
        for t in [a, b] {
            if !ids.contains_key(t) {
                let v = free
                    .next()
                    .ok_or_else(|| syntax(*line, format!("label {t:?} exceeds the {n} declared vertices")))?;
                ids.insert(t.clone(), v);
            }
        }
    }

    let mut labels: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    for (t, &v) in &ids {
        labels[v] = t.clone();
    }
    let mut graph = Graph::new(n);
    let mut seen = BTreeSet::new();
    for (line, a, b) in raw {
        let (u, v) = (ids[&a], ids[&b]);
        if u == v {
            return Err(ParseError::SelfLoop { line, v: a });
        }
        if !seen.insert(canonical(u, v)) {
            return Err(ParseError::DuplicateEdge { line, u: a, v: b });
        }
        graph.add_edge(u, v);
    }
    Ok(Labeled { graph, labels })
}

/// Edge lines in canonical order, using the label table.
pub fn emit_graph(g: &Labeled) -> String {
    let mut out = format!("{} {}\n", g.graph.order(), g.graph.edge_count());
    for (u, v) in g.graph.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}

/// Edge set from `u v` lines or certificate lines `T u v` / `F u v`;
/// other certificate lines are skipped.
pub fn parse_edge_list(text: &str, g: &Labeled) -> Result<EdgeSet, ParseError> {
    let by_label: BTreeMap<&str, Vertex> = g.labels.iter().enumerate().map(|(v, l)| (l.as_str(), v)).collect();
    let mut edges = EdgeSet::new();
    for (line, tokens) in content_lines(text) {
        let pair = match tokens.as_slice() {
            ["T" | "F", a, b] => (*a, *b),
            [head, ..] if matches!(*head, "V" | "R" | "P" | "EXISTS" | "NOT_EXISTS" | "UNKNOWN") => continue,
            [a, b] => (*a, *b),
            _ => return Err(syntax(line, "expected \"u v\" or \"T u v\"")),
        };
        let lookup = |t: &str| by_label.get(t).copied().ok_or_else(|| syntax(line, format!("unknown vertex {t:?}")));
        let (u, v) = (lookup(pair.0)?, lookup(pair.1)?);
        if u == v {
            return Err(ParseError::SelfLoop { line, v: pair.0.to_string() });
        }
        if !edges.insert(u, v) {
            return Err(ParseError::DuplicateEdge { line, u: pair.0.to_string(), v: pair.1.to_string() });
        }
    }
    Ok(edges)
}
