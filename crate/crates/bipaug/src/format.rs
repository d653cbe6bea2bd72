//! The line-oriented text format.
//!
//! ```text
//! # a path on four vertices
//! A a1 a2
//! B b1 b2
//! E a1 b1
//! E a2 b1
//! E a2 b2
//! ```
//!
//! Everything after `#` on a line is ignored. Vertex ids are whitespace-free
//! strings; their order of declaration fixes the vertex indices.

use std::collections::HashMap;
use std::fmt::Write as _;

use bipaug_core::{BipartiteGraph, Edge, GraphError, Side};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("vertex `{0}` declared on both sides")]
    SideConflict(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self loop on `{0}`")]
    SelfLoop(String),
    #[error("edge `{0}` `{1}` joins two vertices of the same side")]
    BipartitenessViolation(String, String),
    #[error("duplicate edge `{0}` `{1}`")]
    DuplicateEdge(String, String),
    #[error("expected {0}")]
    Syntax(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn content(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut g = BipartiteGraph::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |kind| ParseError { line: i + 1, kind };
        let mut words = content(raw).split_whitespace();
        let Some(head) = words.next() else { continue };
        match head {
            "A" | "B" => {
                let side = if head == "A" { Side::A } else { Side::B };
                for id in words {
                    if let Some(&v) = ids.get(id) {
                        return Err(err(if g.side(v) == side {
                            ParseErrorKind::DuplicateVertex(id.to_string())
                        } else {
                            ParseErrorKind::SideConflict(id.to_string())
                        }));
                    }
                    ids.insert(id.to_string(), g.add_vertex(id, side));
                }
            }
            "E" => {
                let (Some(x), Some(y), None) = (words.next(), words.next(), words.next()) else {
                    return Err(err(ParseErrorKind::Syntax("`E <a-id> <b-id>`")));
                };
                let lookup = |id: &str| {
                    ids.get(id)
                        .copied()
                        .ok_or_else(|| err(ParseErrorKind::UnknownVertex(id.to_string())))
                };
                let (u, v) = (lookup(x)?, lookup(y)?);
                let (x, y) = (x.to_string(), y.to_string());
                g.add_edge(u, v).map_err(|e| {
                    err(match e {
                        GraphError::SelfLoop(_) => ParseErrorKind::SelfLoop(x),
                        GraphError::DuplicateEdge(..) => ParseErrorKind::DuplicateEdge(x, y),
                        _ => ParseErrorKind::BipartitenessViolation(x, y),
                    })
                })?;
            }
            _ => return Err(err(ParseErrorKind::Syntax("a line starting with `A`, `B`, `E` or `#`"))),
        }
    }
    Ok(g)
}

/// Writes `g` so that [`parse_graph`] rebuilds it exactly. Consecutive
/// vertices of one side share a declaration line.
pub fn serialize(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    let mut run: Option<Side> = None;
    for v in g.vertices() {
        let side = g.side(v);
        if run == Some(side) {
            out.push(' ');
        } else {
            if run.is_some() {
                out.push('\n');
            }
            out.push_str(if side == Side::A { "A " } else { "B " });
            run = Some(side);
        }
        out.push_str(g.label(v));
    }
    if run.is_some() {
        out.push('\n');
    }
    for e in g.edges() {
        let _ = writeln!(out, "E {} {}", g.label(e.a), g.label(e.b));
    }
    out
}

/// Reads an edge list for `g`: `ADD <id> <id>` or `E <id> <id>` lines.
/// `SIZE` lines are skipped. Endpoints are not checked for legality here.
pub fn parse_edges(g: &BipartiteGraph, text: &str) -> Result<Vec<Edge>, ParseError> {
    let ids: HashMap<&str, usize> = g.vertices().map(|v| (g.label(v), v)).collect();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |kind| ParseError { line: i + 1, kind };
        let words: Vec<&str> = content(raw).split_whitespace().collect();
        match words.as_slice() {
            [] | ["SIZE", ..] => {}
            ["ADD" | "E", x, y] => {
                let lookup = |id: &str| {
                    ids.get(id)
                        .copied()
                        .ok_or_else(|| err(ParseErrorKind::UnknownVertex(id.to_string())))
                };
                let (u, v) = (lookup(x)?, lookup(y)?);
                let (a, b) = if g.side(u) == Side::A { (u, v) } else { (v, u) };
                edges.push(Edge { a, b });
            }
            _ => return Err(err(ParseErrorKind::Syntax("`ADD <a-id> <b-id>`"))),
        }
    }
    Ok(edges)
}
