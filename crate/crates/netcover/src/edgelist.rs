//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v
//! ...
//! ```
//!
//! The header gives the node count and the number of edge lines that
//! follow. Ids are 0-based. The canonical form writes each edge as
//! `min max`, edges sorted ascending, one per newline-terminated line.

use std::fmt::Write as _;

use netcover_core::{Graph, NodeId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("expected two non-negative integers, found {0:?}")]
    Malformed(String),
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(NodeId, NodeId),
    #[error("node {node} is out of range for n = {n}")]
    NodeOutOfRange { node: NodeId, n: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
}

fn pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses an edge list. Blank lines are ignored.
pub fn load_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, declared) = pair(header).ok_or_else(|| ParseError {
        line: header_line,
        kind: ParseErrorKind::Malformed(header.to_string()),
    })?;

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(declared);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let (u, v) = pair(text).ok_or_else(|| err(ParseErrorKind::Malformed(text.to_string())))?;
        if let Some(node) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(err(ParseErrorKind::NodeOutOfRange { node, n }));
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        edges.push(key);
    }
    if edges.len() != declared {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCount {
                declared,
                found: edges.len(),
            },
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Canonical text form of `g`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.node_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
