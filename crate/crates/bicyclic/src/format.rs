//! The weighted graph file format.
//!
//! ```text
//! # optional comments
//! 3 2
//! 0 1 1
//! 1 2 5/2
//! ```
//!
//! The first data line is `n m`, followed by exactly `m` edge lines `u v w`.
//! Weights are positive integers or `p/q` in lowest terms. Blank lines and
//! lines starting with `#` are skipped.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use bicyclic_core::graph::GraphError;
use bicyclic_core::rational::{self, is_positive};
use bicyclic_core::{Rational, WeightedGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header `n m`")]
    MissingHeader,
    #[error("expected {expected} fields, found {found}")]
    FieldCount { expected: usize, found: usize },
    #[error("`{0}` is not a vertex count or id")]
    BadInteger(String),
    #[error("`{0}` is not a weight")]
    BadWeight(String),
    #[error("weight {0} is not positive")]
    NonPositiveWeight(String),
    #[error("weight `{text}` is not in lowest terms, write `{canonical}`")]
    NonCanonicalWeight { text: String, canonical: String },
    #[error("vertex {vertex} out of range for {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

impl FormatError {
    /// Line number of a parse error, 1-based.
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Parse { line, .. } => Some(*line),
            FormatError::Io { .. } => None,
        }
    }
}

fn at(line: usize) -> impl Fn(ParseErrorKind) -> FormatError {
    move |kind| FormatError::Parse { line, kind }
}

fn integer(field: &str) -> Result<usize, ParseErrorKind> {
    if !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::BadInteger(field.into()));
    }
    field.parse().map_err(|_| ParseErrorKind::BadInteger(field.into()))
}

/// Parses a weight, insisting on the canonical spelling.
pub fn parse_weight(field: &str) -> Result<Rational, ParseErrorKind> {
    let w = rational::parse(field).map_err(|_| ParseErrorKind::BadWeight(field.into()))?;
    if !is_positive(&w) {
        return Err(ParseErrorKind::NonPositiveWeight(field.into()));
    }
    let canonical = w.to_string();
    if canonical != field {
        return Err(ParseErrorKind::NonCanonicalWeight { text: field.into(), canonical });
    }
    Ok(w)
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(FormatError::Parse { line: 1, kind: ParseErrorKind::MissingHeader })?;
    let err = at(hline);
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(ParseErrorKind::FieldCount { expected: 2, found: fields.len() }));
    }
    let n = integer(fields[0]).map_err(&err)?;
    let m = integer(fields[1]).map_err(&err)?;

    let mut g = WeightedGraph::empty(n);
    let mut last = hline;
    for (line, body) in lines {
        let err = at(line);
        if g.size() == m {
            return Err(err(ParseErrorKind::EdgeCount { expected: m, found: m + 1 }));
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err(ParseErrorKind::FieldCount { expected: 3, found: fields.len() }));
        }
        let u = integer(fields[0]).map_err(&err)?;
        let v = integer(fields[1]).map_err(&err)?;
        let w = parse_weight(fields[2]).map_err(&err)?;
        g.add_edge(u, v, w).map_err(|e| {
            err(match e {
                GraphError::VertexOutOfRange { vertex, order } => ParseErrorKind::VertexOutOfRange { vertex, order },
                GraphError::SelfLoop(x) => ParseErrorKind::SelfLoop(x),
                GraphError::DuplicateEdge(x, y) => ParseErrorKind::DuplicateEdge(x, y),
                GraphError::NonPositiveWeight(..) => ParseErrorKind::NonPositiveWeight(fields[2].into()),
            })
        })?;
        last = line;
    }
    if g.size() != m {
        return Err(at(last)(ParseErrorKind::EdgeCount { expected: m, found: g.size() }));
    }
    Ok(g)
}

/// Header line, then one `u v w` line per edge with `u < v`, sorted.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    let mut edges: Vec<(usize, usize, &Rational)> = g.edges().map(|(u, v, w)| (u.min(v), u.max(v), w)).collect();
    edges.sort_by_key(|&(u, v, _)| (u, v));
    for (u, v, w) in edges {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}

/// Reads a graph file; `-` reads standard input.
pub fn read_graph(path: &Path) -> Result<WeightedGraph, FormatError> {
    let io_err = |source| FormatError::Io { path: path.display().to_string(), source };
    let text = if path.as_os_str() == "-" {
        io::read_to_string(io::stdin()).map_err(io_err)?
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    parse_graph(&text)
}

pub fn save_graph(path: &Path, g: &WeightedGraph) -> Result<(), FormatError> {
    std::fs::write(path, write_graph(g)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}
