//! Plain-text edge lists.
//!
//! ```text
//! 3        <- n, the size of each class
//! 0 0      <- one edge per line: A-index, B-index, 0-based
//! 0 2
//! 2 1
//! ```
//!
//! Tokens are whitespace separated and blank lines are ignored. Repeated edges
//! are an error. The writer emits edges in lexicographic order with a single
//! space and a trailing newline, so writing is a function of the edge set.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use regfactor::BipartiteGraph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("empty input: expected a header line with n")]
    MissingHeader,
    #[error("line {line}: expected a positive class size, found {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected two indices, found {text:?}")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: regfactor::Error },
}

pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let n: usize = match header.parse() {
        Ok(n) if n > 0 => n,
        _ => return Err(FormatError::BadHeader { line, text: header.to_owned() }),
    };
    let mut g = BipartiteGraph::empty(n);
    for (line, text) in lines {
        let bad = || FormatError::BadEdge { line, text: text.to_owned() };
        let mut tokens = text.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(bad());
        };
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        g.add_edge(a, b).map_err(|source| FormatError::Graph { line, source })?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &BipartiteGraph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    writeln!(out, "{}", g.n()).unwrap();
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn write_edge_list(g: &BipartiteGraph, mut w: impl Write) -> io::Result<()> {
    w.write_all(to_edge_list(g).as_bytes())
}

pub fn read_edge_list(path: &Path) -> Result<BipartiteGraph, FormatError> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}
