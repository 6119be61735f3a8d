//! Plain-text graph files.
//!
//! ```text
//! # optional comments
//! n 4
//! e 0 1
//! e 1 2
//! ```
//!
//! The header `n <count>` is the first content line. Every later content
//! line is `e <u> <v>` with 0-indexed endpoints. Blank lines and lines whose
//! first non-space character is `#` are skipped. Repeated edges (in either
//! orientation) are accepted on read; [`write_graph`] emits each edge once,
//! as `u < v` in row-major order.

use std::fmt::Write as _;
use std::path::Path;

use raagprobe_core::{Graph, GraphBuilder, GraphError};

/// What went wrong on a given line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    /// No `n <count>` line before the end of input.
    #[error("missing `n <count>` header")]
    MissingHeader,
    /// The first content line is not a valid header.
    #[error("expected `n <count>`, found `{0}`")]
    BadHeader(String),
    /// An edge line does not have the shape `e <u> <v>`.
    #[error("expected `e <u> <v>`, found `{0}`")]
    BadEdge(String),
    /// Endpoints are out of range or equal.
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parse failure, with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; for a missing header, one past the last line.
    pub line: usize,
    /// The failure.
    pub kind: ParseErrorKind,
}

/// Errors from reading a graph file.
#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    /// The file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// File that failed.
        path: String,
        /// Underlying error.
        source: std::io::Error,
    },
    /// The file is not UTF-8.
    #[error("{path} is not valid UTF-8")]
    Encoding {
        /// File that failed.
        path: String,
    },
    /// The content is malformed.
    #[error("{path}: {source}")]
    Parse {
        /// File that failed.
        path: String,
        /// Where and why.
        source: ParseError,
    },
}

fn parse_usize(tok: Option<&str>) -> Option<usize> {
    tok?.parse().ok()
}

/// Parses the text format.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |kind| ParseError { line: line_no, kind };
        let mut toks = line.split_whitespace();
        let tag = toks.next();
        match builder.as_mut() {
            None => {
                let n = match (tag, parse_usize(toks.next()), toks.next()) {
                    (Some("n"), Some(n), None) => n,
                    _ => return Err(err(ParseErrorKind::BadHeader(line.to_string()))),
                };
                builder = Some(GraphBuilder::new(n));
            }
            Some(b) => {
                let (u, v) = match (tag, parse_usize(toks.next()), parse_usize(toks.next()), toks.next()) {
                    (Some("e"), Some(u), Some(v), None) => (u, v),
                    _ => return Err(err(ParseErrorKind::BadEdge(line.to_string()))),
                };
                b.try_add_edge(u, v).map_err(|e| err(e.into()))?;
            }
        }
    }
    builder.map(GraphBuilder::build).ok_or(ParseError {
        line: last + 1,
        kind: ParseErrorKind::MissingHeader,
    })
}

/// Canonical text for `g`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + 12 * g.m());
    let _ = writeln!(out, "n {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// Reads and parses a graph file.
pub fn read_graph_file(path: &Path) -> Result<Graph, ReadError> {
    let shown = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| ReadError::Io {
        path: shown.clone(),
        source,
    })?;
    let text = String::from_utf8(bytes).map_err(|_| ReadError::Encoding { path: shown.clone() })?;
    parse_graph(&text).map_err(|source| ReadError::Parse { path: shown, source })
}

/// Writes `g` in canonical form.
pub fn write_graph_file(path: &Path, g: &Graph) -> std::io::Result<()> {
    std::fs::write(path, write_graph(g))
}
