//! The `cyclespan-v1` graph file format.
//!
//! ```text
//! # optional leading comment lines
//! n m
//! u v        (m lines, 0 <= u < v < n, ascii decimal, single space)
//! ```
//!
//! Canonical files list edges in lexicographic order; the position of an
//! edge in that order is its edge index, so the file order pins the
//! meaning of every edge-vector bit. [`render_graph`] always writes the
//! canonical form, and rendering what was read reproduces a canonical
//! file byte for byte.

use super::Graph;
use crate::edgespace::EdgeVector;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header `n m`")]
    BadHeader,
    #[error("malformed edge line (want `u v`)")]
    MalformedEdge,
    #[error("self-loop")]
    SelfLoop,
    #[error("endpoints out of order (want u < v)")]
    OutOfOrder,
    #[error("vertex out of range")]
    OutOfRange,
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("expected {expected} edge lines, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge not present in the host graph")]
    NotAnEdge,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses a `cyclespan-v1` document.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) = loop {
        match lines.next() {
            Some((i, line)) if line.starts_with('#') => {
                let _ = i;
                continue;
            }
            Some((i, line)) => break (i + 1, line),
            None => return Err(err(1, ParseErrorKind::BadHeader)),
        }
    };
    let mut it = header.split(' ');
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(header_no, ParseErrorKind::BadHeader))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(header_no, ParseErrorKind::BadHeader))?;
    if it.next().is_some() {
        return Err(err(header_no, ParseErrorKind::BadHeader));
    }

    let mut pairs = Vec::with_capacity(m);
    let mut found = 0usize;
    for (i, line) in lines {
        let line_no = i + 1;
        found += 1;
        if found > m {
            return Err(err(line_no, ParseErrorKind::WrongEdgeCount { expected: m, found }));
        }
        let (u, v) = parse_edge_line(line, line_no)?;
        if u == v {
            return Err(err(line_no, ParseErrorKind::SelfLoop));
        }
        if u > v {
            return Err(err(line_no, ParseErrorKind::OutOfOrder));
        }
        if v as usize >= n {
            return Err(err(line_no, ParseErrorKind::OutOfRange));
        }
        pairs.push((u, v));
    }
    if found < m {
        return Err(err(
            header_no + found,
            ParseErrorKind::WrongEdgeCount { expected: m, found },
        ));
    }
    let mut sorted = pairs.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).position(|w| w[0] == w[1]) {
        let dup = sorted[w + 1];
        let at = pairs.iter().rposition(|&e| e == dup).unwrap();
        return Err(err(header_no + at + 1, ParseErrorKind::DuplicateEdge));
    }
    Ok(Graph::new(n, pairs).expect("edge lines were validated"))
}

fn parse_edge_line(line: &str, line_no: usize) -> Result<(u32, u32), ParseError> {
    let mut it = line.split(' ');
    let u = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line_no, ParseErrorKind::MalformedEdge))?;
    let v = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line_no, ParseErrorKind::MalformedEdge))?;
    if it.next().is_some() {
        return Err(err(line_no, ParseErrorKind::MalformedEdge));
    }
    Ok((u, v))
}

/// Canonical text form of a graph.
#[must_use]
pub fn render_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, std::io::Error> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), std::io::Error> {
    std::fs::write(path, render_graph(g))
}

/// Parses `u v` lines (comments allowed anywhere) into an edge vector over
/// `g`. Each listed pair must be an edge of `g`.
pub fn parse_edge_lines(g: &Graph, text: &str) -> Result<EdgeVector, ParseError> {
    let mut out = EdgeVector::zeros(g.m());
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let (u, v) = parse_edge_line(line, line_no)?;
        let idx = g
            .edge_index(u, v)
            .ok_or_else(|| err(line_no, ParseErrorKind::NotAnEdge))?;
        if out.get(idx) {
            return Err(err(line_no, ParseErrorKind::DuplicateEdge));
        }
        out.set(idx, true);
    }
    Ok(out)
}

/// Renders an edge vector as sorted `u v` lines.
#[must_use]
pub fn render_edge_lines(g: &Graph, r: &EdgeVector) -> String {
    let mut out = String::new();
    for (u, v) in g.vector_pairs(r) {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn parses_triangle_with_comments() {
        let g = parse_graph("# a triangle\n3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        let g = complete(5);
        let text = render_graph(&g);
        let h = parse_graph(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(render_graph(&h), text);
    }

    #[test]
    fn error_lines_are_reported() {
        let e = parse_graph("3 2\n0 1\n1 1\n").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::SelfLoop));

        let e = parse_graph("3 2\n0 1\n0 7\n").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::OutOfRange));

        let e = parse_graph("3 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::DuplicateEdge));

        let e = parse_graph("3 2\n1 0\n0 1\n").unwrap_err();
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::OutOfOrder));

        let e = parse_graph("3 2\n0 1\n").unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::WrongEdgeCount { expected: 2, found: 1 }
        );

        let e = parse_graph("# only comments\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadHeader);

        let e = parse_graph("3 1\n0  1\n").unwrap_err();
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::MalformedEdge));
    }

    #[test]
    fn edge_vector_lines_round_trip() {
        let g = complete(4);
        let r = g.edge_vector([(0, 1), (2, 3)]).unwrap();
        let text = render_edge_lines(&g, &r);
        assert_eq!(text, "0 1\n2 3\n");
        let back = parse_edge_lines(&g, &text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn edge_vector_rejects_foreign_edges() {
        let g = crate::graph::circulant(5, &[1]).unwrap();
        let e = parse_edge_lines(&g, "0 2\n").unwrap_err();
        assert_eq!((e.line, e.kind), (1, ParseErrorKind::NotAnEdge));
    }
}
