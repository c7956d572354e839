//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (exactly m lines, 0 <= u < v < n, single-space separated)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge endpoints must be listed as u < v")]
    UnorderedEdge { line: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("{0}")]
    Io(String),
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split(' ');
    let a = parts.next()?;
    let b = parts.next()?;
    if parts.next().is_some() {
        return None;
    }
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    if !digits(a) || !digits(b) {
        return None;
    }
    Some((a.parse().ok()?, b.parse().ok()?))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header).ok_or(ParseError::MalformedHeader { line: hline })?;

    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, text) in lines {
        found += 1;
        if found > m {
            continue;
        }
        let (u, v) = parse_pair(text).ok_or(ParseError::MalformedEdge { line })?;
        if let Some(vertex) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if u > v {
            return Err(ParseError::UnorderedEdge { line });
        }
        match g.add_edge(u, v) {
            Ok(()) => {}
            Err(GraphError::DuplicateEdge(u, v)) => {
                return Err(ParseError::DuplicateEdge { line, u, v })
            }
            Err(e) => unreachable!("edge validated above: {e}"),
        }
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

/// Serializes in the canonical form read by [`parse_graph`]: header, then
/// edges in lexicographic order, newline-terminated.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.size() + 1));
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_graph("2 1\n0 1").unwrap(), Graph::path(2));
        assert_eq!(parse_graph("4 3\n0 1\n1 2\n2 3").unwrap(), Graph::path(4));
        assert_eq!(
            parse_graph("# a comment\n4 3\n# another\n0 1\n1 2\n2 3\n").unwrap(),
            Graph::path(4)
        );
        assert_eq!(parse_graph("3 0\n").unwrap(), Graph::empty(3));
    }

    #[test]
    fn reports_errors_with_lines() {
        assert_eq!(
            parse_graph("3 3\n0 0\n0 1\n1 2"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(parse_graph("3\n"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse_graph("a b\n"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse_graph(""), Err(ParseError::MissingHeader));
        assert_eq!(
            parse_graph("3 1\n0 3"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 3, n: 3 })
        );
        assert_eq!(
            parse_graph("3 2\n0 1\n0 1"),
            Err(ParseError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert_eq!(parse_graph("3 1\n2 1"), Err(ParseError::UnorderedEdge { line: 2 }));
        assert_eq!(parse_graph("3 1\n0  1"), Err(ParseError::MalformedEdge { line: 2 }));
        assert_eq!(parse_graph("3 1\n0\t1"), Err(ParseError::MalformedEdge { line: 2 }));
        assert_eq!(parse_graph("3 2\n0 1"), Err(ParseError::EdgeCount { expected: 2, found: 1 }));
        assert_eq!(
            parse_graph("3 1\n0 1\n1 2"),
            Err(ParseError::EdgeCount { expected: 1, found: 2 })
        );
    }

    #[test]
    fn canonical_output() {
        assert_eq!(write_edge_list(&Graph::star(2)), "3 2\n0 1\n0 2\n");
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..20, raw in proptest::collection::vec((0usize..20, 0usize..20), 0..40)) {
            let mut g = Graph::empty(n);
            for (u, v) in raw {
                let _ = g.add_edge(u % n, v % n);
            }
            let text = write_edge_list(&g);
            prop_assert_eq!(parse_graph(&text).unwrap(), g);
        }
    }
}
