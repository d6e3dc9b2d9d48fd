//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first significant line is the vertex count; every following
//! non-empty line is one edge `u v`. `#` starts a comment anywhere on a
//! line. CRLF input is accepted; output always uses LF.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = order else {
            if fields.len() != 1 {
                return Err(err(format!("expected vertex count, found {line:?}")));
            }
            let n = fields[0]
                .parse::<usize>()
                .map_err(|e| err(format!("bad vertex count {:?}: {e}", fields[0])))?;
            order = Some(n);
            continue;
        };
        if fields.len() != 2 {
            return Err(err(format!("expected \"u v\", found {line:?}")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(format!("bad vertex {s:?}: {e}")))
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u >= n || v >= n {
            return Err(err(format!("vertex out of range 0..{n} in edge {u} {v}")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        let edge = (u.min(v), u.max(v));
        if !seen.insert(edge) {
            return Err(err(format!("duplicate edge {} {}", edge.0, edge.1)));
        }
        edges.push(edge);
    }

    let n = order.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::from_edges(n, edges)
}

/// Canonical form: vertex count, then edges sorted with `u < v`.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_path;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(&g, build_path(3).unwrap().as_graph());
    }

    #[test]
    fn serializes_canonically() {
        let g = build_path(3).unwrap();
        assert_eq!(serialize_edge_list(&g), "3\n0 1\n1 2\n");
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let g = parse_edge_list("# a path\r\n3 # order\r\n\r\n1 0\r\n2 1\r\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line_of = |text: &str| match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("2\n0 0\n"), 2);
        assert_eq!(line_of("3\n0 1\n1 0\n"), 3);
        assert_eq!(line_of("3\n0 5\n"), 2);
        assert_eq!(line_of("3\n0 1 2\n"), 2);
        assert_eq!(line_of("x\n"), 1);
        assert_eq!(line_of("# nothing\n"), 0);
        assert_eq!(line_of("3\n0 a\n"), 2);
    }

    #[test]
    fn edgeless_graph() {
        let g = parse_edge_list("5\n").unwrap();
        assert_eq!((g.order(), g.size()), (5, 0));
    }
}
