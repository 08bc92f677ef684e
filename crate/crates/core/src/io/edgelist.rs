//! Plain-text edge lists: one `u v` pair per line, 0-based ids, `#`
//! comments, blank lines ignored, optional `n <count>` header.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn malformed(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::MalformedEdgeList(format!("line {line}: {msg}"))
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| malformed(line, format!("expected a vertex id, found {token:?}")))
}

/// Parses an edge list. Without a header the order is one more than the
/// largest id mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(malformed(line, "the n header must precede all edges"));
                }
                declared = Some(parse_id(count, line)?);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(malformed(line, format!("self-loop at {u}")));
                }
                if let Some(n) = declared {
                    if u.max(v) >= n {
                        return Err(malformed(line, format!("id {} >= n = {n}", u.max(v))));
                    }
                }
                edges.push((u, v));
            }
            _ => return Err(malformed(line, format!("expected \"u v\", found {content:?}"))),
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

/// Writes the header and the edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_header() {
        let g = parse_edge_list("# C5\nn 5\n0 1\n1 2 # spoke\n\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(parse_edge_list("n 3\n").unwrap(), Graph::empty(3));
        assert_eq!(parse_edge_list("0 2\n").unwrap().n(), 3);
    }

    #[test]
    fn rejects_bad_lines() {
        for bad in ["0\n", "0 1 2\n", "a b\n", "1 1\n", "n 2\n0 2\n", "0 1\nn 5\n", "-1 0\n"] {
            assert!(matches!(parse_edge_list(bad), Err(Error::MalformedEdgeList(_))), "{bad:?}");
        }
    }

    #[test]
    fn round_trip() {
        let g = Graph::complete_bipartite(2, 3);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(write_edge_list(&Graph::path(3)), "n 3\n0 1\n1 2\n");
    }
}
