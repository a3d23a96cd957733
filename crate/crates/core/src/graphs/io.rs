//! Plain-text edge lists.
//!
//! One edge per line as whitespace-separated decimal vertex ids. An
//! optional `#vertices n` header declares the vertex count so isolated
//! vertices survive a round trip; any other line starting with `#` is a
//! comment. Without the header the vertex count is `max id + 1`.

use super::{Graph, Hypergraph};
use crate::error::{Error, Result};
use std::fmt::Write as _;

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#vertices") {
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("line {}: bad vertex count: {e}", lineno + 1)))?;
            declared = Some(n);
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let edge = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {tok:?}: {e}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        edges.push(edge);
    }
    let implied = edges.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < implied => {
            return Err(Error::Parse(format!(
                "#vertices {n} but an edge uses vertex {}",
                implied - 1
            )))
        }
        Some(n) => n,
        None => implied,
    };
    Hypergraph::new(n, edges)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let h = parse_hypergraph(text)?;
    Graph::from_hypergraph(h).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("#vertices {}\n", h.n());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    write_hypergraph(g.as_hypergraph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_declares_isolated_vertices() {
        let g = parse_graph("#vertices 4\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.as_hypergraph().isolated_vertices(), vec![3]);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn hypergraph_lines_and_comments() {
        let h = parse_hypergraph("# a comment\n2 0 1\n\n3\n").unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn errors() {
        assert!(parse_graph("0 1 2\n").is_err());
        assert!(parse_graph("0 x\n").is_err());
        assert!(parse_hypergraph("#vertices 2\n0 5\n").is_err());
    }
}
