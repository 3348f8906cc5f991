//! Plain-text edge lists: one `u v` pair per line, `#` starts a comment.

use std::fmt::Write;

use super::{Graph, GraphError, Vertex};

/// Parses an edge list into a host graph (connected, at least one edge).
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| GraphError::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(parse_err(format!("expected two vertex indices, found {:?}", line)));
        };
        let u = u.parse().map_err(|_| parse_err(format!("bad vertex index {u:?}")))?;
        let v = v.parse().map_err(|_| parse_err(format!("bad vertex index {v:?}")))?;
        pairs.push((u, v));
    }
    Graph::from_edge_list(&pairs)
}

/// Renders `g` as an edge list in edge-index order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# P4\n0 1\n\n1 2  # middle\n  2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(to_edge_list(&g), "0 1\n1 2\n2 3\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_edge_list("0 1\n1\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 x\n"), Err(GraphError::Parse { line: 1, .. })));
        assert_eq!(parse_edge_list("# nothing\n"), Err(GraphError::EmptyEdgeSet));
        assert_eq!(parse_edge_list("0 0\n"), Err(GraphError::LoopEdge(0)));
    }
}
