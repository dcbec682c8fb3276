//! Plain-text edge lists.
//!
//! A document is line-oriented: blank lines and lines starting with `#`
//! are ignored; the first significant line must be the header `n <count>`;
//! every following significant line is one edge, `u v`. Serialization
//! always writes edges as `(min, max)` pairs in sorted order, so the
//! output is canonical regardless of construction order.

use crate::graph::Graph;
use crate::{Error, Result};

/// Parses an edge-list document. Structural problems (self-loops,
/// duplicates, endpoints out of range) are reported with the offending
/// line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut seen = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let Some(n) = vertex_count else {
            match (tokens.next(), tokens.next(), tokens.next()) {
                (Some("n"), Some(count), None) => {
                    let count = count.parse().map_err(|_| Error::MalformedLine(line_no))?;
                    vertex_count = Some(count);
                    seen = vec![std::collections::BTreeSet::new(); count];
                }
                _ => return Err(Error::MissingHeader),
            }
            continue;
        };
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => {
                let u = a.parse().map_err(|_| Error::MalformedLine(line_no))?;
                let v = b.parse().map_err(|_| Error::MalformedLine(line_no))?;
                (u, v)
            }
            _ => return Err(Error::MalformedLine(line_no)),
        };
        let at_line = |source: Error| Error::Parse {
            line: line_no,
            source: Box::new(source),
        };
        for endpoint in [u, v] {
            if endpoint >= n {
                return Err(at_line(Error::IndexOutOfRange {
                    index: endpoint,
                    vertex_count: n,
                }));
            }
        }
        if u == v {
            return Err(at_line(Error::SelfLoop(u)));
        }
        if seen[u].contains(&v) {
            return Err(at_line(Error::DuplicateEdge(u, v)));
        }
        seen[u].insert(v);
        seen[v].insert(u);
        edges.push((u, v));
    }
    let Some(n) = vertex_count else {
        return Err(Error::MissingHeader);
    };
    Graph::new(n, edges)
}

/// Serializes a graph to the canonical edge-list form.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edge_set() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
