//! Finite simple undirected graphs with dense 0-based vertex labels.
//!
//! Graphs are immutable once built. Edges keep their construction order;
//! the position of an edge in that order is its [`EdgeId`], which the
//! derived-graph and product constructions use to label inserted vertices.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Position of an edge in a graph's edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// An undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation), and endpoints outside `0..vertex_count`.
    pub fn new(vertex_count: usize, edge_pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![BTreeSet::new(); vertex_count];
        for &(u, v) in &edge_pairs {
            for endpoint in [u, v] {
                if endpoint >= vertex_count {
                    return Err(Error::IndexOutOfRange {
                        index: endpoint,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        let g = Graph {
            vertex_count,
            edges: edge_pairs,
            adjacency,
        };
        debug_assert_eq!(g.degrees().sum::<usize>(), 2 * g.edge_count());
        Ok(g)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in construction order, endpoints as given.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.adjacency
            .get(v)
            .map(BTreeSet::len)
            .ok_or(Error::IndexOutOfRange {
                index: v,
                vertex_count: self.vertex_count,
            })
    }

    /// Degrees of all vertices, in vertex order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(BTreeSet::len)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|a| a.contains(&v))
    }

    /// Whether every vertex is reachable from every other. `K1` is
    /// connected; the graph on zero vertices is not.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Edge set normalized to `(min, max)` pairs, sorted.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect()
    }

    /// Compact one-line text form: vertex count plus the normalized,
    /// sorted edge set.
    pub fn descriptor(&self) -> String {
        let edges: Vec<String> = self
            .edge_set()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!("n{};{}", self.vertex_count, edges.join(","))
    }

    /// Builds a member of a named family.
    pub fn from_family(family: Family) -> Result<Self> {
        family.build()
    }

    /// Path on `n >= 1` vertices, labeled `0..n` in traversal order.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(family_error("path", "needs at least 1 vertex", n));
        }
        Graph::new(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle on `n >= 3` vertices, labeled in traversal order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(family_error("cycle", "needs at least 3 vertices", n));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, edges)
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(family_error("complete", "needs at least 1 vertex", n));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    /// Star on `n >= 2` vertices: center 0 joined to leaves `1..n`.
    pub fn star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(family_error("star", "needs at least 2 vertices", n));
        }
        Graph::new(n, (1..n).map(|v| (0, v)).collect())
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`, `a, b >= 1`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::InvalidFamilyParams {
                family: "complete_bipartite",
                reason: format!("both parts need at least 1 vertex, got ({a}, {b})"),
            });
        }
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..(a + b) {
                edges.push((u, v));
            }
        }
        Graph::new(a + b, edges)
    }
}

fn family_error(family: &'static str, bound: &str, got: usize) -> Error {
    Error::InvalidFamilyParams {
        family,
        reason: format!("{bound}, got {got}"),
    }
}

/// A named graph family with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    fn build(self) -> Result<Graph> {
        match self {
            Family::Path(n) => Graph::path(n),
            Family::Cycle(n) => Graph::cycle(n),
            Family::Complete(n) => Graph::complete(n),
            Family::Star(n) => Graph::star(n),
            Family::CompleteBipartite(a, b) => Graph::complete_bipartite(a, b),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Star(n) => write!(f, "star({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_path_degree_sequence() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let degrees: Vec<usize> = g.degrees().collect();
        assert_eq!(degrees, vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn builds_single_vertex() {
        let g = Graph::new(1, vec![]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::new(3, vec![(0, 0)]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_duplicate_edge_either_orientation() {
        let err = Graph::new(3, vec![(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge(1, 0)));
        let err = Graph::new(3, vec![(0, 1), (0, 1)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = Graph::new(2, vec![(0, 2)]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 2, .. }));
    }

    #[test]
    fn degree_checks_bounds() {
        let g = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
        assert!(matches!(
            g.degree(4),
            Err(Error::IndexOutOfRange { index: 4, .. })
        ));
    }

    #[test]
    fn family_shapes() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges(), &[(0, 1), (1, 2), (2, 3)]);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.degrees().all(|d| d == 2));

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6); // C(4,2)
        assert!(k4.degrees().all(|d| d == 3));

        let s5 = Graph::star(5).unwrap();
        assert_eq!(s5.degree(0).unwrap(), 4);
        assert!((1..5).all(|v| s5.degree(v).unwrap() == 1));

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degree(0).unwrap(), 3);
        assert_eq!(k23.degree(2).unwrap(), 2);
    }

    #[test]
    fn family_bounds_are_enforced() {
        assert!(matches!(
            Graph::path(0),
            Err(Error::InvalidFamilyParams { family: "path", .. })
        ));
        assert!(matches!(
            Graph::cycle(2),
            Err(Error::InvalidFamilyParams {
                family: "cycle",
                ..
            })
        ));
        assert!(matches!(
            Graph::star(1),
            Err(Error::InvalidFamilyParams { family: "star", .. })
        ));
        assert!(matches!(
            Graph::complete(0),
            Err(Error::InvalidFamilyParams { .. })
        ));
        assert!(matches!(
            Graph::complete_bipartite(0, 1),
            Err(Error::InvalidFamilyParams { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(!Graph::new(2, vec![]).unwrap().is_connected());
        // K3 plus an isolated vertex
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!g.is_connected());
        assert!(!Graph::new(0, vec![]).unwrap().is_connected());
    }

    #[test]
    fn descriptor_is_canonical() {
        let g = Graph::new(3, vec![(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.descriptor(), "n3;0-1,1-2");
        assert_eq!(Graph::new(1, vec![]).unwrap().descriptor(), "n1;");
    }

    #[test]
    fn family_display() {
        assert_eq!(Family::Path(3).to_string(), "path(3)");
        assert_eq!(
            Family::CompleteBipartite(2, 3).to_string(),
            "complete_bipartite(2,3)"
        );
    }
}
