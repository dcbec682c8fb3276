//! The four edge-derived graphs.
//!
//! Every construction starts from a graph `G` on vertices `0..n` with `m`
//! edges and adds one vertex per edge: the vertex for the edge with
//! [`EdgeId`] `i` is labeled `n + i`. Writing `x_e` for the vertex added
//! for edge `e = {w_i, w_j}`, the four results are distinguished by which
//! edge groups they keep:
//!
//! * `S(G)`: incidence edges `{u, x_e}` for `u in e` (each edge of `G`
//!   becomes a length-2 path),
//! * `R(G)`: the edges of `G` plus the incidence edges (each edge becomes
//!   a triangle),
//! * `Q(G)`: the incidence edges plus `{x_e, x_f}` for every pair of
//!   distinct edges sharing a vertex,
//! * `T(G)`: all three groups.
//!
//! Degrees in the result are fixed by the construction: originals keep
//! `deg(u)` in S and Q and double it in R and T; `x_e` has degree 2 in S
//! and R and degree `deg(w_i) + deg(w_j)` in Q and T.

use crate::graph::Graph;

/// Which derived graph to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DerivedKind {
    S,
    R,
    Q,
    T,
}

impl DerivedKind {
    /// All four kinds, in canonical order.
    pub fn all() -> [DerivedKind; 4] {
        [
            DerivedKind::S,
            DerivedKind::R,
            DerivedKind::Q,
            DerivedKind::T,
        ]
    }

    fn keeps_original_edges(self) -> bool {
        matches!(self, DerivedKind::R | DerivedKind::T)
    }

    fn keeps_edge_adjacency(self) -> bool {
        matches!(self, DerivedKind::Q | DerivedKind::T)
    }
}

impl std::fmt::Display for DerivedKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DerivedKind::S => "S",
            DerivedKind::R => "R",
            DerivedKind::Q => "Q",
            DerivedKind::T => "T",
        };
        f.write_str(name)
    }
}

/// Builds the derived graph of `g` for `kind`.
///
/// The result has `n + m` vertices; construction order and therefore edge
/// ids are deterministic: original edges first (R, T), then incidence
/// edges in edge order, then edge-adjacency edges grouped by shared
/// vertex (Q, T).
pub fn derive(g: &Graph, kind: DerivedKind) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    if kind.keeps_original_edges() {
        edges.extend_from_slice(g.edges());
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((n + i, v));
    }
    if kind.keeps_edge_adjacency() {
        // Two distinct edges of a simple graph share at most one vertex,
        // so grouping by the shared vertex emits each pair exactly once.
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        for ids in &incident {
            for (a, &i) in ids.iter().enumerate() {
                for &j in &ids[a + 1..] {
                    edges.push((n + i, n + j));
                }
            }
        }
    }
    let out = Graph::new(n + g.edge_count(), edges).expect("derived graph is simple");
    debug_assert!(degree_contract_holds(g, kind, &out));
    out
}

fn degree_contract_holds(g: &Graph, kind: DerivedKind, out: &Graph) -> bool {
    let n = g.vertex_count();
    let original_factor = if kind.keeps_original_edges() { 2 } else { 1 };
    let originals_ok =
        (0..n).all(|u| out.degree(u).unwrap() == original_factor * g.degree(u).unwrap());
    let inserted_ok = g.edges().iter().enumerate().all(|(i, &(u, v))| {
        let expected = if kind.keeps_edge_adjacency() {
            g.degree(u).unwrap() + g.degree(v).unwrap()
        } else {
            2
        };
        out.degree(n + i).unwrap() == expected
    });
    originals_ok && inserted_ok
}
