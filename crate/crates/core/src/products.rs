//! Lexicographic products and the derived-graph products built from them.
//!
//! The lexicographic product `G1[G2]` has vertex set `V(G1) x V(G2)`;
//! `(u1, v1)` and `(u2, v2)` are adjacent when `u1 u2` is an edge of `G1`,
//! or `u1 = u2` and `v1 v2` is an edge of `G2`.
//!
//! The derived-graph product of `G1` and `G2` for a kind `F` is
//! `F(G1)[G2]` minus every fiber edge over an inserted vertex: copies of
//! `G2` survive only over original vertices of `G1`. [`f_product`] builds
//! that graph directly from the adjacency rule; [`f_product_subtractive`]
//! builds the full lexicographic product and deletes the fiber edges, and
//! exists as an independent cross-check of the direct rule.
//!
//! Product vertices are flattened row-major: the vertex for left rank `l`
//! and right vertex `v` is `l * n2 + v`, where original left vertices keep
//! their labels and the inserted vertex for [`EdgeId`] `i` has rank
//! `n1 + i`.

use crate::derived::{derive, DerivedKind};
use crate::graph::{EdgeId, Graph};
use crate::{Error, Result};

/// Left coordinate of a product vertex: a vertex of `G1` or the vertex
/// inserted for one of its edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeftVertex {
    Original(usize),
    Inserted(EdgeId),
}

/// A product vertex as a (left, right) coordinate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub left: LeftVertex,
    pub right: usize,
}

impl ProductVertex {
    /// Row-major flat label of this vertex in a product over a left factor
    /// with `n1` original vertices and a right factor with `n2` vertices.
    pub fn flat_index(&self, n1: usize, n2: usize) -> usize {
        let rank = match self.left {
            LeftVertex::Original(u) => u,
            LeftVertex::Inserted(EdgeId(i)) => n1 + i,
        };
        rank * n2 + self.right
    }

    /// Inverse of [`flat_index`](Self::flat_index); requires `n2 >= 1`.
    pub fn from_flat(flat: usize, n1: usize, n2: usize) -> ProductVertex {
        let rank = flat / n2;
        let left = if rank < n1 {
            LeftVertex::Original(rank)
        } else {
            LeftVertex::Inserted(EdgeId(rank - n1))
        };
        ProductVertex {
            left,
            right: flat % n2,
        }
    }
}

/// Builds the lexicographic product `g1[g2]`.
pub fn lexicographic(g1: &Graph, g2: &Graph) -> Result<Graph> {
    require_nonempty(g1, g2)?;
    let n2 = g2.vertex_count();
    let mut edges = Vec::new();
    for u in 0..g1.vertex_count() {
        for &(v1, v2) in g2.edges() {
            edges.push((u * n2 + v1, u * n2 + v2));
        }
    }
    for &(u1, u2) in g1.edges() {
        for v1 in 0..n2 {
            for v2 in 0..n2 {
                edges.push((u1 * n2 + v1, u2 * n2 + v2));
            }
        }
    }
    let out =
        Graph::new(g1.vertex_count() * n2, edges).expect("product of simple graphs is simple");
    debug_assert_eq!(
        out.edge_count(),
        g1.vertex_count() * g2.edge_count() + g1.edge_count() * n2 * n2
    );
    debug_assert!((0..g1.vertex_count()).all(|u| (0..n2).all(|v| {
        out.degree(u * n2 + v).unwrap() == n2 * g1.degree(u).unwrap() + g2.degree(v).unwrap()
    })));
    Ok(out)
}

/// Builds the derived-graph product of `g1` and `g2` for `kind` from the
/// adjacency rule: `(u1, v1) ~ (u2, v2)` when `u1 = u2` is an original
/// vertex and `v1 v2` is an edge of `g2`, or `u1 u2` is an edge of the
/// derived graph of `g1`.
pub fn f_product(g1: &Graph, g2: &Graph, kind: DerivedKind) -> Result<Graph> {
    require_nonempty(g1, g2)?;
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let left = derive(g1, kind);
    let mut edges = Vec::new();
    for u in 0..n1 {
        for &(v1, v2) in g2.edges() {
            edges.push((u * n2 + v1, u * n2 + v2));
        }
    }
    for &(a, b) in left.edges() {
        for v1 in 0..n2 {
            for v2 in 0..n2 {
                edges.push((a * n2 + v1, b * n2 + v2));
            }
        }
    }
    let out =
        Graph::new(left.vertex_count() * n2, edges).expect("product of simple graphs is simple");
    debug_assert_eq!(
        out.edge_count(),
        n1 * g2.edge_count() + left.edge_count() * n2 * n2
    );
    debug_assert!(product_degree_contract_holds(&out, &left, g2, n1));
    Ok(out)
}

/// Builds the same product as [`f_product`] by deleting from the full
/// lexicographic product every fiber edge over an inserted vertex.
pub fn f_product_subtractive(g1: &Graph, g2: &Graph, kind: DerivedKind) -> Result<Graph> {
    require_nonempty(g1, g2)?;
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let left = derive(g1, kind);
    let full = lexicographic(&left, g2)?;
    let kept = full
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| a / n2 != b / n2 || a / n2 < n1)
        .collect();
    Graph::new(full.vertex_count(), kept)
}

fn require_nonempty(g1: &Graph, g2: &Graph) -> Result<()> {
    if g1.vertex_count() == 0 {
        return Err(Error::EmptyGraph("g1"));
    }
    if g2.vertex_count() == 0 {
        return Err(Error::EmptyGraph("g2"));
    }
    Ok(())
}

fn product_degree_contract_holds(out: &Graph, left: &Graph, g2: &Graph, n1: usize) -> bool {
    let n2 = g2.vertex_count();
    (0..left.vertex_count()).all(|rank| {
        (0..n2).all(|v| {
            let expected = if rank < n1 {
                n2 * left.degree(rank).unwrap() + g2.degree(v).unwrap()
            } else {
                n2 * left.degree(rank).unwrap()
            };
            out.degree(rank * n2 + v).unwrap() == expected
        })
    })
}
