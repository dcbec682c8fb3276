//! Exact degree-based indices.
//!
//! Writing `d(v)` for the degree of `v`, the indices computed here are:
//!
//! * first Zagreb `M1 = sum d(v)^2`, second Zagreb `M2 = sum d(u)d(v)` over
//!   edges `uv`,
//! * forgotten index `F = sum d(v)^3`, equal to `sum d(u)^2 + d(v)^2` over
//!   edges (both forms are computed and compared),
//! * hyper-Zagreb `HM = sum (d(u) + d(v))^2` over edges,
//! * redefined Zagreb `ReZM = sum d(u)d(v)(d(u) + d(v))` over edges,
//! * general first Zagreb `xi_k = sum d(v)^k` for integer `k >= 2`, so
//!   `xi_2 = M1` and `xi_3 = F`.
//!
//! Values are arbitrary-precision integers; nothing here overflows.

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::{Error, Result};

/// All indices of one graph, computed together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub m1: BigInt,
    pub m2: BigInt,
    pub f: BigInt,
    pub hm: BigInt,
    pub rezm: BigInt,
    pub xi4: BigInt,
}

/// General first Zagreb index `sum d(v)^k`, defined for `k >= 2`.
pub fn general_first_zagreb(g: &Graph, k: u32) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::InvalidExponent(k));
    }
    Ok(g.degrees().map(|d| BigInt::from(d).pow(k)).sum())
}

/// Forgotten index `sum d(v)^3`.
pub fn f_index(g: &Graph) -> BigInt {
    let vertex_form: BigInt = g.degrees().map(|d| BigInt::from(d).pow(3)).sum();
    debug_assert_eq!(vertex_form, f_index_edge_form(g));
    vertex_form
}

fn f_index_edge_form(g: &Graph) -> BigInt {
    let deg: Vec<usize> = g.degrees().collect();
    g.edges()
        .iter()
        .map(|&(u, v)| BigInt::from(deg[u]).pow(2) + BigInt::from(deg[v]).pow(2))
        .sum()
}

/// Second Zagreb index `sum d(u)d(v)` over edges.
pub fn second_zagreb(g: &Graph) -> BigInt {
    let deg: Vec<usize> = g.degrees().collect();
    g.edges()
        .iter()
        .map(|&(u, v)| BigInt::from(deg[u]) * BigInt::from(deg[v]))
        .sum()
}

/// Hyper-Zagreb index `sum (d(u) + d(v))^2` over edges.
pub fn hyper_zagreb(g: &Graph) -> BigInt {
    let deg: Vec<usize> = g.degrees().collect();
    g.edges()
        .iter()
        .map(|&(u, v)| BigInt::from(deg[u] + deg[v]).pow(2))
        .sum()
}

/// Redefined Zagreb index `sum d(u)d(v)(d(u) + d(v))` over edges.
pub fn redefined_zagreb(g: &Graph) -> BigInt {
    let deg: Vec<usize> = g.degrees().collect();
    g.edges()
        .iter()
        .map(|&(u, v)| BigInt::from(deg[u]) * BigInt::from(deg[v]) * BigInt::from(deg[u] + deg[v]))
        .sum()
}

/// Computes every index of `g`.
///
/// Cross-identities are checked on the way out: `m1 = xi_2`, `f = xi_3`,
/// and `hm = f + 2 m2`.
pub fn report(g: &Graph) -> InvariantReport {
    let m1: BigInt = g.degrees().map(|d| BigInt::from(d).pow(2)).sum();
    let f = f_index(g);
    let m2 = second_zagreb(g);
    let hm = hyper_zagreb(g);
    let rezm = redefined_zagreb(g);
    let xi4 = general_first_zagreb(g, 4).expect("4 is a valid exponent");
    debug_assert_eq!(m1, general_first_zagreb(g, 2).expect("valid exponent"));
    debug_assert_eq!(f, general_first_zagreb(g, 3).expect("valid exponent"));
    debug_assert_eq!(hm, &f + BigInt::from(2) * &m2);
    InvariantReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        m1,
        m2,
        f,
        hm,
        rezm,
        xi4,
    }
}
