//! Exact degree-based graph indices and the product constructions needed to
//! check their closed-form identities.
//!
//! The crate provides:
//!
//! * a small immutable [`Graph`] type with named-family constructors,
//! * the four edge-derived graphs S(G), R(G), Q(G), T(G) ([`derive`]),
//! * the lexicographic product and the derived-graph products built on it
//!   ([`lexicographic`], [`f_product`]),
//! * exact integer indices (first/second Zagreb, forgotten, hyper-Zagreb,
//!   redefined Zagreb, general first Zagreb) in [`invariants`],
//! * closed-form right-hand sides for the forgotten index of the four
//!   products ([`closed_form`]) and the path-family polynomials
//!   ([`example1_polynomial`]),
//! * a verification harness that compares every closed form against a
//!   brute-force computation over graph corpora ([`verify`]),
//! * an edge-list text format and a command-line front end ([`io`], [`cli`]).
//!
//! All index arithmetic is arbitrary-precision; values never wrap.

pub mod cli;
pub mod closed_form;
pub mod derived;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod products;
pub mod verify;

pub use closed_form::{closed_form, example1_polynomial, TheoremId};
pub use derived::{derive, DerivedKind};
pub use graph::{EdgeId, Family, Graph};
pub use invariants::{
    f_index, general_first_zagreb, hyper_zagreb, redefined_zagreb, report, second_zagreb,
    InvariantReport,
};
pub use products::{f_product, f_product_subtractive, lexicographic, LeftVertex, ProductVertex};
pub use verify::{
    enumerate_connected, random_connected, run_suite, verify_pair, CorpusMode, CorpusSpec,
    PolynomialRecord, SuiteReport, SuiteSummary, VerificationRecord, DEFAULT_CEILING,
};

/// Errors produced by graph construction, index evaluation, product
/// construction, the verification harness, and edge-list parsing.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range for vertex count {vertex_count}")]
    IndexOutOfRange { index: usize, vertex_count: usize },
    #[error("invalid {family} parameters: {reason}")]
    InvalidFamilyParams {
        family: &'static str,
        reason: String,
    },
    #[error("exponent must be at least 2, got {0}")]
    InvalidExponent(u32),
    #[error("product factor {0} has no vertices")]
    EmptyGraph(&'static str),
    #[error("graph {0} is not connected")]
    NotConnected(&'static str),
    #[error("product would have {vertices} vertices, above the ceiling {ceiling}")]
    ProductTooLarge { vertices: usize, ceiling: usize },
    #[error("no connected sample after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("enumeration bound {requested} exceeds the supported maximum {limit}")]
    LimitExceeded { requested: usize, limit: usize },
    #[error("missing `n <count>` header line")]
    MissingHeader,
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("while checking {g1} x {g2}: {source}")]
    PairContext {
        g1: String,
        g2: String,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
