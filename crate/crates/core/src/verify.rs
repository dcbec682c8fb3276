//! Brute-force verification of the closed forms over graph corpora.
//!
//! [`verify_pair`] builds one derived-graph product, takes the forgotten
//! index of the result directly, evaluates the matching closed form on the
//! factor reports, and records both values. [`run_suite`] does that for
//! all four kinds over a whole corpus, always evaluating the printed
//! T-variant alongside the corrected one so a report shows exactly where
//! the printed form breaks.
//!
//! Corpora come in three modes: `Exhaustive` pairs every labeled connected
//! graph on up to `max_n1` vertices with every one on up to `max_n2`
//! vertices; `Families` walks the path grid `P_n[P_m]` for
//! `2 <= n <= max_n1`, `2 <= m <= max_n2` and additionally compares the
//! bundled path polynomials; `Random` checks seeded connected samples.

use num_bigint::BigInt;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_form::{closed_form, example1_polynomial, TheoremId};
use crate::derived::DerivedKind;
use crate::graph::{Family, Graph};
use crate::invariants::{f_index, report};
use crate::products::f_product;
use crate::{Error, Result};

/// Default bound on product vertex count.
pub const DEFAULT_CEILING: usize = 5000;

/// Retry bound for connected random sampling.
pub const SAMPLE_ATTEMPTS: usize = 1000;

const ENUMERATION_LIMIT: usize = 7;

/// Corpus selection for [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusMode {
    Exhaustive,
    Families,
    Random,
}

/// Parameters of one suite run.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    pub max_n1: usize,
    pub max_n2: usize,
    pub sample_count: usize,
    pub seed: u64,
    pub ceiling: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            mode: CorpusMode::Exhaustive,
            max_n1: 4,
            max_n2: 3,
            sample_count: 20,
            seed: 0,
            ceiling: DEFAULT_CEILING,
        }
    }
}

/// Outcome of one closed-form-versus-brute-force comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub g1: String,
    pub g2: String,
    pub kind: DerivedKind,
    pub theorem: TheoremId,
    pub formula_value: BigInt,
    pub direct_value: BigInt,
    pub matches: bool,
    pub product_vertices: usize,
    pub product_edges: usize,
}

/// Outcome of one path-polynomial-versus-brute-force comparison
/// (families mode only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialRecord {
    pub kind: DerivedKind,
    pub n: u64,
    pub m: u64,
    pub polynomial_value: BigInt,
    pub direct_value: BigInt,
    pub matches: bool,
}

/// Aggregate counts over a suite run.
///
/// `checked` and `mismatches` cover the identities expected to hold
/// (T1, T2, T3, T4-corrected); the printed T-variant and the path
/// polynomials are tallied separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSummary {
    pub checked: usize,
    pub mismatches: usize,
    pub t4_printed_checked: usize,
    pub t4_printed_mismatches: usize,
    pub t4_printed_equals_t3: bool,
    pub polynomial_checked: usize,
    pub polynomial_mismatches: usize,
}

/// Everything produced by one suite run, records in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub records: Vec<VerificationRecord>,
    pub polynomial_records: Vec<PolynomialRecord>,
    pub summary: SuiteSummary,
}

/// Yields every labeled connected simple graph on `1..=max_n` vertices,
/// ordered by vertex count and then by edge-subset rank.
///
/// The count grows roughly as `2^(n(n-1)/2)`, so `max_n` is capped at 7.
pub fn enumerate_connected(max_n: usize) -> Result<impl Iterator<Item = Graph>> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded {
            requested: max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok((1..=max_n).flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        (0u64..(1u64 << pairs.len())).filter_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::new(n, edges).expect("pairs are distinct");
            g.is_connected().then_some(g)
        })
    }))
}

/// Samples a connected graph on `n` vertices, including each of the
/// `C(n, 2)` candidate edges independently with probability `edge_prob`.
///
/// The sampling procedure is part of the contract: a `ChaCha8Rng` is
/// seeded with `seed_from_u64(seed)`, candidate pairs `(u, v)`, `u < v`,
/// are visited in lexicographic order with one Bernoulli draw each, and
/// disconnected draws are retried on the same stream up to
/// [`SAMPLE_ATTEMPTS`] times. Equal arguments therefore reproduce the
/// exact same graph.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidFamilyParams {
            family: "random_connected",
            reason: "needs at least 1 vertex, got 0".into(),
        });
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::InvalidFamilyParams {
            family: "random_connected",
            reason: format!("edge probability must be in (0, 1], got {edge_prob}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(edge_prob) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("pairs are distinct");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: SAMPLE_ATTEMPTS,
    })
}

/// Verifies one (pair, kind) combination: brute-force forgotten index of
/// the product against the matching closed form (the corrected T-variant
/// for kind T). Both factors must be connected and the product must stay
/// within `ceiling` vertices.
pub fn verify_pair(
    g1: &Graph,
    g2: &Graph,
    kind: DerivedKind,
    ceiling: usize,
) -> Result<VerificationRecord> {
    check_pair_preconditions(g1, g2, ceiling)?;
    let product = f_product(g1, g2, kind)?;
    let direct = f_index(&product);
    let theorem = TheoremId::for_kind(kind);
    let formula = closed_form(theorem, &report(g1), &report(g2));
    Ok(VerificationRecord {
        g1: g1.descriptor(),
        g2: g2.descriptor(),
        kind,
        theorem,
        matches: formula == direct,
        formula_value: formula,
        direct_value: direct,
        product_vertices: product.vertex_count(),
        product_edges: product.edge_count(),
    })
}

fn check_pair_preconditions(g1: &Graph, g2: &Graph, ceiling: usize) -> Result<()> {
    if !g1.is_connected() {
        return Err(Error::NotConnected("g1"));
    }
    if !g2.is_connected() {
        return Err(Error::NotConnected("g2"));
    }
    let vertices = (g1.vertex_count() + g1.edge_count()) * g2.vertex_count();
    if vertices > ceiling {
        return Err(Error::ProductTooLarge { vertices, ceiling });
    }
    Ok(())
}

struct PairJob {
    index: usize,
    label1: String,
    g1: Graph,
    label2: String,
    g2: Graph,
    paths: Option<(u64, u64)>,
}

struct PairOutcome {
    records: Vec<VerificationRecord>,
    polynomials: Vec<PolynomialRecord>,
    printed_equals_t3: bool,
}

/// Runs the whole suite for one corpus. Work fans out across the rayon
/// pool; results are reassembled in corpus order, so the report does not
/// depend on the worker count.
pub fn run_suite(spec: &CorpusSpec) -> Result<SuiteReport> {
    let jobs = build_jobs(spec)?;
    let outcomes: Result<Vec<(usize, PairOutcome)>> = jobs
        .par_iter()
        .map(|job| run_pair(job, spec.ceiling).map(|outcome| (job.index, outcome)))
        .collect();
    let mut outcomes = outcomes?;
    outcomes.sort_by_key(|&(index, _)| index);

    let mut records = Vec::new();
    let mut polynomial_records = Vec::new();
    let mut printed_equals_t3 = true;
    for (_, outcome) in outcomes {
        records.extend(outcome.records);
        polynomial_records.extend(outcome.polynomials);
        printed_equals_t3 &= outcome.printed_equals_t3;
    }
    let primary: Vec<&VerificationRecord> = records
        .iter()
        .filter(|r| r.theorem != TheoremId::T4TPrinted)
        .collect();
    let printed: Vec<&VerificationRecord> = records
        .iter()
        .filter(|r| r.theorem == TheoremId::T4TPrinted)
        .collect();
    let summary = SuiteSummary {
        checked: primary.len(),
        mismatches: primary.iter().filter(|r| !r.matches).count(),
        t4_printed_checked: printed.len(),
        t4_printed_mismatches: printed.iter().filter(|r| !r.matches).count(),
        t4_printed_equals_t3: printed_equals_t3,
        polynomial_checked: polynomial_records.len(),
        polynomial_mismatches: polynomial_records.iter().filter(|r| !r.matches).count(),
    };
    Ok(SuiteReport {
        records,
        polynomial_records,
        summary,
    })
}

fn build_jobs(spec: &CorpusSpec) -> Result<Vec<PairJob>> {
    let mut jobs = Vec::new();
    let mut push =
        |label1: String, g1: Graph, label2: String, g2: Graph, paths: Option<(u64, u64)>| {
            jobs.push(PairJob {
                index: jobs.len(),
                label1,
                g1,
                label2,
                g2,
                paths,
            });
        };
    match spec.mode {
        CorpusMode::Exhaustive => {
            let lefts: Vec<Graph> = enumerate_connected(spec.max_n1)?.collect();
            let rights: Vec<Graph> = enumerate_connected(spec.max_n2)?.collect();
            for g1 in &lefts {
                for g2 in &rights {
                    push(
                        g1.descriptor(),
                        g1.clone(),
                        g2.descriptor(),
                        g2.clone(),
                        None,
                    );
                }
            }
        }
        CorpusMode::Families => {
            for n in 2..=spec.max_n1 {
                for m in 2..=spec.max_n2 {
                    push(
                        Family::Path(n).to_string(),
                        Graph::path(n)?,
                        Family::Path(m).to_string(),
                        Graph::path(m)?,
                        Some((n as u64, m as u64)),
                    );
                }
            }
        }
        CorpusMode::Random => {
            if spec.max_n1 < 1 || spec.max_n2 < 1 {
                return Err(Error::InvalidFamilyParams {
                    family: "random corpus",
                    reason: format!(
                        "size bounds must be at least 1, got ({}, {})",
                        spec.max_n1, spec.max_n2
                    ),
                });
            }
            // Sample sizes and per-graph seeds from one meta stream so a
            // corpus is a pure function of (seed, bounds, sample_count).
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            for _ in 0..spec.sample_count {
                let n1 = rng.gen_range(1..=spec.max_n1);
                let n2 = rng.gen_range(1..=spec.max_n2);
                let g1 = random_connected(n1, 0.5, rng.next_u64())?;
                let g2 = random_connected(n2, 0.5, rng.next_u64())?;
                push(g1.descriptor(), g1, g2.descriptor(), g2, None);
            }
        }
    }
    Ok(jobs)
}

fn run_pair(job: &PairJob, ceiling: usize) -> Result<PairOutcome> {
    let with_pair = |e: Error| Error::PairContext {
        g1: job.label1.clone(),
        g2: job.label2.clone(),
        source: Box::new(e),
    };
    check_pair_preconditions(&job.g1, &job.g2, ceiling).map_err(with_pair)?;
    let r1 = report(&job.g1);
    let r2 = report(&job.g2);
    let mut records = Vec::with_capacity(5);
    let mut polynomials = Vec::new();
    let mut printed_equals_t3 = true;
    for kind in DerivedKind::all() {
        let product = f_product(&job.g1, &job.g2, kind).map_err(with_pair)?;
        let direct = f_index(&product);
        let record = |theorem: TheoremId, formula: BigInt| VerificationRecord {
            g1: job.label1.clone(),
            g2: job.label2.clone(),
            kind,
            theorem,
            matches: formula == direct,
            formula_value: formula,
            direct_value: direct.clone(),
            product_vertices: product.vertex_count(),
            product_edges: product.edge_count(),
        };
        if kind == DerivedKind::T {
            let printed = closed_form(TheoremId::T4TPrinted, &r1, &r2);
            printed_equals_t3 = printed == closed_form(TheoremId::T3Q, &r1, &r2);
            records.push(record(TheoremId::T4TPrinted, printed));
        }
        let theorem = TheoremId::for_kind(kind);
        records.push(record(theorem, closed_form(theorem, &r1, &r2)));
        if let Some((n, m)) = job.paths {
            let polynomial_value = example1_polynomial(kind, n, m).map_err(with_pair)?;
            polynomials.push(PolynomialRecord {
                kind,
                n,
                m,
                matches: polynomial_value == direct,
                polynomial_value,
                direct_value: direct.clone(),
            });
        }
    }
    Ok(PairOutcome {
        records,
        polynomials,
        printed_equals_t3,
    })
}
