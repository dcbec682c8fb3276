//! Command-line front end.
//!
//! Subcommands: `indices` (all indices of one graph as JSON), `derive` and
//! `product` (construct graphs and emit edge lists), `formula` (evaluate
//! one closed form on two graphs), `verify` (run a corpus suite, one JSON
//! object per line, summary last), and `example1` (evaluate a path-family
//! polynomial).
//!
//! Exit codes: 0 on success, 1 on runtime failure or verification
//! mismatches, 2 on command-line misuse. `verify` exits 0 exactly when
//! every T1/T2/T3/T4-corrected comparison matched; printed-T4 and
//! polynomial gaps are reported but do not fail the run.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closed_form::{closed_form, example1_polynomial, TheoremId};
use crate::derived::{derive, DerivedKind};
use crate::graph::Graph;
use crate::invariants::{report, InvariantReport};
use crate::io::{parse_edge_list, serialize_edge_list};
use crate::products::{f_product, lexicographic};
use crate::verify::{
    run_suite, CorpusMode, CorpusSpec, PolynomialRecord, VerificationRecord, DEFAULT_CEILING,
};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "findex",
    version,
    about = "Exact degree-based graph indices, derived graphs, products, and closed-form verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every index of a graph as one JSON object.
    Indices { file: PathBuf },
    /// Build a derived graph and emit it as an edge list.
    Derive {
        file: PathBuf,
        /// Derived graph kind.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Write the edge list here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a product graph and emit it as an edge list.
    Product {
        file1: PathBuf,
        file2: PathBuf,
        /// Derived-graph product kind, or `lex` for the plain
        /// lexicographic product.
        #[arg(long, value_enum)]
        kind: ProductKindArg,
        /// Write the edge list here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate one closed form on the index reports of two graphs.
    Formula {
        /// Which identity to evaluate.
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Compare closed forms against brute force over a corpus.
    Verify(VerifyOpts),
    /// Evaluate the bundled path-family polynomial for one kind.
    Example1 {
        /// Product kind.
        #[arg(long, value_enum)]
        op: KindArg,
        /// Order of the left path.
        #[arg(long)]
        n: u64,
        /// Order of the right path.
        #[arg(long)]
        m: u64,
    },
}

#[derive(Args)]
struct VerifyOpts {
    /// Corpus mode; inferred from the other flags when omitted.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Left-factor size bound (exhaustive: default 4, random: default 5).
    #[arg(long)]
    max_n1: Option<usize>,
    /// Right-factor size bound (exhaustive: default 3, random: default 3).
    #[arg(long)]
    max_n2: Option<usize>,
    /// Families mode: check the path grid P_n[P_m] for 2 <= n <= N,
    /// 2 <= m <= M.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    paths: Option<Vec<usize>>,
    /// Random mode: number of sampled pairs (default 20).
    #[arg(long)]
    samples: Option<usize>,
    /// Random mode: sampling seed (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Product vertex-count ceiling (default 5000).
    #[arg(long)]
    ceiling: Option<usize>,
    /// Size of the worker pool (default: one worker per CPU).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "S")]
    S,
    #[value(name = "R")]
    R,
    #[value(name = "Q")]
    Q,
    #[value(name = "T")]
    T,
}

impl From<KindArg> for DerivedKind {
    fn from(kind: KindArg) -> DerivedKind {
        match kind {
            KindArg::S => DerivedKind::S,
            KindArg::R => DerivedKind::R,
            KindArg::Q => DerivedKind::Q,
            KindArg::T => DerivedKind::T,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductKindArg {
    #[value(name = "S")]
    S,
    #[value(name = "R")]
    R,
    #[value(name = "Q")]
    Q,
    #[value(name = "T")]
    T,
    #[value(name = "lex")]
    Lex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "T1")]
    T1,
    #[value(name = "T2")]
    T2,
    #[value(name = "T3")]
    T3,
    #[value(name = "T4-printed")]
    T4Printed,
    #[value(name = "T4-corrected")]
    T4Corrected,
}

impl From<TheoremArg> for TheoremId {
    fn from(theorem: TheoremArg) -> TheoremId {
        match theorem {
            TheoremArg::T1 => TheoremId::T1S,
            TheoremArg::T2 => TheoremId::T2R,
            TheoremArg::T3 => TheoremId::T3Q,
            TheoremArg::T4Printed => TheoremId::T4TPrinted,
            TheoremArg::T4Corrected => TheoremId::T4TCorrected,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Families,
    Random,
}

impl From<ModeArg> for CorpusMode {
    fn from(mode: ModeArg) -> CorpusMode {
        match mode {
            ModeArg::Exhaustive => CorpusMode::Exhaustive,
            ModeArg::Families => CorpusMode::Families,
            ModeArg::Random => CorpusMode::Random,
        }
    }
}

enum CliFailure {
    Usage(String),
    Run(Error),
}

impl From<Error> for CliFailure {
    fn from(err: Error) -> CliFailure {
        CliFailure::Run(err)
    }
}

impl From<std::io::Error> for CliFailure {
    fn from(err: std::io::Error) -> CliFailure {
        CliFailure::Run(Error::Io(err))
    }
}

/// Parses `args` and runs the selected command, writing results to
/// `stdout` and diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render();
            if err.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                return 2;
            }
            // --help and --version land here.
            let _ = write!(stdout, "{rendered}");
            return 0;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(CliFailure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            2
        }
        Err(CliFailure::Run(err)) => {
            let _ = writeln!(stderr, "error: {err}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> std::result::Result<i32, CliFailure> {
    match command {
        Command::Indices { file } => {
            let g = load(&file)?;
            writeln!(out, "{}", to_json(&indices_json(&report(&g))))?;
            Ok(0)
        }
        Command::Derive { file, kind, output } => {
            let g = load(&file)?;
            let doc = serialize_edge_list(&derive(&g, kind.into()));
            emit(&doc, output.as_deref(), out)?;
            Ok(0)
        }
        Command::Product {
            file1,
            file2,
            kind,
            output,
        } => {
            let g1 = load(&file1)?;
            let g2 = load(&file2)?;
            let product = match kind {
                ProductKindArg::S => f_product(&g1, &g2, DerivedKind::S),
                ProductKindArg::R => f_product(&g1, &g2, DerivedKind::R),
                ProductKindArg::Q => f_product(&g1, &g2, DerivedKind::Q),
                ProductKindArg::T => f_product(&g1, &g2, DerivedKind::T),
                ProductKindArg::Lex => lexicographic(&g1, &g2),
            }?;
            emit(&serialize_edge_list(&product), output.as_deref(), out)?;
            Ok(0)
        }
        Command::Formula {
            theorem,
            file1,
            file2,
        } => {
            let g1 = load(&file1)?;
            let g2 = load(&file2)?;
            let value = closed_form(theorem.into(), &report(&g1), &report(&g2));
            writeln!(out, "{value}")?;
            Ok(0)
        }
        Command::Verify(opts) => cmd_verify(opts, out),
        Command::Example1 { op, n, m } => {
            let value = example1_polynomial(op.into(), n, m)?;
            writeln!(out, "{value}")?;
            Ok(0)
        }
    }
}

fn cmd_verify(opts: VerifyOpts, out: &mut dyn Write) -> std::result::Result<i32, CliFailure> {
    let mode: CorpusMode = match opts.mode {
        Some(mode) => mode.into(),
        None if opts.paths.is_some() => CorpusMode::Families,
        None if opts.samples.is_some() || opts.seed.is_some() => CorpusMode::Random,
        None => CorpusMode::Exhaustive,
    };
    if opts.paths.is_some() && mode != CorpusMode::Families {
        return Err(CliFailure::Usage(
            "--paths applies only to families mode".into(),
        ));
    }
    if (opts.samples.is_some() || opts.seed.is_some()) && mode != CorpusMode::Random {
        return Err(CliFailure::Usage(
            "--samples and --seed apply only to random mode".into(),
        ));
    }
    let (max_n1, max_n2) = match mode {
        CorpusMode::Exhaustive => (opts.max_n1.unwrap_or(4), opts.max_n2.unwrap_or(3)),
        CorpusMode::Random => (opts.max_n1.unwrap_or(5), opts.max_n2.unwrap_or(3)),
        CorpusMode::Families => match &opts.paths {
            Some(bounds) => (bounds[0], bounds[1]),
            None => (opts.max_n1.unwrap_or(6), opts.max_n2.unwrap_or(6)),
        },
    };
    if mode == CorpusMode::Families && (max_n1 < 2 || max_n2 < 2) {
        return Err(CliFailure::Usage(format!(
            "families mode needs path orders of at least 2, got ({max_n1}, {max_n2})"
        )));
    }
    let spec = CorpusSpec {
        mode,
        max_n1,
        max_n2,
        sample_count: opts.samples.unwrap_or(20),
        seed: opts.seed.unwrap_or(0),
        ceiling: opts.ceiling.unwrap_or(DEFAULT_CEILING),
    };
    let suite = match opts.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliFailure::Usage(format!("--threads: {e}")))?
            .install(|| run_suite(&spec)),
        None => run_suite(&spec),
    }?;
    for record in &suite.records {
        writeln!(out, "{}", to_json(&record_json(record)))?;
    }
    for record in &suite.polynomial_records {
        writeln!(out, "{}", to_json(&polynomial_json(record)))?;
    }
    let summary = SummaryJson {
        ty: "summary",
        checked: suite.summary.checked,
        mismatches: suite.summary.mismatches,
        t4_printed_checked: suite.summary.t4_printed_checked,
        t4_printed_mismatches: suite.summary.t4_printed_mismatches,
        t4_printed_equals_t3: suite.summary.t4_printed_equals_t3,
        polynomial_checked: suite.summary.polynomial_checked,
        polynomial_mismatches: suite.summary.polynomial_mismatches,
    };
    writeln!(out, "{}", to_json(&summary))?;
    Ok(if suite.summary.mismatches == 0 { 0 } else { 1 })
}

fn load(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

fn emit(doc: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, doc)
            .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?,
        None => out.write_all(doc.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output structs serialize")
}

#[derive(Serialize)]
struct IndicesJson {
    n: usize,
    m: usize,
    m1: String,
    m2: String,
    f: String,
    hm: String,
    rezm: String,
    xi4: String,
}

fn indices_json(r: &InvariantReport) -> IndicesJson {
    IndicesJson {
        n: r.n,
        m: r.m,
        m1: r.m1.to_string(),
        m2: r.m2.to_string(),
        f: r.f.to_string(),
        hm: r.hm.to_string(),
        rezm: r.rezm.to_string(),
        xi4: r.xi4.to_string(),
    }
}

#[derive(Serialize)]
struct RecordJson<'a> {
    #[serde(rename = "type")]
    ty: &'static str,
    g1: &'a str,
    g2: &'a str,
    kind: String,
    theorem: String,
    formula: String,
    direct: String,
    #[serde(rename = "match")]
    matches: bool,
    product_vertices: usize,
    product_edges: usize,
}

fn record_json(r: &VerificationRecord) -> RecordJson<'_> {
    RecordJson {
        ty: "record",
        g1: &r.g1,
        g2: &r.g2,
        kind: r.kind.to_string(),
        theorem: r.theorem.to_string(),
        formula: r.formula_value.to_string(),
        direct: r.direct_value.to_string(),
        matches: r.matches,
        product_vertices: r.product_vertices,
        product_edges: r.product_edges,
    }
}

#[derive(Serialize)]
struct PolynomialJson {
    #[serde(rename = "type")]
    ty: &'static str,
    kind: String,
    n: u64,
    m: u64,
    polynomial: String,
    direct: String,
    #[serde(rename = "match")]
    matches: bool,
}

fn polynomial_json(r: &PolynomialRecord) -> PolynomialJson {
    PolynomialJson {
        ty: "polynomial",
        kind: r.kind.to_string(),
        n: r.n,
        m: r.m,
        polynomial: r.polynomial_value.to_string(),
        direct: r.direct_value.to_string(),
        matches: r.matches,
    }
}

#[derive(Serialize)]
struct SummaryJson {
    #[serde(rename = "type")]
    ty: &'static str,
    checked: usize,
    mismatches: usize,
    t4_printed_checked: usize,
    t4_printed_mismatches: usize,
    t4_printed_equals_t3: bool,
    polynomial_checked: usize,
    polynomial_mismatches: usize,
}
