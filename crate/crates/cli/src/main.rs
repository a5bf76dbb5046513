//! `ugb`: Graver bases and universal Gröbner bases of toric ideals of graphs.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 walk search
//! limit exceeded, 4 oracle mismatch, 5 `classify` input is not a walk
//! binomial.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ugb_core::graver::{graver_basis_with, BasisSet, EnumerationLimits};
use ugb_core::io::{self, Style};
use ugb_core::primitive::DEFAULT_BRUTEFORCE_SUPPORT_LIMIT;
use ugb_core::ugb::{universal_groebner_basis_with, Certificate};
use ugb_core::verify::{check_mixedness, check_primitivity, verify_graph};
use ugb_core::{
    degree_histogram, filter_element, is_primitive_structural, support_walkgraph, Binomial,
    BinomialError, Error, Execution, Graph,
};

#[derive(Parser)]
#[command(
    name = "ugb",
    version,
    about = "Graver and universal Gröbner bases of toric ideals of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Graver basis.
    Graver(Common),
    /// Filter the Graver basis to the universal Gröbner basis.
    Ugb {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        basis: BasisArg,
        /// Also list rejected elements with the pure cycle that rejects them.
        #[arg(long)]
        explain: bool,
        /// Check every verdict against the block and forest criteria.
        #[arg(long)]
        verify: bool,
    },
    /// Classify a single binomial, e.g. "e1*e3 - e2*e4" or "1 -1 1 -1".
    Classify {
        #[command(flatten)]
        common: Common,
        binomial: String,
    },
    /// Cross-check all decision procedures on the graph.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Basis sizes, degree histogram and filter step counts.
    Stats {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        basis: BasisArg,
    },
}

#[derive(Args)]
struct Common {
    /// Graph file: "n m" header, then m lines "u v" (1-based).
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Monomial)]
    format: Format,
    /// Largest binomial degree searched [default: n-2].
    #[arg(long)]
    max_degree: Option<usize>,
    /// Cap on walk search states.
    #[arg(long)]
    max_walks: Option<u64>,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallel: u64,
}

#[derive(Args)]
struct BasisArg {
    /// Import the Graver basis from a file instead of enumerating it.
    #[arg(long)]
    basis: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Vector,
    Monomial,
}

impl From<Format> for Style {
    fn from(f: Format) -> Style {
        match f {
            Format::Vector => Style::Vector,
            Format::Monomial => Style::Monomial,
        }
    }
}

enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

struct Context {
    graph: Graph,
    limits: EnumerationLimits,
    exec: Execution,
    style: Style,
}

impl Context {
    fn load(common: &Common) -> Result<Self, Failure> {
        let graph = io::parse_graph(&read(&common.graph)?)?;
        let mut limits = EnumerationLimits::for_graph(&graph);
        if let Some(d) = common.max_degree {
            limits.max_degree = d;
        }
        if let Some(w) = common.max_walks {
            limits.max_walks = w;
        }
        let exec = if common.parallel > 1 {
            Execution::Parallel
        } else {
            Execution::Sequential
        };
        Ok(Self {
            graph,
            limits,
            exec,
            style: common.format.into(),
        })
    }

    fn basis(&self, path: Option<&Path>) -> Result<BasisSet, Failure> {
        match path {
            Some(p) => Ok(io::parse_basis(&read(p)?, &self.graph)?),
            None => Ok(graver_basis_with(&self.graph, &self.limits, self.exec)?),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Splits an imported basis into primitive elements and the rest with their
/// violated clause. Enumerated bases are primitive by construction.
fn screen(g: &Graph, basis: BasisSet) -> (BasisSet, Vec<(Binomial, String)>) {
    let source = basis.source();
    let mut keep = Vec::new();
    let mut dropped = Vec::new();
    for b in basis.into_elements() {
        match support_walkgraph(&b) {
            Ok(wg) => match is_primitive_structural(&wg, g).violation() {
                None => keep.push(b),
                Some(v) => dropped.push((b, v.to_string())),
            },
            Err(e) => dropped.push((b, e.to_string())),
        }
    }
    (BasisSet::new(keep, source), dropped)
}

fn warn_dropped(dropped: &[(Binomial, String)]) {
    if !dropped.is_empty() {
        eprintln!(
            "warning: {} imported elements are not primitive and were excluded",
            dropped.len()
        );
    }
}

fn graver(common: &Common) -> Result<String, Failure> {
    let ctx = Context::load(common)?;
    let basis = ctx.basis(None)?;
    Ok(io::format_basis(&basis, ctx.graph.edge_count(), ctx.style))
}

fn ugb(common: &Common, basis: &BasisArg, explain: bool, verify: bool) -> Result<String, Failure> {
    let ctx = Context::load(common)?;
    let (graver, dropped) = screen(&ctx.graph, ctx.basis(basis.basis.as_deref())?);
    warn_dropped(&dropped);
    let (accepted, traces) = universal_groebner_basis_with(&graver, &ctx.graph, verify, ctx.exec)?;
    let mut out = io::format_basis(&accepted, ctx.graph.edge_count(), ctx.style);
    if explain {
        for (b, t) in graver.iter().zip(&traces) {
            if let Some((cycle, side)) = &t.rejecting_cycle {
                let b = io::format_binomial(b, ctx.style);
                writeln!(out, "rejected: {b} : {}", Certificate(cycle, *side)).unwrap();
            }
        }
        for (b, why) in &dropped {
            writeln!(
                out,
                "not primitive: {} : {why}",
                io::format_binomial(b, ctx.style)
            )
            .unwrap();
        }
    }
    Ok(out)
}

/// Three report lines and whether the input was a walk binomial.
fn classify(common: &Common, text: &str) -> Result<(String, bool), Failure> {
    let ctx = Context::load(common)?;
    let g = &ctx.graph;
    let (plus, minus) = io::parse_binomial_exponents(text.trim(), g.edge_count(), 1)?;

    let not_walk = |why: String| {
        (
            format!("irreducible walk binomial: no ({why})\nprimitive: no\nin UGB: no\n"),
            false,
        )
    };
    let b = match Binomial::new(g, plus, minus) {
        Ok(b) => b,
        Err(BinomialError::DimensionMismatch { expected, found }) => {
            return Err(Error::DimensionMismatch { expected, found }.into())
        }
        Err(e) => return Ok(not_walk(e.to_string())),
    };
    // A connected support whose vertices are balanced between the two sides
    // has an Euler circuit alternating between them.
    let components = g.connected_components(&b.support()).len();
    if components > 1 {
        return Ok(not_walk(format!("support has {components} components")));
    }

    let mut out = String::from("irreducible walk binomial: yes\n");
    let wg = match support_walkgraph(&b) {
        Ok(wg) => wg,
        Err(e) => {
            writeln!(out, "primitive: no ({e})\nin UGB: no (not primitive)").unwrap();
            return Ok((out, true));
        }
    };
    if let Some(v) = is_primitive_structural(&wg, g).violation() {
        writeln!(out, "primitive: no ({v})\nin UGB: no (not primitive)").unwrap();
        return Ok((out, true));
    }
    out.push_str("primitive: yes\n");
    let trace = filter_element(&b, g)?;
    match &trace.rejecting_cycle {
        None => out.push_str("in UGB: yes\n"),
        Some((cycle, side)) => {
            writeln!(out, "in UGB: no (pure cycle {})", Certificate(cycle, *side)).unwrap();
        }
    }
    Ok((out, true))
}

fn verify(common: &Common, basis: &BasisArg) -> Result<String, Failure> {
    let ctx = Context::load(common)?;
    let (label, total, primitive, ugb, skipped) = match basis.basis.as_deref() {
        None => {
            let r = verify_graph(&ctx.graph, &ctx.limits, ctx.exec)?;
            (
                "irreducible",
                r.irreducible,
                r.primitive,
                r.ugb,
                r.bruteforce_skipped,
            )
        }
        Some(p) => {
            let imported = ctx.basis(Some(p))?;
            let (primitive, skipped) = check_primitivity(
                &ctx.graph,
                &imported,
                ctx.limits.max_support_edges,
                ctx.exec,
            )?;
            let ugb = check_mixedness(&ctx.graph, &primitive, ctx.exec)?;
            ("imported", imported.len(), primitive.len(), ugb, skipped)
        }
    };
    if skipped > 0 {
        eprintln!("note: {skipped} elements exceed the brute-force support limit {DEFAULT_BRUTEFORCE_SUPPORT_LIMIT}");
    }
    Ok(format!(
        "{label}: {total}, primitive: {primitive}, ugb: {ugb}, OK\n"
    ))
}

fn stats(common: &Common, basis: &BasisArg) -> Result<String, Failure> {
    let ctx = Context::load(common)?;
    let (graver, dropped) = screen(&ctx.graph, ctx.basis(basis.basis.as_deref())?);
    warn_dropped(&dropped);
    let (accepted, traces) = universal_groebner_basis_with(&graver, &ctx.graph, false, ctx.exec)?;

    let hist: Vec<String> = degree_histogram(&graver)
        .iter()
        .map(|(d, k)| format!("{d}:{k}"))
        .collect();
    let max_len = graver.iter().map(Binomial::walk_length).max().unwrap_or(0) as u64;
    let total: u64 = traces.iter().map(|t| t.step_count).sum();
    let ratio = |b: &Binomial, steps: u64| steps as f64 / (b.walk_length() as f64).powi(3);
    let max_ratio = graver
        .iter()
        .zip(&traces)
        .map(|(b, t)| ratio(b, t.step_count))
        .fold(0.0, f64::max);

    let mut out = String::new();
    writeln!(out, "|Gr_A|: {}", graver.len()).unwrap();
    writeln!(out, "|U_A|: {}", accepted.len()).unwrap();
    writeln!(out, "degree histogram: {{{}}}", hist.join(", ")).unwrap();
    writeln!(out, "max |B_w|: {max_len}").unwrap();
    writeln!(out, "total steps: {total}").unwrap();
    writeln!(
        out,
        "|Gr_A| * max |B_w|^3: {}",
        graver.len() as u64 * max_len.pow(3)
    )
    .unwrap();
    writeln!(out, "max steps / |B_w|^3: {max_ratio:.4}").unwrap();
    writeln!(out, "steps |B_w| ratio binomial").unwrap();
    for (b, t) in graver.iter().zip(&traces) {
        let shown = io::format_binomial(b, ctx.style);
        writeln!(
            out,
            "{} {} {:.4} {shown}",
            t.step_count,
            b.walk_length(),
            ratio(b, t.step_count)
        )
        .unwrap();
    }
    Ok(out)
}

fn threads(command: &Command) -> usize {
    let common = match command {
        Command::Graver(c) => c,
        Command::Ugb { common, .. }
        | Command::Classify { common, .. }
        | Command::Verify { common, .. }
        | Command::Stats { common, .. } => common,
    };
    usize::try_from(common.parallel).unwrap_or(usize::MAX)
}

fn run(command: &Command) -> Result<(String, u8), Failure> {
    let ok = |s: String| (s, 0);
    match command {
        Command::Graver(common) => graver(common).map(ok),
        Command::Ugb {
            common,
            basis,
            explain,
            verify,
        } => ugb(common, basis, *explain, *verify).map(ok),
        Command::Classify { common, binomial } => {
            classify(common, binomial).map(|(s, walk)| (s, if walk { 0 } else { 5 }))
        }
        Command::Verify { common, basis } => verify(common, basis).map(ok),
        Command::Stats { common, basis } => stats(common, basis).map(ok),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = ugb_core::par::with_threads(threads(&cli.command), || run(&cli.command));
    match result {
        Ok((out, code)) => {
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            let code = match &e {
                Error::LimitExceeded { .. } => {
                    eprintln!("error: {e}; raise --max-walks or import a precomputed basis with --basis FILE");
                    3
                }
                Error::OracleMismatch { .. } => {
                    println!("MISMATCH: {e}");
                    4
                }
                _ => {
                    eprintln!("error: {e}");
                    2
                }
            };
            ExitCode::from(code)
        }
    }
}
