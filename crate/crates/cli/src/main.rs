use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;
use serde_json::{json, Value};

use otg_core::chroma::{chromatic_number, verify_coloring, ChiOutcome, Coloring, DEFAULT_BUDGET};
use otg_core::decomp::{decompose, orderly_cover, verify_cover, DecompositionReport, ValueBlock};
use otg_core::embedder::{cover_embedding, verify_embedding, EmbeddingMap};
use otg_core::graph::{
    lshift_digraph, order_type_graph, rshift_digraph, shift_graph, FiniteDigraph, FiniteGraph,
};
use otg_core::seq::{otp, IncreasingTuple};
use otg_core::suite::{run_suite, SuiteConfig};
use otg_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "otg",
    version,
    about = "Shift graphs, order-type graphs and their embeddings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Exact chromatic number of a JSON graph read from FILE or standard input.
    Chi {
        file: Option<PathBuf>,
        /// Decision-node budget of the exact solver.
        #[arg(long, env = "OTG_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Orderly decomposition of a pair of tuples.
    Decompose {
        #[arg(long, value_parser = parse_tuple)]
        a: IncreasingTuple,
        #[arg(long, value_parser = parse_tuple)]
        b: IncreasingTuple,
    },
    /// Homomorphism from Sh_k(N) into the order-type graph of (a, b).
    Embed {
        #[arg(long, value_parser = parse_tuple)]
        a: IncreasingTuple,
        #[arg(long, value_parser = parse_tuple)]
        b: IncreasingTuple,
        #[arg(long = "N", short = 'N')]
        n: usize,
    },
    /// Property suite over seeded random pairs.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 16)]
        value_cap: u64,
        /// Embeddings are checked for N in 3..=max-n.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Worker threads; the output does not depend on this.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Re-check a JSON artifact: an embedding, a decomposition report, a
    /// graph or digraph, or (with --graph) a coloring or chi report.
    Verify {
        file: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Shift graph Sh_r(n).
    Sh {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Left shift digraph LSh_k(n).
    Lsh {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Right shift digraph RSh_k(n).
    Rsh {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Order-type graph of otp(a, b) on increasing tuples over 0..theta.
    Otg {
        #[arg(long, value_parser = parse_tuple)]
        a: IncreasingTuple,
        #[arg(long, value_parser = parse_tuple)]
        b: IncreasingTuple,
        #[arg(long)]
        theta: usize,
    },
}

/// Failure categories, mapped onto the process exit code.
#[derive(Debug)]
enum Failure {
    /// A verification or invariant check failed.
    Check(String),
    /// Bad input.
    Usage(String),
    /// The solver ran out of budget.
    Budget,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_)
            | Error::DaggerViolation { .. }
            | Error::EmbeddingFailed { .. }
            | Error::ImproperColoring(..)
            | Error::NotHomomorphism(..) => Failure::Check(e.to_string()),
            Error::BudgetExhausted { .. } => Failure::Budget,
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a subcommand produced: the text to emit and whether it counts as
/// success.
struct Outcome {
    text: String,
    status: Result<(), Failure>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            status: Ok(()),
        }
    }
}

fn parse_tuple(s: &str) -> Result<IncreasingTuple, String> {
    let values = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    IncreasingTuple::new(values).map_err(|e| e.to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

fn graph_table(g: &FiniteGraph) -> String {
    let mut out = format!("vertices {}\nedges {}\n", g.labels().len(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} -- {}\n", g.label(u), g.label(v)));
    }
    out
}

fn digraph_table(d: &FiniteDigraph) -> String {
    let mut out = format!("vertices {}\narcs {}\n", d.labels().len(), d.arc_count());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{} -> {}\n", d.label(u), d.label(v)));
    }
    out
}

fn render_graph(g: &FiniteGraph, format: Format) -> String {
    match format {
        Format::Json => pretty(&g.to_json()),
        Format::Dot => g.to_dot(),
        Format::Table => graph_table(g),
    }
}

fn render_digraph(d: &FiniteDigraph, format: Format) -> String {
    match format {
        Format::Json => pretty(&d.to_json()),
        Format::Dot => d.to_dot(),
        Format::Table => digraph_table(d),
    }
}

fn no_dot(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(format!(
            "dot output is only available for graphs, not {what}"
        )));
    }
    Ok(())
}

fn cmd_gen(kind: &GenKind, format: Format) -> Result<Outcome, Failure> {
    let text = match kind {
        GenKind::Sh { r, n } => render_graph(&shift_graph(*r, *n)?, format),
        GenKind::Lsh { k, n } => render_digraph(&lshift_digraph(*k, *n)?, format),
        GenKind::Rsh { k, n } => render_digraph(&rshift_digraph(*k, *n)?, format),
        GenKind::Otg { a, b, theta } => {
            if a == b {
                return Err(Error::EqualPair.into());
            }
            render_graph(&order_type_graph(&otp(a, b)?, *theta)?, format)
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_chi(file: Option<&PathBuf>, budget: u64, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "chromatic reports")?;
    let g = FiniteGraph::from_json(&parse_json(&read_input(file)?)?)?;
    info!(
        "solving chromatic number: {} vertices, {} edges, budget {budget}",
        g.labels().len(),
        g.edge_count()
    );
    let outcome = chromatic_number(&g, budget)?;
    let (report, status) = match &outcome {
        ChiOutcome::Exact {
            chi,
            witness,
            nodes,
        } => (
            json!({"chi": chi, "witness": witness, "nodes_explored": nodes}),
            Ok(()),
        ),
        ChiOutcome::Inconclusive {
            lower,
            upper,
            best,
            nodes,
        } => (
            json!({"inconclusive": true, "lower": lower, "upper": upper, "best": best, "nodes_explored": nodes}),
            Err(Failure::Budget),
        ),
    };
    let text = match format {
        Format::Table => match &outcome {
            ChiOutcome::Exact { chi, nodes, .. } => format!("chi {chi}\nnodes_explored {nodes}\n"),
            ChiOutcome::Inconclusive {
                lower,
                upper,
                nodes,
                ..
            } => {
                format!("inconclusive {lower}..={upper}\nnodes_explored {nodes}\n")
            }
        },
        _ => pretty(&report),
    };
    Ok(Outcome { text, status })
}

fn block_text(c: &ValueBlock) -> String {
    if c.closed {
        format!("[{},{}]", c.lo, c.hi)
    } else {
        format!("[{},{})", c.lo, c.hi)
    }
}

fn decomposition_table(r: &DecompositionReport) -> String {
    let mut out = format!("a {}\nb {}\n", r.a, r.b);
    out.push_str(&format!(
        "J0 {:?}\nJ+ {:?}\nJ- {:?}\n",
        r.signs.zero, r.signs.plus, r.signs.minus
    ));
    for an in &r.analyses {
        let blocks: Vec<String> = an.blocks.iter().map(block_text).collect();
        out.push_str(&format!(
            "class [{},{}] {:?}{}: n_A {} deltas {:?} zetas {:?} blocks {}\n",
            an.class.lo,
            an.class.hi,
            an.class.sign,
            if an.swapped { " (swapped)" } else { "" },
            an.n_a,
            an.deltas,
            an.zetas,
            blocks.join(" ")
        ));
    }
    for c in r
        .classes
        .iter()
        .filter(|c| c.sign == otg_core::decomp::Sign::Zero)
    {
        out.push_str(&format!("class [{},{}] Zero\n", c.lo, c.hi));
    }
    for p in &r.cover.pieces {
        out.push_str(&format!(
            "piece [{},{}] {:?} k_e {}\n",
            p.lo, p.hi, p.kind, p.k
        ));
    }
    out.push_str(&format!("k {}\n", r.k));
    out
}

fn cmd_decompose(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    format: Format,
) -> Result<Outcome, Failure> {
    no_dot(format, "decomposition reports")?;
    let report = decompose(a, b)?;
    let text = match format {
        Format::Table => decomposition_table(&report),
        _ => pretty(&serde_json::to_value(&report).expect("report serializes")),
    };
    Ok(Outcome::ok(text))
}

fn embedding_json(e: &EmbeddingMap, verified: bool) -> Value {
    let mut v = serde_json::to_value(e).expect("embedding serializes");
    v["verified"] = json!(verified);
    v
}

fn cmd_embed(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    n: usize,
    format: Format,
) -> Result<Outcome, Failure> {
    no_dot(format, "embeddings")?;
    if n < 2 {
        return Err(Failure::Usage("N must be at least 2".into()));
    }
    let w = orderly_cover(a, b)?;
    let e = cover_embedding(a, b, &w, n)?;
    let verified = verify_embedding(&e, &otp(a, b)?);
    let text = match format {
        Format::Table => {
            let mut out = format!(
                "source Sh_{}({})\nframe {:?}\nverified {verified}\n",
                e.source.k,
                e.source.n,
                e.frame.radices()
            );
            for m in &e.map {
                let vertex = m
                    .vertex
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!("({vertex}) -> {}\n", m.image));
            }
            out
        }
        _ => pretty(&embedding_json(&e, verified)),
    };
    let status = if verified {
        Ok(())
    } else {
        Err(Failure::Check("embedding failed re-verification".into()))
    };
    Ok(Outcome { text, status })
}

fn cmd_suite(config: &SuiteConfig, threads: usize, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "suite reports")?;
    let report = run_suite(config, threads)?;
    let text = match format {
        Format::Table => report.to_table(),
        _ => pretty(&serde_json::to_value(&report).expect("report serializes")),
    };
    let status = if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} invariant failures",
            report.failures.len()
        )))
    };
    Ok(Outcome { text, status })
}

/// Decides what kind of artifact `doc` is and re-checks it.
fn verify_artifact(doc: &Value, graph: Option<&PathBuf>) -> Result<(&'static str, bool), Failure> {
    if doc.get("map").is_some() && doc.get("frame").is_some() {
        let e: EmbeddingMap = serde_json::from_value(doc.clone())
            .map_err(|e| Failure::Usage(format!("embedding json: {e}")))?;
        return Ok(("embedding", verify_embedding(&e, &e.pattern)));
    }
    if doc.get("cover").is_some() && doc.get("a").is_some() {
        let r: DecompositionReport = serde_json::from_value(doc.clone())
            .map_err(|e| Failure::Usage(format!("decomposition json: {e}")))?;
        let valid =
            verify_cover(&r.a, &r.b, &r.cover) && decompose(&r.a, &r.b).ok().as_ref() == Some(&r);
        return Ok(("decomposition", valid));
    }
    if doc.get("arcs").is_some() {
        FiniteDigraph::from_json(doc)?;
        return Ok(("digraph", true));
    }
    if doc.get("edges").is_some() {
        FiniteGraph::from_json(doc)?;
        return Ok(("graph", true));
    }
    let coloring = doc.get("witness").unwrap_or(doc);
    if coloring.get("colors").is_some() {
        let path =
            graph.ok_or_else(|| Failure::Usage("verifying a coloring needs --graph".into()))?;
        let g = FiniteGraph::from_json(&parse_json(&read_input(Some(path))?)?)?;
        let c: Coloring = serde_json::from_value(coloring.clone())
            .map_err(|e| Failure::Usage(format!("coloring json: {e}")))?;
        let mut valid = verify_coloring(&g, &c);
        if let Some(chi) = doc.get("chi").and_then(Value::as_u64) {
            valid &= c.palette as u64 == chi;
        }
        return Ok(("coloring", valid));
    }
    Err(Failure::Usage("unrecognized artifact".into()))
}

fn cmd_verify(file: &PathBuf, graph: Option<&PathBuf>, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "verification reports")?;
    let doc = parse_json(&read_input(Some(file))?)?;
    let (kind, valid) = verify_artifact(&doc, graph)?;
    let text = match format {
        Format::Table => format!("{kind} valid {valid}\n"),
        _ => pretty(&json!({"kind": kind, "valid": valid})),
    };
    let status = if valid {
        Ok(())
    } else {
        Err(Failure::Check(format!("{kind} did not verify")))
    };
    Ok(Outcome { text, status })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Gen { kind } => cmd_gen(kind, format),
        Command::Chi { file, budget } => cmd_chi(file.as_ref(), *budget, format),
        Command::Decompose { a, b } => cmd_decompose(a, b, format),
        Command::Embed { a, b, n } => cmd_embed(a, b, *n, format),
        Command::Suite {
            seed,
            count,
            max_len,
            value_cap,
            max_n,
            threads,
        } => {
            let config = SuiteConfig {
                seed: *seed,
                count: *count,
                max_len: *max_len,
                value_cap: *value_cap,
                max_n: *max_n,
            };
            cmd_suite(&config, *threads, format)
        }
        Command::Verify { file, graph } => cmd_verify(file, graph.as_ref(), format),
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Emits the outcome and reports any failure; returns the exit code.
fn finish(cli: &Cli, outcome: Result<Outcome, Failure>) -> u8 {
    let status = match outcome {
        Ok(Outcome { text, status }) => {
            if let Err(e) = emit(cli, &text) {
                eprintln!("otg: cannot write output: {e}");
                return 2;
            }
            status
        }
        Err(f) => Err(f),
    };
    match status {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Check(msg) | Failure::Usage(msg) => eprintln!("otg: {msg}"),
                Failure::Budget => eprintln!("otg: solver budget exhausted; result inconclusive"),
            }
            f.code()
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    ExitCode::from(finish(&cli, run(&cli)))
}
