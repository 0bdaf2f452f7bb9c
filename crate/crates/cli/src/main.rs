use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tk5kit_core::graph6::{to_graph6, to_sparse6};
use tk5kit_core::{
    cycle_through_three, find_tk5, two_disjoint_paths, Budget, Edge, Graph, K4Mode, TKConstraints,
    Vertex, VertexSet,
};
use tk5kit_harness::{
    corpus_generate, emit_report, ingest, run_jobs, standard_corpus, statement_inputs, Family, Job,
    PlanarBase, ReportFormat, ReportMeta, Statement, VerifyOptions, DEFAULT_ROLE_CAP,
};

#[derive(Parser)]
#[command(
    name = "tk5kit",
    version,
    about = "Certified TK5, linkage and cycle searches on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check statements on every graph of a corpus and write a report.
    Verify(VerifyArgs),
    /// Print a graph family as graph6 lines.
    Generate(GenerateArgs),
    /// Search for a TK5 in each input graph.
    FindTk5(FindTk5Args),
    /// Two disjoint paths s1-t1, s2-t2, or a 3-planarity witness.
    TwoPaths(TwoPathsArgs),
    /// A cycle through three vertices, or the obstruction to one.
    Cycle3(Cycle3Args),
}

#[derive(Args)]
struct InputArgs {
    /// graph6/sparse6 file, one graph per line; `-` reads stdin.
    #[arg(long, short)]
    input: PathBuf,
}

#[derive(Args)]
struct BudgetArgs {
    /// Step cap for each search.
    #[arg(long, default_value_t = Budget::DEFAULT_STEPS)]
    budget_nodes: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement ids (comma separated) or `all`.
    #[arg(long, default_value = "theorem-1.1", value_delimiter = ',')]
    statement: Vec<String>,
    /// Corpus file; the built-in sweep corpus when omitted.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Worker threads (default: TK5KIT_THREADS, else all cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Inputs checked per graph and statement.
    #[arg(long, default_value_t = DEFAULT_ROLE_CAP)]
    role_cap: usize,
    /// Lift the per-graph cap.
    #[arg(long)]
    all_roles: bool,
    #[arg(long, value_enum, default_value_t = Mode::Subgraph)]
    k4_mode: Mode,
    /// Record wall-clock time per verdict (reports are then not reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Subgraph,
    Induced,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Complete,
    CompleteMinusEdge,
    CompleteMultipartite,
    Circulant,
    ApexOverPlanar,
    RandomFiltered,
    All,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Icosahedron,
    Octahedron,
    Antiprism,
    DoubleWheel,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encoding {
    Graph6,
    Sparse6,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    /// Size of the removed matching (complete-minus-edge).
    #[arg(long, default_value_t = 1)]
    matching: usize,
    /// Part sizes (complete-multipartite).
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Jump lengths (circulant).
    #[arg(long, value_delimiter = ',')]
    jumps: Vec<usize>,
    /// Planar base (apex-over-planar); `k` from --n for antiprism and double wheel.
    #[arg(long, value_enum)]
    base: Option<Base>,
    #[arg(long, default_value_t = 0.7)]
    p: f64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_tries: usize,
    #[arg(long, value_enum, default_value_t = Encoding::Graph6)]
    encoding: Encoding,
}

#[derive(Args)]
struct FindTk5Args {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_delimiter = ',')]
    forbid_branch: Vec<Vertex>,
    #[arg(long, value_delimiter = ',')]
    require_branch: Vec<Vertex>,
    /// `u,v`: an edge that must lie on the subdivision.
    #[arg(long, value_delimiter = ',')]
    require_edge: Vec<Vertex>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct TwoPathsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// `s1,s2,t1,t2`.
    #[arg(long, value_delimiter = ',', required = true)]
    terminals: Vec<Vertex>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct Cycle3Args {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    vertices: Vec<Vertex>,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Graphs with ids `<source>:<line>`; malformed lines go to stderr.
fn read_graphs(path: &PathBuf) -> Result<Vec<(String, Graph)>> {
    let name = path.display().to_string();
    let corpus = if name == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        ingest(s.as_bytes())?
    } else {
        let f = fs::File::open(path).with_context(|| format!("cannot open {name}"))?;
        ingest(BufReader::new(f))?
    };
    for d in &corpus.diagnostics {
        eprintln!("{name}:{}: {}", d.line, d.message);
    }
    Ok(corpus
        .graphs
        .into_iter()
        .map(|g| (format!("{name}:{}", g.line), g.graph))
        .collect())
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<()> {
    let statements: Vec<Statement> = if a.statement.iter().any(|s| s == "all") {
        Statement::ALL.to_vec()
    } else {
        a.statement
            .iter()
            .map(|s| s.parse::<Statement>().map_err(anyhow::Error::msg))
            .collect::<Result<_>>()?
    };
    let graphs = match &a.input {
        Some(p) => read_graphs(p)?,
        None => standard_corpus(a.seed)?,
    };
    let cap = if a.all_roles { usize::MAX } else { a.role_cap };
    let mut jobs: Vec<Job> = Vec::new();
    let mut skipped = 0;
    for (id, g) in &graphs {
        for &st in &statements {
            let inputs = statement_inputs(g, st, cap)?;
            if inputs.is_empty() {
                skipped += 1;
            }
            jobs.extend(inputs.into_iter().map(|i| (id.clone(), g.clone(), i)));
        }
    }
    let opts = VerifyOptions {
        budget: Budget::steps(a.budget.budget_nodes),
        k4_mode: match a.k4_mode {
            Mode::Subgraph => K4Mode::Subgraph,
            Mode::Induced => K4Mode::Induced,
        },
        timing: a.timing,
    };
    let verdicts = run_jobs(&jobs, &opts, a.threads)?;
    let format = match a.format {
        Format::Json => ReportFormat::Json,
        Format::Tsv => ReportFormat::Tsv,
    };
    let report = emit_report(
        &verdicts,
        format,
        &ReportMeta::new(a.seed, a.budget.budget_nodes),
    )?;
    match &a.report {
        Some(p) => fs::write(p, report).with_context(|| format!("cannot write {}", p.display()))?,
        None => io::stdout().write_all(report.as_bytes())?,
    }
    let certified = verdicts.iter().filter(|v| v.is_certified()).count();
    eprintln!(
        "{} graphs, {} verdicts, {certified} certified, {} (graph, statement) pairs without admissible input",
        graphs.len(),
        verdicts.len(),
        skipped
    );
    Ok(())
}

fn generate(a: GenerateArgs) -> Result<()> {
    let need_n = || a.n.context("--n is required for this family");
    let family = match a.family {
        FamilyName::Complete => Family::Complete { n: need_n()? },
        FamilyName::CompleteMinusEdge => Family::CompleteMinusEdge {
            n: need_n()?,
            matching: a.matching,
        },
        FamilyName::CompleteMultipartite => Family::CompleteMultipartite {
            parts: a.parts.clone(),
        },
        FamilyName::Circulant => Family::Circulant {
            n: need_n()?,
            jumps: a.jumps.clone(),
        },
        FamilyName::ApexOverPlanar => Family::ApexOverPlanar {
            base: match a.base.context("--base is required for apex-over-planar")? {
                Base::Icosahedron => PlanarBase::Icosahedron,
                Base::Octahedron => PlanarBase::Octahedron,
                Base::Antiprism => PlanarBase::Antiprism(need_n()?),
                Base::DoubleWheel => PlanarBase::DoubleWheel(need_n()?),
            },
        },
        FamilyName::RandomFiltered => Family::RandomFiltered {
            n: need_n()?,
            p: a.p,
            count: a.count,
            seed: a.seed,
            max_tries: a.max_tries,
        },
        FamilyName::All => Family::All { n: need_n()? },
        FamilyName::Connected => Family::Connected { n: need_n()? },
    };
    let mut out = io::stdout().lock();
    for g in corpus_generate(&family)? {
        let line = match a.encoding {
            Encoding::Graph6 => to_graph6(&g),
            Encoding::Sparse6 => to_sparse6(&g),
        };
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn find(a: FindTk5Args) -> Result<()> {
    let required_edge: Option<Edge> = match a.require_edge.as_slice() {
        [] => None,
        [u, v] => Some((*u.min(v), *u.max(v))),
        _ => bail!("--require-edge takes exactly two vertices"),
    };
    let c = TKConstraints {
        forbidden_branch: a.forbid_branch.iter().collect::<VertexSet>(),
        required_branch: a.require_branch.iter().collect::<VertexSet>(),
        required_edge,
        host_restriction: None,
    };
    let budget = Budget::steps(a.budget.budget_nodes);
    for (id, g) in read_graphs(&a.input.input)? {
        let w = find_tk5(&g, &c, &budget).with_context(|| id.clone())?;
        print_json(&serde_json::json!({"graph_id": id, "witness": w}))?;
    }
    Ok(())
}

fn two_paths(a: TwoPathsArgs) -> Result<()> {
    let [s1, s2, t1, t2] = a.terminals[..] else {
        bail!("--terminals takes s1,s2,t1,t2")
    };
    let budget = Budget::steps(a.budget.budget_nodes);
    for (id, g) in read_graphs(&a.input.input)? {
        let r = two_disjoint_paths(&g, s1, s2, t1, t2, &budget).with_context(|| id.clone())?;
        print_json(&serde_json::json!({"graph_id": id, "result": r}))?;
    }
    Ok(())
}

fn cycle3(a: Cycle3Args) -> Result<()> {
    let [y1, y2, y3] = a.vertices[..] else {
        bail!("--vertices takes three vertices")
    };
    let budget = Budget::steps(a.budget.budget_nodes);
    for (id, g) in read_graphs(&a.input.input)? {
        let r = cycle_through_three(&g, [y1, y2, y3], &budget).with_context(|| id.clone())?;
        print_json(&serde_json::json!({"graph_id": id, "result": r}))?;
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Verify(a) => verify(a),
        Command::Generate(a) => generate(a),
        Command::FindTk5(a) => find(a),
        Command::TwoPaths(a) => two_paths(a),
        Command::Cycle3(a) => cycle3(a),
    }
}
