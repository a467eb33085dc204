//! Command-line front end for the exact nullity-pair toolkit.
//!
//! Inputs are flexible: matrix arguments accept a path to a JSON file,
//! inline JSON, or a catalog name (A0, A1, B0..B3); graph arguments
//! accept a path or inline text holding either JSON or graph6 (with
//! `--root` choosing the distinguished vertex, default 0). Every
//! positional input slot also accepts an equivalent flag spelling
//! (`-m/--matrix`, `-g/--graph`, `--host`, `--pattern`), and `search`
//! takes `--pair` and `--snip` as aliases for `--target` and
//! `--require-snip`.
//!
//! Exit codes: 0 for a completed computation (including "not found"
//! search results), 1 when the computation itself reports failure or a
//! domain error (e.g. an invalid operation for the given input), 2 for
//! unusable invocations, unreadable input, or internal inconsistencies.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sniplab_core::{
    cut_vertex_reduce, enumerate_pairs_capped, format_rational, gives_full_recipe, has_isnip_cases,
    has_isnip_direct, has_isnip_recipe, has_sap, in_pattern, index_type, minimal_minor_family,
    nullity_pair, paper_matrix, parse_rational, search_certificate_capped, south_step, sw_step,
    west_step, xixi_minor_based, xixi_report_capped, IndexType, NullityPair, PaperMatrixId,
    PerturbStep, RationalMatrix, RootedGraph, SearchGrid, SearchMode, SnipCertificate, StepKind,
    XiXiReport, DEFAULT_CANDIDATE_CAP,
};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Parses argv and executes one subcommand, returning the process exit
/// code. The first element is the program name, as in `std::env::args`.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            if let Some(path) = &cli.output {
                let text = serde_json::to_string_pretty(&outcome.json).expect("JSON serializes");
                if let Err(err) = std::fs::write(path, text + "\n") {
                    eprintln!("error: cannot write {}: {err}", path.display());
                    return 2;
                }
            }
            // Ignore output errors (e.g. a closed pipe) so the computed
            // exit code survives `sniplab ... | head`.
            let mut stdout = std::io::stdout();
            let _ = if cli.json {
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("JSON serializes")
                )
            } else {
                writeln!(stdout, "{}", outcome.human)
            };
            outcome.exit
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            err.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sniplab",
    version,
    about = "Exact nullity pairs, transfer-property checks, and rooted-minor bounds"
)]
struct Cli {
    /// Print the result as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON result to this file
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nullity pair and index type of one vertex
    Pair(PairArgs),
    /// Full-strength transfer test for a matrix over a graph
    Sap(SapArgs),
    /// Transfer property at one vertex, by one or all deciders
    Snip(SnipArgs),
    /// Kernel spanning test underlying the transfer property
    Recipe(PairArgs),
    /// Exact Schur complement on an invertible principal block
    Schur(SchurArgs),
    /// Rooted (or unrooted) minor containment
    Minor(MinorArgs),
    /// Lower-bound report for the rooted parameter
    Xixi(XixiArgs),
    /// Split a graph at a cut-vertex root
    Parts(GraphArg),
    /// All nullity pairs attainable at the root over a value grid
    Enumerate(EnumerateArgs),
    /// Search the grid for a specific target pair
    Search(SearchArgs),
    /// Re-derive the catalog results and the minimality audit
    VerifyPaper,
    /// Walk a nullity pair down to a terminal pair step by step
    Staircase(StaircaseArgs),
}

#[derive(Args)]
struct PairArgs {
    /// Matrix: JSON file, inline JSON, or catalog name A0..B3
    #[arg(required_unless_present = "matrix_flag", conflicts_with = "matrix_flag")]
    matrix: Option<String>,
    /// Flag spelling of the matrix slot
    #[arg(short = 'm', long = "matrix", value_name = "MATRIX", hide = true)]
    matrix_flag: Option<String>,
    /// Vertex index
    #[arg(short = 'i', long, default_value_t = 0)]
    index: usize,
}

#[derive(Args)]
struct SapArgs {
    /// Matrix: JSON file, inline JSON, or catalog name A0..B3
    #[arg(required_unless_present = "matrix_flag", conflicts_with = "matrix_flag")]
    matrix: Option<String>,
    /// Flag spelling of the matrix slot
    #[arg(short = 'm', long = "matrix", value_name = "MATRIX", hide = true)]
    matrix_flag: Option<String>,
    /// Graph; defaults to the off-diagonal support of the matrix
    #[arg(short = 'g', long)]
    graph: Option<String>,
    /// Root for graph6 graph input
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Cases,
    Recipe,
    All,
}

#[derive(Args)]
struct SnipArgs {
    /// Matrix: JSON file, inline JSON, or catalog name A0..B3
    #[arg(required_unless_present = "matrix_flag", conflicts_with = "matrix_flag")]
    matrix: Option<String>,
    /// Flag spelling of the matrix slot
    #[arg(short = 'm', long = "matrix", value_name = "MATRIX", hide = true)]
    matrix_flag: Option<String>,
    /// Vertex index
    #[arg(short = 'i', long, default_value_t = 0)]
    index: usize,
    /// Graph; defaults to the off-diagonal support of the matrix
    #[arg(short = 'g', long)]
    graph: Option<String>,
    /// Root for graph6 graph input
    #[arg(long)]
    root: Option<usize>,
    /// Which decider to run; `all` also checks that they agree
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
}

#[derive(Args)]
struct SchurArgs {
    /// Matrix: JSON file, inline JSON, or catalog name A0..B3
    #[arg(required_unless_present = "matrix_flag", conflicts_with = "matrix_flag")]
    matrix: Option<String>,
    /// Flag spelling of the matrix slot
    #[arg(short = 'm', long = "matrix", value_name = "MATRIX", hide = true)]
    matrix_flag: Option<String>,
    /// Block rows/columns to eliminate, e.g. "0,2"
    #[arg(long, value_name = "LIST")]
    alpha: String,
}

#[derive(Args)]
struct MinorArgs {
    /// Host graph (path, JSON, or graph6)
    #[arg(required_unless_present = "host_flag", conflicts_with = "host_flag")]
    host: Option<String>,
    /// Pattern graph (path, JSON, or graph6)
    #[arg(required_unless_present = "pattern_flag", conflicts_with = "pattern_flag")]
    pattern: Option<String>,
    /// Flag spelling of the host slot
    #[arg(long = "host", value_name = "HOST", hide = true)]
    host_flag: Option<String>,
    /// Flag spelling of the pattern slot
    #[arg(long = "pattern", value_name = "PATTERN", hide = true)]
    pattern_flag: Option<String>,
    /// Root of the host for graph6 input
    #[arg(long)]
    host_root: Option<usize>,
    /// Root of the pattern for graph6 input
    #[arg(long)]
    pattern_root: Option<usize>,
    /// Ignore both roots
    #[arg(long)]
    unrooted: bool,
}

#[derive(Args)]
struct GraphArg {
    /// Graph (path, JSON, or graph6)
    #[arg(required_unless_present = "graph_flag", conflicts_with = "graph_flag")]
    graph: Option<String>,
    /// Flag spelling of the graph slot
    #[arg(short = 'g', long = "graph", value_name = "GRAPH", hide = true)]
    graph_flag: Option<String>,
    /// Root for graph6 graph input
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Args)]
struct GridOpts {
    /// Diagonal values: "a..b" (integers) or a comma list of rationals
    #[arg(long)]
    diag: Option<String>,
    /// Edge values: comma list of nonzero rationals
    #[arg(long)]
    edges: Option<String>,
    /// Sample this many random candidates instead of scanning all
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for sampling (default: SNIPLAB_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Exhaustive-scan size limit
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
    cap: u64,
}

impl GridOpts {
    fn grid_for(&self, g: &RootedGraph) -> Result<SearchGrid, CliError> {
        let mut grid = SearchGrid::default_for(g);
        if let Some(spec) = &self.diag {
            grid.diagonal_values = parse_values(spec)?;
        }
        if let Some(spec) = &self.edges {
            grid.edge_values = parse_values(spec)?;
        }
        if let Some(samples) = self.samples {
            let seed = self.seed.or_else(seed_from_env).unwrap_or(0);
            grid.mode = SearchMode::Randomized { samples, seed };
        }
        Ok(grid)
    }
}

#[derive(Args)]
struct XixiArgs {
    /// Graph (path, JSON, or graph6)
    #[arg(required_unless_present = "graph_flag", conflicts_with = "graph_flag")]
    graph: Option<String>,
    /// Flag spelling of the graph slot
    #[arg(short = 'g', long = "graph", value_name = "GRAPH", hide = true)]
    graph_flag: Option<String>,
    /// Root for graph6 graph input
    #[arg(long)]
    root: Option<usize>,
    /// Skip the search; report the minor catalog level only
    #[arg(long)]
    minor_only: bool,
    #[command(flatten)]
    grid: GridOpts,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Graph (path, JSON, or graph6)
    #[arg(required_unless_present = "graph_flag", conflicts_with = "graph_flag")]
    graph: Option<String>,
    /// Flag spelling of the graph slot
    #[arg(short = 'g', long = "graph", value_name = "GRAPH", hide = true)]
    graph_flag: Option<String>,
    /// Root for graph6 graph input
    #[arg(long)]
    root: Option<usize>,
    #[command(flatten)]
    grid: GridOpts,
}

#[derive(Args)]
struct SearchArgs {
    /// Graph (path, JSON, or graph6)
    #[arg(required_unless_present = "graph_flag", conflicts_with = "graph_flag")]
    graph: Option<String>,
    /// Flag spelling of the graph slot
    #[arg(short = 'g', long = "graph", value_name = "GRAPH", hide = true)]
    graph_flag: Option<String>,
    /// Root for graph6 graph input
    #[arg(long)]
    root: Option<usize>,
    /// Target pair "k,l" (alias: --pair)
    #[arg(long, value_name = "K,L", alias = "pair")]
    target: String,
    /// Only accept candidates carrying the transfer property (alias: --snip)
    #[arg(long, alias = "snip")]
    require_snip: bool,
    #[command(flatten)]
    grid: GridOpts,
}

#[derive(Args)]
struct StaircaseArgs {
    /// Matrix: JSON file, inline JSON, or catalog name A0..B3
    #[arg(required_unless_present = "matrix_flag", conflicts_with = "matrix_flag")]
    matrix: Option<String>,
    /// Flag spelling of the matrix slot
    #[arg(short = 'm', long = "matrix", value_name = "MATRIX", hide = true)]
    matrix_flag: Option<String>,
    /// Vertex index
    #[arg(short = 'i', long, default_value_t = 0)]
    index: usize,
    /// Size of border perturbations, e.g. "1" or "1/3"
    #[arg(long, default_value = "1")]
    eps: String,
}

struct Outcome {
    human: String,
    json: Value,
    exit: i32,
}

impl Outcome {
    fn ok(human: String, json: Value) -> Self {
        Outcome {
            human,
            json,
            exit: 0,
        }
    }
}

struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }
}

macro_rules! domain_from {
    ($($ty:ty),*) => {
        $(impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::domain(err.to_string())
            }
        })*
    };
}

domain_from!(
    sniplab_core::RatMatError,
    sniplab_core::RGraphError,
    sniplab_core::SnipError,
    sniplab_core::StepError,
    sniplab_core::XiXiError
);

fn seed_from_env() -> Option<u64> {
    std::env::var("SNIPLAB_SEED").ok()?.trim().parse().ok()
}

/// Value of an input slot that can be written either positionally or
/// as a flag; the argument parser guarantees exactly one is present.
fn pick<'a>(pos: &'a Option<String>, flag: &'a Option<String>) -> &'a str {
    pos.as_deref()
        .or(flag.as_deref())
        .expect("parser enforces one spelling of the input slot")
}

/// File contents when the argument names a readable file, otherwise
/// the argument itself as inline text.
fn read_input(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|err| CliError::usage(format!("cannot read {arg}: {err}")))
    } else {
        Ok(arg.to_string())
    }
}

/// Matrix argument: catalog name, path to JSON, or inline JSON. For
/// catalog names the rooted support graph comes along for free.
fn load_matrix(arg: &str) -> Result<(RationalMatrix, Option<RootedGraph>), CliError> {
    if let Ok(id) = PaperMatrixId::from_str(arg) {
        let (graph, matrix) = paper_matrix(id);
        return Ok((matrix, Some(graph)));
    }
    let text = read_input(arg)?;
    let matrix: RationalMatrix = serde_json::from_str(&text).map_err(|err| {
        CliError::usage(format!(
            "matrix input {arg:?} is neither a catalog name nor valid JSON: {err}"
        ))
    })?;
    Ok((matrix, None))
}

fn load_graph(arg: &str, root: Option<usize>) -> Result<RootedGraph, CliError> {
    let text = read_input(arg)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let g: RootedGraph = serde_json::from_str(trimmed)
            .map_err(|err| CliError::usage(format!("bad graph JSON in {arg:?}: {err}")))?;
        return match root {
            Some(r) => g.with_root(r).map_err(CliError::from),
            None => Ok(g),
        };
    }
    RootedGraph::from_graph6(trimmed, root.unwrap_or(0))
        .map_err(|err| CliError::usage(format!("bad graph input {arg:?}: {err}")))
}

/// Graph to check a matrix against: explicit argument or the matrix's
/// own support (also the catalog graph when the matrix was named).
fn resolve_graph(
    matrix: &RationalMatrix,
    bundled: Option<RootedGraph>,
    graph_arg: &Option<String>,
    root: Option<usize>,
) -> Result<RootedGraph, CliError> {
    let g = match graph_arg {
        Some(arg) => load_graph(arg, root)?,
        None => match bundled {
            Some(g) => g,
            None => sniplab_core::support_graph(matrix, root.unwrap_or(0))?,
        },
    };
    if !in_pattern(matrix, &g, false)? {
        return Err(CliError::domain(
            "matrix has support outside the given graph".to_string(),
        ));
    }
    Ok(g)
}

fn parse_values(spec: &str) -> Result<Vec<sniplab_core::Rational>, CliError> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad range start in {spec:?}")))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad range end in {spec:?}")))?;
        if lo > hi {
            return Err(CliError::usage(format!("empty range {spec:?}")));
        }
        return Ok((lo..=hi).map(sniplab_core::rat).collect());
    }
    spec.split(',')
        .map(|part| {
            parse_rational(part.trim())
                .map_err(|_| CliError::usage(format!("bad rational {part:?} in value list")))
        })
        .collect()
}

fn parse_index_list(spec: &str) -> Result<Vec<usize>, CliError> {
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad index {part:?} in list")))
        })
        .collect()
}

fn parse_target(spec: &str) -> Result<NullityPair, CliError> {
    let parts = parse_index_list(spec)?;
    if parts.len() != 2 {
        return Err(CliError::usage(format!(
            "target must be two numbers \"k,l\", got {spec:?}"
        )));
    }
    Ok(NullityPair::new(parts[0], parts[1]))
}

fn matrix_lines(m: &RationalMatrix) -> String {
    let mut widths = vec![0usize; m.cols()];
    let mut cells = vec![vec![String::new(); m.cols()]; m.rows()];
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let text = format_rational(m.at(r, c));
            widths[c] = widths[c].max(text.len());
            cells[r][c] = text;
        }
    }
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        let _ = writeln!(out, "  [ {} ]", line.join("  "));
    }
    out.trim_end().to_string()
}

fn certificate_summary(cert: &SnipCertificate) -> String {
    format!(
        "pair {} ({} index), transfer: {}\n{}",
        cert.pair,
        cert.index_type,
        cert.snip(),
        matrix_lines(&cert.matrix)
    )
}

fn report_human(report: &XiXiReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "certified lower bound: {}{}",
        report.certified_lower,
        if report.certificates.is_empty() {
            " (no transfer-carrying candidate found)"
        } else {
            ""
        }
    );
    let _ = writeln!(
        out,
        "minor catalog level:   {}{}",
        report.minor_value,
        if report.saturated { " (saturated)" } else { "" }
    );
    let _ = writeln!(out, "edge bound:            {}", verdict(report.edge_bound_ok));
    for cert in &report.certificates {
        let _ = writeln!(out, "witness: {}", certificate_summary(cert));
    }
    out.trim_end().to_string()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "violated"
    }
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Pair(args) => {
            let (matrix, _) = load_matrix(pick(&args.matrix, &args.matrix_flag))?;
            let pair = nullity_pair(&matrix, args.index)?;
            let ty = index_type(&matrix, args.index)?;
            Ok(Outcome::ok(
                format!("pair: {pair}\nindex: {ty}"),
                json!({ "pair": pair, "index": ty }),
            ))
        }
        Command::Sap(args) => {
            let (matrix, bundled) = load_matrix(pick(&args.matrix, &args.matrix_flag))?;
            let graph = resolve_graph(&matrix, bundled, &args.graph, args.root)?;
            let ok = has_sap(&matrix, &graph)?;
            Ok(Outcome::ok(format!("sap: {ok}"), json!({ "sap": ok })))
        }
        Command::Snip(args) => {
            let (matrix, bundled) = load_matrix(pick(&args.matrix, &args.matrix_flag))?;
            let graph = resolve_graph(&matrix, bundled, &args.graph, args.root)?;
            let i = args.index;
            let pair = nullity_pair(&matrix, i)?;
            let ty = index_type(&matrix, i)?;
            let (snip, method_name) = match args.method {
                Method::Direct => (has_isnip_direct(&matrix, &graph, i)?, "direct"),
                Method::Cases => (has_isnip_cases(&matrix, &graph, i)?, "cases"),
                Method::Recipe => (has_isnip_recipe(&matrix, &graph, i)?, "recipe"),
                Method::All => {
                    let d = has_isnip_direct(&matrix, &graph, i)?;
                    let c = has_isnip_cases(&matrix, &graph, i)?;
                    let r = has_isnip_recipe(&matrix, &graph, i)?;
                    if d != c || c != r {
                        return Err(CliError {
                            message: format!(
                                "internal: deciders disagree (direct={d}, cases={c}, recipe={r})"
                            ),
                            code: 2,
                        });
                    }
                    (d, "all")
                }
            };
            Ok(Outcome::ok(
                format!("snip: {snip}\npair: {pair}\nindex: {ty}"),
                json!({ "snip": snip, "pair": pair, "index": ty, "method": method_name }),
            ))
        }
        Command::Recipe(args) => {
            let (matrix, bundled) = load_matrix(pick(&args.matrix, &args.matrix_flag))?;
            let graph = resolve_graph(&matrix, bundled, &None, None)?;
            let kernel = matrix.delete_row(args.index)?.kernel_basis();
            let full = gives_full_recipe(&kernel, &graph)?;
            Ok(Outcome::ok(
                format!(
                    "full recipe: {full}\nkernel dimension: {}",
                    kernel.cols()
                ),
                json!({ "full_recipe": full, "kernel_dimension": kernel.cols() }),
            ))
        }
        Command::Schur(args) => {
            let (matrix, _) = load_matrix(pick(&args.matrix, &args.matrix_flag))?;
            let alpha = parse_index_list(&args.alpha)?;
            let result = matrix.schur_complement(&alpha)?;
            Ok(Outcome::ok(
                matrix_lines(&result),
                serde_json::to_value(&result).expect("matrix serializes"),
            ))
        }
        Command::Minor(args) => {
            let host = load_graph(pick(&args.host, &args.host_flag), args.host_root)?;
            let pattern = load_graph(pick(&args.pattern, &args.pattern_flag), args.pattern_root)?;
            let contains = if args.unrooted {
                host.contains_minor(&pattern)?
            } else {
                host.contains_rooted_minor(&pattern)?
            };
            Ok(Outcome::ok(
                format!("contains: {contains}"),
                json!({ "contains": contains, "rooted": !args.unrooted }),
            ))
        }
        Command::Xixi(args) => {
            let graph = load_graph(pick(&args.graph, &args.graph_flag), args.root)?;
            let report = if args.minor_only {
                xixi_minor_based(&graph)?
            } else {
                let grid = args.grid.grid_for(&graph)?;
                xixi_report_capped(&graph, &grid, args.grid.cap)?
            };
            Ok(Outcome::ok(
                report_human(&report),
                serde_json::to_value(&report).expect("report serializes"),
            ))
        }
        Command::Parts(args) => {
            let graph = load_graph(pick(&args.graph, &args.graph_flag), args.root)?;
            let parts = cut_vertex_reduce(&graph)?;
            let mut human = String::new();
            for (idx, part) in parts.iter().enumerate() {
                let _ = writeln!(
                    human,
                    "part {idx}: {} vertices, {} edges, root {}",
                    part.n(),
                    part.edge_count(),
                    part.root()
                );
            }
            Ok(Outcome::ok(
                human.trim_end().to_string(),
                serde_json::to_value(&parts).expect("graphs serialize"),
            ))
        }
        Command::Enumerate(args) => {
            let graph = load_graph(pick(&args.graph, &args.graph_flag), args.root)?;
            let grid = args.grid.grid_for(&graph)?;
            let pairs = enumerate_pairs_capped(&graph, &grid, args.grid.cap)?;
            let mut human = String::new();
            for (pair, snip) in &pairs {
                let _ = writeln!(human, "{pair} transfer={snip}");
            }
            let entries: Vec<Value> = pairs
                .iter()
                .map(|(pair, snip)| json!({ "pair": pair, "snip": snip }))
                .collect();
            Ok(Outcome::ok(
                human.trim_end().to_string(),
                json!({ "pairs": entries }),
            ))
        }
        Command::Search(args) => {
            let graph = load_graph(pick(&args.graph, &args.graph_flag), args.root)?;
            let grid = args.grid.grid_for(&graph)?;
            let target = parse_target(&args.target)?;
            let found =
                search_certificate_capped(&graph, target, args.require_snip, &grid, args.grid.cap)?;
            match found {
                Some(cert) => Ok(Outcome::ok(
                    format!("found: {}", certificate_summary(&cert)),
                    json!({ "found": true, "certificate": cert }),
                )),
                None => Ok(Outcome::ok(
                    format!("no candidate with pair {target} in the grid"),
                    json!({ "found": false }),
                )),
            }
        }
        Command::VerifyPaper => verify_paper(),
        Command::Staircase(args) => {
            let (matrix, _) = load_matrix(pick(&args.matrix, &args.matrix_flag))?;
            let eps = parse_rational(&args.eps)
                .map_err(|_| CliError::usage(format!("bad eps {:?}", args.eps)))?;
            staircase(&matrix, args.index, &eps)
        }
    }
}

fn step_label(kind: &StepKind) -> String {
    match kind {
        StepKind::Sw { bumped } => format!("southwest (diagonal bump at {bumped})"),
        StepKind::West { eps } => format!("west (border eps = {})", format_rational(eps)),
        StepKind::South { eps } => format!("south (rank-one eps = {})", format_rational(eps)),
    }
}

fn staircase(matrix: &RationalMatrix, i: usize, eps: &sniplab_core::Rational) -> Result<Outcome, CliError> {
    let start = nullity_pair(matrix, i)?;
    let mut current = matrix.clone();
    let mut pair = start;
    let mut steps: Vec<PerturbStep> = Vec::new();
    let mut human = format!("start: {pair}");
    loop {
        let step = if pair.full == pair.sub && pair.full >= 1 {
            west_step(&current, i, eps)?
        } else if pair.sub == pair.full + 1 {
            south_step(&current, i)?
        } else if pair.full == pair.sub + 1 && pair.sub >= 1 {
            sw_step(&current, i)?
        } else {
            break; // (0,0) or (1,0): nothing left to shrink
        };
        let _ = write!(human, "\n{}: {} -> {}", step_label(&step.kind), pair, step.pair);
        pair = step.pair;
        current = step.matrix.clone();
        steps.push(step);
    }
    let _ = write!(human, "\nterminal: {pair}");
    Ok(Outcome::ok(
        human,
        json!({ "start": start, "steps": steps, "terminal": pair }),
    ))
}

fn verify_paper() -> Result<Outcome, CliError> {
    let mut checks: Vec<(String, bool)> = Vec::new();

    // every catalog matrix realizes (3, 2) with the transfer property
    // at every non-cut vertex, by all three deciders
    let mut rooted_checks = 0usize;
    let mut catalog_ok = true;
    let mut cut_ok = true;
    for id in PaperMatrixId::ALL {
        let (graph, matrix) = paper_matrix(id);
        for v in 0..graph.n() {
            let g = graph.with_root(v)?;
            let cert = SnipCertificate::compute(g, matrix.clone())?;
            if graph.is_cut_vertex(v) {
                cut_ok &= cert.pair == NullityPair::new(3, 4)
                    && cert.index_type == IndexType::Upper
                    && cert.verdicts_agree()
                    && !cert.snip();
            } else {
                rooted_checks += 1;
                catalog_ok &= cert.pair == NullityPair::new(3, 2)
                    && cert.index_type == IndexType::Downer
                    && cert.verdicts_agree()
                    && cert.snip();
            }
        }
    }
    checks.push((
        format!("catalog pairs carry (3, 2) with transfer at {rooted_checks} non-cut rootings"),
        catalog_ok,
    ));
    checks.push((
        "cut-vertex rootings all land on (3, 4) without transfer".to_string(),
        cut_ok,
    ));

    // small-graph parameter table from the minor catalog
    let table: Vec<(RootedGraph, usize)> = vec![
        (sniplab_core::family(sniplab_core::Family::Complete(1)), 0),
        (
            sniplab_core::family(sniplab_core::Family::Complete(2)).with_root(1)?,
            1,
        ),
        (sniplab_core::family(sniplab_core::Family::Complete(3)), 2),
        (
            sniplab_core::family(sniplab_core::Family::Star(3)).with_root(1)?,
            2,
        ),
        (
            sniplab_core::family(sniplab_core::Family::Paw).with_root(3)?,
            3,
        ),
        (
            sniplab_core::family(sniplab_core::Family::S211).with_root(4)?,
            3,
        ),
    ];
    let mut table_ok = true;
    for (g, expected) in &table {
        table_ok &= xixi_minor_based(g)?.minor_value == *expected;
    }
    checks.push((
        "catalog table of parameter values is 0, 1, 2, 2, 3, 3".to_string(),
        table_ok,
    ));

    // level-4 family: value exactly 4, and every one-step minor drops
    let family4 = minimal_minor_family(4)?;
    let mut level_ok = family4.len() == 33;
    let mut minimal_ok = true;
    for member in &family4 {
        level_ok &= xixi_minor_based(member)?.minor_value == 4;
        for smaller in member.one_step_minors() {
            minimal_ok &= xixi_minor_based(&smaller)?.minor_value < 4;
        }
    }
    checks.push((
        format!("all {} level-4 rootings have catalog value 4", family4.len()),
        level_ok,
    ));
    checks.push((
        "every one-step minor of a level-4 member drops below 4".to_string(),
        minimal_ok,
    ));

    // serialization round trip on a catalog certificate
    let (graph, matrix) = paper_matrix(PaperMatrixId::B0);
    let cert = SnipCertificate::compute(graph, matrix)?;
    let text = serde_json::to_string(&cert).expect("certificate serializes");
    let back: SnipCertificate =
        serde_json::from_str(&text).map_err(|err| CliError::usage(err.to_string()))?;
    checks.push((
        "catalog certificate survives a JSON round trip".to_string(),
        back == cert && back.verify(),
    ));

    let all_ok = checks.iter().all(|(_, ok)| *ok);
    let mut human = String::new();
    for (name, ok) in &checks {
        let _ = writeln!(human, "{} {}", if *ok { "ok  " } else { "FAIL" }, name);
    }
    let _ = write!(
        human,
        "{} of {} checks passed",
        checks.iter().filter(|(_, ok)| *ok).count(),
        checks.len()
    );
    let entries: Vec<Value> = checks
        .iter()
        .map(|(name, ok)| json!({ "check": name, "ok": ok }))
        .collect();
    Ok(Outcome {
        human,
        json: json!({ "checks": entries, "all_ok": all_ok }),
        exit: if all_ok { 0 } else { 1 },
    })
}
