//! Command-line front end: graph I/O, certificates, and the subcommands.

pub mod certificate;
pub mod io;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use oddspan::dense::odd_spanning_tree_dense;
use oddspan::families::{
    check_nonexistence, find_nonexistence, gen_bridge_join, gen_c5k, gen_complete, gen_complete_bipartite,
    gen_complete_bipartite_minus_edge, gen_random, gen_random_split, path, NonexistenceReason,
};
use oddspan::graph::{
    complement, components, diameter, edge_connectivity, is_bipartite, is_connected, is_triangle_free, Graph,
};
use oddspan::odd_factor::connected_odd_factor;
use oddspan::oracle::{
    find_connected_odd_factor_bruteforce, find_odd_spanning_tree_bruteforce, verify_connected_odd_factor,
    verify_odd_spanning_tree, FACTOR_SEARCH_MAX_EDGES, TREE_SEARCH_MAX_ORDER,
};
use oddspan::packing::{two_edge_disjoint_spanning_trees, PackingOutcome};
use oddspan::split::{
    double_star_in_complement, find_split_partition, split_no_tree_condition, split_odd_spanning_tree,
};
use oddspan::sweep::{self, gen_random_triangle_free, Executor, SweepReport};
use oddspan::trifree::{trifree_complement_tree, TrifreeReason};
use thiserror::Error;

use crate::certificate::{Certificate, Verdict};
use crate::io::{emit_graph, parse_edge_list, parse_graph, Labeled, ParseError};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] oddspan::Error),
    #[error("{0}")]
    NotApplicable(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Graph(e) if e.is_internal() => EXIT_INTERNAL,
            CliError::Io(_) => EXIT_INTERNAL,
            _ => EXIT_DATA,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "oddspan", version, about = "Odd spanning trees and connected odd factors")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a graph from a named family
    Gen(GenArgs),
    /// Decide existence and print a certificate
    Check(CheckArgs),
    /// Run one named construction
    Construct(ConstructArgs),
    /// Check a tree or factor against the graph on stdin
    Verify(VerifyArgs),
    /// Print the complement
    Complement,
    /// Cross-check constructions against the oracle
    Sweep(SweepArgs),
    /// Print basic invariants
    Info,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Complete,
    CompleteBipartite,
    CompleteBipartiteMinusEdge,
    C5k,
    BridgeJoin,
    Path,
    Cycle,
    Random,
    RandomTriangleFree,
    RandomSplit,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// first part size for bipartite and split families
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, group = "target")]
    odd_spanning_tree: bool,
    #[arg(long, group = "target")]
    odd_factor: bool,
    /// oracle limit: vertices for trees, edges for factors
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("construction").required(true).multiple(false)))]
struct ConstructArgs {
    #[arg(long, group = "construction")]
    dense: bool,
    #[arg(long, group = "construction")]
    split: bool,
    #[arg(long, group = "construction")]
    double_star: bool,
    #[arg(long, group = "construction")]
    trifree: bool,
    #[arg(long, group = "construction")]
    odd_factor: bool,
    /// with --odd-factor, require edge connectivity at least 4
    #[arg(long, requires = "odd_factor")]
    strict: bool,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("object").required(true).multiple(false)))]
struct VerifyArgs {
    #[arg(long, group = "object")]
    tree: Option<PathBuf>,
    #[arg(long, group = "object")]
    factor: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("suite").required(true).multiple(false)))]
struct SweepArgs {
    #[arg(long, group = "suite")]
    dense: bool,
    #[arg(long, group = "suite")]
    split: bool,
    #[arg(long, group = "suite")]
    trifree: bool,
    #[arg(long, group = "suite")]
    packing: bool,
    #[arg(long, group = "suite")]
    factor: bool,
    #[arg(long, group = "suite")]
    bipartition: bool,
    /// restrict to the exhaustive sweep at this order
    #[arg(long)]
    n: Option<usize>,
    /// number of seeded instances
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    sequential: bool,
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<i32> {
    let mut read_graph = || -> CliResult<Labeled> {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(parse_graph(&text)?)
    };
    match command {
        Command::Gen(args) => {
            let g = generate(&args)?;
            stdout.write_all(emit_graph(&Labeled::plain(g)).as_bytes())?;
            Ok(0)
        }
        Command::Check(args) => {
            let g = read_graph()?;
            let cert = if args.odd_factor { check_factor(&g, args.cap)? } else { check_tree(&g, args.cap)? };
            stdout.write_all(cert.render().as_bytes())?;
            Ok(cert.verdict.exit_code())
        }
        Command::Construct(args) => {
            let g = read_graph()?;
            let cert = construct(&g, &args)?;
            stdout.write_all(cert.render().as_bytes())?;
            Ok(cert.verdict.exit_code())
        }
        Command::Verify(args) => {
            let g = read_graph()?;
            let (file, factor) = match (&args.tree, &args.factor) {
                (Some(p), _) => (p, false),
                (_, Some(p)) => (p, true),
                _ => return Err(CliError::Usage("one of --tree or --factor is required".into())),
            };
            let text = std::fs::read_to_string(file).map_err(|source| CliError::Read { path: file.clone(), source })?;
            let edges = parse_edge_list(&text, &g)?;
            let report = if factor {
                verify_connected_odd_factor(&g.graph, &edges)
            } else {
                verify_odd_spanning_tree(&g.graph, &edges)
            };
            match report.failure {
                None => writeln!(stdout, "VALID")?,
                Some(f) => writeln!(stdout, "INVALID {f:?}")?,
            }
            Ok(if report.ok { 0 } else { 1 })
        }
        Command::Complement => {
            let g = read_graph()?;
            let h = Labeled { graph: complement(&g.graph), labels: g.labels };
            stdout.write_all(emit_graph(&h).as_bytes())?;
            Ok(0)
        }
        Command::Sweep(args) => {
            configure_workers()?;
            let report = run_sweep(&args)?;
            stdout.write_all(render_report(&report).as_bytes())?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Info => {
            let g = read_graph()?;
            stdout.write_all(info(&g.graph)?.as_bytes())?;
            Ok(0)
        }
    }
}

fn need(value: Option<usize>, flag: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("this family needs --{flag}")))
}

fn generate(args: &GenArgs) -> CliResult<Graph> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(CliError::Usage(format!("--p must lie in [0, 1], got {}", args.p)));
    }
    let g = match args.family {
        Family::Complete => gen_complete(need(args.n, "n")?),
        Family::CompleteBipartite => gen_complete_bipartite(need(args.m, "m")?, need(args.n, "n")?),
        Family::CompleteBipartiteMinusEdge => {
            gen_complete_bipartite_minus_edge(need(args.m, "m")?, need(args.n, "n")?)?
        }
        Family::C5k => gen_c5k(need(args.k, "k")?),
        Family::BridgeJoin => {
            let n = need(args.n, "n")?;
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            gen_bridge_join(&gen_complete(n), &gen_complete(n), n - 1, 0)
        }
        Family::Path => path(need(args.n, "n")?),
        Family::Cycle => {
            let n = need(args.n, "n")?;
            if n < 3 {
                return Err(CliError::Usage("cycles need --n of at least 3".into()));
            }
            oddspan::families::cycle(n)
        }
        Family::Random => gen_random(need(args.n, "n")?, args.p, args.seed),
        Family::RandomTriangleFree => gen_random_triangle_free(need(args.n, "n")?, args.p, args.seed),
        Family::RandomSplit => {
            let t = need(args.n, "n")?;
            if t == 0 {
                return Err(CliError::Usage("random-split needs a clique side of at least 1".into()));
            }
            gen_random_split(need(args.m, "m")?, t, args.p, args.seed).0
        }
    };
    Ok(g)
}

fn tree_certificate(method: &str, g: &Labeled, host: &Graph, tree: &oddspan::EdgeSet) -> Certificate {
    let ok = verify_odd_spanning_tree(host, tree).ok;
    Certificate::new(Verdict::Exists, method).edges('T', tree, g).verified(ok)
}

fn nonexistence_certificate(method: &str, reason: &NonexistenceReason, g: &Labeled) -> CliResult<Certificate> {
    let ok = check_nonexistence(&g.graph, reason)?;
    Ok(Certificate::new(Verdict::NotExists, method).nonexistence(reason, g).verified(ok))
}

/// Disconnected or odd-order inputs, which rule out both trees and factors.
fn trivial_obstruction(g: &Labeled) -> CliResult<Option<Certificate>> {
    let n = g.graph.order();
    if n == 0 {
        return Err(oddspan::Error::EmptyGraph.into());
    }
    if n % 2 == 1 {
        return nonexistence_certificate("odd-order", &NonexistenceReason::OddOrder, g).map(Some);
    }
    if !is_connected(&g.graph)? {
        let component = components(&g.graph).swap_remove(0);
        let reason = NonexistenceReason::Disconnected { component };
        return nonexistence_certificate("disconnected", &reason, g).map(Some);
    }
    Ok(None)
}

/// Cheap certificates, then the constructions that apply, then
/// the oracle within its cap.
fn check_tree(g: &Labeled, cap: Option<usize>) -> CliResult<Certificate> {
    if let Some(cert) = trivial_obstruction(g)? {
        return Ok(cert);
    }
    let graph = &g.graph;
    let n = graph.order();
    if let Some(reason) = find_nonexistence(graph)? {
        return nonexistence_certificate(reason.kind(), &reason, g);
    }
    if graph.min_degree() > n / 2 {
        let tree = odd_spanning_tree_dense(graph)?;
        return Ok(tree_certificate("dense-min-degree", g, graph, &tree));
    }
    if let Some(sp) = find_split_partition(graph) {
        if sp.y.len() >= 2 && split_no_tree_condition(graph, &sp)? {
            let reason = NonexistenceReason::SplitCondition(sp);
            return nonexistence_certificate("split-condition", &reason, g);
        }
        let tree = split_odd_spanning_tree(graph, &sp)?;
        return Ok(tree_certificate("split", g, graph, &tree));
    }
    let h = complement(graph);
    if is_triangle_free(&h) {
        let decision = trifree_complement_tree(&h)?;
        return match decision.reason {
            TrifreeReason::Construction { tree, edges, .. } => {
                Ok(tree_certificate(&format!("trifree-complement:{tree}"), g, graph, &edges))
            }
            TrifreeReason::Excluded(family) => {
                nonexistence_certificate("excluded-family", &NonexistenceReason::ExcludedFamily(family), g)
            }
        };
    }
    if is_connected(&h)? && diameter(&h)? >= 4 {
        let tree = double_star_in_complement(&h)?;
        return Ok(tree_certificate("double-star-complement", g, graph, &tree));
    }
    let cap = cap.unwrap_or(TREE_SEARCH_MAX_ORDER).min(TREE_SEARCH_MAX_ORDER);
    if n <= cap {
        return Ok(match find_odd_spanning_tree_bruteforce(graph)? {
            Some(tree) => tree_certificate("oracle", g, graph, &tree),
            None => Certificate::new(Verdict::NotExists, "oracle").reason("exhaustive-search"),
        });
    }
    Ok(Certificate::new(Verdict::Unknown, "none"))
}

fn check_factor(g: &Labeled, cap: Option<usize>) -> CliResult<Certificate> {
    if let Some(cert) = trivial_obstruction(g)? {
        return Ok(cert);
    }
    let graph = &g.graph;
    let packing = match two_edge_disjoint_spanning_trees(graph)? {
        PackingOutcome::Trees(..) => {
            let trace = connected_odd_factor(graph)?;
            let ok = verify_connected_odd_factor(graph, &trace.result).ok;
            return Ok(Certificate::new(Verdict::Exists, "packing-repair").edges('F', &trace.result, g).verified(ok));
        }
        PackingOutcome::Certificate(cert) => cert,
    };
    let cap = cap.unwrap_or(FACTOR_SEARCH_MAX_EDGES).min(FACTOR_SEARCH_MAX_EDGES);
    if graph.edge_count() <= cap {
        return Ok(match find_connected_odd_factor_bruteforce(graph)? {
            Some(f) => {
                let ok = verify_connected_odd_factor(graph, &f).ok;
                Certificate::new(Verdict::Exists, "oracle").edges('F', &f, g).verified(ok)
            }
            None => Certificate::new(Verdict::NotExists, "oracle").reason("exhaustive-search"),
        });
    }
    Ok(Certificate::new(Verdict::Unknown, "no-tree-packing").partition(&packing, g))
}

fn construct(g: &Labeled, args: &ConstructArgs) -> CliResult<Certificate> {
    let graph = &g.graph;
    if args.dense {
        let tree = odd_spanning_tree_dense(graph)?;
        return Ok(tree_certificate("dense-min-degree", g, graph, &tree));
    }
    if args.split {
        let sp = find_split_partition(graph).ok_or_else(|| CliError::NotApplicable("not a split graph".into()))?;
        return match split_odd_spanning_tree(graph, &sp) {
            Ok(tree) => Ok(tree_certificate("split", g, graph, &tree)),
            Err(oddspan::Error::ConditionHolds) => {
                nonexistence_certificate("split-condition", &NonexistenceReason::SplitCondition(sp), g)
            }
            Err(e) => Err(e.into()),
        };
    }
    if args.double_star {
        let tree = double_star_in_complement(graph)?;
        return Ok(tree_certificate("double-star-complement", g, &complement(graph), &tree));
    }
    if args.trifree {
        let decision = trifree_complement_tree(graph)?;
        return match decision.reason {
            TrifreeReason::Construction { tree, edges, .. } => {
                Ok(tree_certificate(&format!("trifree-complement:{tree}"), g, &complement(graph), &edges))
            }
            TrifreeReason::Excluded(family) => {
                let reason = NonexistenceReason::ExcludedFamily(family);
                let ok = check_nonexistence(&complement(graph), &reason)?;
                Ok(Certificate::new(Verdict::NotExists, "trifree-complement").nonexistence(&reason, g).verified(ok))
            }
        };
    }
    if args.strict {
        let lambda = edge_connectivity(graph);
        if lambda < 4 {
            return Err(CliError::NotApplicable(format!("edge connectivity {lambda} is below 4")));
        }
    }
    match connected_odd_factor(graph) {
        Ok(trace) => {
            let ok = verify_connected_odd_factor(graph, &trace.result).ok;
            Ok(Certificate::new(Verdict::Exists, "packing-repair").edges('F', &trace.result, g).verified(ok))
        }
        Err(oddspan::Error::OddOrder(_)) => nonexistence_certificate("odd-order", &NonexistenceReason::OddOrder, g),
        Err(oddspan::Error::NoTreePacking(cert)) => {
            Ok(Certificate::new(Verdict::Unknown, "no-tree-packing").partition(&cert, g))
        }
        Err(e) => Err(e.into()),
    }
}

fn configure_workers() -> CliResult<()> {
    if let Ok(value) = std::env::var("ODD_SPAN_THREADS") {
        let threads: usize =
            value.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
                CliError::Usage(format!("ODD_SPAN_THREADS must be a positive integer, got {value:?}"))
            })?;
        sweep::set_worker_threads(threads);
    }
    Ok(())
}

fn run_sweep(args: &SweepArgs) -> CliResult<SweepReport> {
    let exec = if args.sequential { Executor::Sequential } else { Executor::default() };
    if let Some(n) = args.n {
        if n > 7 {
            return Err(CliError::Usage(format!("exhaustive sweeps stop at n = 7, got {n}")));
        }
    }
    let seed = args.seed;
    let mut report = SweepReport::default();
    let orders = |default: &[usize]| args.n.map_or(default.to_vec(), |n| vec![n]);
    let sampled = args.n.is_none();
    if args.dense {
        for n in orders(&[2, 4, 6]) {
            report.merge(sweep::dense_exhaustive(exec, n));
        }
        if sampled {
            report.merge(sweep::dense_random(exec, args.count.unwrap_or(500), seed));
        }
    } else if args.split {
        for n in orders(&[2, 4, 6]) {
            report.merge(sweep::split_exhaustive(exec, n));
        }
        if sampled {
            report.merge(sweep::split_random(exec, args.count.unwrap_or(500), seed));
        }
    } else if args.trifree {
        for n in orders(&[2, 4, 6]) {
            report.merge(sweep::trifree_exhaustive(exec, n));
        }
        if sampled {
            report.merge(sweep::trifree_random(exec, 8, args.count.unwrap_or(300), seed));
            report.merge(sweep::trifree_crafted(exec, vec![]));
        }
    } else if args.packing {
        for n in orders(&[1, 2, 3, 4, 5, 6]) {
            report.merge(sweep::packing_exhaustive(exec, n));
        }
    } else if args.factor {
        report.merge(sweep::factor_suite(exec, args.count.unwrap_or(100), seed));
    } else {
        for n in orders(&[2, 3, 4, 5, 6]) {
            report.merge(sweep::bipartition_exhaustive(exec, n));
        }
        if sampled {
            report.merge(sweep::bipartition_random(exec, 7, args.count.unwrap_or(300), seed));
        }
    }
    Ok(report)
}

pub fn render_report(report: &SweepReport) -> String {
    let mut out = format!("universe {}\ninstances {}\n", report.universe, report.instances);
    for (verdict, count) in &report.counts {
        out.push_str(&format!("count {verdict} {count}\n"));
    }
    for (id, count) in &report.coverage {
        out.push_str(&format!("coverage {id} {count}\n"));
    }
    for d in &report.disagreements {
        out.push_str(&format!("disagreement {d}\n"));
    }
    out.push_str(if report.passed() { "result PASS\n" } else { "result FAIL\n" });
    out
}

fn info(g: &Graph) -> CliResult<String> {
    let n = g.order();
    let degrees: Vec<String> = g.degrees().iter().map(|d| d.to_string()).collect();
    let connected = n > 0 && is_connected(g)?;
    let diam = if connected { diameter(g)?.to_string() } else { "-".into() };
    let lambda = if connected { edge_connectivity(g) } else { 0 };
    let split = match find_split_partition(g) {
        Some(sp) => format!("true X:{:?} Y:{:?}", sp.x, sp.y),
        None => "false".into(),
    };
    let parity = if n > 0 && g.is_odd() {
        "odd"
    } else if g.is_even() {
        "even"
    } else {
        "mixed"
    };
    Ok(format!(
        "order {n}\nsize {}\ndegrees {}\nmin-degree {}\nmax-degree {}\nconnected {connected}\n\
         diameter {diam}\nedge-connectivity {lambda}\nbipartite {}\nsplit {split}\ntriangle-free {}\nparity {parity}\n",
        g.edge_count(),
        degrees.join(" "),
        if n > 0 { g.min_degree() } else { 0 },
        if n > 0 { g.max_degree() } else { 0 },
        is_bipartite(g),
        is_triangle_free(g),
    ))
}
