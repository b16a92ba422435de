use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use orientcount::canon::{canonical_graph, enumerate_graphs};
use orientcount::count::{count, Method};
use orientcount::graph::{complete_multipartite, turan_edges, turan_graph, TuranDecomposition};
use orientcount::inequality::{sweep, Bound, Ranges};
use orientcount::lemmas::Lemma;
use orientcount::search::{search, search_graphs, SearchMode, SearchOptions};
use orientcount::symmetrize::symmetrization_sequence;
use orientcount::tournament::{count_sc_orientations, pair_count};
use orientcount::{graph6, Error, ForbiddenFamily, PartitionSpec, Result, SmallGraph, VertexSet};

/// Exact counts of orientations avoiding forbidden tournaments.
///
/// Reports are JSON lines on stdout; a short summary goes to stderr.
/// ORIENT_THREADS caps the number of worker threads.
#[derive(Parser)]
#[command(name = "orientcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the family-free orientations of one graph.
    Count(CountArgs),
    /// Find the graphs maximizing the count among all graphs of an order.
    Search(SearchArgs),
    /// Count strongly connected tournaments on k labeled vertices.
    Sc {
        #[arg(long)]
        k: usize,
    },
    /// Run exhaustive lemma verification suites.
    Lemmas {
        /// Suite name or `all`.
        #[arg(default_value = "all")]
        which: String,
    },
    /// Check the Turán-number inequalities exactly.
    Props(PropsArgs),
    /// Turán number and graph.
    Turan {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Print one graph per isomorphism class as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Run the eccentric-vertex symmetrization sequence.
    Symmetrize {
        #[arg(long)]
        graph6: String,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph in graph6.
    #[arg(long, conflicts_with = "parts")]
    graph6: Option<String>,
    /// Complete multipartite graph by part sizes, e.g. 2,1,1.
    #[arg(long)]
    parts: Option<String>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// s<k>, r<k>, u<k>, c3, or explicit:FILE.
    #[arg(long)]
    family: String,
    /// backtrack, naive, or independent-set.
    #[arg(long, default_value = "backtrack")]
    method: String,
    /// Independent set for the product method, e.g. 0,1.
    #[arg(long)]
    independent: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, required_unless_present = "graphs")]
    n: Option<usize>,
    #[arg(long)]
    family: String,
    /// all or multipartite.
    #[arg(long, default_value = "all")]
    mode: String,
    /// Allow the full search at n = 8 (about 12 thousand graphs).
    #[arg(long)]
    long_run: bool,
    /// Resume file for long searches; rewritten after every chunk.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Read the graphs from a graph6 stream instead of generating them.
    #[arg(long)]
    graphs: Option<PathBuf>,
}

#[derive(Args)]
struct PropsArgs {
    #[arg(long, default_value_t = 4)]
    k_min: u64,
    #[arg(long, default_value_t = 12)]
    k_max: u64,
    #[arg(long, default_value_t = 200)]
    n_max: u64,
    #[arg(long, default_value_t = 9)]
    four_clique_n_min: u64,
    #[arg(long, default_value_t = 500)]
    four_clique_n_max: u64,
    /// Print only failing instances and the summaries.
    #[arg(long)]
    failures_only: bool,
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn load_family(name: &str) -> Result<ForbiddenFamily> {
    match name.strip_prefix("explicit:") {
        Some(path) => ForbiddenFamily::read_explicit(BufReader::new(File::open(path)?)),
        None => ForbiddenFamily::parse(name),
    }
}

fn load_graph(input: &GraphInput) -> Result<SmallGraph> {
    match (&input.graph6, &input.parts) {
        (Some(code), None) => graph6::decode(code),
        (None, Some(parts)) => complete_multipartite(&PartitionSpec::parse(parts)?),
        _ => Err(Error::InvalidArgument("give exactly one of --graph6 and --parts".into())),
    }
}

fn parse_set(text: &str) -> Result<VertexSet> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad vertex {s:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(VertexSet::from_vertices)
}

/// Runs a command; `Ok(false)` means a requested check failed.
fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Count(args) => {
            let g = load_graph(&args.graph)?;
            let family = load_family(&args.family)?;
            let method = Method::parse(&args.method)?;
            let independent = args.independent.as_deref().map(parse_set).transpose()?;
            let report = count(&g, &family, method, independent)?;
            emit(out, &report)?;
            eprintln!("D({}, {}) = {} [{}]", report.graph6, report.family, report.count, method.name());
            Ok(true)
        }
        Command::Search(args) => {
            let family = load_family(&args.family)?;
            let report = match &args.graphs {
                Some(path) => search_graphs(&graph6::read_stream(BufReader::new(File::open(path)?))?, &family)?,
                None => {
                    let options = SearchOptions {
                        long_run: args.long_run,
                        checkpoint: args.checkpoint.clone(),
                    };
                    let n = args.n.expect("clap requires --n without --graphs");
                    search(n, &family, SearchMode::parse(&args.mode)?, &options)?
                }
            };
            emit(out, &report)?;
            eprintln!(
                "n = {}, {}: max {} over {} graphs, extremal {:?}{}",
                report.n,
                report.family,
                report.max_count,
                report.graphs_scanned,
                report.extremal_graphs,
                if report.matches_reference { " (Turán reference)" } else { "" }
            );
            Ok(true)
        }
        Command::Sc { k } => {
            let sc = count_sc_orientations(k)?;
            let half = 1u64 << (pair_count(k) - 1);
            let exceeds = sc > half;
            emit(out, &json!({"k": k, "count": sc.to_string(), "half_of_all": half.to_string(), "exceeds_half": exceeds}))?;
            eprintln!("SC(K_{k}) = {sc}; 2^(C(k,2)-1) = {half}");
            Ok(k < 5 || exceeds)
        }
        Command::Lemmas { which } => {
            let mut ok = true;
            for lemma in Lemma::parse(&which)? {
                let report = lemma.run()?;
                emit(out, &report)?;
                eprintln!(
                    "{} {}: {} checks, {} violations",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.lemma,
                    report.checked,
                    report.violations
                );
                ok &= report.passed;
            }
            Ok(ok)
        }
        Command::Props(args) => {
            let ranges = Ranges {
                k: args.k_min..=args.k_max,
                n_max: args.n_max,
                four_clique_n: args.four_clique_n_min..=args.four_clique_n_max,
            };
            let mut ok = true;
            for bound in Bound::ALL {
                let instances = sweep(bound, &ranges)?;
                let failed: Vec<_> = instances.iter().filter(|x| !x.holds).collect();
                for x in &instances {
                    if !args.failures_only || !x.holds {
                        emit(out, x)?;
                    }
                }
                let summary = json!({
                    "bound": bound.name(),
                    "instances": instances.len(),
                    "failures": failed.len(),
                    "failing": failed.iter().map(|x| json!({"k": x.k, "n": x.n, "equality": x.equality})).collect::<Vec<_>>(),
                });
                emit(out, &summary)?;
                eprintln!("{} {}: {} instances, {} fail", if failed.is_empty() { "PASS" } else { "FAIL" }, bound.name(), instances.len(), failed.len());
                for x in &failed {
                    eprintln!("  k = {}, n = {}: {}{}", x.k, x.n, x.description, if x.equality { " (equality)" } else { "" });
                }
                ok &= failed.is_empty();
            }
            Ok(ok)
        }
        Command::Turan { n, r } => {
            let d = TuranDecomposition::new(n, r)?;
            let edges = turan_edges(n, r)?;
            let code = if (1..=16).contains(&n) {
                Some(graph6::encode(&turan_graph(n as usize, r as usize)?))
            } else {
                None
            };
            emit(out, &json!({"n": n, "r": r, "edges": edges.to_string(), "q": d.q, "rem": d.rem, "graph6": code}))?;
            eprintln!("t_{r}({n}) = {edges} (q = {}, rem = {})", d.q, d.rem);
            Ok(true)
        }
        Command::Enumerate { n } => {
            let graphs = enumerate_graphs(n)?;
            graph6::write_stream(&mut *out, &graphs)?;
            eprintln!("{} graphs on {n} vertices", graphs.len());
            Ok(true)
        }
        Command::Symmetrize { graph6: code } => {
            let g = graph6::decode(&code)?;
            let trace = symmetrization_sequence(&g);
            emit(out, &trace)?;
            let fin = canonical_graph(&graph6::decode(&trace.final_graph)?);
            eprintln!("{} steps, final {} (canonical {})", trace.steps.len(), trace.final_graph, graph6::encode(&fin));
            Ok(trace.final_is_complete_multipartite && trace.edge_count_nondecreasing)
        }
    }
}

fn configure_threads() {
    if let Ok(value) = std::env::var("ORIENT_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("ignoring ORIENT_THREADS={value:?}: expected a positive integer"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
