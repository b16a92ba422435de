//! Extremal searches: the maximum of `D(G, F)` over a universe of graphs.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_graph, enumerate_graphs};
use crate::count::{count_backtrack_with, count_via_independent_set_with, decimal, FamilyChecker};
use crate::error::{Error, Result};
use crate::family::ForbiddenFamily;
use crate::graph::{complete_multipartite, turan_edges, PartitionSpec, SmallGraph, VertexSet};
use crate::graph6;

/// Largest order for an unconditional full search.
pub const ALL_GRAPHS_MAX: usize = 7;
/// Order reachable by a full search with `long_run`.
pub const ALL_GRAPHS_LONG_RUN_MAX: usize = 8;
/// Largest order for a search over complete multipartite graphs.
pub const MULTIPARTITE_MAX: usize = 10;
/// Graphs counted between checkpoint writes.
const CHECKPOINT_CHUNK: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    All,
    Multipartite,
    Stream,
}

impl SearchMode {
    pub fn parse(text: &str) -> Result<SearchMode> {
        match text {
            "all" => Ok(SearchMode::All),
            "multipartite" => Ok(SearchMode::Multipartite),
            "stream" => Ok(SearchMode::Stream),
            other => Err(Error::InvalidArgument(format!("unknown search mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub long_run: bool,
    pub checkpoint: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalSearchReport {
    pub n: usize,
    pub family: String,
    pub mode: SearchMode,
    #[serde(serialize_with = "decimal")]
    pub max_count: BigUint,
    /// Canonical graph6 strings, sorted.
    pub extremal_graphs: Vec<String>,
    /// `2^{t_{k-1}(n)}`, the count of the balanced complete `(k-1)`-partite
    /// graph, which has no `k`-clique.
    #[serde(serialize_with = "decimal")]
    pub reference_value: BigUint,
    /// Canonical graph6 of that Turán graph.
    pub reference_graph: String,
    pub matches_reference: bool,
    pub unique_extremal: bool,
    pub graphs_scanned: u64,
    pub elapsed_ms: u64,
}

impl ExtremalSearchReport {
    /// The reference Turán graph is the only extremal graph.
    pub fn reference_is_unique_extremal(&self) -> bool {
        self.matches_reference && self.unique_extremal && self.extremal_graphs[0] == self.reference_graph
    }
}

/// Running maximum with its attaining graphs.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct Tally {
    max_count: String,
    extremal: Vec<String>,
    scanned: u64,
}

impl Tally {
    fn max(&self) -> BigUint {
        self.max_count.parse().unwrap_or_else(|_| BigUint::zero())
    }

    fn absorb(&mut self, counted: Vec<(SmallGraph, BigUint)>) {
        let mut max = self.max();
        for (g, c) in counted {
            self.scanned += 1;
            if self.extremal.is_empty() || c > max {
                max = c;
                self.extremal.clear();
            } else if c < max {
                continue;
            }
            let code = graph6::encode(&canonical_graph(&g));
            if !self.extremal.contains(&code) {
                self.extremal.push(code);
            }
        }
        self.max_count = max.to_str_radix(10);
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    n: usize,
    family: String,
    next_index: usize,
    tally: Tally,
}

fn load_checkpoint(path: &Path, n: usize, family: &str) -> Result<Option<Checkpoint>> {
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(path)?;
    let cp: Checkpoint = serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
    if cp.n != n || cp.family != family {
        return Err(Error::Checkpoint(format!(
            "{} belongs to n = {}, family {}",
            path.display(),
            cp.n,
            cp.family
        )));
    }
    Ok(Some(cp))
}

fn store_checkpoint(path: &Path, cp: &Checkpoint) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string(cp).expect("checkpoint serializes"))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Counts one graph: complete multipartite graphs go through the
/// independent-set product on a largest part, others through backtracking.
fn count_graph(g: &SmallGraph, checker: &FamilyChecker) -> Result<BigUint> {
    match g.complete_multipartite_parts() {
        Some(_) if g.m() > 0 => {
            let part = largest_part(g);
            count_via_independent_set_with(g, checker, part)
        }
        _ => count_backtrack_with(g, checker),
    }
}

fn largest_part(g: &SmallGraph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    let mut seen = VertexSet::EMPTY;
    for v in g.vertices().iter() {
        if seen.contains(v) {
            continue;
        }
        let part: VertexSet = g.vertices().difference(g.neighbors(v));
        seen = seen.union(part);
        if part.len() > best.len() {
            best = part;
        }
    }
    best
}

fn scan(graphs: &[SmallGraph], checker: &FamilyChecker, mut tally: Tally, start: usize, checkpoint: Option<(&Path, usize)>) -> Result<Tally> {
    let mut index = start;
    while index < graphs.len() {
        let end = (index + CHECKPOINT_CHUNK).min(graphs.len());
        let counted: Vec<(SmallGraph, BigUint)> = graphs[index..end]
            .par_iter()
            .map(|g| Ok((g.clone(), count_graph(g, checker)?)))
            .collect::<Result<_>>()?;
        tally.absorb(counted);
        index = end;
        if let Some((path, n)) = checkpoint {
            let cp = Checkpoint {
                n,
                family: checker.family().descriptor(),
                next_index: index,
                tally: tally.clone(),
            };
            store_checkpoint(path, &cp)?;
        }
    }
    Ok(tally)
}

fn universe(n: usize, mode: SearchMode, options: &SearchOptions) -> Result<Vec<SmallGraph>> {
    match mode {
        SearchMode::All => {
            let limit = if options.long_run { ALL_GRAPHS_LONG_RUN_MAX } else { ALL_GRAPHS_MAX };
            if n > limit {
                return Err(Error::Budget {
                    what: "order for a full search",
                    value: n as u64,
                    limit: limit as u64,
                    hint: if options.long_run { "" } else { "; pass --long-run for n = 8" },
                });
            }
            enumerate_graphs(n)
        }
        SearchMode::Multipartite => {
            if n == 0 || n > MULTIPARTITE_MAX {
                return Err(Error::Budget {
                    what: "order for a multipartite search",
                    value: n as u64,
                    limit: MULTIPARTITE_MAX as u64,
                    hint: "",
                });
            }
            PartitionSpec::all_of(n).iter().map(complete_multipartite).collect()
        }
        SearchMode::Stream => Err(Error::InvalidArgument("stream searches take their graphs from the caller".into())),
    }
}

/// Searches all graphs on `n` vertices or all complete multipartite ones.
pub fn search(n: usize, family: &ForbiddenFamily, mode: SearchMode, options: &SearchOptions) -> Result<ExtremalSearchReport> {
    let start = Instant::now();
    let graphs = universe(n, mode, options)?;
    let checker = FamilyChecker::new(family);
    let descriptor = family.descriptor();
    let (tally, first) = match &options.checkpoint {
        Some(path) => match load_checkpoint(path, n, &descriptor)? {
            Some(cp) => (cp.tally, cp.next_index),
            None => (Tally::default(), 0),
        },
        None => (Tally::default(), 0),
    };
    let tally = scan(&graphs, &checker, tally, first, options.checkpoint.as_deref().map(|p| (p, n)))?;
    report(n, family, mode, tally, start)
}

/// Searches a caller-supplied list of graphs, all on the same vertex count.
pub fn search_graphs(graphs: &[SmallGraph], family: &ForbiddenFamily) -> Result<ExtremalSearchReport> {
    let start = Instant::now();
    let n = graphs
        .first()
        .ok_or_else(|| Error::InvalidArgument("graph stream is empty".into()))?
        .n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::InvalidArgument(format!(
            "graph stream mixes orders {n} and {}",
            g.n()
        )));
    }
    let checker = FamilyChecker::new(family);
    let tally = scan(graphs, &checker, Tally::default(), 0, None)?;
    report(n, family, SearchMode::Stream, tally, start)
}

fn report(n: usize, family: &ForbiddenFamily, mode: SearchMode, tally: Tally, start: Instant) -> Result<ExtremalSearchReport> {
    let max_count = tally.max();
    let mut extremal_graphs = tally.extremal;
    extremal_graphs.sort();
    let parts = family.order() as u64 - 1;
    let reference_value = BigUint::one() << turan_edges(n as u64, parts)?;
    let reference_graph = graph6::encode(&canonical_graph(&crate::graph::turan_graph(n, parts as usize)?));
    Ok(ExtremalSearchReport {
        n,
        family: family.descriptor(),
        mode,
        matches_reference: max_count == reference_value,
        unique_extremal: extremal_graphs.len() == 1,
        max_count,
        extremal_graphs,
        reference_value,
        reference_graph,
        graphs_scanned: tally.scanned,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
