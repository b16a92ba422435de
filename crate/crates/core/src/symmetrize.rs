//! Twin replacement, cloning, edge deletion and the eccentric-vertex
//! symmetrization sequence.

use num_bigint::BigUint;
use serde::Serialize;

use crate::count::{extension_vector_with, FamilyChecker};
use crate::error::{Error, Result};
use crate::family::ForbiddenFamily;
use crate::graph::{SmallGraph, VertexSet};
use crate::graph6;
use crate::norm::power_sum;

/// Non-adjacent vertices with identical neighborhoods.
pub fn twins(g: &SmallGraph, u: usize, v: usize) -> bool {
    u != v && u < g.n() && v < g.n() && !g.adjacent(u, v) && g.neighbors(u) == g.neighbors(v)
}

/// Vertices having a non-neighbor that is not their twin.
pub fn eccentric_vertices(g: &SmallGraph) -> VertexSet {
    g.vertices()
        .iter()
        .filter(|&u| {
            let others = g.vertices().difference(g.neighbors(u)).difference(VertexSet::singleton(u));
            others.iter().any(|w| !twins(g, u, w))
        })
        .collect()
}

fn check_vertex(g: &SmallGraph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Gives every member of `s` other than `v` the neighborhood of `v`.
pub fn replace_with_twins(g: &SmallGraph, s: VertexSet, v: usize) -> Result<SmallGraph> {
    check_vertex(g, v)?;
    if let Some(w) = s.iter().find(|&w| w >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
    }
    if !s.contains(v) {
        return Err(Error::InvalidArgument(format!("vertex {v} is not in the independent set")));
    }
    if !g.is_independent(s) {
        return Err(Error::NotIndependent);
    }
    let nb = g.neighbors(v);
    Ok(s.difference(VertexSet::singleton(v))
        .iter()
        .fold(g.clone(), |acc, w| acc.with_neighborhood(w, nb)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinReplacement {
    pub vertex: usize,
    pub graph: SmallGraph,
    /// Per member of `S` (ascending), the `|S|`-th power sum of its
    /// extension vector over `G - S`.
    pub power_sums: Vec<(usize, BigUint)>,
}

/// Replaces `S` by twins of the member whose extension vector over `G - S`
/// has the largest `ℓ_{|S|}` norm (smallest index among ties).
pub fn best_twin_replacement(g: &SmallGraph, s: VertexSet, family: &ForbiddenFamily) -> Result<TwinReplacement> {
    best_twin_replacement_with(g, s, &FamilyChecker::new(family))
}

pub fn best_twin_replacement_with(g: &SmallGraph, s: VertexSet, checker: &FamilyChecker) -> Result<TwinReplacement> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("independent set is empty".into()));
    }
    if let Some(w) = s.iter().find(|&w| w >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
    }
    if !g.is_independent(s) {
        return Err(Error::NotIndependent);
    }
    let rest = g.vertices().difference(s);
    let power_sums: Vec<(usize, BigUint)> = s
        .iter()
        .map(|v| {
            let vector = extension_vector_with(g, rest, v, checker)?;
            Ok((v, power_sum(&vector.entries, s.len() as u32)))
        })
        .collect::<Result<_>>()?;
    let mut best = &power_sums[0];
    for candidate in &power_sums[1..] {
        if candidate.1 > best.1 {
            best = candidate;
        }
    }
    let vertex = best.0;
    Ok(TwinReplacement {
        vertex,
        graph: replace_with_twins(g, s, vertex)?,
        power_sums,
    })
}

/// Replaces `v` with a twin of `u`.
pub fn clone_twin(g: &SmallGraph, u: usize, v: usize) -> Result<SmallGraph> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::InvalidArgument("clone needs two distinct vertices".into()));
    }
    if g.adjacent(u, v) {
        return Err(Error::Adjacent(u, v));
    }
    Ok(g.with_neighborhood(v, g.neighbors(u)))
}

/// Deletes edge `vw` when `u` is adjacent to neither endpoint.
pub fn delete_edge_step(g: &SmallGraph, u: usize, v: usize, w: usize) -> Result<SmallGraph> {
    for x in [u, v, w] {
        check_vertex(g, x)?;
    }
    if u == v || u == w || v == w {
        return Err(Error::Pattern("vertices must be distinct".into()));
    }
    if g.adjacent(u, v) || g.adjacent(u, w) {
        return Err(Error::Pattern(format!("{u} must be adjacent to neither {v} nor {w}")));
    }
    if !g.adjacent(v, w) {
        return Err(Error::Pattern(format!("{v}{w} is not an edge")));
    }
    Ok(g.without_edge(v, w))
}

/// Every `(u, v, w)` with `u` adjacent to neither `v` nor `w` and `vw` an
/// edge, `v < w`; ordered by `u`, then by edge index.
pub fn delete_patterns(g: &SmallGraph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &(v, w) in g.edges() {
            let (v, w) = (v as usize, w as usize);
            if u != v && u != w && !g.adjacent(u, v) && !g.adjacent(u, w) {
                out.push((u, v, w));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizationStep {
    pub before: String,
    pub vertex: usize,
    pub after: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizationTrace {
    pub steps: Vec<SymmetrizationStep>,
    #[serde(rename = "final")]
    pub final_graph: String,
    pub final_is_complete_multipartite: bool,
    pub edge_count_nondecreasing: bool,
    pub eccentric_count_decreasing: bool,
}

/// One step: every non-neighbor of `u` becomes a twin of `u`.
pub fn twin_out(g: &SmallGraph, u: usize) -> SmallGraph {
    let nb = g.neighbors(u);
    let far = g.vertices().difference(nb);
    let rows: Vec<u16> = (0..g.n())
        .map(|v| if far.contains(v) { nb.0 } else { g.rows()[v] | far.0 })
        .collect();
    SmallGraph::from_rows(&rows).expect("twin replacement keeps the graph simple")
}

/// Repeatedly picks an eccentric vertex of maximum degree (smallest index
/// among ties) and turns all its non-neighbors into its twins.
pub fn symmetrization_sequence(g: &SmallGraph) -> SymmetrizationTrace {
    let mut current = g.clone();
    let mut steps = Vec::new();
    let mut edges_ok = true;
    let mut eccentric_ok = true;
    // The eccentric count strictly decreases, so n steps always suffice.
    for _ in 0..=g.n() {
        let eccentric = eccentric_vertices(&current);
        let Some(u) = eccentric.iter().max_by_key(|&v| (current.degree(v), std::cmp::Reverse(v))) else {
            break;
        };
        let next = twin_out(&current, u);
        edges_ok &= next.m() >= current.m();
        eccentric_ok &= eccentric_vertices(&next).len() < eccentric.len();
        steps.push(SymmetrizationStep {
            before: graph6::encode(&current),
            vertex: u,
            after: graph6::encode(&next),
        });
        current = next;
    }
    SymmetrizationTrace {
        steps,
        final_graph: graph6::encode(&current),
        final_is_complete_multipartite: current.is_complete_multipartite(),
        edge_count_nondecreasing: edges_ok,
        eccentric_count_decreasing: eccentric_ok,
    }
}
