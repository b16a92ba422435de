//! Exact counting of family-free orientations.
//!
//! Three routes are provided and cross-checked by the test suites:
//! full enumeration ([`count_naive`]), pruned backtracking
//! ([`count_backtrack`]), and the independent-set product
//! ([`count_via_independent_set`]).
//!
//! Backtracking assigns edges in edge-index order. Each clique is checked
//! exactly once, right after its highest-indexed edge has been assigned,
//! by looking its local tournament code up in a table of forbidden codes.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{is_free_on, ForbiddenFamily};
use crate::graph::{SmallGraph, VertexSet};
use crate::graph6;
use crate::tournament::{pair_count, Orientation, Tournament};

/// Largest edge count for [`count_naive`].
pub const NAIVE_EDGE_BUDGET: usize = 25;
/// Largest edge count for [`count_backtrack`] and for the enumerated part of
/// the product method.
pub const BACKTRACK_EDGE_BUDGET: usize = 36;
/// Number of leading edges whose assignments define the parallel subproblems.
pub const SPLIT_EDGES: usize = 8;
/// Graphs with fewer edges are counted on the calling thread.
const PARALLEL_MIN_EDGES: usize = 18;
/// Families up to this order are checked through a lookup table.
const TABLE_MAX_ORDER: usize = 6;

/// A family compiled for fast membership tests on local tournament codes.
#[derive(Clone, Debug)]
pub struct FamilyChecker {
    family: ForbiddenFamily,
    table: Option<Vec<u64>>,
}

impl FamilyChecker {
    pub fn new(family: &ForbiddenFamily) -> FamilyChecker {
        let k = family.order();
        let table = (k <= TABLE_MAX_ORDER).then(|| {
            let size = 1usize << pair_count(k);
            let mut words = vec![0u64; size.div_ceil(64)];
            for code in 0..size {
                if family.forbids(&Tournament::from_code(k, code as u128)) {
                    words[code / 64] |= 1 << (code % 64);
                }
            }
            words
        });
        FamilyChecker {
            family: family.clone(),
            table,
        }
    }

    pub fn family(&self) -> &ForbiddenFamily {
        &self.family
    }

    pub fn order(&self) -> usize {
        self.family.order()
    }

    fn forbidden_code(&self, code: u128) -> bool {
        match &self.table {
            Some(words) => {
                let c = code as usize;
                words[c / 64] >> (c % 64) & 1 == 1
            }
            None => self.family.forbids(&Tournament::from_code(self.order(), code)),
        }
    }
}

/// Backtracking plan over the free edges of a graph.
struct Plan<'c> {
    checker: &'c FamilyChecker,
    free: Vec<usize>,
    /// Per clique, its edge indices in local pair order.
    cliques: Vec<Vec<u8>>,
    /// Cliques triggered at each free position.
    checks: Vec<Vec<u32>>,
    /// Cliques whose edges are all fixed.
    fixed_checks: Vec<u32>,
    /// Positions at or beyond this have no checks left.
    tail: usize,
}

impl<'c> Plan<'c> {
    fn new(g: &SmallGraph, checker: &'c FamilyChecker, fixed: u128) -> Plan<'c> {
        let free: Vec<usize> = (0..g.m()).filter(|&e| fixed >> e & 1 == 0).collect();
        let mut position = vec![usize::MAX; g.m()];
        for (p, &e) in free.iter().enumerate() {
            position[e] = p;
        }
        let mut cliques = Vec::new();
        let mut checks = vec![Vec::new(); free.len()];
        let mut fixed_checks = Vec::new();
        for clique in g.cliques_of_size(checker.order()) {
            let verts = clique.to_vec();
            let mut edges = Vec::with_capacity(pair_count(verts.len()));
            for a in 0..verts.len() {
                for b in a + 1..verts.len() {
                    edges.push(g.edge_index(verts[a], verts[b]).expect("clique pairs are edges") as u8);
                }
            }
            let trigger = edges.iter().map(|&e| position[e as usize]).filter(|&p| p != usize::MAX).max();
            let id = cliques.len() as u32;
            cliques.push(edges);
            match trigger {
                Some(p) => checks[p].push(id),
                None => fixed_checks.push(id),
            }
        }
        let tail = checks.iter().rposition(|c| !c.is_empty()).map_or(0, |p| p + 1);
        Plan {
            checker,
            free,
            cliques,
            checks,
            fixed_checks,
            tail,
        }
    }

    fn violates(&self, clique: u32, bits: u128) -> bool {
        let mut code = 0u128;
        for (p, &e) in self.cliques[clique as usize].iter().enumerate() {
            code |= (bits >> e & 1) << p;
        }
        self.checker.forbidden_code(code)
    }

    fn passes(&self, pos: usize, bits: u128) -> bool {
        self.checks[pos].iter().all(|&c| !self.violates(c, bits))
    }

    fn fixed_part_passes(&self, bits: u128) -> bool {
        self.fixed_checks.iter().all(|&c| !self.violates(c, bits))
    }

    fn count_from(&self, pos: usize, bits: u128) -> u64 {
        if pos >= self.tail {
            return 1u64 << (self.free.len() - pos);
        }
        let e = self.free[pos];
        let mut total = 0;
        for b in [0u128, 1] {
            let next = bits | b << e;
            if self.passes(pos, next) {
                total += self.count_from(pos + 1, next);
            }
        }
        total
    }

    fn visit_from(&self, pos: usize, bits: u128, visit: &mut dyn FnMut(u128)) {
        if pos == self.free.len() {
            visit(bits);
            return;
        }
        let e = self.free[pos];
        for b in [0u128, 1] {
            let next = bits | b << e;
            if pos >= self.tail || self.passes(pos, next) {
                self.visit_from(pos + 1, next, visit);
            }
        }
    }

    /// Counts with the first `SPLIT_EDGES` free positions fixed per
    /// subproblem; partial sums are added in prefix order.
    fn count_split(&self, base: u128, parallel: bool) -> u64 {
        let p = SPLIT_EDGES.min(self.free.len());
        let solve = |prefix: u64| -> u64 {
            let mut bits = base;
            for pos in 0..p {
                bits |= ((prefix >> pos & 1) as u128) << self.free[pos];
                if pos < self.tail && !self.passes(pos, bits) {
                    return 0;
                }
            }
            self.count_from(p, bits)
        };
        let parts: Vec<u64> = if parallel {
            (0..1u64 << p).into_par_iter().map(solve).collect()
        } else {
            (0..1u64 << p).map(solve).collect()
        };
        parts.iter().sum()
    }
}

fn budget(what: &'static str, value: usize, limit: usize, hint: &'static str) -> Result<()> {
    if value > limit {
        return Err(Error::Budget {
            what,
            value: value as u64,
            limit: limit as u64,
            hint,
        });
    }
    Ok(())
}

fn pow2(m: usize) -> BigUint {
    BigUint::one() << m
}

/// Counts by testing all `2^m` orientations with the tournament predicates.
pub fn count_naive(g: &SmallGraph, family: &ForbiddenFamily) -> Result<BigUint> {
    budget("edge count", g.m(), NAIVE_EDGE_BUDGET, "; use the backtrack method")?;
    let cliques = g.cliques_of_size(family.order());
    let free = |bits: u64| is_free_on(&Orientation::new(g, bits as u128).expect("bits < 2^m"), family, &cliques);
    let total = if g.m() >= PARALLEL_MIN_EDGES {
        (0..1u64 << g.m()).into_par_iter().filter(|&b| free(b)).count()
    } else {
        (0..1u64 << g.m()).filter(|&b| free(b)).count()
    };
    Ok(BigUint::from(total))
}

/// Counts by pruned backtracking over the edge index.
pub fn count_backtrack(g: &SmallGraph, family: &ForbiddenFamily) -> Result<BigUint> {
    count_backtrack_with(g, &FamilyChecker::new(family))
}

pub fn count_backtrack_with(g: &SmallGraph, checker: &FamilyChecker) -> Result<BigUint> {
    if g.cliques_of_size(checker.order()).is_empty() {
        return Ok(pow2(g.m()));
    }
    budget("edge count", g.m(), BACKTRACK_EDGE_BUDGET, "")?;
    let plan = Plan::new(g, checker, 0);
    Ok(BigUint::from(plan.count_split(0, g.m() >= PARALLEL_MIN_EDGES)))
}

/// Calls `visit` with the bit vector of every family-free orientation, in
/// ascending numeric order.
pub fn free_orientations(g: &SmallGraph, checker: &FamilyChecker) -> Result<Vec<u128>> {
    budget("edge count", g.m(), BACKTRACK_EDGE_BUDGET, "")?;
    let plan = Plan::new(g, checker, 0);
    let mut out = Vec::new();
    plan.visit_from(0, 0, &mut |bits| out.push(bits));
    out.sort_unstable();
    Ok(out)
}

/// Number of family-free orientations of `g` that agree with `fixed_bits` on
/// the edges in `fixed_mask`.
pub fn count_completions(g: &SmallGraph, checker: &FamilyChecker, fixed_mask: u128, fixed_bits: u128) -> Result<u64> {
    let plan = Plan::new(g, checker, fixed_mask);
    budget("free edge count", plan.free.len(), 63, "")?;
    let bits = fixed_bits & fixed_mask;
    if !plan.fixed_part_passes(bits) {
        return Ok(0);
    }
    Ok(plan.count_from(0, bits))
}

/// A vertex-extension plan: `g` is `H` plus one vertex; the edges of `H`
/// are fixed from an orientation of `H`.
struct Extension<'c> {
    plan: Plan<'c>,
    /// `map[e]` is the index in the extended graph of `H`'s edge `e`.
    map: Vec<usize>,
}

impl<'c> Extension<'c> {
    fn new(h: &SmallGraph, extended: &SmallGraph, checker: &'c FamilyChecker) -> Extension<'c> {
        let map: Vec<usize> = h
            .edges()
            .iter()
            .map(|&(i, j)| extended.edge_index(i as usize, j as usize).expect("H is induced"))
            .collect();
        let fixed = map.iter().fold(0u128, |acc, &e| acc | 1 << e);
        Extension {
            plan: Plan::new(extended, checker, fixed),
            map,
        }
    }

    /// Completions of the extended graph given a family-free orientation of
    /// `H`; cliques inside `H` are not rechecked.
    fn count(&self, h_bits: u128) -> u64 {
        let mut bits = 0u128;
        for (e, &target) in self.map.iter().enumerate() {
            bits |= (h_bits >> e & 1) << target;
        }
        self.plan.count_from(0, bits)
    }
}

/// The vector of extension counts of `vertex` over the family-free
/// orientations of `G[base]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionVector {
    pub vertex: usize,
    pub base: Vec<usize>,
    pub family: String,
    /// Orientations of `G[base]` (edge index of the induced subgraph),
    /// ascending.
    pub orientations: Vec<u128>,
    pub entries: Vec<u64>,
}

pub fn extension_vector(g: &SmallGraph, base: VertexSet, vertex: usize, family: &ForbiddenFamily) -> Result<ExtensionVector> {
    extension_vector_with(g, base, vertex, &FamilyChecker::new(family))
}

pub fn extension_vector_with(
    g: &SmallGraph,
    base: VertexSet,
    vertex: usize,
    checker: &FamilyChecker,
) -> Result<ExtensionVector> {
    if vertex >= g.n() {
        return Err(Error::VertexOutOfRange { vertex, n: g.n() });
    }
    if base.contains(vertex) {
        return Err(Error::InvalidArgument(format!("vertex {vertex} lies in the base set")));
    }
    let verts = base.to_vec();
    let mut result = ExtensionVector {
        vertex,
        base: verts.clone(),
        family: checker.family().descriptor(),
        orientations: vec![0],
        entries: vec![1],
    };
    if verts.is_empty() {
        return Ok(result);
    }
    let h = g.induced(base)?;
    let mut order = verts;
    order.push(vertex);
    let extended = g.induced_ordered(&order)?;
    let ext = Extension::new(&h, &extended, checker);
    result.orientations = free_orientations(&h, checker)?;
    result.entries = result.orientations.iter().map(|&b| ext.count(b)).collect();
    Ok(result)
}

/// Counts via `D(G) = sum over free orientations of H = G - S of the
/// product of per-vertex extension counts`, for an independent set `S`.
pub fn count_via_independent_set(g: &SmallGraph, family: &ForbiddenFamily, s: VertexSet) -> Result<BigUint> {
    count_via_independent_set_with(g, &FamilyChecker::new(family), s)
}

pub fn count_via_independent_set_with(g: &SmallGraph, checker: &FamilyChecker, s: VertexSet) -> Result<BigUint> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !g.is_independent(s) {
        return Err(Error::NotIndependent);
    }
    let rest = g.vertices().difference(s);
    if rest.is_empty() {
        return Ok(BigUint::one());
    }
    let h = g.induced(rest)?;
    let extended: Vec<SmallGraph> = s
        .iter()
        .map(|v| {
            let mut order = rest.to_vec();
            order.push(v);
            g.induced_ordered(&order)
        })
        .collect::<Result<_>>()?;
    let extensions: Vec<Extension<'_>> = extended.iter().map(|x| Extension::new(&h, x, checker)).collect();

    budget("edge count of G - S", h.m(), BACKTRACK_EDGE_BUDGET, "")?;
    let plan = Plan::new(&h, checker, 0);
    // Each product is at most 2^(m - m_H), so the sum fits in 2^m <= 2^120.
    let mut total: u128 = 0;
    plan.visit_from(0, 0, &mut |bits| {
        let product = extensions.iter().fold(1u128, |acc, x| acc * x.count(bits) as u128);
        total += product;
    });
    Ok(BigUint::from(total))
}

/// A largest independent set (smallest bitmask among ties).
pub fn largest_independent_set(g: &SmallGraph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for mask in 1..=g.vertices().0 {
        let s = VertexSet(mask);
        if s.len() > best.len() && g.is_independent(s) {
            best = s;
        }
    }
    best
}

/// `c_F(u, K)`: orientations of the edges from a new vertex `u` (adjacent to
/// `pattern` within `K`) that keep the tournament `base` on `K` family-free.
pub fn extension_count_vertex(base: &Tournament, pattern: VertexSet, family: &ForbiddenFamily) -> Result<u64> {
    extension_count_vertex_with(base, pattern, &FamilyChecker::new(family))
}

pub fn extension_count_vertex_with(base: &Tournament, pattern: VertexSet, checker: &FamilyChecker) -> Result<u64> {
    let x = base.order();
    if !pattern.is_subset(VertexSet::full(x)) {
        return Err(Error::InvalidArgument("adjacency pattern leaves the clique".into()));
    }
    let g = clique_plus(x, &[pattern], false)?;
    let (mask, bits) = clique_fixed(&g, base);
    count_completions(&g, checker, mask, bits)
}

/// `c_F({u, v}, K)`: orientations of the edges from two adjacent new
/// vertices, each adjacent to all of `K`, and of the edge `uv`.
pub fn extension_count_edge(base: &Tournament, family: &ForbiddenFamily) -> Result<u64> {
    extension_count_edge_with(base, &FamilyChecker::new(family))
}

pub fn extension_count_edge_with(base: &Tournament, checker: &FamilyChecker) -> Result<u64> {
    let x = base.order();
    let full = VertexSet::full(x);
    let g = clique_plus(x, &[full, full], true)?;
    let (mask, bits) = clique_fixed(&g, base);
    count_completions(&g, checker, mask, bits)
}

/// `K_x` on vertices `0..x` plus extra vertices with the given neighborhoods
/// in the clique; extras are pairwise adjacent when `join_extras`.
fn clique_plus(x: usize, extras: &[VertexSet], join_extras: bool) -> Result<SmallGraph> {
    let n = x + extras.len();
    let mut edges = Vec::new();
    for i in 0..x {
        for j in i + 1..x {
            edges.push((i, j));
        }
    }
    for (a, nb) in extras.iter().enumerate() {
        edges.extend(nb.iter().map(|w| (w, x + a)));
        if join_extras {
            edges.extend((a + 1..extras.len()).map(|b| (x + a, x + b)));
        }
    }
    SmallGraph::from_edges(n, &edges)
}

fn clique_fixed(g: &SmallGraph, base: &Tournament) -> (u128, u128) {
    let mut mask = 0u128;
    let mut bits = 0u128;
    for i in 0..base.order() {
        for j in i + 1..base.order() {
            let e = g.edge_index(i, j).expect("clique edge");
            mask |= 1 << e;
            if base.beats(i, j) {
                bits |= 1 << e;
            }
        }
    }
    (mask, bits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "naive")]
    Naive,
    #[serde(rename = "backtrack")]
    Backtrack,
    #[serde(rename = "independent-set-product")]
    IndependentSetProduct,
}

impl Method {
    pub fn parse(text: &str) -> Result<Method> {
        match text {
            "naive" => Ok(Method::Naive),
            "backtrack" => Ok(Method::Backtrack),
            "independent-set" | "independent-set-product" => Ok(Method::IndependentSetProduct),
            other => Err(Error::InvalidArgument(format!("unknown counting method {other:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Backtrack => "backtrack",
            Method::IndependentSetProduct => "independent-set-product",
        }
    }
}

pub(crate) fn decimal<S: serde::Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

/// One line of `count` output.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub graph6: String,
    pub family: String,
    #[serde(serialize_with = "decimal")]
    pub count: BigUint,
    pub method: Method,
    pub elapsed_ms: u64,
}

/// Counts with the chosen method; the product method uses `independent`
/// or, when absent, a largest independent set.
pub fn count(g: &SmallGraph, family: &ForbiddenFamily, method: Method, independent: Option<VertexSet>) -> Result<CountReport> {
    let start = Instant::now();
    let count = match method {
        Method::Naive => count_naive(g, family)?,
        Method::Backtrack => count_backtrack(g, family)?,
        Method::IndependentSetProduct => {
            let s = independent.unwrap_or_else(|| largest_independent_set(g));
            count_via_independent_set(g, family, s)?
        }
    };
    Ok(CountReport {
        graph6: graph6::encode(g),
        family: family.descriptor(),
        count,
        method,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;

    fn s4() -> ForbiddenFamily {
        ForbiddenFamily::StronglyConnected(4)
    }

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn cyclic_triangle() -> Tournament {
        Tournament::from_code(3, 0b101)
    }

    #[test]
    fn naive_examples() {
        let k4 = SmallGraph::complete(4).unwrap();
        let k5 = SmallGraph::complete(5).unwrap();
        assert_eq!(count_naive(&k4, &s4()).unwrap(), n(40));
        assert_eq!(count_naive(&k5, &s4()).unwrap(), n(240));
        let t = turan_graph(6, 3).unwrap();
        assert_eq!(count_naive(&t, &s4()).unwrap(), n(1 << 12));
        let k8 = SmallGraph::complete(8).unwrap();
        assert!(matches!(count_naive(&k8, &s4()), Err(Error::Budget { .. })));
    }

    #[test]
    fn backtrack_examples() {
        assert_eq!(count_backtrack(&turan_graph(5, 3).unwrap(), &s4()).unwrap(), n(256));
        let k5 = SmallGraph::complete(5).unwrap();
        assert_eq!(count_backtrack(&k5, &ForbiddenFamily::CyclicTriangle).unwrap(), n(120));
        let k6 = SmallGraph::complete(6).unwrap();
        let s5 = count_backtrack(&k6, &ForbiddenFamily::StronglyConnected(5)).unwrap();
        assert_eq!(s5, count_naive(&k6, &ForbiddenFamily::StronglyConnected(5)).unwrap());
        assert!(s5 <= n(7824));
        // K_k-free graphs short-circuit regardless of size.
        let big = turan_graph(16, 3).unwrap();
        assert_eq!(count_backtrack(&big, &s4()).unwrap(), pow2(big.m()));
        let k10 = SmallGraph::complete(10).unwrap();
        assert!(matches!(count_backtrack(&k10, &s4()), Err(Error::Budget { .. })));
    }

    #[test]
    fn parallel_split_matches_serial() {
        let g = SmallGraph::complete(7).unwrap();
        let checker = FamilyChecker::new(&s4());
        let plan = Plan::new(&g, &checker, 0);
        let serial = plan.count_from(0, 0);
        assert_eq!(plan.count_split(0, true), serial);
        assert_eq!(plan.count_split(0, false), serial);
    }

    #[test]
    fn independent_set_examples() {
        let t = turan_graph(6, 3).unwrap();
        let s = VertexSet::from_vertices([0, 1]);
        assert_eq!(count_via_independent_set(&t, &s4(), s).unwrap(), n(1 << 12));
        let k5 = SmallGraph::complete(5).unwrap();
        assert_eq!(count_via_independent_set(&k5, &s4(), VertexSet::EMPTY).unwrap(), n(240));
        let k4_plus = SmallGraph::complete(4).unwrap().with_isolated(1).unwrap();
        assert_eq!(
            count_via_independent_set(&k4_plus, &s4(), VertexSet::singleton(4)).unwrap(),
            n(40)
        );
        assert!(matches!(
            count_via_independent_set(&k5, &s4(), VertexSet::from_vertices([0, 1])),
            Err(Error::NotIndependent)
        ));
        let empty = SmallGraph::empty(3).unwrap();
        assert_eq!(count_via_independent_set(&empty, &s4(), empty.vertices()).unwrap(), n(1));
    }

    #[test]
    fn vertex_extension_examples() {
        let full = VertexSet::full(3);
        assert_eq!(extension_count_vertex(&Tournament::transitive(3), full, &s4()).unwrap(), 6);
        assert_eq!(extension_count_vertex(&cyclic_triangle(), full, &s4()).unwrap(), 2);
        assert_eq!(extension_count_vertex(&cyclic_triangle(), VertexSet::EMPTY, &s4()).unwrap(), 1);
        // A forbidden base has no free extension.
        let sc4 = Tournament::from_code(4, 0b101101);
        assert!(sc4.is_strongly_connected());
        assert_eq!(extension_count_vertex(&sc4, VertexSet::EMPTY, &s4()).unwrap(), 0);
    }

    #[test]
    fn edge_extension_examples() {
        assert_eq!(extension_count_edge(&cyclic_triangle(), &s4()).unwrap(), 6);
        let transitive = extension_count_edge(&Tournament::transitive(3), &s4()).unwrap();
        assert!(transitive < 48, "{transitive}");
        assert_eq!(extension_count_edge(&Tournament::from_code(0, 0), &s4()).unwrap(), 2);
    }

    #[test]
    fn extension_vector_examples() {
        let p = SmallGraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let v = extension_vector(&p, VertexSet::from_vertices([0, 1]), 2, &s4()).unwrap();
        assert_eq!(v.entries, vec![4]);

        let k4 = SmallGraph::complete(4).unwrap();
        let v = extension_vector(&k4, VertexSet::full(3), 3, &s4()).unwrap();
        assert_eq!(v.orientations, (0..8).collect::<Vec<u128>>());
        let expected: Vec<u64> = (0..8)
            .map(|c| if Tournament::from_code(3, c).is_strongly_connected() { 2 } else { 6 })
            .collect();
        assert_eq!(v.entries, expected);
        assert_eq!(v.entries.iter().filter(|&&e| e == 6).count(), 6);

        let isolated = SmallGraph::complete(3).unwrap().with_isolated(1).unwrap();
        let v = extension_vector(&isolated, VertexSet::full(3), 3, &s4()).unwrap();
        assert!(v.entries.iter().all(|&e| e == 1));
        assert!(extension_vector(&k4, VertexSet::full(3), 2, &s4()).is_err());
    }

    #[test]
    fn free_orientation_listing() {
        let k4 = SmallGraph::complete(4).unwrap();
        let checker = FamilyChecker::new(&s4());
        let list = free_orientations(&k4, &checker).unwrap();
        assert_eq!(list.len(), 40);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
        for bits in list {
            assert!(!Tournament::from_code(4, bits).is_strongly_connected());
        }
    }

    #[test]
    fn completions_respect_fixed_bits() {
        let k4 = SmallGraph::complete(4).unwrap();
        let checker = FamilyChecker::new(&s4());
        assert_eq!(count_completions(&k4, &checker, 0, 0).unwrap(), 40);
        let all = (1u128 << 6) - 1;
        assert_eq!(count_completions(&k4, &checker, all, 0b101101).unwrap(), 0);
        assert_eq!(count_completions(&k4, &checker, all, all).unwrap(), 1);
    }

    #[test]
    fn report_json_shape() {
        let k4 = SmallGraph::complete(4).unwrap();
        let report = count(&k4, &s4(), Method::Backtrack, None).unwrap();
        let value: serde_json::Value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["graph6"], "C~");
        assert_eq!(value["family"], "s4");
        assert_eq!(value["count"], "40");
        assert_eq!(value["method"], "backtrack");
        assert!(value["elapsed_ms"].is_u64());
        let p = count(&k4, &s4(), Method::IndependentSetProduct, None).unwrap();
        assert_eq!(p.count, n(40));
        assert_eq!(serde_json::to_value(&p).unwrap()["method"], "independent-set-product");
    }

    #[test]
    fn largest_independent_sets() {
        assert_eq!(largest_independent_set(&turan_graph(7, 3).unwrap()).len(), 3);
        assert_eq!(largest_independent_set(&SmallGraph::complete(4).unwrap()).len(), 1);
    }
}
