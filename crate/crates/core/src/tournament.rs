//! Orientations of small graphs and tournaments.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet, MAX_VERTICES};
use crate::graph6;

/// An orientation of `graph`: bit `e` set means edge `e` points from its
/// smaller endpoint to its larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g SmallGraph,
    bits: u128,
}

fn low_mask(m: usize) -> u128 {
    if m >= 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

impl<'g> Orientation<'g> {
    pub fn new(graph: &'g SmallGraph, bits: u128) -> Result<Orientation<'g>> {
        if bits & !low_mask(graph.m()) != 0 {
            return Err(Error::InvalidArgument(format!(
                "orientation bits exceed the {} edges of the graph",
                graph.m()
            )));
        }
        Ok(Orientation { graph, bits })
    }

    /// Every edge from its smaller to its larger endpoint.
    pub fn ascending(graph: &'g SmallGraph) -> Orientation<'g> {
        Orientation {
            graph,
            bits: low_mask(graph.m()),
        }
    }

    pub fn graph(&self) -> &'g SmallGraph {
        self.graph
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// `Some(true)` if `u -> v`, `Some(false)` if `v -> u`, `None` if the
    /// pair is not an edge.
    pub fn points(&self, u: usize, v: usize) -> Option<bool> {
        let e = self.graph.edge_index(u, v)?;
        let low_to_high = self.bits >> e & 1 == 1;
        Some(low_to_high == (u < v))
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.graph
            .neighbors(v)
            .iter()
            .filter(|&u| self.points(v, u) == Some(true))
            .collect()
    }

    /// `graph6:hex`, the hex digits spelling the bit vector as a big-endian
    /// number with `ceil(m / 4)` digits (at least one).
    pub fn to_text(&self) -> String {
        let digits = self.graph.m().div_ceil(4).max(1);
        let mut out = graph6::encode(self.graph);
        out.push(':');
        write!(out, "{:0width$x}", self.bits, width = digits).expect("writing to a String");
        out
    }
}

/// Parses the `graph6:hex` form into its graph and bit vector.
pub fn parse_orientation_text(text: &str) -> Result<(SmallGraph, u128)> {
    let (g6, hex) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::OrientationText(format!("missing ':' in {text:?}")))?;
    let graph = graph6::decode(g6)?;
    let bits = u128::from_str_radix(hex, 16)
        .map_err(|e| Error::OrientationText(format!("bad hex {hex:?}: {e}")))?;
    Orientation::new(&graph, bits)?;
    Ok((graph, bits))
}

/// A tournament on vertices `0..k`, stored as dominance bitrows.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tournament {
    k: usize,
    out: [u16; MAX_VERTICES],
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(k={}, code={:#x})", self.k, self.code())
    }
}

/// Number of vertex pairs among `k` vertices.
pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl Tournament {
    /// Tournament with code bit `p` set meaning the `p`-th lexicographic pair
    /// `(i, j)`, `i < j`, is oriented `i -> j`. This is exactly the
    /// orientation bit vector of `K_k`.
    pub fn from_code(k: usize, code: u128) -> Tournament {
        assert!(k <= MAX_VERTICES, "tournament order {k} exceeds 16");
        let mut out = [0u16; MAX_VERTICES];
        let mut p = 0;
        for i in 0..k {
            for j in i + 1..k {
                if code >> p & 1 == 1 {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
                p += 1;
            }
        }
        Tournament { k, out }
    }

    pub fn code(&self) -> u128 {
        let mut code = 0u128;
        let mut p = 0;
        for i in 0..self.k {
            for j in i + 1..self.k {
                if self.beats(i, j) {
                    code |= 1 << p;
                }
                p += 1;
            }
        }
        code
    }

    /// Builds a tournament from dominance rows, checking that each pair is
    /// oriented exactly once.
    pub fn from_out_rows(rows: &[u16]) -> Result<Tournament> {
        let k = rows.len();
        if k > MAX_VERTICES {
            return Err(Error::VertexCount(k));
        }
        let mut out = [0u16; MAX_VERTICES];
        out[..k].copy_from_slice(rows);
        let t = Tournament { k, out };
        for u in 0..k {
            if t.out[u] >> u & 1 == 1 || t.out[u] & !VertexSet::full(k).0 != 0 {
                return Err(Error::InvalidArgument(format!("bad dominance row for {u}")));
            }
            for v in u + 1..k {
                if t.beats(u, v) == t.beats(v, u) {
                    return Err(Error::InvalidArgument(format!(
                        "pair ({u}, {v}) must be oriented exactly once"
                    )));
                }
            }
        }
        Ok(t)
    }

    /// The transitive tournament with `i -> j` for all `i < j`.
    pub fn transitive(k: usize) -> Tournament {
        Tournament::from_code(k, low_mask(pair_count(k)))
    }

    /// `i -> i+1 .. i+(k-1)/2` cyclically; strongly connected for odd `k >= 3`.
    pub fn rotational(k: usize) -> Tournament {
        assert!(k % 2 == 1, "rotational tournaments need odd order");
        let mut out = [0u16; MAX_VERTICES];
        for (i, row) in out.iter_mut().enumerate().take(k) {
            for d in 1..=(k - 1) / 2 {
                *row |= 1 << ((i + d) % k);
            }
        }
        Tournament { k, out }
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    fn in_set(&self, v: usize) -> VertexSet {
        VertexSet::full(self.k).difference(self.out_set(v)).difference(VertexSet::singleton(v))
    }

    /// Relabels: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        let mut out = [0u16; MAX_VERTICES];
        for u in 0..self.k {
            for v in self.out_set(u).iter() {
                out[perm[u]] |= 1 << perm[v];
            }
        }
        Tournament { k: self.k, out }
    }

    /// Subtournament on `set`; local vertex `i` is `set`'s `i`-th smallest.
    pub fn sub(&self, set: VertexSet) -> Tournament {
        let verts = set.to_vec();
        let mut out = [0u16; MAX_VERTICES];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.beats(u, v) {
                    out[a] |= 1 << b;
                }
            }
        }
        Tournament { k: verts.len(), out }
    }

    fn reach(&self, start: usize, forward: bool) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                let step = if forward { self.out_set(v) } else { self.in_set(v) };
                next = next.union(step);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.k == 0 {
            return false;
        }
        let all = VertexSet::full(self.k);
        self.reach(0, true) == all && self.reach(0, false) == all
    }

    /// Out-degrees form a permutation of `0..k`.
    pub fn is_transitive(&self) -> bool {
        let mut seen = 0u32;
        for v in 0..self.k {
            seen |= 1 << self.out_degree(v);
        }
        seen == (1u32 << self.k) - 1
    }

    pub fn source(&self) -> Option<usize> {
        (0..self.k).find(|&v| self.k > 0 && self.out_degree(v) == self.k - 1)
    }

    pub fn has_source(&self) -> bool {
        self.source().is_some()
    }

    /// Hamilton path by insertion: vertex `j` goes in front of the first
    /// path vertex it beats, or at the end.
    pub fn hamilton_path(&self) -> Vec<usize> {
        let mut path: Vec<usize> = Vec::with_capacity(self.k);
        for j in 0..self.k {
            match path.iter().position(|&p| self.beats(j, p)) {
                Some(i) => path.insert(i, j),
                None => path.push(j),
            }
        }
        path
    }

    /// A directed cycle through all vertices, listed once each; the last
    /// vertex beats the first.
    pub fn hamilton_cycle(&self) -> Result<Vec<usize>> {
        if !self.is_strongly_connected() {
            return Err(Error::NotStronglyConnected);
        }
        if self.k == 1 {
            return Ok(vec![0]);
        }
        match self.absorb_cycle() {
            Some(c) => Ok(c),
            None => self.hamilton_cycle_exhaustive().ok_or(Error::NotStronglyConnected),
        }
    }

    fn absorb_cycle(&self) -> Option<Vec<usize>> {
        let mut cycle = self.directed_triangle()?;
        while cycle.len() < self.k {
            let on_cycle: VertexSet = cycle.iter().copied().collect();
            let outside = VertexSet::full(self.k).difference(on_cycle);
            let len = cycle.len();
            // A vertex with both an in- and an out-neighbor on the cycle fits
            // between some consecutive pair c_i -> v -> c_{i+1}.
            let mut grown = false;
            for v in outside.iter() {
                if let Some(i) =
                    (0..len).find(|&i| self.beats(cycle[i], v) && self.beats(v, cycle[(i + 1) % len]))
                {
                    cycle.insert(i + 1, v);
                    grown = true;
                    break;
                }
            }
            if grown {
                continue;
            }
            // Every outside vertex now beats the whole cycle or loses to all
            // of it; strong connectivity gives an edge from a loser b to a
            // dominator a, and c_0 -> b -> a -> c_1 extends the cycle.
            let dominated: Vec<usize> = outside.iter().filter(|&v| self.beats(cycle[0], v)).collect();
            let dominating: Vec<usize> = outside.iter().filter(|&v| self.beats(v, cycle[0])).collect();
            let (b, a) = dominated
                .iter()
                .flat_map(|&b| dominating.iter().map(move |&a| (b, a)))
                .find(|&(b, a)| self.beats(b, a))?;
            cycle.insert(1, b);
            cycle.insert(2, a);
        }
        Some(cycle)
    }

    fn directed_triangle(&self) -> Option<Vec<usize>> {
        for a in 0..self.k {
            for b in self.out_set(a).iter() {
                if let Some(c) = self.out_set(b).intersection(self.in_set(a)).min() {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    }

    /// Depth-first search for a Hamilton cycle starting at vertex 0.
    pub fn hamilton_cycle_exhaustive(&self) -> Option<Vec<usize>> {
        fn dfs(t: &Tournament, path: &mut Vec<usize>, used: VertexSet) -> bool {
            let last = *path.last().unwrap();
            if path.len() == t.k {
                return t.beats(last, path[0]) || t.k == 1;
            }
            for v in t.out_set(last).difference(used).iter() {
                path.push(v);
                let mut u = used;
                u.insert(v);
                if dfs(t, path, u) {
                    return true;
                }
                path.pop();
            }
            false
        }
        if self.k == 0 {
            return None;
        }
        let mut path = vec![0];
        dfs(self, &mut path, VertexSet::singleton(0)).then_some(path)
    }

    /// For each `3 <= l <= k`, a vertex set inducing a strongly connected
    /// subtournament of order `l`.
    ///
    /// Walks a Hamilton cycle: when some chord `x_i -> x_{i+2}` exists,
    /// `x_{i+1}` is dropped and the shorter cycle is processed next;
    /// otherwise every prefix `{x_1, .., x_l}` is strongly connected.
    pub fn sc_subtournament_chain(&self) -> Result<BTreeMap<usize, VertexSet>> {
        if self.k < 3 {
            return Err(Error::InvalidArgument(
                "strongly connected subtournament chain needs at least 3 vertices".into(),
            ));
        }
        let mut cycle = self.hamilton_cycle()?;
        let mut chain = BTreeMap::new();
        loop {
            let len = cycle.len();
            chain.insert(len, cycle.iter().copied().collect::<VertexSet>());
            if len == 3 {
                break;
            }
            match (0..len).find(|&i| self.beats(cycle[i], cycle[(i + 2) % len])) {
                Some(i) => {
                    cycle.remove((i + 1) % len);
                }
                None => {
                    for l in 3..len {
                        chain.insert(l, cycle[..l].iter().copied().collect());
                    }
                    break;
                }
            }
        }
        Ok(chain)
    }
}

/// Tournament induced on the clique `set` of `o`'s graph; local vertex `i`
/// is the `i`-th smallest member of `set`.
pub fn induced_subtournament(o: &Orientation<'_>, set: VertexSet) -> Result<Tournament> {
    let g = o.graph();
    if set.iter().any(|v| v >= g.n()) || !g.is_clique(set) {
        return Err(Error::NotClique);
    }
    let verts = set.to_vec();
    let mut out = [0u16; MAX_VERTICES];
    for (a, &u) in verts.iter().enumerate() {
        for (b, &v) in verts.iter().enumerate().skip(a + 1) {
            if o.points(u, v) == Some(true) {
                out[a] |= 1 << b;
            } else {
                out[b] |= 1 << a;
            }
        }
    }
    Ok(Tournament { k: verts.len(), out })
}

/// Tournament underlying an orientation of a complete graph.
pub fn as_tournament(o: &Orientation<'_>) -> Result<Tournament> {
    induced_subtournament(o, o.graph().vertices())
}

/// Number of strongly connected tournaments on `k` labeled vertices.
pub fn count_sc_orientations(k: usize) -> Result<u64> {
    if !(3..=6).contains(&k) {
        return Err(Error::Budget {
            what: "tournament order",
            value: k as u64,
            limit: 6,
            hint: " (orders 3..=6 are enumerated directly)",
        });
    }
    let m = pair_count(k);
    Ok((0..1u128 << m)
        .filter(|&code| Tournament::from_code(k, code).is_strongly_connected())
        .count() as u64)
}
