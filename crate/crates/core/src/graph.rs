//! Undirected graphs on at most 16 vertices.
//!
//! Adjacency is stored as one `u16` bitrow per vertex. Every graph also
//! carries its edge index: the edges `(i, j)`, `i < j`, listed in
//! lexicographic order. Orientations and the backtracking order of the
//! counting engine are defined in terms of this index, so its order is part
//! of the public contract.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 16;

const NO_EDGE: u8 = u8::MAX;

/// A set of vertices of a [`SmallGraph`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> VertexSet {
        VertexSet(vertices.into_iter().fold(0u16, |acc, v| acc | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

#[derive(Clone)]
pub struct SmallGraph {
    n: usize,
    rows: [u16; MAX_VERTICES],
    edges: Vec<(u8, u8)>,
    position: [[u8; MAX_VERTICES]; MAX_VERTICES],
}

impl PartialEq for SmallGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for SmallGraph {}

impl std::hash::Hash for SmallGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmallGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl SmallGraph {
    fn from_rows_unchecked(n: usize, rows: [u16; MAX_VERTICES]) -> SmallGraph {
        let mut edges = Vec::new();
        let mut position = [[NO_EDGE; MAX_VERTICES]; MAX_VERTICES];
        for i in 0..n {
            let higher = rows[i] & !((2u32 << i) - 1) as u16;
            for j in VertexSet(higher).iter() {
                let e = edges.len() as u8;
                position[i][j] = e;
                position[j][i] = e;
                edges.push((i as u8, j as u8));
            }
        }
        SmallGraph {
            n,
            rows,
            edges,
            position,
        }
    }

    fn check_order(n: usize) -> Result<()> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(())
    }

    pub fn empty(n: usize) -> Result<SmallGraph> {
        Self::check_order(n)?;
        Ok(Self::from_rows_unchecked(n, [0; MAX_VERTICES]))
    }

    pub fn complete(n: usize) -> Result<SmallGraph> {
        Self::check_order(n)?;
        let full = VertexSet::full(n).0;
        let mut rows = [0; MAX_VERTICES];
        for (v, row) in rows.iter_mut().enumerate().take(n) {
            *row = full & !(1 << v);
        }
        Ok(Self::from_rows_unchecked(n, rows))
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SmallGraph> {
        Self::check_order(n)?;
        let mut rows = [0u16; MAX_VERTICES];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Self::from_rows_unchecked(n, rows))
    }

    /// Builds a graph from adjacency bitrows, validating symmetry and
    /// irreflexivity.
    pub fn from_rows(rows: &[u16]) -> Result<SmallGraph> {
        let n = rows.len();
        Self::check_order(n)?;
        let allowed = VertexSet::full(n).0;
        let mut buf = [0u16; MAX_VERTICES];
        for (v, &row) in rows.iter().enumerate() {
            if row & !allowed != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !allowed).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row).iter() {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency rows are not symmetric at ({v}, {u})"
                    )));
                }
            }
            buf[v] = row;
        }
        Ok(Self::from_rows_unchecked(n, buf))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.n]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// The edge list in index order.
    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        let (i, j) = self.edges[e];
        (i as usize, j as usize)
    }

    /// Position of the edge `{u, v}` in the edge index.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let p = self.position[u][v];
        (p != NO_EDGE).then_some(p as usize)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).intersection(set).is_empty())
    }

    /// Induced subgraph on `set`; vertex `i` of the result is the `i`-th
    /// smallest member of `set`.
    pub fn induced(&self, set: VertexSet) -> Result<SmallGraph> {
        let order = set.to_vec();
        self.induced_ordered(&order)
    }

    /// Induced subgraph with an explicit vertex order.
    pub fn induced_ordered(&self, order: &[usize]) -> Result<SmallGraph> {
        Self::check_order(order.len())?;
        let mut rows = [0u16; MAX_VERTICES];
        for (a, &u) in order.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            for (b, &v) in order.iter().enumerate() {
                if self.adjacent(u, v) {
                    rows[a] |= 1 << b;
                }
            }
        }
        Ok(Self::from_rows_unchecked(order.len(), rows))
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SmallGraph {
        assert_eq!(perm.len(), self.n);
        let mut rows = [0u16; MAX_VERTICES];
        for (u, v) in self.edges.iter().map(|&(u, v)| (u as usize, v as usize)) {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Self::from_rows_unchecked(self.n, rows)
    }

    /// Copy of the graph with `v`'s neighborhood replaced by `neighborhood`.
    pub fn with_neighborhood(&self, v: usize, neighborhood: VertexSet) -> SmallGraph {
        let nb = neighborhood.difference(VertexSet::singleton(v));
        let mut rows = self.rows;
        for (u, row) in rows.iter_mut().enumerate().take(self.n) {
            if nb.contains(u) {
                *row |= 1 << v;
            } else {
                *row &= !(1 << v);
            }
        }
        rows[v] = nb.0;
        Self::from_rows_unchecked(self.n, rows)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> SmallGraph {
        let mut rows = self.rows;
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Self::from_rows_unchecked(self.n, rows)
    }

    /// Disjoint union with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Result<SmallGraph> {
        Self::check_order(self.n + extra)?;
        Ok(Self::from_rows_unchecked(self.n + extra, self.rows))
    }

    /// Adds a new last vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<SmallGraph> {
        Self::check_order(self.n + 1)?;
        let v = self.n;
        let mut rows = self.rows;
        for u in neighbors.iter() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            rows[u] |= 1 << v;
        }
        rows[v] = neighbors.0;
        Ok(Self::from_rows_unchecked(self.n + 1, rows))
    }

    /// All `k`-cliques in ascending lexicographic order.
    pub fn cliques_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if k == 0 || k > self.n {
            return out;
        }
        self.extend_cliques(VertexSet::EMPTY, self.vertices(), k, &mut out);
        out
    }

    fn extend_cliques(&self, clique: VertexSet, candidates: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if clique.len() == k {
            out.push(clique);
            return;
        }
        if clique.len() + candidates.len() < k {
            return;
        }
        for v in candidates.iter() {
            let higher = VertexSet(candidates.0 & !((2u32 << v) - 1) as u16);
            let mut next = clique;
            next.insert(v);
            self.extend_cliques(next, higher.intersection(self.neighbors(v)), k, out);
        }
    }

    pub fn clique_number(&self) -> usize {
        let mut best = 1;
        while best < self.n && !self.cliques_of_size(best + 1).is_empty() {
            best += 1;
        }
        best
    }

    /// Maximal independent sets, each listed once, in ascending bitmask
    /// order.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let full = self.vertices();
        let mut out = Vec::new();
        for mask in 1..=full.0 {
            let s = VertexSet(mask);
            if !self.is_independent(s) {
                continue;
            }
            let maximal = full
                .difference(s)
                .iter()
                .all(|v| !self.neighbors(v).intersection(s).is_empty());
            if maximal {
                out.push(s);
            }
        }
        out
    }

    /// Independent sets of size at least `min_size`.
    pub fn independent_sets(&self, min_size: usize) -> Vec<VertexSet> {
        (1..=self.vertices().0)
            .map(VertexSet)
            .filter(|&s| s.len() >= min_size && self.is_independent(s))
            .collect()
    }

    /// Returns the part structure when non-adjacency is an equivalence
    /// relation, i.e. when the graph is complete multipartite.
    pub fn complete_multipartite_parts(&self) -> Option<PartitionSpec> {
        let mut seen = VertexSet::EMPTY;
        let mut parts = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let class = self.vertices().difference(self.neighbors(v));
            for u in class.iter() {
                let other = self.vertices().difference(self.neighbors(u));
                if other != class {
                    return None;
                }
            }
            seen = seen.union(class);
            parts.push(class.len());
        }
        Some(PartitionSpec::new(parts).expect("parts are positive"))
    }

    pub fn is_complete_multipartite(&self) -> bool {
        self.complete_multipartite_parts().is_some()
    }
}

/// A multiset of positive part sizes, kept sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<PartitionSpec> {
        if parts.is_empty() {
            return Err(Error::Partition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Partition("part sizes must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSpec { parts })
    }

    /// Parses a comma-separated list such as `2,1,1`.
    pub fn parse(text: &str) -> Result<PartitionSpec> {
        let parts = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Partition(format!("bad part size {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionSpec::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of(n: usize) -> Vec<PartitionSpec> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionSpec>) {
            if rest == 0 {
                out.push(PartitionSpec { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&text.join(","))
    }
}

/// `n = parts * q + rem` with `0 <= rem < parts`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranDecomposition {
    pub n: u64,
    pub parts: u64,
    pub q: u64,
    pub rem: u64,
}

impl TuranDecomposition {
    pub fn new(n: u64, parts: u64) -> Result<TuranDecomposition> {
        if parts == 0 {
            return Err(Error::InvalidArgument("Turán graph needs at least one part".into()));
        }
        Ok(TuranDecomposition {
            n,
            parts,
            q: n / parts,
            rem: n % parts,
        })
    }

    /// Part sizes, largest first, with empty parts dropped.
    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![(self.q + 1) as usize; self.rem as usize];
        if self.q > 0 {
            sizes.extend(std::iter::repeat(self.q as usize).take((self.parts - self.rem) as usize));
        }
        sizes
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Edge count of the Turán graph `T_r(n)`.
pub fn turan_edges(n: u64, r: u64) -> Result<u64> {
    let d = TuranDecomposition::new(n, r)?;
    Ok(choose2(n) - d.rem * choose2(d.q + 1) - (r - d.rem) * choose2(d.q))
}

/// The balanced complete `r`-partite graph on `n` vertices. Parts occupy
/// consecutive vertex blocks, larger parts first.
pub fn turan_graph(n: usize, r: usize) -> Result<SmallGraph> {
    if r == 0 || r > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!("part count {r} outside 1..=16")));
    }
    SmallGraph::check_order(n)?;
    let d = TuranDecomposition::new(n as u64, r as u64)?;
    complete_multipartite(&PartitionSpec::new(d.part_sizes())?)
}

/// Complete multipartite graph; parts occupy consecutive vertex blocks in
/// the descending order of `parts`.
pub fn complete_multipartite(parts: &PartitionSpec) -> Result<SmallGraph> {
    let n = parts.total();
    SmallGraph::check_order(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.parts().iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    let mut rows = [0u16; MAX_VERTICES];
    for u in 0..n {
        for v in 0..n {
            if part_of[u] != part_of[v] {
                rows[u] |= 1 << v;
            }
        }
    }
    Ok(SmallGraph::from_rows_unchecked(n, rows))
}
