//! Canonical forms and isomorph-free generation.
//!
//! The certificate of a graph is the lexicographically smallest upper-triangle
//! bitstring (column-major, the graph6 bit order) over all vertex
//! relabelings. It is found by a level-wise search over partial labelings:
//! placing vertex `j` fixes the block of bits `(0, j) .. (j-1, j)`, so only
//! partial labelings whose prefix is minimal survive each level. Twins are
//! interchangeable, so only one member of each twin class is tried at a
//! given position.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    /// Bit `C(n,2) - 1 - p` holds the `p`-th column-major pair of the
    /// minimizing labeling, so integer order is lexicographic order.
    pub cert: u128,
}

/// For each vertex, the twin class it belongs to (its smallest member).
fn twin_classes(g: &SmallGraph) -> Vec<usize> {
    let n = g.n();
    let mut class: Vec<usize> = (0..n).collect();
    for u in 0..n {
        if class[u] != u {
            continue;
        }
        for (v, c) in class.iter_mut().enumerate().skip(u + 1) {
            let nu = g.neighbors(u).difference(VertexSet::singleton(v));
            let nv = g.neighbors(v).difference(VertexSet::singleton(u));
            if nu == nv {
                *c = u;
            }
        }
    }
    class
}

/// Returns the certificate and an ordering `order[pos] = vertex` achieving it.
pub fn canonical_labeling(g: &SmallGraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let class = twin_classes(g);

    let candidates = |used: VertexSet| -> Vec<usize> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in g.vertices().difference(used).iter() {
            if !seen.contains(class[v]) {
                seen.insert(class[v]);
                out.push(v);
            }
        }
        out
    };

    let mut level: Vec<(Vec<usize>, VertexSet)> = candidates(VertexSet::EMPTY)
        .into_iter()
        .map(|v| (vec![v], VertexSet::singleton(v)))
        .collect();
    let mut cert: u128 = 0;

    for pos in 1..n {
        let mut best: Option<u32> = None;
        let mut next = Vec::new();
        for (order, used) in &level {
            for v in candidates(*used) {
                let mut block = 0u32;
                for &u in order {
                    block = block << 1 | g.adjacent(u, v) as u32;
                }
                match best {
                    Some(b) if block > b => continue,
                    Some(b) if block < b => next.clear(),
                    _ => {}
                }
                best = Some(block);
                let mut o = order.clone();
                o.push(v);
                let mut s = *used;
                s.insert(v);
                next.push((o, s));
            }
        }
        cert = cert << pos | best.expect("a candidate exists at every level") as u128;
        level = next;
    }

    let order = level.swap_remove(0).0;
    (CanonicalForm { n: n as u8, cert }, order)
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    let (_, order) = canonical_labeling(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn is_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by certificate.
///
/// Generation is by vertex augmentation: every child obtained by attaching
/// a new vertex to a representative on `n - 1` vertices is canonicalized,
/// and duplicates are rejected.
pub fn enumerate_graphs(n: usize) -> Result<Vec<SmallGraph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Budget {
            what: "enumeration order",
            value: n as u64,
            limit: MAX_ENUMERATION_ORDER as u64,
            hint: "; supply a graph6 stream instead",
        });
    }
    let mut level = vec![SmallGraph::empty(1)?];
    for order in 2..=n {
        let mut children: BTreeMap<CanonicalForm, SmallGraph> = BTreeMap::new();
        for parent in &level {
            for mask in 0..1u16 << (order - 1) {
                let child = parent.with_vertex(VertexSet(mask))?;
                let (form, _) = canonical_labeling(&child);
                children.entry(form).or_insert_with(|| canonical_graph(&child));
            }
        }
        level = children.into_values().collect();
    }
    Ok(level)
}
