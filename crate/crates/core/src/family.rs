//! Forbidden families of tournaments.

use std::fmt;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};
use crate::tournament::{as_tournament, pair_count, parse_orientation_text, Orientation, Tournament};

/// Largest order for which explicit members are matched by relabeling.
pub const MAX_EXPLICIT_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenFamily {
    /// All strongly connected tournaments on `k` vertices.
    StronglyConnected(usize),
    /// All non-transitive tournaments on `k` vertices.
    NonTransitive(usize),
    /// All tournaments on `k` vertices without a source.
    NoSource(usize),
    /// The cyclic triangle; the same family as `StronglyConnected(3)`.
    CyclicTriangle,
    /// An explicit list, stored as sorted canonical codes.
    Explicit { k: usize, members: Vec<u128> },
}

fn check_order(k: usize) -> Result<()> {
    if !(3..=16).contains(&k) {
        return Err(Error::InvalidArgument(format!("forbidden tournament order {k} outside 3..=16")));
    }
    Ok(())
}

/// Smallest code over all relabelings; the isomorphism class key.
pub fn canonical_code(t: &Tournament) -> u128 {
    let k = t.order();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut best = t.code();
    // Heap's algorithm over all k! relabelings.
    let mut c = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(t.relabel(&perm).code());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

impl ForbiddenFamily {
    pub fn strongly_connected(k: usize) -> Result<Self> {
        check_order(k)?;
        Ok(ForbiddenFamily::StronglyConnected(k))
    }

    pub fn non_transitive(k: usize) -> Result<Self> {
        check_order(k)?;
        Ok(ForbiddenFamily::NonTransitive(k))
    }

    pub fn no_source(k: usize) -> Result<Self> {
        check_order(k)?;
        Ok(ForbiddenFamily::NoSource(k))
    }

    /// Deduplicates members up to isomorphism.
    pub fn explicit(members: &[Tournament]) -> Result<Self> {
        let k = members
            .first()
            .ok_or_else(|| Error::InvalidArgument("explicit family needs at least one member".into()))?
            .order();
        check_order(k)?;
        if k > MAX_EXPLICIT_ORDER {
            return Err(Error::Budget {
                what: "explicit family order",
                value: k as u64,
                limit: MAX_EXPLICIT_ORDER as u64,
                hint: "",
            });
        }
        if let Some(t) = members.iter().find(|t| t.order() != k) {
            return Err(Error::InvalidArgument(format!(
                "explicit family mixes orders {k} and {}",
                t.order()
            )));
        }
        let mut codes: Vec<u128> = members.iter().map(canonical_code).collect();
        codes.sort_unstable();
        codes.dedup();
        Ok(ForbiddenFamily::Explicit { k, members: codes })
    }

    /// Reads tournaments in orientation text form (`graph6:hex`, one per
    /// line, each an orientation of a complete graph).
    pub fn read_explicit<R: BufRead>(reader: R) -> Result<Self> {
        let mut members = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (graph, bits) = parse_orientation_text(line)?;
            if graph.m() != pair_count(graph.n()) {
                return Err(Error::OrientationText(format!("{line:?} is not a tournament")));
            }
            members.push(as_tournament(&Orientation::new(&graph, bits)?)?);
        }
        Self::explicit(&members)
    }

    /// Parses CLI names: `s<k>`, `r<k>`, `u<k>`, `c3`. Explicit families
    /// are loaded with [`ForbiddenFamily::read_explicit`].
    pub fn parse(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        if lower == "c3" {
            return Ok(ForbiddenFamily::CyclicTriangle);
        }
        let unknown = || Error::UnknownFamily(name.to_string());
        let (tag, order) = lower.split_at(lower.char_indices().nth(1).map_or(lower.len(), |(i, _)| i));
        let k: usize = order.parse().map_err(|_| unknown())?;
        match tag {
            "s" => Self::strongly_connected(k),
            "r" => Self::non_transitive(k),
            "u" => Self::no_source(k),
            _ => Err(unknown()),
        }
    }

    /// Order of the forbidden tournaments.
    pub fn order(&self) -> usize {
        match self {
            ForbiddenFamily::StronglyConnected(k)
            | ForbiddenFamily::NonTransitive(k)
            | ForbiddenFamily::NoSource(k) => *k,
            ForbiddenFamily::CyclicTriangle => 3,
            ForbiddenFamily::Explicit { k, .. } => *k,
        }
    }

    pub fn forbids(&self, t: &Tournament) -> bool {
        if t.order() != self.order() {
            return false;
        }
        match self {
            ForbiddenFamily::StronglyConnected(_) | ForbiddenFamily::CyclicTriangle => t.is_strongly_connected(),
            ForbiddenFamily::NonTransitive(_) => !t.is_transitive(),
            ForbiddenFamily::NoSource(_) => !t.has_source(),
            ForbiddenFamily::Explicit { members, .. } => members.binary_search(&canonical_code(t)).is_ok(),
        }
    }

    /// True when no member has a source vertex.
    pub fn is_source_free(&self) -> bool {
        match self {
            ForbiddenFamily::StronglyConnected(_) | ForbiddenFamily::CyclicTriangle | ForbiddenFamily::NoSource(_) => {
                true
            }
            ForbiddenFamily::NonTransitive(_) => false,
            ForbiddenFamily::Explicit { k, members } => {
                members.iter().all(|&c| !Tournament::from_code(*k, c).has_source())
            }
        }
    }

    /// Short name used in reports.
    pub fn descriptor(&self) -> String {
        match self {
            ForbiddenFamily::StronglyConnected(k) => format!("s{k}"),
            ForbiddenFamily::NonTransitive(k) => format!("r{k}"),
            ForbiddenFamily::NoSource(k) => format!("u{k}"),
            ForbiddenFamily::CyclicTriangle => "c3".into(),
            ForbiddenFamily::Explicit { k, members } => format!("explicit{k}x{}", members.len()),
        }
    }

    /// The five families exercised by the exhaustive suites.
    pub fn builtin() -> Vec<ForbiddenFamily> {
        vec![
            ForbiddenFamily::StronglyConnected(4),
            ForbiddenFamily::StronglyConnected(5),
            ForbiddenFamily::NonTransitive(4),
            ForbiddenFamily::NoSource(4),
            ForbiddenFamily::CyclicTriangle,
        ]
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// True iff no `k`-clique of the graph induces a forbidden tournament.
/// Cliques are checked in ascending lexicographic order, stopping at the
/// first violation.
pub fn is_family_free(o: &Orientation<'_>, family: &ForbiddenFamily) -> bool {
    let cliques = o.graph().cliques_of_size(family.order());
    is_free_on(o, family, &cliques)
}

/// [`is_family_free`] with the clique list supplied by the caller.
pub fn is_free_on(o: &Orientation<'_>, family: &ForbiddenFamily, cliques: &[VertexSet]) -> bool {
    cliques.iter().all(|&c| {
        let t = crate::tournament::induced_subtournament(o, c).expect("clique list belongs to the graph");
        !family.forbids(&t)
    })
}

/// Convenience for complete graphs: is this tournament family-free?
pub fn tournament_is_free(t: &Tournament, family: &ForbiddenFamily) -> bool {
    let g = SmallGraph::complete(t.order().max(1)).expect("order within range");
    let o = Orientation::new(&g, t.code()).expect("code fits the edge count");
    is_family_free(&o, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;

    #[test]
    fn parse_names() {
        assert_eq!(ForbiddenFamily::parse("s4").unwrap(), ForbiddenFamily::StronglyConnected(4));
        assert_eq!(ForbiddenFamily::parse("R5").unwrap(), ForbiddenFamily::NonTransitive(5));
        assert_eq!(ForbiddenFamily::parse("u4").unwrap(), ForbiddenFamily::NoSource(4));
        assert_eq!(ForbiddenFamily::parse("c3").unwrap(), ForbiddenFamily::CyclicTriangle);
        assert!(ForbiddenFamily::parse("s2").is_err());
        assert!(ForbiddenFamily::parse("x4").is_err());
        assert!(ForbiddenFamily::parse("").is_err());
        assert!(ForbiddenFamily::parse("s").is_err());
        for f in ForbiddenFamily::builtin() {
            assert_eq!(ForbiddenFamily::parse(&f.descriptor()).unwrap(), f);
        }
    }

    #[test]
    fn cyclic_triangle_matches_s3() {
        for c in 0..8 {
            let t = Tournament::from_code(3, c);
            assert_eq!(
                ForbiddenFamily::CyclicTriangle.forbids(&t),
                ForbiddenFamily::StronglyConnected(3).forbids(&t)
            );
        }
    }

    #[test]
    fn free_examples() {
        let k5 = SmallGraph::complete(5).unwrap();
        let s4 = ForbiddenFamily::StronglyConnected(4);
        assert!(is_family_free(&Orientation::ascending(&k5), &s4));
        let t = turan_graph(6, 3).unwrap();
        for bits in [0u128, 0xfff, 0x5a5] {
            assert!(is_family_free(&Orientation::new(&t, bits).unwrap(), &s4));
        }
        let k4 = SmallGraph::complete(4).unwrap();
        let free = (0..64u128)
            .filter(|&b| is_family_free(&Orientation::new(&k4, b).unwrap(), &s4))
            .count();
        assert_eq!(free, 40);
    }

    #[test]
    fn explicit_family_matches_up_to_isomorphism() {
        let sc: Vec<Tournament> = (0..64)
            .map(|c| Tournament::from_code(4, c))
            .filter(Tournament::is_strongly_connected)
            .collect();
        let fam = ForbiddenFamily::explicit(&sc).unwrap();
        // One isomorphism class of strongly connected 4-tournaments.
        assert!(matches!(&fam, ForbiddenFamily::Explicit { members, .. } if members.len() == 1));
        for c in 0..64 {
            let t = Tournament::from_code(4, c);
            assert_eq!(fam.forbids(&t), t.is_strongly_connected());
        }
        assert!(fam.is_source_free());
        assert!(ForbiddenFamily::explicit(&[]).is_err());
        assert!(ForbiddenFamily::explicit(&[Tournament::transitive(3), Tournament::transitive(4)]).is_err());
    }

    #[test]
    fn explicit_family_from_text() {
        let text = "# cyclic triangle\nBw:5\n\nBw:2\n";
        let fam = ForbiddenFamily::read_explicit(text.as_bytes()).unwrap();
        assert_eq!(fam.order(), 3);
        for c in 0..8 {
            let t = Tournament::from_code(3, c);
            assert_eq!(fam.forbids(&t), t.is_strongly_connected());
        }
        assert!(ForbiddenFamily::read_explicit("Bo:1\n".as_bytes()).is_err());
    }

    #[test]
    fn canonical_codes_agree_on_isomorphic_tournaments() {
        let classes: std::collections::BTreeSet<u128> =
            (0..1024).map(|c| canonical_code(&Tournament::from_code(5, c))).collect();
        // There are 12 non-isomorphic tournaments on five vertices.
        assert_eq!(classes.len(), 12);
        let classes4: std::collections::BTreeSet<u128> =
            (0..64).map(|c| canonical_code(&Tournament::from_code(4, c))).collect();
        assert_eq!(classes4.len(), 4);
    }

    #[test]
    fn source_freeness() {
        assert!(ForbiddenFamily::StronglyConnected(5).is_source_free());
        assert!(ForbiddenFamily::NoSource(4).is_source_free());
        assert!(!ForbiddenFamily::NonTransitive(4).is_source_free());
    }
}
