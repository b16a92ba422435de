//! Independent oracles: closed formulas, textbook recurrences, and a
//! brute-force orientation checker that shares no code with the library's
//! tournament predicates.

use num_bigint::BigUint;
use orientcount::canon::enumerate_graphs;
use orientcount::count::{count_backtrack, count_naive, extension_count_edge, extension_count_vertex};
use orientcount::graph::{turan_edges, turan_graph};
use orientcount::tournament::count_sc_orientations;
use orientcount::{graph6, ForbiddenFamily, SmallGraph, Tournament, VertexSet};

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strong tournaments by the classical recurrence
/// `s(n) = T(n) - sum_{k<n} C(n,k) s(k) T(n-k)`, `T(n) = 2^C(n,2)`.
fn strong_tournaments(n: u64) -> u64 {
    let t = |m: u64| 1u64 << binom(m, 2);
    let mut s = vec![0u64; n as usize + 1];
    for m in 1..=n {
        let below: u64 = (1..m).map(|k| binom(m, k) * s[k as usize] * t(m - k)).sum();
        s[m as usize] = t(m) - below;
    }
    s[n as usize]
}

/// Reachability matrix of a tournament given as `beats[u][v]`, by
/// Floyd-Warshall closure.
fn closure(beats: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let k = beats.len();
    let mut r = beats.to_vec();
    for w in 0..k {
        for u in 0..k {
            for v in 0..k {
                r[u][v] = r[u][v] || (r[u][w] && r[w][v]);
            }
        }
    }
    r
}

#[derive(Clone, Copy)]
enum Kind {
    Strong(usize),
    NonTransitive(usize),
    NoSource(usize),
}

fn kind(family: &ForbiddenFamily) -> Kind {
    match family {
        ForbiddenFamily::StronglyConnected(k) => Kind::Strong(*k),
        ForbiddenFamily::CyclicTriangle => Kind::Strong(3),
        ForbiddenFamily::NonTransitive(k) => Kind::NonTransitive(*k),
        ForbiddenFamily::NoSource(k) => Kind::NoSource(*k),
        ForbiddenFamily::Explicit { .. } => unreachable!(),
    }
}

fn forbidden(beats: &[Vec<bool>], kind: Kind) -> bool {
    let k = beats.len();
    match kind {
        Kind::Strong(_) => closure(beats).iter().flatten().all(|&x| x),
        // Transitive iff no directed cycle iff the closure is irreflexive.
        Kind::NonTransitive(_) => (0..k).any(|v| closure(beats)[v][v]),
        Kind::NoSource(_) => !(0..k).any(|v| (0..k).all(|w| w == v || beats[v][w])),
    }
}

fn order(kind: Kind) -> usize {
    match kind {
        Kind::Strong(k) | Kind::NonTransitive(k) | Kind::NoSource(k) => k,
    }
}

/// Counts orientations by checking every `k`-subset of every orientation.
fn brute_force(g: &SmallGraph, family: &ForbiddenFamily) -> u64 {
    let n = g.n();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| g.adjacent(u, v))
        .collect();
    let kind = kind(family);
    let k = order(kind);
    let subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s: &Vec<usize>| s.iter().all(|&a| s.iter().all(|&b| a == b || g.adjacent(a, b))))
        .collect();
    let mut total = 0;
    for mask in 0u64..1 << edges.len() {
        let mut beats = vec![vec![false; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                beats[u][v] = true;
            } else {
                beats[v][u] = true;
            }
        }
        let bad = subsets.iter().any(|s| {
            let local: Vec<Vec<bool>> = s.iter().map(|&a| s.iter().map(|&b| beats[a][b]).collect()).collect();
            forbidden(&local, kind)
        });
        if !bad {
            total += 1;
        }
    }
    total
}

#[test]
fn strong_tournament_counts_match_recurrence() {
    for k in 3..=6 {
        assert_eq!(count_sc_orientations(k).unwrap(), strong_tournaments(k as u64), "k = {k}");
    }
    assert_eq!(strong_tournaments(5), 544);
}

#[test]
fn engine_matches_brute_force_on_all_small_graphs() {
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            for family in ForbiddenFamily::builtin() {
                let expected = BigUint::from(brute_force(&g, &family));
                assert_eq!(count_backtrack(&g, &family).unwrap(), expected, "{} {family}", graph6::encode(&g));
            }
        }
    }
}

#[test]
fn complete_graph_counts_match_closed_forms() {
    let factorial = |k: u64| (1..=k).product::<u64>();
    for k in 3..=6usize {
        let kk = SmallGraph::complete(k).unwrap();
        let all = 1u64 << binom(k as u64, 2);
        // Only transitive tournaments avoid cyclic triangles.
        assert_eq!(count_backtrack(&kk, &ForbiddenFamily::CyclicTriangle).unwrap(), BigUint::from(factorial(k as u64)));
        if k >= 4 {
            assert_eq!(
                count_backtrack(&kk, &ForbiddenFamily::NonTransitive(k)).unwrap(),
                BigUint::from(factorial(k as u64))
            );
            assert_eq!(
                count_backtrack(&kk, &ForbiddenFamily::StronglyConnected(k)).unwrap(),
                BigUint::from(all - strong_tournaments(k as u64))
            );
            // A source is unique, so there are k * 2^C(k-1,2) tournaments with one.
            let with_source = k as u64 * (1u64 << binom(k as u64 - 1, 2));
            assert_eq!(
                count_backtrack(&kk, &ForbiddenFamily::NoSource(k)).unwrap(),
                BigUint::from(with_source)
            );
        }
    }
}

#[test]
fn s4_on_k5_matches_triangle_decomposition() {
    // 120 transitive orientations plus, per cyclic triangle, six completions.
    let expected = 120 + binom(5, 2) * 2 * 6;
    let k5 = SmallGraph::complete(5).unwrap();
    assert_eq!(count_naive(&k5, &ForbiddenFamily::StronglyConnected(4)).unwrap(), BigUint::from(expected));
}

#[test]
fn turan_numbers_match_brute_force_maxima() {
    // Turán's theorem: the largest K_{r+1}-free graph on n vertices.
    for n in 1..=7usize {
        let graphs = enumerate_graphs(n).unwrap();
        for r in 1..=4usize {
            let best = graphs.iter().filter(|g| g.clique_number() <= r).map(|g| g.m()).max().unwrap();
            assert_eq!(best as u64, turan_edges(n as u64, r as u64).unwrap(), "n = {n}, r = {r}");
            assert_eq!(turan_graph(n, r).unwrap().m(), best);
        }
    }
}

#[test]
fn vertex_extension_matches_brute_force() {
    let family = ForbiddenFamily::StronglyConnected(4);
    for code in 0..64u128 {
        let t = Tournament::from_code(4, code);
        for pattern in 0..16u16 {
            let p = VertexSet(pattern);
            let mut edges: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
            edges.extend(p.iter().map(|w| (w, 4)));
            let g = SmallGraph::from_edges(5, &edges).unwrap();
            // Count orientations of the new edges, clique edges fixed by t.
            let new: Vec<usize> = p.to_vec();
            let mut expected = 0;
            for mask in 0u32..1 << new.len() {
                let mut beats: Vec<Vec<bool>> = (0..5).map(|i| (0..5).map(|j| i < 4 && j < 4 && i != j && t.beats(i, j)).collect()).collect();
                for (b, &w) in new.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        beats[w][4] = true;
                    } else {
                        beats[4][w] = true;
                    }
                }
                let ok = (0u32..32).filter(|m| m.count_ones() == 4).all(|m| {
                    let s: Vec<usize> = (0..5).filter(|&v| m >> v & 1 == 1).collect();
                    let clique = s.iter().all(|&a| s.iter().all(|&b| a == b || g.adjacent(a, b)));
                    !clique || !forbidden(&s.iter().map(|&a| s.iter().map(|&b| beats[a][b]).collect()).collect::<Vec<_>>(), Kind::Strong(4))
                });
                expected += ok as u64;
            }
            assert_eq!(extension_count_vertex(&t, p, &family).unwrap(), expected, "code {code} pattern {pattern:b}");
        }
    }
}

#[test]
fn edge_extension_matches_brute_force() {
    let family = ForbiddenFamily::StronglyConnected(4);
    for code in 0..8u128 {
        let t = Tournament::from_code(3, code);
        let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2), (3, 4)];
        edges.extend((0..3).flat_map(|w| [(w, 3), (w, 4)]));
        let g = SmallGraph::from_edges(5, &edges).unwrap();
        let mut fixed = 0u128;
        let mut bits_t = 0u128;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let e = g.edge_index(i, j).unwrap();
            fixed |= 1 << e;
            bits_t |= (t.beats(i, j) as u128) << e;
        }
        let expected = (0..1u128 << g.m())
            .filter(|&b| b & fixed == bits_t)
            .filter(|&b| {
                let mut beats = vec![vec![false; 5]; 5];
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    let (u, v) = (u as usize, v as usize);
                    if b >> e & 1 == 1 {
                        beats[u][v] = true;
                    } else {
                        beats[v][u] = true;
                    }
                }
                g.cliques_of_size(4).iter().all(|c| {
                    let s = c.to_vec();
                    !forbidden(&s.iter().map(|&a| s.iter().map(|&b| beats[a][b]).collect()).collect::<Vec<_>>(), Kind::Strong(4))
                })
            })
            .count() as u64;
        assert_eq!(extension_count_edge(&t, &family).unwrap(), expected, "code {code}");
    }
}
