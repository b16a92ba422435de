use num_bigint::BigUint;
use orientcount::canon::{canonical_form, canonical_graph};
use orientcount::count::{count_backtrack, count_naive, count_via_independent_set, extension_vector};
use orientcount::graph::{turan_edges, turan_graph};
use orientcount::norm::holder_check;
use orientcount::symmetrize::{eccentric_vertices, symmetrization_sequence, twins};
use orientcount::tournament::pair_count;
use orientcount::{graph6, ForbiddenFamily, SmallGraph, Tournament, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut p = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[p] {
                        edges.push((u, v));
                    }
                    p += 1;
                }
            }
            SmallGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (SmallGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn tournament(min_k: usize, max_k: usize) -> impl Strategy<Value = Tournament> {
    (min_k..=max_k).prop_flat_map(|k| {
        let m = pair_count(k);
        any::<u128>().prop_map(move |c| Tournament::from_code(k, if m == 0 { 0 } else { c & ((1u128 << m) - 1) }))
    })
}

fn family() -> impl Strategy<Value = ForbiddenFamily> {
    proptest::sample::select(ForbiddenFamily::builtin())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph(16)) {
        let code = graph6::encode(&g);
        prop_assert!(code.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&code).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in graph_with_perm(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }

    #[test]
    fn counts_are_relabeling_invariant((g, perm) in graph_with_perm(7), f in family()) {
        prop_assert_eq!(count_backtrack(&g, &f).unwrap(), count_backtrack(&g.relabel(&perm), &f).unwrap());
    }

    #[test]
    fn backtrack_matches_naive(g in graph(7), f in family()) {
        prop_assume!(g.m() <= 18);
        prop_assert_eq!(count_backtrack(&g, &f).unwrap(), count_naive(&g, &f).unwrap());
    }

    #[test]
    fn product_matches_backtrack(g in graph(8), f in family(), pick in any::<usize>()) {
        let sets = g.maximal_independent_sets();
        let s = sets[pick % sets.len()];
        prop_assert_eq!(count_via_independent_set(&g, &f, s).unwrap(), count_backtrack(&g, &f).unwrap());
    }

    #[test]
    fn counts_respect_family_inclusion(g in graph(7)) {
        // Strongly connected tournaments are non-transitive and have no source.
        let s4 = count_backtrack(&g, &ForbiddenFamily::StronglyConnected(4)).unwrap();
        prop_assert!(count_backtrack(&g, &ForbiddenFamily::NonTransitive(4)).unwrap() <= s4);
        prop_assert!(count_backtrack(&g, &ForbiddenFamily::NoSource(4)).unwrap() <= s4.clone());
        prop_assert!(s4 <= BigUint::from(1u8) << g.m());
        prop_assert!(count_backtrack(&g, &ForbiddenFamily::CyclicTriangle).unwrap() >= BigUint::from(1u8));
    }

    #[test]
    fn extension_vector_length_is_base_count(g in graph(7), base in any::<u16>(), pick in any::<usize>()) {
        let base = VertexSet(base).intersection(g.vertices());
        let outside = g.vertices().difference(base).to_vec();
        prop_assume!(!outside.is_empty() && !base.is_empty());
        let v = outside[pick % outside.len()];
        let f = ForbiddenFamily::StronglyConnected(4);
        let x = extension_vector(&g, base, v, &f).unwrap();
        let h = g.induced(base).unwrap();
        prop_assert_eq!(BigUint::from(x.entries.len()), count_backtrack(&h, &f).unwrap());
        let cap = 1u64 << g.neighbors(v).intersection(base).len();
        prop_assert!(x.entries.iter().all(|&e| e <= cap));
    }

    #[test]
    fn hamilton_paths_are_valid(t in tournament(1, 12)) {
        let path = t.hamilton_path();
        prop_assert_eq!(path.len(), t.order());
        prop_assert!(path.windows(2).all(|w| t.beats(w[0], w[1])));
        let seen: VertexSet = path.iter().copied().collect();
        prop_assert_eq!(seen, VertexSet::full(t.order()));
    }

    #[test]
    fn cycles_exist_iff_strongly_connected(t in tournament(2, 10)) {
        match t.hamilton_cycle() {
            Ok(c) => {
                prop_assert!(t.is_strongly_connected());
                prop_assert_eq!(c.len(), t.order());
                for i in 0..c.len() {
                    prop_assert!(t.beats(c[i], c[(i + 1) % c.len()]));
                }
            }
            Err(_) => prop_assert!(!t.is_strongly_connected()),
        }
    }

    #[test]
    fn chains_are_strongly_connected(t in tournament(3, 9)) {
        prop_assume!(t.is_strongly_connected());
        let chain = t.sc_subtournament_chain().unwrap();
        prop_assert!(chain.keys().copied().eq(3..=t.order()));
        for (&l, &set) in &chain {
            prop_assert_eq!(set.len(), l);
            prop_assert!(t.sub(set).is_strongly_connected());
        }
    }

    #[test]
    fn holder_is_exact(vectors in (1usize..=4, 1usize..=8).prop_flat_map(|(s, len)| {
        proptest::collection::vec(proptest::collection::vec(0u64..20, len), s)
    })) {
        let c = holder_check(&vectors).unwrap();
        prop_assert!(c.holds);
        prop_assert!(c.consistent());
    }

    #[test]
    fn symmetrization_ends_multipartite(g in graph(10)) {
        let trace = symmetrization_sequence(&g);
        prop_assert!(trace.final_is_complete_multipartite);
        prop_assert!(trace.edge_count_nondecreasing);
        prop_assert!(trace.eccentric_count_decreasing);
        prop_assert!(trace.steps.len() <= g.n());
        let fin = graph6::decode(&trace.final_graph).unwrap();
        prop_assert!(eccentric_vertices(&fin).is_empty());
    }

    #[test]
    fn twins_are_symmetric(g in graph(8)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(twins(&g, u, v), twins(&g, v, u));
            }
        }
    }

    #[test]
    fn turan_graph_matches_formula(n in 1usize..=16, r in 1usize..=16) {
        let t = turan_graph(n, r).unwrap();
        prop_assert_eq!(t.m() as u64, turan_edges(n as u64, r as u64).unwrap());
        prop_assert!(t.is_complete_multipartite());
        prop_assert!(t.clique_number() <= r);
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let g = SmallGraph::complete(7).unwrap();
    let f = ForbiddenFamily::StronglyConnected(4);
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| count_backtrack(&g, &f).unwrap())
    };
    let one = run(1);
    assert_eq!(run(3), one);
    assert_eq!(run(4), one);
}
