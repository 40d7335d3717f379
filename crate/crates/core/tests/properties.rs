use inverse_turan::constructions::{clique, cycle, path};
use inverse_turan::extremal::{ex_exact, Budget};
use inverse_turan::graphs::{
    canonical_form, contains, contract, simplify, EdgeKey, IndexedGraph, MultiHypergraph, Simplify, VertexSet,
};
use inverse_turan::inverse::{enumerate_hosts, graph_from_json, inverse_search, verify_host, SearchSpace};
use inverse_turan::Pattern;
use proptest::prelude::*;

const U: Budget = Budget::UNLIMITED;

fn ex(g: &MultiHypergraph, p: &Pattern) -> u64 {
    ex_exact(g, p, U).unwrap().value
}

/// A multigraph on `n` vertices from per-pair multiplicities and loop counts.
fn build(n: usize, mults: &[u32], loops: &[u32]) -> MultiHypergraph {
    let mut g = MultiHypergraph::new(n).unwrap();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mults[i] > 0 {
                g.add_edge(&[u, v], mults[i]).unwrap();
            }
            i += 1;
        }
    }
    for (v, &l) in loops.iter().enumerate().take(n) {
        if l > 0 {
            g.add_edge(&[v], l).unwrap();
        }
    }
    g
}

fn multigraph(max_n: usize, max_mult: u32, with_loops: bool) -> impl Strategy<Value = MultiHypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        let loop_max: u32 = if with_loops { 2 } else { 0 };
        (
            prop::collection::vec(0..=max_mult, pairs),
            prop::collection::vec(0..=loop_max, n),
        )
            .prop_map(move |(m, l)| build(n, &m, &l))
    })
}

/// A sub-multigraph keeping `keep[i] mod (mult + 1)` copies of class `i`.
fn sub(g: &MultiHypergraph, keep: &[u32]) -> MultiHypergraph {
    let ks: Vec<u32> = g
        .edges()
        .zip(keep.iter().cycle())
        .map(|((_, m), &k)| k % (m + 1))
        .collect();
    g.with_multiplicities(&ks)
}

fn shuffle(n: usize, seed: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, seed[i] % (i + 1));
    }
    perm
}

const SIMPLE_PATTERNS: [fn() -> Pattern; 5] = [
    || Pattern::Clique(3),
    || Pattern::Path(3),
    || Pattern::AllCycles,
    || Pattern::EvenCycles,
    || Pattern::P3K3,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn contraction_keeps_edge_count(g in multigraph(7, 2, true), bits in 1u64..128) {
        let set = VertexSet(bits & VertexSet::full(g.n()).0);
        prop_assume!(!set.is_empty());
        let c = contract(&g, set).unwrap();
        prop_assert_eq!(c.edge_count(), g.edge_count());
        prop_assert_eq!(c.n(), g.n() - set.len() + 1);
    }

    #[test]
    fn canonical_form_ignores_labels(g in multigraph(7, 3, true), seed in prop::collection::vec(0usize..64, 7)) {
        let h = g.relabel(&shuffle(g.n(), &seed));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_form(&g).to_graph().unwrap().edge_count(), g.edge_count());
    }

    #[test]
    fn containment_is_reflexive_and_follows_subgraphs(
        g in multigraph(6, 2, true),
        keep in prop::collection::vec(0u32..3, 1..16),
        keep2 in prop::collection::vec(0u32..3, 1..16),
        seed in prop::collection::vec(0usize..64, 6),
    ) {
        prop_assert!(contains(&g, &g));
        let f = sub(&g, &keep);
        let h = sub(&f, &keep2).relabel(&shuffle(g.n(), &seed));
        prop_assert!(contains(&g, &f));
        prop_assert!(contains(&f, &h));
        prop_assert!(contains(&g, &h));
    }

    #[test]
    fn family_containment_is_monotone(g in multigraph(6, 2, false), keep in prop::collection::vec(0u32..3, 1..16)) {
        let f = sub(&g, &keep);
        for p in SIMPLE_PATTERNS {
            let t = p().tester();
            if t.contains(&IndexedGraph::from_graph(&f)) {
                prop_assert!(t.contains(&IndexedGraph::from_graph(&g)));
            }
        }
    }

    #[test]
    fn ex_is_monotone_and_bounded(g in multigraph(6, 2, false), keep in prop::collection::vec(0u32..3, 1..16)) {
        let f = sub(&g, &keep);
        for p in SIMPLE_PATTERNS {
            let p = p();
            let (a, b) = (ex(&f, &p), ex(&g, &p));
            prop_assert!(a <= b && b <= g.edge_count(), "{} {:?}", p, g);
        }
    }

    #[test]
    fn simplification_preserves_subgraphs(g in multigraph(7, 2, false), keep in prop::collection::vec(0u32..3, 1..22)) {
        let f = sub(&g, &keep);
        for kind in [Simplify::UnderlyingSimple, Simplify::ComponentClosure, Simplify::DistanceClosure(2)] {
            let (sf, sg) = (simplify(&f, kind).unwrap(), simplify(&g, kind).unwrap());
            prop_assert!(sf.edges().all(|(k, _)| sg.multiplicity(k) > 0));
        }
    }

    /// Adding an edge to a host with `ex >= k` keeps `ex >= k`, so pruned
    /// branches never hold valid hosts.
    #[test]
    fn pruning_is_downward_closed(g in multigraph(6, 1, false), u in 0usize..6, v in 0usize..6) {
        let k = 4;
        let p = Pattern::Clique(3);
        prop_assume!(ex(&g, &p) >= k && u != v && u.max(v) < g.n());
        let mut h = g.clone();
        h.add_key(EdgeKey::pair(u, v), 1).unwrap();
        prop_assert!(ex(&h, &p) >= k);
    }
}

#[test]
fn enumeration_counts_graphs_up_to_seven_vertices() {
    // Unlabeled graphs on n vertices, n = 1..7.
    let expected = [1, 2, 4, 11, 34, 156, 1044];
    for (n, want) in (1..=7).zip(expected) {
        let space = SearchSpace::simple(n, (n * (n - 1) / 2).max(1) as u64);
        assert_eq!(enumerate_hosts(&space).unwrap().len(), want, "n = {n}");
    }
}

/// Splitting each layer of a constant-multiplicity multigraph into its own
/// vertex-disjoint copy never increases `ex` for simple patterns.
#[test]
fn layer_decomposition() {
    let patterns = [
        Pattern::Finite(vec![clique(3)]),
        Pattern::Finite(vec![path(2)]),
        Pattern::Finite(vec![cycle(4)]),
    ];
    for g in enumerate_hosts(&SearchSpace::simple(5, 10)).unwrap() {
        for r in 1..=3u32 {
            let layered = g.with_multiplicities(&vec![r; g.class_count()]);
            let mut union = MultiHypergraph::default();
            for _ in 0..r {
                union = union.disjoint_union(&g).unwrap();
            }
            for p in &patterns {
                assert!(ex(&union, p) <= ex(&layered, p), "r = {r}, {p:?}, {g:?}");
            }
        }
    }
}

/// Searching with a compression map finds the uncompressed value, and
/// every split of a compressed maximizer has at least its `ex`.
#[test]
fn compression_is_sound() {
    let cases = [
        (Pattern::Clique(3), 5, Simplify::UnderlyingSimple, 6),
        (Pattern::AllCycles, 4, Simplify::ComponentClosure, 6),
        (Pattern::Path(3), 4, Simplify::DistanceClosure(3), 6),
    ];
    for (p, k, f, value) in cases {
        let space = SearchSpace::simple(2 * value as usize + 2, value + 1).with_compression(f);
        let r = inverse_search(&p, k, &space, U).unwrap();
        assert_eq!(r.best_value, Some(value), "{p}");
        for host in &r.hosts {
            let g = &host.graph;
            assert!(verify_host(&p, k, g, U).unwrap().passes);
            for z in 0..g.n() {
                for mask in 0u32..16 {
                    let Some(split) = split_vertex(g, z, mask) else {
                        continue;
                    };
                    let set = VertexSet::from_slice(&[z, g.n()]);
                    let img = simplify(&split, f).unwrap();
                    if !img.adjacency()[z].intersection(set).is_empty() {
                        continue;
                    }
                    assert_eq!(canonical_form(&contract(&split, set).unwrap()), canonical_form(g));
                    assert!(ex(&split, &p) >= ex(g, &p), "{p}: split {split:?}");
                }
            }
        }
    }
}

/// Moves the edges at `z` selected by `mask` to a new vertex.
fn split_vertex(g: &MultiHypergraph, z: usize, mask: u32) -> Option<MultiHypergraph> {
    let z2 = g.n();
    let mut out = MultiHypergraph::new(g.n() + 1).ok()?;
    let mut moved = 0;
    let mut i = 0;
    for (key, m) in g.edges() {
        let vs: Vec<usize> = key.vertices().collect();
        if vs.contains(&z) {
            if mask >> (i % 32) & 1 == 1 {
                let other = if vs[0] == z { vs[1] } else { vs[0] };
                out.add_edge(&[other, z2], m).ok()?;
                moved += 1;
            } else {
                out.add_edge(&vs, m).ok()?;
            }
            i += 1;
        } else {
            out.add_edge(&vs, m).ok()?;
        }
    }
    (moved > 0 && moved < i).then_some(out)
}

#[test]
fn searches_are_schedule_independent() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let r = inverse_search(&Pattern::Path(3), 4, &SearchSpace::simple(14, 7), U).unwrap();
            r.to_json(false).to_string()
        })
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(4));
}

#[test]
fn json_hosts_reverify() {
    for (p, k, space) in [
        (Pattern::EvenCycles, 5, SearchSpace::simple(14, 7)),
        (Pattern::Clique(3), 5, SearchSpace::multi(14, 7, 4)),
        (Pattern::Dumbbell(2), 4, SearchSpace::simple(10, 5).with_loops(1)),
    ] {
        let doc = inverse_search(&p, k, &space, U).unwrap().to_json(false);
        let best = doc["best_value"].as_u64().unwrap();
        let hosts = doc["hosts"].as_array().unwrap();
        assert!(!hosts.is_empty());
        for h in hosts {
            let g = graph_from_json(h["n"].as_u64().unwrap() as usize, &h["edges"]).unwrap();
            let rep = verify_host(&p, k, &g, U).unwrap();
            assert!(rep.passes);
            assert_eq!(rep.edges, best);
            assert_eq!(canonical_form(&g).to_hex(), h["canonical"].as_str().unwrap());
        }
    }
}
