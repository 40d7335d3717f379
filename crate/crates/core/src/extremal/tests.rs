use super::*;
use crate::constructions::{clique, complete_bipartite, cycle, star, two_cliques};
use crate::graphs::{EdgeKey, VertexSet};
use crate::Rational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `ex` by trying every sub-multiset.
fn brute_ex(g: &MultiHypergraph, p: &Pattern) -> u64 {
    let classes: Vec<(EdgeKey, u32)> = g.edges().map(|(k, m)| (k.clone(), m)).collect();
    let mut keep = vec![0u32; classes.len()];
    let mut best = 0;
    loop {
        let mut f = MultiHypergraph::new(g.n()).unwrap();
        for ((k, _), &c) in classes.iter().zip(&keep) {
            if c > 0 {
                f.add_key(k.clone(), c).unwrap();
            }
        }
        if !p.family_contains(&f) {
            best = best.max(f.edge_count());
        }
        let mut i = 0;
        while i < keep.len() && keep[i] == classes[i].1 {
            keep[i] = 0;
            i += 1;
        }
        if i == keep.len() {
            return best;
        }
        keep[i] += 1;
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, max_mult: u32) -> MultiHypergraph {
    let mut g = MultiHypergraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(&[u, v], rng.gen_range(1..=max_mult)).unwrap();
            }
        }
    }
    g
}

fn ex(g: &MultiHypergraph, p: &Pattern) -> u64 {
    ex_exact(g, p, Budget::UNLIMITED).unwrap().value
}

#[test]
fn documented_values() {
    assert_eq!(ex(&clique(4), &Pattern::Clique(3)), 4);
    assert_eq!(ex(&star(5), &Pattern::Clique(3)), 5);
    // K_6 minus a triangle.
    let mut g = clique(6);
    for k in [EdgeKey::pair(0, 1), EdgeKey::pair(1, 2), EdgeKey::pair(0, 2)] {
        g.remove_copy(&k);
    }
    assert_eq!(ex(&g, &Pattern::EvenCycles), 7);
    assert_eq!(brute_ex(&g, &Pattern::EvenCycles), 7);

    assert_eq!(ex_cycles(&clique(4)).unwrap().value, 3);
    assert_eq!(ex_cycles(&two_cliques(3)).unwrap().value, 4);
    let mut g = MultiHypergraph::from_pairs(3, &[(1, 2)]);
    g.add_edge(&[0, 1], 2).unwrap();
    assert_eq!(ex_cycles(&g).unwrap().value, 3);
    assert_eq!(ex_generic(&g, &Pattern::AllCycles, Budget::UNLIMITED).value, 3);
    let mut looped = g.clone();
    looped.add_edge(&[2, 2], 1).unwrap();
    assert_eq!(ex_cycles(&looped).unwrap_err(), crate::Error::LoopsPresent);

    let r = ex_p1p2(&two_cliques(7), Budget::UNLIMITED).unwrap();
    assert_eq!((r.value, r.method), (6, Method::P1P2Formula));
    assert_eq!(ex_p1p2(&star(9), Budget::UNLIMITED).unwrap().value, 9);
    // P_1 ∪ P_2 needs five vertices, so K_4 is free.
    let r = ex_p1p2(&clique(4), Budget::UNLIMITED).unwrap();
    assert_eq!((r.value, r.method), (6, Method::Generic));
    assert_eq!(brute_ex(&clique(4), &Pattern::StarUnionEdge), 6);
    let r = ex_p1p2(&cycle(5), Budget::UNLIMITED).unwrap();
    assert_eq!(r.value, brute_ex(&cycle(5), &Pattern::StarUnionEdge));
}

#[test]
fn oneuniform_formula_examples() {
    let (r, tp) = ex_oneuniform(&[3, 2, 1], &[2, 2]);
    assert_eq!((r.value, tp), (5, 2));
    assert_eq!(r.witness.loop_counts(), vec![3, 1, 1]);
    assert_eq!(ex_oneuniform(&[5], &[2, 2]).0.value, 5);
    assert_eq!(ex_oneuniform(&[1, 1, 1], &[2, 1]).0.value, 3);
}

#[test]
fn witnesses_are_free_and_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let pats = [
        Pattern::Clique(3),
        Pattern::Path(2),
        Pattern::Path(3),
        Pattern::StarUnionEdge,
        Pattern::P3K3,
        Pattern::AllCycles,
        Pattern::EvenCycles,
        Pattern::OddCycles,
    ];
    for _ in 0..120 {
        let n = rng.gen_range(2..=6);
        let mult = if rng.gen_bool(0.3) { 2 } else { 1 };
        let g = random_graph(&mut rng, n, 0.5, mult);
        if g.edges().map(|(_, m)| m as u64 + 1).product::<u64>() > 5000 {
            continue;
        }
        for p in &pats {
            let r = ex_exact(&g, p, Budget::UNLIMITED).unwrap();
            assert!(r.complete);
            assert_eq!(r.witness.edge_count(), r.value);
            assert!(r.witness.is_subgraph_of(&g));
            assert!(is_free(&r.witness, p), "{p} witness {:?}", r.witness);
            assert_eq!(r.value, brute_ex(&g, p), "{p} on {g:?}");
        }
    }
}

#[test]
fn fast_paths_match_generic() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n, 0.45, 1);
        for p in [
            Pattern::Path(3),
            Pattern::P3K3,
            Pattern::StarUnionEdge,
            Pattern::AllCycles,
        ] {
            let fast = ex_exact(&g, &p, Budget::UNLIMITED).unwrap();
            let slow = ex_generic(&g, &p, Budget::UNLIMITED);
            assert_eq!(fast.value, slow.value, "{p} on {g:?}");
        }
    }
}

#[test]
fn dumbbell_closed_form_matches_generic() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..150 {
        let n = rng.gen_range(2..=5);
        let mut g = random_graph(&mut rng, n, 0.6, 2);
        for v in 0..n {
            if rng.gen_bool(0.6) {
                g.add_edge(&[v], rng.gen_range(1..=2)).unwrap();
            }
        }
        let fast = ex_dumbbell(&g).unwrap();
        assert!(is_free(&fast.witness, &Pattern::Dumbbell(2)));
        assert_eq!(
            fast.value,
            ex_generic(&g, &Pattern::Dumbbell(2), Budget::UNLIMITED).value
        );
    }
    // t = s = 1 on three vertices: one or two looped vertices both give 4.
    assert_eq!(dumbbell_uniform_ex(3, 1, 1), (4, 1));
    let mut g = clique(3);
    for v in 0..3 {
        g.add_edge(&[v], 1).unwrap();
    }
    assert_eq!(brute_ex(&g, &Pattern::Dumbbell(2)), 4);
}

#[test]
fn decision_variant_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.5, 2);
        let p = Pattern::Clique(3);
        let value = ex_generic(&g, &p, Budget::UNLIMITED).value;
        let t = p.tester();
        for target in [value.saturating_sub(1), value, value + 1] {
            let (d, _) = ex_at_least(&g, &t, target, Budget::UNLIMITED);
            match d {
                Decision::Yes(w) => {
                    assert!(target <= value);
                    assert!(w.edge_count() >= target && is_free(&w, &p));
                }
                Decision::No => assert!(target > value),
                Decision::Unknown => unreachable!(),
            }
        }
    }
}

#[test]
fn budget_exhaustion_is_flagged() {
    let r = ex_generic(&clique(9), &Pattern::Clique(4), Budget::nodes(10));
    assert!(!r.complete);
    assert!(is_free(&r.witness, &Pattern::Clique(4)));
    assert_eq!(r.witness.edge_count(), r.value);
}

#[test]
fn matching_degree_bound() {
    // e(G) <= (Δ + 1)·M(G) on random graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p, 1);
        let delta = g.max_degree();
        assert!(g.edge_count() <= (delta + 1) * matching_number(&g) as u64);
    }
}

#[test]
fn turan_sizes() {
    assert_eq!(turan_graph_size(5, 3).unwrap(), 6);
    assert_eq!(turan_graph_size(4, 4).unwrap(), 5);
    assert_eq!(turan_graph_size(2, 3).unwrap(), 1);
    for n in 1..=8 {
        for t in 3..=6 {
            let g = turan_graph(n, t).unwrap();
            assert_eq!(g.edge_count(), turan_graph_size(n, t).unwrap());
            assert!(is_free(&g, &Pattern::Clique(t)));
            if n <= 7 {
                assert_eq!(ex(&clique(n), &Pattern::Clique(t)), g.edge_count());
            }
        }
    }
    assert!(turan_graph_size(3, 2).is_err());
}

#[test]
fn averaging_examples() {
    let p = Pattern::Clique(3);
    let table = clique_table(&p, 6, Budget::UNLIMITED).unwrap();
    assert_eq!(averaging_bound(&clique(5), &p, &table).unwrap(), 6);
    let mut g = clique(5);
    g.remove_copy(&EdgeKey::pair(0, 1));
    assert_eq!(averaging_bound(&g, &p, &table).unwrap(), 6);
    assert_eq!(ex(&g, &p), 6);
    assert_eq!(
        averaging_bound(&MultiHypergraph::new(3).unwrap(), &p, &table).unwrap(),
        0
    );
    assert_eq!(
        averaging_bound(&clique(8), &p, &table),
        Err(crate::Error::MissingTableEntry(8))
    );
}

#[test]
fn cover_numbers() {
    let r = |num: i64, den: i64| Rational::new(num.into(), den.into());
    assert_eq!(fractional_cover_number(&clique(2)).unwrap(), Rational::one());
    assert_eq!(fractional_cover_number(&clique(3)).unwrap(), r(3, 2));
    assert_eq!(fractional_cover_number(&cycle(4)).unwrap(), r(2, 1));
    assert_eq!(fractional_cover_number(&star(4)).unwrap(), r(4, 1));
    assert_eq!(fractional_cover_number(&complete_bipartite(2, 3)).unwrap(), r(3, 1));
    assert_eq!(genupper_exponent(&cycle(4)).unwrap(), r(3, 2));
    assert_eq!(genupper_exponent(&clique(3)).unwrap(), r(4, 3));
    assert!(matches!(
        genupper_exponent(&clique(2)),
        Err(crate::Error::Inapplicable(_))
    ));
}

/// Every feasible point of the cover program is at least the reported
/// optimum; checked on a grid of halves.
#[test]
fn cover_number_is_a_minimum() {
    let h = crate::constructions::path(3);
    let rho = fractional_cover_number(&h).unwrap();
    let edges: Vec<VertexSet> = h.edges().map(|(k, _)| k.vertex_set()).collect();
    let steps = [0i64, 1, 2];
    for a in steps {
        for b in steps {
            for c in steps {
                let phi = [a, b, c];
                let covered = (0..h.n()).all(|v| {
                    edges
                        .iter()
                        .zip(&phi)
                        .filter(|(e, _)| e.contains(v))
                        .map(|(_, x)| *x)
                        .sum::<i64>()
                        >= 2
                });
                if covered {
                    assert!(Rational::new((a + b + c).into(), 2.into()) >= rho);
                }
            }
        }
    }
    assert_eq!(rho, Rational::from_integer(2.into()));
}
