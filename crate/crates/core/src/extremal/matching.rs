use std::collections::HashMap;

use crate::graphs::{MultiHypergraph, VertexSet};

/// A maximum matching of the underlying simple graph of the 2-edges of
/// `g`, by memoized branching on a minimum-degree vertex.
pub fn maximum_matching(g: &MultiHypergraph) -> Vec<(usize, usize)> {
    let adj = g.adjacency();
    let mut memo = HashMap::new();
    let full = VertexSet::full(g.n());
    size(&adj, full, &mut memo);
    let mut out = Vec::new();
    let mut s = full;
    while let Some((v, choice)) = pick(&adj, s, &mut memo) {
        match choice {
            Some(u) => {
                out.push((v.min(u), v.max(u)));
                s = s.without(v).without(u);
            }
            None => s = s.without(v),
        }
    }
    out
}

/// The matching number `M(g)`.
pub fn matching_number(g: &MultiHypergraph) -> usize {
    let adj = g.adjacency();
    size(&adj, VertexSet::full(g.n()), &mut HashMap::new())
}

fn branch_vertex(adj: &[VertexSet], s: VertexSet) -> Option<usize> {
    s.iter()
        .filter(|&v| !adj[v].intersection(s).is_empty())
        .min_by_key(|&v| adj[v].intersection(s).len())
}

fn size(adj: &[VertexSet], s: VertexSet, memo: &mut HashMap<u64, usize>) -> usize {
    let Some(v) = branch_vertex(adj, s) else { return 0 };
    if let Some(&m) = memo.get(&s.0) {
        return m;
    }
    let nb = adj[v].intersection(s);
    let mut best = 0;
    for u in nb {
        best = best.max(1 + size(adj, s.without(v).without(u), memo));
    }
    // A vertex of degree one is matched in some maximum matching.
    if nb.len() > 1 {
        best = best.max(size(adj, s.without(v), memo));
    }
    memo.insert(s.0, best);
    best
}

fn pick(adj: &[VertexSet], s: VertexSet, memo: &mut HashMap<u64, usize>) -> Option<(usize, Option<usize>)> {
    let v = branch_vertex(adj, s)?;
    let target = size(adj, s, memo);
    for u in adj[v].intersection(s) {
        if 1 + size(adj, s.without(v).without(u), memo) == target {
            return Some((v, Some(u)));
        }
    }
    Some((v, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{clique, cycle, path, star, two_cliques};

    fn brute(g: &MultiHypergraph) -> usize {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|(k, _)| k.len() == 2 && !k.has_repeat())
            .map(|(k, _)| (k.vertex(0), k.vertex(1)))
            .collect();
        let mut best = 0;
        for mask in 0u32..1 << edges.len() {
            let mut used = VertexSet::EMPTY;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used.contains(u) || used.contains(v) {
                        ok = false;
                        break;
                    }
                    used = used.with(u).with(v);
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn known_values() {
        assert_eq!(matching_number(&two_cliques(7)), 6);
        assert_eq!(matching_number(&star(9)), 1);
        assert_eq!(matching_number(&clique(4)), 2);
        assert_eq!(matching_number(&cycle(7)), 3);
        assert_eq!(matching_number(&path(5)), 3);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.7);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        pairs.push((u, v));
                    }
                }
            }
            if pairs.len() > 16 {
                pairs.truncate(16);
            }
            let g = MultiHypergraph::from_pairs(n, &pairs);
            let m = maximum_matching(&g);
            assert_eq!(m.len(), brute(&g));
            assert_eq!(m.len(), matching_number(&g));
            let covered: VertexSet = m.iter().flat_map(|&(u, v)| [u, v]).collect();
            assert_eq!(covered.len(), 2 * m.len());
            assert!(m.iter().all(|&(u, v)| pairs.contains(&(u, v))));
        }
    }
}
