use std::collections::VecDeque;

use super::{EdgeKey, MultiHypergraph, VertexSet};
use crate::{Error, Result};

/// Contracts the vertices of `i` into one new vertex.
///
/// Vertices outside `i` keep their relative order and the new vertex `z`
/// gets the last index. Every occurrence of an `i`-vertex inside an edge is
/// replaced by `z`, so a 2-edge inside `i` becomes the loop `{z, z}`.
pub fn contract(g: &MultiHypergraph, i: VertexSet) -> Result<MultiHypergraph> {
    if i.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = i.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let z = g.n() - i.len();
    let mut map = vec![z; g.n()];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if !i.contains(v) {
            *slot = next;
            next += 1;
        }
    }
    let mut out = MultiHypergraph::new(z + 1)?;
    for (k, m) in g.edges() {
        out.add_key(k.map(|v| map[v]), m)?;
    }
    Ok(out)
}

/// The graph simplifications that preserve vertex sets and containment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Simplify {
    UnderlyingSimple,
    ComponentClosure,
    DistanceClosure(usize),
}

impl Simplify {
    pub fn apply(self, g: &MultiHypergraph) -> Result<MultiHypergraph> {
        simplify(g, self)
    }
}

pub fn simplify(g: &MultiHypergraph, kind: Simplify) -> Result<MultiHypergraph> {
    if g.edges().any(|(k, _)| k.len() != 2) {
        return Err(Error::NotTwoUniform(" for simplification"));
    }
    let n = g.n();
    let adj = g.adjacency();
    let pairs: Vec<(usize, usize)> = match kind {
        Simplify::UnderlyingSimple => g
            .edges()
            .filter(|(k, _)| k.vertex(0) != k.vertex(1))
            .map(|(k, _)| (k.vertex(0), k.vertex(1)))
            .collect(),
        Simplify::ComponentClosure => {
            let dist = bfs_distances(&adj);
            close(n, |u, v| dist[u][v].is_some())
        }
        Simplify::DistanceClosure(t) => {
            if t < 1 {
                return Err(Error::InvalidArgument("distance closure needs t >= 1".into()));
            }
            let dist = bfs_distances(&adj);
            close(n, |u, v| dist[u][v].is_some_and(|d| d <= t))
        }
    };
    Ok(MultiHypergraph::from_pairs(n, &pairs))
}

fn close(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| keep(u, v))
        .collect()
}

/// All-pairs BFS distances over adjacency rows.
pub fn bfs_distances(adj: &[VertexSet]) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for w in adj[u] {
                    if d[w].is_none() {
                        d[w] = Some(d[u].unwrap() + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Connected components of the graph on `n` vertices where every edge
/// (of any size) joins all of its vertices.
pub fn components(g: &MultiHypergraph) -> Vec<VertexSet> {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, _) in g.edges() {
        let a = find(&mut parent, k.vertex(0));
        for v in k.vertices() {
            let b = find(&mut parent, v);
            parent[b] = a;
        }
    }
    let mut out: Vec<VertexSet> = Vec::new();
    let mut root_of = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let r = find(&mut parent, v);
        if root_of[r] == usize::MAX {
            root_of[r] = out.len();
            out.push(VertexSet::EMPTY);
        }
        out[root_of[r]].insert(v);
    }
    out
}

/// Whether the non-isolated part of `g` is connected.
pub fn is_connected(g: &MultiHypergraph) -> bool {
    let covered = g.covered_vertices();
    components(g)
        .into_iter()
        .filter(|c| !c.intersection(covered).is_empty())
        .count()
        <= 1
}

/// The common pairwise intersection of the edges of `h`, if they form a
/// sunflower. A single edge class of multiplicity one returns the edge.
pub fn is_sunflower(h: &MultiHypergraph) -> Option<VertexSet> {
    let copies: Vec<&EdgeKey> = h.edge_copies().collect();
    match copies.len() {
        0 => None,
        1 => Some(copies[0].vertex_set()),
        _ => {
            let core = copies[0].vertex_set().intersection(copies[1].vertex_set());
            for (a, ea) in copies.iter().enumerate() {
                for eb in &copies[a + 1..] {
                    if ea.vertex_set().intersection(eb.vertex_set()) != core {
                        return None;
                    }
                }
            }
            Some(core)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{canonical_form, contains};

    #[test]
    fn contraction_examples() {
        let e = MultiHypergraph::from_pairs(2, &[(0, 1)]);
        let c = contract(&e, VertexSet::singleton(0)).unwrap();
        assert_eq!(canonical_form(&c), canonical_form(&e));

        let two = MultiHypergraph::from_pairs(4, &[(0, 1), (2, 3)]);
        let c = contract(&two, VertexSet::from_slice(&[0, 2])).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(
            canonical_form(&c),
            canonical_form(&MultiHypergraph::from_pairs(3, &[(0, 1), (1, 2)]))
        );

        let tri = MultiHypergraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
        let c = contract(&tri, VertexSet::from_slice(&[0, 2])).unwrap();
        assert_eq!(c.edge_count(), 3);
        assert_eq!(c.multiplicity(&EdgeKey::pair(0, 1)), 2);
        assert_eq!(c.multiplicity(&EdgeKey::pair(1, 1)), 1);

        assert_eq!(contract(&tri, VertexSet::EMPTY), Err(Error::EmptyVertexSet));
        assert!(contract(&tri, VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn simplification_examples() {
        let mut dbl = MultiHypergraph::new(2).unwrap();
        dbl.add_edge(&[0, 1], 2).unwrap();
        dbl.add_edge(&[1, 1], 1).unwrap();
        let s = simplify(&dbl, Simplify::UnderlyingSimple).unwrap();
        assert_eq!(s, MultiHypergraph::from_pairs(2, &[(0, 1)]));

        let p2 = MultiHypergraph::from_pairs(3, &[(0, 1), (1, 2)]);
        let s = simplify(&p2, Simplify::ComponentClosure).unwrap();
        assert_eq!(s.edge_count(), 3);

        let p3 = MultiHypergraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]);
        let s = simplify(&p3, Simplify::DistanceClosure(2)).unwrap();
        assert_eq!(s.edge_count(), 5);
        assert_eq!(s.multiplicity(&EdgeKey::pair(0, 3)), 0);
        assert!(simplify(&p3, Simplify::DistanceClosure(0)).is_err());
    }

    #[test]
    fn sunflower_cores() {
        let star = MultiHypergraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(is_sunflower(&star), Some(VertexSet::singleton(0)));
        let matching = MultiHypergraph::from_pairs(6, &[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(is_sunflower(&matching), Some(VertexSet::EMPTY));
        let tri = MultiHypergraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(is_sunflower(&tri), None);
        let mut dbl = MultiHypergraph::new(2).unwrap();
        dbl.add_edge(&[0, 1], 3).unwrap();
        assert_eq!(is_sunflower(&dbl), Some(VertexSet::from_slice(&[0, 1])));
        dbl.add_edge(&[0], 1).unwrap();
        assert_eq!(is_sunflower(&dbl), None);
    }

    #[test]
    fn simplifications_preserve_containment() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..=7);
            let mut g = MultiHypergraph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(&[u, v], rng.gen_range(1..=3)).unwrap();
                    }
                }
            }
            let mut h = g.clone();
            let keys: Vec<EdgeKey> = g.edge_copies().cloned().collect();
            for k in keys {
                if rng.gen_bool(0.4) {
                    h.remove_copy(&k);
                }
            }
            for kind in [
                Simplify::UnderlyingSimple,
                Simplify::ComponentClosure,
                Simplify::DistanceClosure(1),
                Simplify::DistanceClosure(2),
            ] {
                let fh = simplify(&h, kind).unwrap();
                let fg = simplify(&g, kind).unwrap();
                assert!(fh.is_subgraph_of(&fg));
                assert!(contains(&fg, &fh));
            }
        }
    }
}
