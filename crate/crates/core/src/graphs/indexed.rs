use std::collections::BTreeMap;

use super::{EdgeKey, MultiHypergraph, VertexSet};

/// Mutable multigraph with O(1) multiplicity lookups for edges of size at
/// most two and word-parallel adjacency rows. Solvers keep their working
/// subgraph in this form.
#[derive(Clone, Debug)]
pub struct IndexedGraph {
    n: usize,
    adj: Vec<VertexSet>,
    pair: Vec<u32>,
    loop2: Vec<u32>,
    loop1: Vec<u32>,
    looped: VertexSet,
    higher: BTreeMap<EdgeKey, u32>,
    total: u64,
}

impl IndexedGraph {
    pub fn empty(n: usize) -> Self {
        IndexedGraph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            pair: vec![0; n * n],
            loop2: vec![0; n],
            loop1: vec![0; n],
            looped: VertexSet::EMPTY,
            higher: BTreeMap::new(),
            total: 0,
        }
    }

    pub fn from_graph(g: &MultiHypergraph) -> Self {
        let mut ig = Self::empty(g.n());
        for (k, m) in g.edges() {
            ig.add(k, m);
        }
        ig
    }

    pub fn to_graph(&self) -> MultiHypergraph {
        let mut g = MultiHypergraph::new(self.n).expect("within cap");
        for u in 0..self.n {
            if self.loop1[u] > 0 {
                g.add_key(EdgeKey::loop1(u), self.loop1[u]).unwrap();
            }
            if self.loop2[u] > 0 {
                g.add_key(EdgeKey::pair(u, u), self.loop2[u]).unwrap();
            }
            for v in u + 1..self.n {
                let m = self.pair[u * self.n + v];
                if m > 0 {
                    g.add_key(EdgeKey::pair(u, v), m).unwrap();
                }
            }
        }
        for (k, &m) in &self.higher {
            g.add_key(k.clone(), m).unwrap();
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Neighbours of `v` through 2-edges with distinct endpoints.
    #[inline]
    pub fn nbrs(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn pair_mult(&self, u: usize, v: usize) -> u32 {
        self.pair[u * self.n + v]
    }

    #[inline]
    pub fn loop1(&self, v: usize) -> u32 {
        self.loop1[v]
    }

    /// Vertices carrying at least one 1-uniform loop.
    #[inline]
    pub fn looped(&self) -> VertexSet {
        self.looped
    }

    pub fn loop1_counts(&self) -> &[u32] {
        &self.loop1
    }

    pub fn higher_edges(&self) -> impl Iterator<Item = (&EdgeKey, u32)> + '_ {
        self.higher.iter().map(|(k, &m)| (k, m))
    }

    pub fn has_loop2(&self) -> bool {
        self.loop2.iter().any(|&m| m > 0)
    }

    pub fn multiplicity(&self, key: &EdgeKey) -> u32 {
        match key.len() {
            1 => self.loop1[key.vertex(0)],
            2 => {
                let (u, v) = (key.vertex(0), key.vertex(1));
                if u == v {
                    self.loop2[u]
                } else {
                    self.pair[u * self.n + v]
                }
            }
            _ => self.higher.get(key).copied().unwrap_or(0),
        }
    }

    pub fn add(&mut self, key: &EdgeKey, m: u32) {
        if m == 0 {
            return;
        }
        self.total += m as u64;
        match key.len() {
            1 => {
                let v = key.vertex(0);
                self.loop1[v] += m;
                self.looped.insert(v);
            }
            2 => {
                let (u, v) = (key.vertex(0), key.vertex(1));
                if u == v {
                    self.loop2[u] += m;
                } else {
                    self.pair[u * self.n + v] += m;
                    self.pair[v * self.n + u] += m;
                    self.adj[u].insert(v);
                    self.adj[v].insert(u);
                }
            }
            _ => *self.higher.entry(key.clone()).or_insert(0) += m,
        }
    }

    pub fn remove(&mut self, key: &EdgeKey, m: u32) {
        if m == 0 {
            return;
        }
        self.total -= m as u64;
        match key.len() {
            1 => {
                let v = key.vertex(0);
                self.loop1[v] -= m;
                if self.loop1[v] == 0 {
                    self.looped.remove(v);
                }
            }
            2 => {
                let (u, v) = (key.vertex(0), key.vertex(1));
                if u == v {
                    self.loop2[u] -= m;
                } else {
                    self.pair[u * self.n + v] -= m;
                    self.pair[v * self.n + u] -= m;
                    if self.pair[u * self.n + v] == 0 {
                        self.adj[u].remove(v);
                        self.adj[v].remove(u);
                    }
                }
            }
            _ => {
                let e = self.higher.get_mut(key).expect("removing absent edge");
                *e -= m;
                if *e == 0 {
                    self.higher.remove(key);
                }
            }
        }
    }
}
