use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::VertexSet;
use crate::error::{Error, Result};

/// Largest supported vertex count. Adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

/// A sorted vertex multiset identifying an edge class.
///
/// `[3]` is a 1-uniform loop at vertex 3, `[3, 3]` is the size-2 loop produced
/// by contracting an edge, `[0, 1]` is an ordinary edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey(SmallVec<[u8; 4]>);

impl EdgeKey {
    pub fn new(vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyEdge);
        }
        let mut v: SmallVec<[u8; 4]> = SmallVec::with_capacity(vertices.len());
        for &x in vertices {
            if x >= MAX_VERTICES {
                return Err(Error::TooManyVertices(x + 1));
            }
            v.push(x as u8);
        }
        v.sort_unstable();
        Ok(EdgeKey(v))
    }

    /// Two-vertex key; `u == v` gives a size-2 loop.
    #[inline]
    pub fn pair(u: usize, v: usize) -> Self {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        EdgeKey(SmallVec::from_slice(&[a as u8, b as u8]))
    }

    #[inline]
    pub fn loop1(v: usize) -> Self {
        EdgeKey(SmallVec::from_slice(&[v as u8]))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Whether some vertex occurs more than once.
    pub fn has_repeat(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.contains(&(v as u8))
    }

    /// Number of occurrences of `v` in the multiset.
    pub fn count(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x as usize == v).count()
    }

    /// Applies a vertex map and re-sorts.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> EdgeKey {
        let mut v: SmallVec<[u8; 4]> = self.0.iter().map(|&x| f(x as usize) as u8).collect();
        v.sort_unstable();
        EdgeKey(v)
    }

    /// Multiset intersection.
    pub fn intersect(&self, other: &EdgeKey) -> EdgeKey {
        let (mut i, mut j) = (0, 0);
        let mut out = SmallVec::new();
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        EdgeKey(out)
    }

    pub(crate) fn from_sorted_bytes(bytes: &[u8]) -> EdgeKey {
        EdgeKey(SmallVec::from_slice(bytes))
    }
}

impl fmt::Debug for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Vertices `0..n` plus a multiset of edges of arbitrary sizes.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiHypergraph {
    n: usize,
    edges: BTreeMap<EdgeKey, u32>,
}

impl MultiHypergraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(MultiHypergraph {
            n,
            edges: BTreeMap::new(),
        })
    }

    /// Builds a graph from `(vertices, multiplicity)` pairs.
    pub fn from_edges<'a, I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [usize], u32)>,
    {
        let mut g = Self::new(n)?;
        for (vs, m) in edges {
            g.add_edge(vs, m)?;
        }
        Ok(g)
    }

    /// Simple 2-uniform graph from a pair list. Panics on out-of-range input;
    /// meant for literals in constructions and tests.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n).expect("vertex cap");
        for &(u, v) in pairs {
            g.add_edge(&[u, v], 1).expect("valid pair");
        }
        g
    }

    pub fn add_edge(&mut self, vertices: &[usize], mult: u32) -> Result<()> {
        if mult == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let key = EdgeKey::new(vertices)?;
        *self.edges.entry(key).or_insert(0) += mult;
        Ok(())
    }

    pub fn add_key(&mut self, key: EdgeKey, mult: u32) -> Result<()> {
        if mult == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        if let Some(v) = key.vertices().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        *self.edges.entry(key).or_insert(0) += mult;
        Ok(())
    }

    /// Removes one copy of `key`; returns false if absent.
    pub fn remove_copy(&mut self, key: &EdgeKey) -> bool {
        match self.edges.get_mut(key) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.edges.remove(key);
                true
            }
            None => false,
        }
    }

    /// Grows the vertex set to `n` (new vertices are isolated).
    pub fn extend_vertices(&mut self, n: usize) -> Result<()> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        self.n = self.n.max(n);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// e(G): edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().map(|&m| m as u64).sum()
    }

    /// e_i(G): edges of multiset size `i`, counted with multiplicity.
    pub fn edge_count_of_size(&self, i: usize) -> u64 {
        self.edges
            .iter()
            .filter(|(k, _)| k.len() == i)
            .map(|(_, &m)| m as u64)
            .sum()
    }

    /// Number of distinct edge classes.
    pub fn class_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, key: &EdgeKey) -> u32 {
        self.edges.get(key).copied().unwrap_or(0)
    }

    /// Edge classes in canonical key order.
    pub fn edges(&self) -> impl Iterator<Item = (&EdgeKey, u32)> + '_ {
        self.edges.iter().map(|(k, &m)| (k, m))
    }

    /// Every edge copy, in key order.
    pub fn edge_copies(&self) -> impl Iterator<Item = &EdgeKey> + '_ {
        self.edges
            .iter()
            .flat_map(|(k, &m)| std::iter::repeat(k).take(m as usize))
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|(k, &m)| m == 1 && !k.has_repeat())
    }

    /// Sizes of edges present, ascending.
    pub fn edge_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.edges.keys().map(|k| k.len()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// `Some(r)` when every edge has size `r` (vacuously `None` for no edges).
    pub fn uniformity(&self) -> Option<usize> {
        match self.edge_sizes().as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    pub fn is_two_uniform(&self) -> bool {
        self.edges.keys().all(|k| k.len() == 2)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.keys().any(|k| k.has_repeat() || k.len() == 1)
    }

    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.keys().fold(VertexSet::EMPTY, |s, k| s.union(k.vertex_set()))
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.covered_vertices().len() < self.n
    }

    /// Drops isolated vertices, relabelling the rest in increasing order.
    /// Returns the new graph and the old-to-new map (`usize::MAX` for dropped).
    pub fn without_isolated(&self) -> (MultiHypergraph, Vec<usize>) {
        let covered = self.covered_vertices();
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if covered.contains(v) {
                map[v] = next;
                next += 1;
            }
        }
        let mut g = MultiHypergraph {
            n: next,
            edges: BTreeMap::new(),
        };
        for (k, m) in self.edges() {
            g.edges.insert(k.map(|v| map[v]), m);
        }
        (g, map)
    }

    /// Applies the relabelling `v -> perm[v]` (a permutation of `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> MultiHypergraph {
        let mut g = MultiHypergraph {
            n: self.n,
            edges: BTreeMap::new(),
        };
        for (k, m) in self.edges() {
            *g.edges.entry(k.map(|v| perm[v])).or_insert(0) += m;
        }
        g
    }

    /// Subgraph on the same vertex set keeping `keep[i]` copies of the i-th class.
    pub fn with_multiplicities(&self, keep: &[u32]) -> MultiHypergraph {
        let mut g = MultiHypergraph {
            n: self.n,
            edges: BTreeMap::new(),
        };
        for ((k, _), &c) in self.edges.iter().zip(keep) {
            if c > 0 {
                g.edges.insert(k.clone(), c);
            }
        }
        g
    }

    /// Whether `self` is a sub-multigraph of `other` on the same labels.
    pub fn is_subgraph_of(&self, other: &MultiHypergraph) -> bool {
        self.edges.iter().all(|(k, &m)| other.multiplicity(k) >= m)
    }

    /// Disjoint union; `other` is shifted past `self`'s vertices.
    pub fn disjoint_union(&self, other: &MultiHypergraph) -> Result<MultiHypergraph> {
        let mut g = MultiHypergraph::new(self.n + other.n)?;
        g.edges = self.edges.clone();
        for (k, m) in other.edges() {
            g.edges.insert(k.map(|v| v + self.n), m);
        }
        Ok(g)
    }

    /// Degree of `v` counting each edge copy once per occurrence of `v`.
    pub fn degree(&self, v: usize) -> u64 {
        self.edges.iter().map(|(k, &m)| k.count(v) as u64 * m as u64).sum()
    }

    /// Number of 1-uniform loops at each vertex.
    pub fn loop_counts(&self) -> Vec<u32> {
        let mut c = vec![0; self.n];
        for (k, m) in self.edges() {
            if k.len() == 1 {
                c[k.vertex(0)] += m;
            }
        }
        c
    }

    /// Neighbourhood rows of the underlying simple graph of the 2-edges
    /// with distinct endpoints.
    pub fn adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for k in self.edges.keys() {
            if k.len() == 2 && k.vertex(0) != k.vertex(1) {
                let (u, v) = (k.vertex(0), k.vertex(1));
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        adj
    }

    /// Maximum degree in the 2-uniform part, with multiplicity.
    pub fn max_degree(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

impl fmt::Debug for MultiHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}; ", self.n)?;
        for (i, (k, m)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if m == 1 {
                write!(f, "{k:?}")?;
            } else {
                write!(f, "{k:?}x{m}")?;
            }
        }
        f.write_str(")")
    }
}
