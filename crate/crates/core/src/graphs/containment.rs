//! Subgraph containment with joint multiplicity demand.
//!
//! A pattern `H` is contained in a host `G` when some injective map of
//! `V(H)` into `V(G)` sends every pattern edge key to a host key whose
//! multiplicity is at least the pattern's. Two parallel pattern edges
//! therefore need a host edge of multiplicity two.

use super::{EdgeKey, IndexedGraph, MultiHypergraph, VertexSet};

#[derive(Clone, Debug)]
struct Step {
    vertex: usize,
    back_nbrs: Vec<usize>,
    needs_loop1: bool,
    min_nbrs: usize,
    pairs: Vec<(usize, u32)>,
    checks: Vec<(EdgeKey, u32)>,
}

/// A pattern compiled for a fixed vertex order.
#[derive(Clone, Debug)]
struct Plan {
    steps: Vec<Step>,
    /// Pattern vertices that are pinned by an anchor, in step order.
    pinned: usize,
}

impl Plan {
    fn compile(h: &MultiHypergraph, seeds: &[usize]) -> Plan {
        let hn = h.n();
        let adj = h.adjacency();
        let mut order: Vec<usize> = Vec::with_capacity(hn);
        let mut placed = VertexSet::EMPTY;
        for &s in seeds {
            if !placed.contains(s) {
                order.push(s);
                placed.insert(s);
            }
        }
        let pinned = order.len();
        while order.len() < hn {
            let next = (0..hn)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| {
                    let back = adj[v].intersection(placed).len();
                    let touches = h
                        .edges()
                        .filter(|(k, _)| k.contains_vertex(v))
                        .filter(|(k, _)| k.vertices().any(|u| placed.contains(u)))
                        .count();
                    (back, touches, adj[v].len(), std::cmp::Reverse(v))
                })
                .unwrap();
            order.push(next);
            placed.insert(next);
        }
        let mut pos = vec![0; hn];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut steps: Vec<Step> = order
            .iter()
            .map(|&v| Step {
                vertex: v,
                back_nbrs: Vec::new(),
                needs_loop1: false,
                min_nbrs: adj[v].len(),
                pairs: Vec::new(),
                checks: Vec::new(),
            })
            .collect();
        for (k, m) in h.edges() {
            let last = k.vertices().map(|v| pos[v]).max().unwrap();
            let step = &mut steps[last];
            match k.len() {
                1 => step.needs_loop1 = true,
                2 if k.vertex(0) != k.vertex(1) => {
                    let other = if k.vertex(0) == step.vertex {
                        k.vertex(1)
                    } else {
                        k.vertex(0)
                    };
                    step.back_nbrs.push(other);
                    if m > 1 {
                        step.pairs.push((other, m));
                    }
                    continue;
                }
                _ => {}
            }
            step.checks.push((k.clone(), m));
        }
        Plan { steps, pinned }
    }

    fn run(&self, g: &IndexedGraph, map: &mut [usize], used: VertexSet, i: usize) -> bool {
        if i == self.steps.len() {
            return true;
        }
        let step = &self.steps[i];
        let mut cand = if i < self.pinned {
            VertexSet::singleton(map[step.vertex])
        } else {
            VertexSet::full(g.n()).difference(used)
        };
        for &b in &step.back_nbrs {
            cand = cand.intersection(g.nbrs(map[b]));
        }
        if step.needs_loop1 {
            cand = cand.intersection(g.looped());
        }
        for c in cand {
            if g.nbrs(c).len() < step.min_nbrs {
                continue;
            }
            map[step.vertex] = c;
            if step.pairs.iter().any(|&(b, m)| g.pair_mult(map[b], c) < m) {
                continue;
            }
            if step.checks.iter().any(|(k, m)| g.multiplicity(&k.map(|v| map[v])) < *m) {
                continue;
            }
            if self.run(g, map, used.with(c), i + 1) {
                return true;
            }
        }
        false
    }
}

/// A pattern graph prepared for repeated containment queries, including
/// queries anchored at a specific host edge.
#[derive(Clone, Debug)]
pub struct Matcher {
    pattern: MultiHypergraph,
    full: Plan,
    anchored: Vec<(EdgeKey, Plan)>,
}

impl Matcher {
    pub fn new(pattern: &MultiHypergraph) -> Matcher {
        let full = Plan::compile(pattern, &[]);
        let anchored = pattern
            .edges()
            .map(|(k, _)| {
                let seeds: Vec<usize> = k.vertices().collect();
                (k.clone(), Plan::compile(pattern, &seeds))
            })
            .collect();
        Matcher {
            pattern: pattern.clone(),
            full,
            anchored,
        }
    }

    pub fn pattern(&self) -> &MultiHypergraph {
        &self.pattern
    }

    /// Some embedding of the pattern into `g`, as `map[pattern vertex]`.
    pub fn find(&self, g: &IndexedGraph) -> Option<Vec<usize>> {
        if self.pattern.n() > g.n() || self.pattern.edge_count() > g.total() {
            return None;
        }
        let mut map = vec![usize::MAX; self.pattern.n()];
        self.full.run(g, &mut map, VertexSet::EMPTY, 0).then_some(map)
    }

    pub fn is_contained(&self, g: &IndexedGraph) -> bool {
        self.find(g).is_some()
    }

    /// Whether `g` contains the pattern through an embedding that sends some
    /// pattern edge onto the host key `key`. If `g` minus one copy of `key`
    /// is pattern-free, this decides containment in `g`.
    pub fn is_contained_at(&self, g: &IndexedGraph, key: &EdgeKey) -> bool {
        if self.pattern.n() > g.n() || self.pattern.edge_count() > g.total() {
            return false;
        }
        let target = key.as_bytes();
        for (pk, plan) in &self.anchored {
            if pk.len() != key.len() {
                continue;
            }
            let mut perm: Vec<u8> = target.to_vec();
            loop {
                if let Some(map) = pin(pk, &perm, self.pattern.n()) {
                    let mut map = map;
                    let used: VertexSet = perm.iter().map(|&b| b as usize).collect();
                    if plan.run(g, &mut map, used, 0) {
                        return true;
                    }
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        false
    }
}

/// Assigns the positions of `pk` to host vertices `perm`, failing when the
/// multiset structures disagree.
fn pin(pk: &EdgeKey, perm: &[u8], hn: usize) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; hn];
    for (i, &h) in perm.iter().enumerate() {
        let p = pk.vertex(i);
        let h = h as usize;
        if map[p] == usize::MAX {
            if map.contains(&h) {
                return None;
            }
            map[p] = h;
        } else if map[p] != h {
            return None;
        }
    }
    Some(map)
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Whether `g` contains `h` as a subgraph (joint multiplicity demand).
pub fn contains(g: &MultiHypergraph, h: &MultiHypergraph) -> bool {
    if h.n() > g.n() {
        return false;
    }
    Matcher::new(h).is_contained(&IndexedGraph::from_graph(g))
}
