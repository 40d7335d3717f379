//! Canonical labelling by individualisation and refinement.
//!
//! The search tree is the usual one: refine an ordered partition of the
//! vertices to equitability (up to hashing), branch on the members of the first
//! non-singleton cell, and compare the relabelled edge lists at the leaves.
//! Automorphisms discovered at equal leaves prune siblings in the same orbit of
//! the subgroup fixing the current branch prefix.

use std::fmt;

use super::{EdgeKey, MultiHypergraph};
use crate::error::{Error, Result};

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        if s.len() % 2 != 0 {
            return Err(Error::InvalidArgument("odd-length hex string".into()));
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map(CanonicalForm)
            .map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    /// Rebuilds the canonically labelled representative.
    pub fn to_graph(&self) -> Result<MultiHypergraph> {
        let bad = || Error::InvalidArgument("malformed canonical form".into());
        let b = &self.0;
        let n = *b.first().ok_or_else(bad)? as usize;
        let mut g = MultiHypergraph::new(n)?;
        let mut i = 1;
        while i < b.len() {
            let len = b[i] as usize;
            let end = i + 1 + len + 4;
            if end > b.len() {
                return Err(bad());
            }
            let key = EdgeKey::from_sorted_bytes(&b[i + 1..i + 1 + len]);
            let m = u32::from_be_bytes(b[i + 1 + len..end].try_into().unwrap());
            g.add_key(key, m)?;
            i = end;
        }
        Ok(g)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A canonical form together with the labelling that produced it.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
}

pub fn canonical_form(g: &MultiHypergraph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &MultiHypergraph) -> Labeling {
    let mut s = Search::new(g);
    let n = g.n();
    let mut colors = s.initial_colors();
    s.refine(&mut colors);
    let mut prefix = Vec::with_capacity(n);
    s.search(colors, &mut prefix);
    let (enc, perm) = s.best.take().expect("search visits at least one leaf");
    Labeling {
        form: CanonicalForm(enc),
        perm,
    }
}

#[inline]
fn mix(mut x: u64) -> u64 {
    x ^= x >> 33;
    x = x.wrapping_mul(0xff51_afd7_ed55_8ccd);
    x ^= x >> 33;
    x = x.wrapping_mul(0xc4ce_b9fe_1a85_ec53);
    x ^= x >> 33;
    x
}

const MAX_STORED_AUTOS: usize = 128;

struct Search {
    n: usize,
    edges: Vec<(EdgeKey, u32)>,
    /// `w[u * n + v]`: hashed summary of edges through both `u` and `v`.
    w: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    vertex_inv: Vec<u64>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &MultiHypergraph) -> Self {
        let n = g.n();
        let edges: Vec<(EdgeKey, u32)> = g.edges().map(|(k, m)| (k.clone(), m)).collect();
        let mut w = vec![0u64; n * n];
        let mut vertex_inv = vec![0u64; n];
        for (k, m) in &edges {
            let len = k.len() as u64;
            let mut distinct: Vec<usize> = k.vertices().collect();
            distinct.dedup();
            for &u in &distinct {
                let cu = k.count(u) as u64;
                vertex_inv[u] = vertex_inv[u].wrapping_add(mix(len << 40 | cu << 32 | *m as u64));
                for &v in &distinct {
                    if u != v {
                        let cv = k.count(v) as u64;
                        let term = mix(0x9e37 << 48 | len << 40 | cu << 32 | cv << 24 | *m as u64);
                        w[u * n + v] = w[u * n + v].wrapping_add(term);
                    }
                }
            }
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| w[u * n + v] != 0).collect())
            .collect();
        Search {
            n,
            edges,
            w,
            nbrs,
            vertex_inv,
            best: None,
            first: None,
            autos: Vec::new(),
        }
    }

    fn initial_colors(&self) -> Vec<u32> {
        rank_by(self.n, |v| (0, self.vertex_inv[v]))
    }

    fn refine(&self, colors: &mut Vec<u32>) {
        let n = self.n;
        let mut cells = count_cells(colors);
        while cells < n {
            let h: Vec<u64> = (0..n)
                .map(|v| {
                    self.nbrs[v].iter().fold(0u64, |acc, &u| {
                        acc.wrapping_add(mix((colors[u] as u64) << 40 ^ self.w[v * n + u]))
                    })
                })
                .collect();
            let next = rank_by(n, |v| (colors[v], h[v]));
            let next_cells = count_cells(&next);
            *colors = next;
            if next_cells == cells {
                break;
            }
            cells = next_cells;
        }
    }

    fn search(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.n;
        let Some(target) = first_nonsingleton(&colors) else {
            self.leaf(colors.iter().map(|&c| c as usize).collect());
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = rank_by(n, |u| (colors[u], (u != v) as u64));
            self.refine(&mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut uf: Vec<usize> = (0..self.n).collect();
        let mut any = false;
        for g in &self.autos {
            if prefix.iter().all(|&p| g[p] == p) {
                any = true;
                for x in 0..self.n {
                    union(&mut uf, x, g[x]);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut uf, v);
        explored.iter().any(|&u| find(&mut uf, u) == rv)
    }

    fn encode(&self, perm: &[usize]) -> Vec<u8> {
        let mut relabeled: Vec<(EdgeKey, u32)> = self.edges.iter().map(|(k, m)| (k.map(|v| perm[v]), *m)).collect();
        relabeled.sort_unstable();
        let mut out = Vec::with_capacity(1 + relabeled.len() * 7);
        out.push(self.n as u8);
        for (k, m) in relabeled {
            out.push(k.len() as u8);
            out.extend_from_slice(k.as_bytes());
            out.extend_from_slice(&m.to_be_bytes());
        }
        out
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let enc = self.encode(&perm);
        let Some((first_enc, first_perm)) = &self.first else {
            self.first = Some((enc.clone(), perm.clone()));
            self.best = Some((enc, perm));
            return;
        };
        if enc == *first_enc {
            let auto = automorphism(first_perm, &perm);
            self.store_auto(auto);
            return;
        }
        let (best_enc, best_perm) = self.best.as_ref().unwrap();
        match enc.cmp(best_enc) {
            std::cmp::Ordering::Less => self.best = Some((enc, perm)),
            std::cmp::Ordering::Equal => {
                let auto = automorphism(best_perm, &perm);
                self.store_auto(auto);
            }
            std::cmp::Ordering::Greater => {}
        }
    }

    fn store_auto(&mut self, auto: Vec<usize>) {
        if self.autos.len() < MAX_STORED_AUTOS && auto.iter().enumerate().any(|(i, &j)| i != j) {
            self.autos.push(auto);
        }
    }
}

/// `lambda1^{-1} o lambda2`, an automorphism when both labellings give the same graph.
fn automorphism(lambda1: &[usize], lambda2: &[usize]) -> Vec<usize> {
    let n = lambda1.len();
    let mut inv = vec![0; n];
    for (v, &l) in lambda1.iter().enumerate() {
        inv[l] = v;
    }
    lambda2.iter().map(|&l| inv[l]).collect()
}

fn rank_by<K: Ord + Copy>(n: usize, key: impl Fn(usize) -> K) -> Vec<u32> {
    let mut order: Vec<(K, usize)> = (0..n).map(|v| (key(v), v)).collect();
    order.sort_unstable();
    let mut colors = vec![0u32; n];
    let mut rank = 0u32;
    for i in 0..n {
        if i > 0 && order[i].0 != order[i - 1].0 {
            rank = i as u32;
        }
        colors[order[i].1] = rank;
    }
    colors
}

fn count_cells(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Lowest color shared by at least two vertices.
fn first_nonsingleton(colors: &[u32]) -> Option<u32> {
    let mut counts = vec![0u32; colors.len()];
    for &c in colors {
        counts[c as usize] += 1;
    }
    counts.iter().position(|&c| c > 1).map(|c| c as u32)
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        uf[ra.max(rb)] = ra.min(rb);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Brute-force canonical form: minimum encoding over all permutations.
    fn brute_form(g: &MultiHypergraph) -> Vec<u8> {
        let s = Search::new(g);
        all_perms(g.n()).iter().map(|p| s.encode(p)).min().unwrap()
    }

    #[test]
    fn relabelled_triangle_has_same_form() {
        let k3 = MultiHypergraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
        let k3b = MultiHypergraph::from_pairs(3, &[(2, 0), (0, 1), (1, 2)]);
        assert_eq!(canonical_form(&k3), canonical_form(&k3b));
    }

    #[test]
    fn path_and_star_differ() {
        let p3 = MultiHypergraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]);
        let k13 = MultiHypergraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&p3), canonical_form(&k13));
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let ps: Vec<_> = (0..6).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            forms.insert(canonical_form(&MultiHypergraph::from_pairs(4, &ps)));
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn matches_brute_force_classes_on_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut ours = std::collections::HashMap::new();
        let mut brute = std::collections::HashMap::new();
        for mask in 0u32..1024 {
            let ps: Vec<_> = (0..10).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = MultiHypergraph::from_pairs(5, &ps);
            let f = canonical_form(&g);
            let b = brute_form(&g);
            // the two forms must induce the same partition of labelled graphs
            assert_eq!(*ours.entry(f.clone()).or_insert(b.clone()), b);
            assert_eq!(*brute.entry(b).or_insert(f.clone()), f);
        }
        assert_eq!(ours.len(), 34);
    }

    #[test]
    fn multiplicities_and_loops_distinguished() {
        let mut a = MultiHypergraph::from_pairs(3, &[(0, 1), (1, 2)]);
        let mut b = a.clone();
        a.add_edge(&[0, 1], 1).unwrap();
        b.add_edge(&[1, 2], 1).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let mut c = MultiHypergraph::from_pairs(2, &[(0, 1)]);
        let mut d = c.clone();
        c.add_edge(&[0], 1).unwrap();
        d.add_edge(&[0, 0], 1).unwrap();
        assert_ne!(canonical_form(&c), canonical_form(&d));
    }

    #[test]
    fn round_trips_through_hex_and_graph() {
        let mut g = MultiHypergraph::from_pairs(4, &[(0, 1), (2, 3), (1, 2)]);
        g.add_edge(&[3], 2).unwrap();
        let f = canonical_form(&g);
        let back = CanonicalForm::from_hex(&f.to_hex()).unwrap();
        assert_eq!(back, f);
        assert_eq!(canonical_form(&back.to_graph().unwrap()), f);
    }

    #[test]
    fn symmetric_graphs_finish() {
        let mut pairs = Vec::new();
        for c in 0..3 {
            for u in 0..6 {
                for v in u + 1..6 {
                    pairs.push((6 * c + u, 6 * c + v));
                }
            }
        }
        let g = MultiHypergraph::from_pairs(18, &pairs);
        let l = canonical_labeling(&g);
        let mut perm: Vec<usize> = (0..18).collect();
        perm.reverse();
        assert_eq!(canonical_form(&g.relabel(&perm)), l.form);
    }
}
