//! Closed-form and structural solvers for particular families.

use std::collections::HashMap;

use super::matching::maximum_matching;
use super::{ex_generic, Budget, ExtremalResult, Method};
use crate::graphs::{MultiHypergraph, VertexSet};
use crate::patterns::Pattern;
use crate::{Error, Result};

fn result(value: u64, witness: MultiHypergraph, method: Method) -> ExtremalResult {
    debug_assert_eq!(witness.edge_count(), value);
    ExtremalResult {
        value,
        witness,
        method,
        nodes_explored: 0,
        complete: true,
    }
}

fn require_loopless_graph(g: &MultiHypergraph) -> Result<()> {
    if g.edges().any(|(k, _)| k.len() != 2) {
        return Err(Error::NotTwoUniform(""));
    }
    if g.edges().any(|(k, _)| k.has_repeat()) {
        return Err(Error::LoopsPresent);
    }
    Ok(())
}

fn require_simple_graph(g: &MultiHypergraph) -> Result<()> {
    require_loopless_graph(g)?;
    if !g.is_simple() {
        return Err(Error::InvalidArgument("host must be a simple graph".into()));
    }
    Ok(())
}

/// `ex(G, C)` for the family of all cycles: a maximum-weight spanning
/// forest with weight equal to multiplicity, keeping every parallel copy.
pub fn ex_cycles(g: &MultiHypergraph) -> Result<ExtremalResult> {
    require_loopless_graph(g)?;
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut witness = MultiHypergraph::new(g.n())?;
    for (k, m) in super::generic::class_order(g) {
        let (a, b) = (find(&mut parent, k.vertex(0)), find(&mut parent, k.vertex(1)));
        if a != b {
            parent[a] = b;
            witness.add_key(k, m)?;
        }
    }
    Ok(result(witness.edge_count(), witness, Method::CyclesForest))
}

/// `ex(G, P_1 ∪ P_2) = max(Δ(G), M(G))` once that maximum is at least six;
/// smaller hosts go to the generic solver.
pub fn ex_p1p2(g: &MultiHypergraph, budget: Budget) -> Result<ExtremalResult> {
    require_simple_graph(g)?;
    let adj = g.adjacency();
    let (centre, delta) = (0..g.n())
        .map(|v| (v, adj[v].len()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .unwrap_or((0, 0));
    let matching = maximum_matching(g);
    if delta.max(matching.len()) < 6 {
        return Ok(ex_generic(g, &Pattern::StarUnionEdge, budget));
    }
    let witness = if delta >= matching.len() {
        let pairs: Vec<_> = adj[centre].iter().map(|u| (centre, u)).collect();
        MultiHypergraph::from_pairs(g.n(), &pairs)
    } else {
        MultiHypergraph::from_pairs(g.n(), &matching)
    };
    Ok(result(witness.edge_count(), witness, Method::P1P2Formula))
}

const PACKING_MAX_VERTICES: usize = 16;

/// `ex(G, P_3)` for simple `G`: the largest vertex-disjoint packing of
/// triangles and stars.
pub fn ex_p3(g: &MultiHypergraph) -> Result<ExtremalResult> {
    packing(g, true)
}

/// `ex(G, {P_3, K_3})` for simple `G`: the largest vertex-disjoint packing
/// of stars.
pub fn ex_p3k3(g: &MultiHypergraph) -> Result<ExtremalResult> {
    packing(g, false)
}

#[derive(Clone, Copy)]
enum Piece {
    Skip(usize),
    Triangle(usize, usize, usize),
    Star(usize, VertexSet),
}

struct Packer<'a> {
    adj: &'a [VertexSet],
    triangles: bool,
    memo: HashMap<u64, (u64, Piece)>,
}

impl Packer<'_> {
    fn best(&mut self, s: VertexSet) -> u64 {
        let Some(v) = s.first() else { return 0 };
        if let Some(&(val, _)) = self.memo.get(&s.0) {
            return val;
        }
        let rest = s.without(v);
        let mut val = self.best(rest);
        let mut piece = Piece::Skip(v);
        let nv = self.adj[v].intersection(rest);
        if self.triangles {
            for a in nv {
                for b in nv.intersection(self.adj[a]) {
                    if b > a {
                        let x = 3 + self.best(rest.without(a).without(b));
                        if x > val {
                            val = x;
                            piece = Piece::Triangle(v, a, b);
                        }
                    }
                }
            }
        }
        // `v` as a centre.
        for leaves in nonempty_subsets(nv) {
            let x = leaves.len() as u64 + self.best(rest.difference(leaves));
            if x > val {
                val = x;
                piece = Piece::Star(v, leaves);
            }
        }
        // `v` as a leaf of a centre `c` with at least one other leaf.
        for c in nv {
            let others = self.adj[c].intersection(rest).without(c);
            for more in nonempty_subsets(others) {
                let leaves = more.with(v);
                let x = leaves.len() as u64 + self.best(rest.without(c).difference(more));
                if x > val {
                    val = x;
                    piece = Piece::Star(c, leaves);
                }
            }
        }
        self.memo.insert(s.0, (val, piece));
        val
    }
}

fn nonempty_subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let full = s.0;
    let mut sub = full;
    let mut finished = full == 0;
    std::iter::from_fn(move || {
        if finished {
            return None;
        }
        let out = sub;
        sub = (sub.wrapping_sub(1)) & full;
        if sub == 0 {
            finished = true;
        }
        Some(VertexSet(out))
    })
}

fn packing(g: &MultiHypergraph, triangles: bool) -> Result<ExtremalResult> {
    require_simple_graph(g)?;
    if g.n() > PACKING_MAX_VERTICES {
        return Err(Error::GuardExceeded(format!(
            "packing solver handles at most {PACKING_MAX_VERTICES} vertices"
        )));
    }
    let adj = g.adjacency();
    let mut p = Packer {
        adj: &adj,
        triangles,
        memo: HashMap::new(),
    };
    let full = VertexSet::full(g.n());
    let value = p.best(full);
    let mut pairs = Vec::new();
    let mut s = full;
    while !s.is_empty() {
        let (_, piece) = p
            .memo
            .get(&s.0)
            .copied()
            .unwrap_or((0, Piece::Skip(s.first().unwrap())));
        match piece {
            Piece::Skip(v) => s = s.without(v),
            Piece::Triangle(a, b, c) => {
                pairs.extend([(a, b), (a, c), (b, c)]);
                s = s.without(a).without(b).without(c);
            }
            Piece::Star(c, leaves) => {
                pairs.extend(leaves.iter().map(|l| (c.min(l), c.max(l))));
                s = s.without(c).difference(leaves);
            }
        }
    }
    let witness = MultiHypergraph::from_pairs(g.n(), &pairs);
    Ok(result(value, witness, Method::P3Packing))
}

/// `ex(G, H)` for 1-uniform `G` with loop counts `x` and 1-uniform `H` with
/// degree sequence `d`: `max_{t'} e(G_{t'})`, where `G_{t'}` keeps the
/// `t' - 1` largest entries of `x` and caps the rest at `d_{t'} - 1`.
///
/// The witness is a 1-uniform graph on `x.len()` vertices in the order of
/// `x`. Returns the achieving `t'` as well.
pub fn ex_oneuniform(x: &[u32], d: &[u32]) -> (ExtremalResult, usize) {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[b].cmp(&x[a]).then(a.cmp(&b)));
    let mut best: Option<(u64, usize)> = None;
    for tp in 1..=d.len() {
        let cap = d[tp - 1].saturating_sub(1);
        let value: u64 = order
            .iter()
            .enumerate()
            .map(|(rank, &i)| if rank + 1 < tp { x[i] } else { x[i].min(cap) } as u64)
            .sum();
        if best.map_or(true, |(b, _)| value > b) {
            best = Some((value, tp));
        }
    }
    let (value, tp) = best.unwrap_or((0, 0));
    let mut kept = vec![0u32; x.len()];
    if tp > 0 {
        let cap = d[tp - 1].saturating_sub(1);
        for (rank, &i) in order.iter().enumerate() {
            kept[i] = if rank + 1 < tp { x[i] } else { x[i].min(cap) };
        }
    }
    let witness = crate::constructions::one_uniform(&kept);
    (result(value, witness, Method::OneUniformFormula), tp)
}

const DUMBBELL_MAX_VERTICES: usize = 30;

/// `ex(G, D)` for hosts whose edges have size at most two. A free subgraph
/// keeps all loops on a vertex set `L`, drops every 2-edge with both ends
/// in `L`, and keeps everything else; the solver maximizes over `L`.
pub fn ex_dumbbell(g: &MultiHypergraph) -> Result<ExtremalResult> {
    if g.edges().any(|(k, _)| k.len() > 2) {
        return Err(Error::InvalidArgument(
            "dumbbell solver needs edges of size at most 2".into(),
        ));
    }
    let n = g.n();
    let loops: Vec<u64> = g.loop_counts().iter().map(|&x| x as u64).collect();
    let candidates: Vec<usize> = (0..n).filter(|&v| loops[v] > 0).collect();
    if candidates.len() > DUMBBELL_MAX_VERTICES {
        return Err(Error::GuardExceeded(format!(
            "dumbbell solver handles at most {DUMBBELL_MAX_VERTICES} looped vertices"
        )));
    }
    let mut w = vec![0u64; n * n];
    let mut base = 0u64;
    for (k, m) in g.edges() {
        if k.len() == 2 && !k.has_repeat() {
            let (u, v) = (k.vertex(0), k.vertex(1));
            w[u * n + v] = m as u64;
            w[v * n + u] = m as u64;
            base += m as u64;
        } else if k.len() == 2 {
            base += m as u64;
        }
    }
    // Depth-first over candidate vertices; `gain` is loops kept minus
    // 2-edges dropped.
    fn go(
        i: usize,
        cand: &[usize],
        loops: &[u64],
        w: &[u64],
        n: usize,
        chosen: &mut Vec<usize>,
        gain: i64,
        best: &mut (i64, Vec<usize>),
    ) {
        if i == cand.len() {
            if gain > best.0 {
                *best = (gain, chosen.clone());
            }
            return;
        }
        let remaining: i64 = cand[i..].iter().map(|&v| loops[v] as i64).sum();
        if gain + remaining <= best.0 {
            return;
        }
        let v = cand[i];
        let lost: u64 = chosen.iter().map(|&u| w[u * n + v]).sum();
        chosen.push(v);
        go(
            i + 1,
            cand,
            loops,
            w,
            n,
            chosen,
            gain + loops[v] as i64 - lost as i64,
            best,
        );
        chosen.pop();
        go(i + 1, cand, loops, w, n, chosen, gain, best);
    }
    let mut best = (0i64, Vec::new());
    go(0, &candidates, &loops, &w, n, &mut Vec::new(), 0, &mut best);
    let set = VertexSet::from_slice(&best.1);
    let mut witness = MultiHypergraph::new(n)?;
    for (k, m) in g.edges() {
        let keep = match k.len() {
            1 => set.contains(k.vertex(0)),
            _ => k.has_repeat() || !(set.contains(k.vertex(0)) && set.contains(k.vertex(1))),
        };
        if keep {
            witness.add_key(k.clone(), m)?;
        }
    }
    let value = (base as i64 + best.0) as u64;
    Ok(result(value, witness, Method::DumbbellClosedForm))
}

/// Closed form of `ex(G, D)` for the host with `t` parallel edges on every
/// pair of `n` vertices and `s` loops at every vertex:
/// `max_ℓ ℓ·s + t·(C(n,2) − C(ℓ,2))`.
pub fn dumbbell_uniform_ex(n: u64, t: u64, s: u64) -> (u64, u64) {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..=n)
        .map(|l| (l * s + t * (pairs - l * l.saturating_sub(1) / 2), l))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .unwrap()
}
