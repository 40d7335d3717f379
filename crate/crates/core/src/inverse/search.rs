//! Orderly generation of hosts by canonical augmentation.
//!
//! A host is valid when `ex(host, p) < k`. Validity is inherited by
//! subgraphs, so every valid host is reached from a valid parent obtained
//! by deleting one edge copy. Each isomorphism class is produced exactly
//! once: a child is accepted only from the parent class fixed by its
//! canonical labeling, and isomorphic siblings are merged.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{finiteness_check, Host, InverseResult, SearchSpace, Stats, Status};
use crate::constructions::clique;
use crate::extremal::{ex_at_least, ex_fast, Budget, Decision};
use crate::graphs::{
    canonical_form, canonical_labeling, is_connected, simplify, CanonicalForm, EdgeKey, MultiHypergraph, Simplify,
};
use crate::patterns::{Pattern, Tester};
use crate::{Error, Result};

/// Computes `E_p(k)` (or `E*_p(k)`) over the hosts described by `space`.
///
/// The hosts reported are every maximizer up to isomorphism, sorted by
/// canonical form.
pub fn inverse_search(p: &Pattern, k: u64, space: &SearchSpace, budget: Budget) -> Result<InverseResult> {
    p.validate()?;
    space.validate()?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if let Some(f) = space.compression {
        if !super::compression_valid(p, f) {
            return Err(Error::Inapplicable(format!(
                "{f:?} does not map every member of {p} to a complete graph"
            )));
        }
    }
    let start = Instant::now();
    let finiteness = finiteness_check(p, space.simple_only)?;
    if let super::Finiteness::Infinite { core_size, .. } = finiteness {
        if finiteness.is_infinite_at(k) {
            return Ok(InverseResult {
                pattern: p.to_string(),
                k,
                status: Status::Infinite { core_size },
                best_value: None,
                hosts: Vec::new(),
                stats: Stats {
                    seconds: start.elapsed().as_secs_f64(),
                    ..Stats::default()
                },
            });
        }
    }

    let ctx = Ctx {
        p,
        tester: p.tester(),
        k,
        space,
        budget,
        start,
        nodes: AtomicU64::new(0),
        ex_calls: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
        binding: AtomicBool::new(false),
    };

    let mut level: Vec<Node> = ctx.roots();
    let mut best: BTreeMap<u64, Vec<CanonicalForm>> = BTreeMap::new();
    while !level.is_empty() {
        for node in &level {
            if ctx.reportable(&node.graph) {
                best.entry(node.graph.edge_count()).or_default().push(node.form.clone());
            }
        }
        ctx.nodes.fetch_add(level.len() as u64, Ordering::Relaxed);
        if ctx.over_budget() {
            break;
        }
        let next: Vec<Vec<Node>> = level.par_iter().map(|node| ctx.expand(node)).collect();
        level = next.into_iter().flatten().collect();
    }

    let exhausted = ctx.exhausted.load(Ordering::Relaxed);
    let (best_value, hosts) = match best.pop_last() {
        Some((v, mut forms)) => {
            forms.sort();
            let hosts = forms
                .into_iter()
                .map(|f| {
                    let graph = f.to_graph().expect("valid canonical form");
                    Host { canonical: f, graph }
                })
                .collect();
            (Some(v), hosts)
        }
        None => (None, Vec::new()),
    };
    let status = if exhausted {
        Status::BudgetExhausted
    } else {
        Status::ExactWithinCaps {
            caps_binding: ctx.binding.load(Ordering::Relaxed),
        }
    };
    Ok(InverseResult {
        pattern: p.to_string(),
        k,
        status,
        best_value,
        hosts,
        stats: Stats {
            nodes: ctx.nodes.load(Ordering::Relaxed),
            ex_calls: ctx.ex_calls.load(Ordering::Relaxed),
            seconds: start.elapsed().as_secs_f64(),
        },
    })
}

/// Every host in `space` up to isomorphism, canonically labelled and
/// grouped by edge count; the empty graph comes first.
pub fn enumerate_hosts(space: &SearchSpace) -> Result<Vec<MultiHypergraph>> {
    space.validate()?;
    let mut never = MultiHypergraph::new(1)?;
    never.add_edge(&[0, 0, 0], 1)?;
    let p = Pattern::Finite(vec![never]);
    let ctx = Ctx {
        p: &p,
        tester: p.tester(),
        k: u64::MAX,
        space,
        budget: Budget::UNLIMITED,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        ex_calls: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
        binding: AtomicBool::new(true),
    };
    let mut out = Vec::new();
    let mut level = ctx.roots();
    while !level.is_empty() {
        let next: Vec<Vec<Node>> = level.par_iter().map(|node| ctx.expand(node)).collect();
        out.extend(level.into_iter().filter(|n| ctx.reportable(&n.graph)).map(|n| n.graph));
        level = next.into_iter().flatten().collect();
    }
    Ok(out)
}

struct Node {
    /// Canonically labelled, no isolated vertices.
    graph: MultiHypergraph,
    form: CanonicalForm,
    /// Upper bound on `ex(graph, p)`, always below `k`.
    hi: u64,
}

struct Ctx<'a> {
    p: &'a Pattern,
    tester: Tester,
    k: u64,
    space: &'a SearchSpace,
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    ex_calls: AtomicU64,
    exhausted: AtomicBool,
    binding: AtomicBool,
}

impl Ctx<'_> {
    fn over_budget(&self) -> bool {
        let nodes = self
            .budget
            .max_nodes
            .is_some_and(|m| self.nodes.load(Ordering::Relaxed) > m);
        let time = self
            .budget
            .max_seconds
            .is_some_and(|s| self.start.elapsed().as_secs_f64() > s);
        if nodes || time {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        self.exhausted.load(Ordering::Relaxed)
    }

    fn remaining(&self) -> Budget {
        Budget {
            max_nodes: None,
            max_seconds: self
                .budget
                .max_seconds
                .map(|s| (s - self.start.elapsed().as_secs_f64()).max(0.0)),
        }
    }

    fn underlying(&self) -> bool {
        self.space.compression == Some(Simplify::UnderlyingSimple)
    }

    fn connected(&self) -> bool {
        matches!(
            self.space.compression,
            Some(Simplify::ComponentClosure | Simplify::DistanceClosure(_))
        )
    }

    fn roots(&self) -> Vec<Node> {
        let empty = MultiHypergraph::default();
        let mut roots = vec![Node {
            form: canonical_form(&empty),
            graph: empty,
            hi: 0,
        }];
        if !self.underlying() {
            return roots;
        }
        for n in 2..=self.space.n_max + 1 {
            let g = clique(n);
            if g.edge_count() > self.space.m_max || n > self.space.n_max {
                if self.valid_bound(&g, self.k).is_some() {
                    self.binding.store(true, Ordering::Relaxed);
                }
                break;
            }
            match self.valid_bound(&g, self.k) {
                Some(hi) => roots.push(Node {
                    form: canonical_form(&g),
                    graph: g,
                    hi,
                }),
                None => break,
            }
        }
        roots
    }

    /// `Some(upper bound on ex)` when `g` is valid. `hint` is a known upper
    /// bound on `ex(g)`.
    fn valid_bound(&self, g: &MultiHypergraph, hint: u64) -> Option<u64> {
        if hint < self.k {
            return Some(hint);
        }
        if g.edge_count() < self.k {
            return Some(g.edge_count());
        }
        self.ex_calls.fetch_add(1, Ordering::Relaxed);
        if let Some(Ok(r)) = ex_fast(g, self.p, self.remaining()) {
            if r.complete {
                return (r.value < self.k).then_some(r.value);
            }
        }
        match ex_at_least(g, &self.tester, self.k, self.remaining()).0 {
            Decision::Yes(_) => None,
            Decision::No => Some(self.k - 1),
            Decision::Unknown => {
                self.exhausted.store(true, Ordering::Relaxed);
                None
            }
        }
    }

    /// Final filter: the compression image must be complete.
    fn reportable(&self, g: &MultiHypergraph) -> bool {
        match self.space.compression {
            None => true,
            Some(f) => {
                let n = g.n() as u64;
                simplify(g, f).is_ok_and(|img| img.edge_count() == n * n.saturating_sub(1) / 2)
            }
        }
    }

    /// All one-copy augmentations of `g`, as `(key, vertex count)`,
    /// ignoring caps.
    fn augmentations(&self, g: &MultiHypergraph) -> Vec<(EdgeKey, usize)> {
        let n = g.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let key = EdgeKey::pair(u, v);
                if g.multiplicity(&key) > 0 || !self.underlying() {
                    out.push((key, n));
                }
            }
        }
        if self.underlying() {
            return out;
        }
        for u in 0..n {
            out.push((EdgeKey::pair(u, n), n + 1));
        }
        if n == 0 || !self.connected() {
            out.push((EdgeKey::pair(n, n + 1), n + 2));
        }
        if self.space.loop_mult_max > 0 {
            for u in 0..n {
                out.push((EdgeKey::loop1(u), n));
            }
            if n == 0 || !self.connected() {
                out.push((EdgeKey::loop1(n), n + 1));
            }
        }
        out
    }

    fn within_caps(&self, child: &MultiHypergraph, key: &EdgeKey) -> bool {
        let m = child.multiplicity(key);
        let per_class = m
            <= if key.len() == 1 {
                self.space.loop_mult_max
            } else {
                self.space.mult_max
            };
        child.n() <= self.space.n_max && child.edge_count() <= self.space.m_max && per_class
    }

    /// Whether exceeding the caps at `key` leaves the kind of host the
    /// search describes (simple hosts never get parallel edges).
    fn intrinsic_limit(&self, child: &MultiHypergraph, key: &EdgeKey) -> bool {
        self.space.simple_only && child.multiplicity(key) > 1
    }

    fn deletable(&self, g: &MultiHypergraph, key: &EdgeKey, mult: u32) -> bool {
        if self.underlying() {
            return mult >= 2;
        }
        if !self.connected() || mult >= 2 {
            return true;
        }
        let mut h = g.clone();
        h.remove_copy(key);
        is_connected(&h)
    }

    fn expand(&self, node: &Node) -> Vec<Node> {
        let mut kids: BTreeMap<CanonicalForm, Node> = BTreeMap::new();
        for (key, n) in self.augmentations(&node.graph) {
            if self.exhausted.load(Ordering::Relaxed) {
                break;
            }
            let mut child = node.graph.clone();
            child.extend_vertices(n).expect("within vertex cap");
            child.add_key(key.clone(), 1).expect("valid edge");
            if !self.within_caps(&child, &key) {
                if !self.intrinsic_limit(&child, &key)
                    && !self.binding.load(Ordering::Relaxed)
                    && child.n() <= crate::graphs::MAX_VERTICES
                    && self.valid_bound(&child, node.hi + 1).is_some()
                {
                    self.binding.store(true, Ordering::Relaxed);
                }
                continue;
            }
            let lab = canonical_labeling(&child);
            if kids.contains_key(&lab.form) || !self.is_canonical_parent(&child, &lab.perm, &key, &node.form) {
                continue;
            }
            if let Some(hi) = self.valid_bound(&child, node.hi + 1) {
                let graph = child.relabel(&lab.perm);
                kids.insert(
                    lab.form.clone(),
                    Node {
                        graph,
                        form: lab.form,
                        hi,
                    },
                );
            }
        }
        kids.into_values().collect()
    }

    /// Whether deleting one copy of `added` from `child` lands in the
    /// parent class chosen by the canonical labeling `perm`.
    fn is_canonical_parent(
        &self,
        child: &MultiHypergraph,
        perm: &[usize],
        added: &EdgeKey,
        parent_form: &CanonicalForm,
    ) -> bool {
        let chosen = child
            .edges()
            .filter(|(k, m)| self.deletable(child, k, *m))
            .max_by_key(|(k, _)| k.map(|v| perm[v]))
            .map(|(k, _)| k.clone());
        let Some(chosen) = chosen else { return false };
        if &chosen == added {
            return true;
        }
        let mut h = child.clone();
        h.remove_copy(&chosen);
        canonical_form(&h.without_isolated().0) == *parent_form
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path};
    use crate::extremal::ex_exact;
    use std::collections::BTreeSet;

    fn all_graphs_upto(n_max: usize) -> BTreeSet<CanonicalForm> {
        let mut seen = BTreeSet::new();
        for n in 0..=n_max {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u64..1 << pairs.len() {
                let chosen: Vec<_> = (0..pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect();
                let g = MultiHypergraph::from_pairs(n, &chosen);
                if !g.has_isolated_vertices() {
                    seen.insert(canonical_form(&g));
                }
            }
        }
        seen
    }

    /// A pattern no simple graph contains, so every host is valid.
    fn never() -> Pattern {
        let mut h = MultiHypergraph::new(2).unwrap();
        h.add_edge(&[0, 1], 2).unwrap();
        Pattern::Finite(vec![h])
    }

    #[test]
    fn enumerates_each_class_once() {
        let space = SearchSpace::simple(5, 10);
        let ctx = Ctx {
            p: &never(),
            tester: never().tester(),
            k: u64::MAX,
            space: &space,
            budget: Budget::UNLIMITED,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            ex_calls: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            binding: AtomicBool::new(false),
        };
        let mut level = ctx.roots();
        let mut forms = Vec::new();
        while !level.is_empty() {
            forms.extend(level.iter().map(|n| n.form.clone()));
            level = level.iter().flat_map(|n| ctx.expand(n)).collect();
        }
        let unique: BTreeSet<_> = forms.iter().cloned().collect();
        assert_eq!(unique.len(), forms.len(), "duplicate class generated");
        assert_eq!(unique, all_graphs_upto(5));
    }

    #[test]
    fn connected_mode_enumerates_connected_classes() {
        let space = SearchSpace::simple(5, 10).with_compression(Simplify::ComponentClosure);
        let r = inverse_search(&Pattern::Clique(3), 100, &space, Budget::UNLIMITED).unwrap();
        assert_eq!(r.best_value, Some(10));
        let connected = all_graphs_upto(5)
            .into_iter()
            .filter(|f| is_connected(&f.to_graph().unwrap()))
            .count();
        // Empty graph plus every connected class.
        assert_eq!(r.stats.nodes as usize, connected);
    }

    #[test]
    fn small_values() {
        let caps = SearchSpace::simple(10, 10);
        let r = inverse_search(&Pattern::AllCycles, 4, &caps, Budget::UNLIMITED).unwrap();
        assert_eq!(r.best_value, Some(6));
        assert_eq!(r.hosts.len(), 1);
        assert_eq!(r.hosts[0].canonical, canonical_form(&clique(4)));
        assert_eq!(r.status, Status::ExactWithinCaps { caps_binding: false });

        let r = inverse_search(&Pattern::Path(3), 3, &caps, Budget::UNLIMITED).unwrap();
        assert_eq!(r.best_value, Some(4));
        let forms: Vec<_> = r.hosts.iter().map(|h| h.canonical.clone()).collect();
        assert!(forms.contains(&canonical_form(&cycle(4))));
        for h in &r.hosts {
            assert!(ex_exact(&h.graph, &Pattern::Path(3), Budget::UNLIMITED).unwrap().value < 3);
        }
    }

    #[test]
    fn reports_binding_caps() {
        let r = inverse_search(&Pattern::AllCycles, 4, &SearchSpace::simple(3, 10), Budget::UNLIMITED).unwrap();
        assert_eq!(r.best_value, Some(3));
        assert_eq!(r.status, Status::ExactWithinCaps { caps_binding: true });
    }

    #[test]
    fn infinite_for_sunflowers() {
        let p = Pattern::Finite(vec![path(2)]);
        let r = inverse_search(&p, 2, &SearchSpace::simple(6, 6), Budget::UNLIMITED).unwrap();
        assert_eq!(r.status, Status::Infinite { core_size: 1 });
        assert_eq!(r.best_value, None);
        let r = inverse_search(&p, 1, &SearchSpace::simple(6, 6), Budget::UNLIMITED).unwrap();
        assert_eq!(r.best_value, Some(0));
    }
}
