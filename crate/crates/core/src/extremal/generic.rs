//! Branch-and-bound over edge sub-multisets.
//!
//! Parallel classes are ordered by descending multiplicity, then by key.
//! At each class the solver first finds the largest number of copies that
//! keeps the working subgraph free, then tries every smaller count in
//! descending order. Since every node of the search is itself a free
//! subgraph, containment is only ever tested at the class being added.

use std::time::Instant;

use super::Budget;
use crate::graphs::{EdgeKey, IndexedGraph, MultiHypergraph};
use crate::patterns::Tester;

/// Parallel classes in solver order.
pub fn class_order(g: &MultiHypergraph) -> Vec<(EdgeKey, u32)> {
    let mut classes: Vec<(EdgeKey, u32)> = g.edges().map(|(k, m)| (k.clone(), m)).collect();
    classes.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    classes
}

pub(crate) struct Outcome {
    pub value: u64,
    pub keep: Vec<u32>,
    pub nodes: u64,
    pub complete: bool,
}

struct Search<'a> {
    tester: &'a Tester,
    classes: &'a [(EdgeKey, u32)],
    suffix: Vec<u64>,
    kept: IndexedGraph,
    keep: Vec<u32>,
    best: u64,
    best_keep: Vec<u32>,
    target: Option<u64>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    aborted: bool,
    done: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.aborted = true;
            }
        }
        if let Some(secs) = self.budget.max_seconds {
            if self.nodes % 1024 == 0 && self.start.elapsed().as_secs_f64() > secs {
                self.aborted = true;
            }
        }
        self.aborted
    }

    fn record(&mut self) {
        let total = self.kept.total();
        if total > self.best {
            self.best = total;
            self.best_keep.clone_from(&self.keep);
            if self.target.is_some_and(|t| total >= t) {
                self.done = true;
            }
        }
    }

    fn dfs(&mut self, i: usize) {
        self.nodes += 1;
        if self.done || self.out_of_budget() {
            return;
        }
        if self.target.is_some() {
            self.record();
            if self.done {
                return;
            }
        }
        if i == self.classes.len() {
            self.record();
            return;
        }
        let bound = match self.target {
            Some(t) => t.saturating_sub(1).max(self.best),
            None => self.best,
        };
        if self.kept.total() + self.suffix[i] <= bound {
            return;
        }
        let (key, mult) = &self.classes[i];
        let mut c = 0;
        while c < *mult {
            self.kept.add(key, 1);
            if self.tester.contains_at(&self.kept, key) {
                self.kept.remove(key, 1);
                break;
            }
            c += 1;
        }
        let mut cc = c;
        loop {
            self.keep[i] = cc;
            self.dfs(i + 1);
            if cc == 0 || self.done || self.aborted {
                break;
            }
            self.kept.remove(key, 1);
            cc -= 1;
            let bound = match self.target {
                Some(t) => t.saturating_sub(1).max(self.best),
                None => self.best,
            };
            if self.kept.total() + self.suffix[i + 1] <= bound {
                break;
            }
        }
        self.kept.remove(key, cc);
        self.keep[i] = 0;
    }
}

/// Runs the search over `classes` (in the given order) on a host with `n`
/// vertices. With a `target`, stops as soon as a free subgraph of that
/// size is found and prunes branches that cannot reach it.
pub(crate) fn run(
    n: usize,
    classes: &[(EdgeKey, u32)],
    tester: &Tester,
    target: Option<u64>,
    budget: Budget,
) -> Outcome {
    let mut suffix = vec![0u64; classes.len() + 1];
    for i in (0..classes.len()).rev() {
        suffix[i] = suffix[i + 1] + classes[i].1 as u64;
    }
    let mut s = Search {
        tester,
        classes,
        suffix,
        kept: IndexedGraph::empty(n),
        keep: vec![0; classes.len()],
        best: 0,
        best_keep: vec![0; classes.len()],
        target,
        nodes: 0,
        budget,
        start: Instant::now(),
        aborted: false,
        done: false,
    };
    s.dfs(0);
    Outcome {
        value: s.best,
        keep: s.best_keep,
        nodes: s.nodes,
        complete: !s.aborted,
    }
}
