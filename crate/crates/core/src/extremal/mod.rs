//! Exact computation of `ex(G, H)` and related bounds.

mod bounds;
mod fast;
pub(crate) mod generic;
mod matching;

use std::fmt;

use serde::Serialize;

pub use bounds::{
    averaging_bound, clique_table, fractional_cover_number, genupper_exponent, turan_graph, turan_graph_size,
};
pub use fast::{dumbbell_uniform_ex, ex_cycles, ex_dumbbell, ex_oneuniform, ex_p1p2, ex_p3, ex_p3k3};
pub use generic::class_order;
pub use matching::{matching_number, maximum_matching};

use crate::graphs::{IndexedGraph, MultiHypergraph};
use crate::patterns::{Pattern, Tester};
use crate::Result;

/// Which solver produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Generic,
    CyclesForest,
    #[serde(rename = "p1p2-formula")]
    P1P2Formula,
    OneUniformFormula,
    #[serde(rename = "p3-packing")]
    P3Packing,
    DumbbellClosedForm,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Generic => "generic",
            Method::CyclesForest => "cycles-forest",
            Method::P1P2Formula => "p1p2-formula",
            Method::OneUniformFormula => "oneuniform-formula",
            Method::P3Packing => "p3-packing",
            Method::DumbbellClosedForm => "dumbbell-closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Limits on a single search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_seconds: None,
    };

    pub fn seconds(s: f64) -> Budget {
        Budget {
            max_nodes: None,
            max_seconds: Some(s),
        }
    }

    pub fn nodes(n: u64) -> Budget {
        Budget {
            max_nodes: Some(n),
            max_seconds: None,
        }
    }
}

/// `ex(G, H)` with a maximum free subgraph.
///
/// When `complete` is false the budget ran out and `value` is only a lower
/// bound, achieved by `witness`.
#[derive(Clone, Debug)]
pub struct ExtremalResult {
    pub value: u64,
    pub witness: MultiHypergraph,
    pub method: Method,
    pub nodes_explored: u64,
    pub complete: bool,
}

/// Exact `ex(g, p)`, using a structural solver when one applies.
pub fn ex_exact(g: &MultiHypergraph, p: &Pattern, budget: Budget) -> Result<ExtremalResult> {
    p.validate()?;
    match ex_fast(g, p, budget) {
        Some(r) => r,
        None => Ok(ex_generic(g, p, budget)),
    }
}

/// The structural solver for `(g, p)`, if one applies.
pub fn ex_fast(g: &MultiHypergraph, p: &Pattern, budget: Budget) -> Option<Result<ExtremalResult>> {
    let two_uniform_loopless = g.edges().all(|(k, _)| k.len() == 2 && !k.has_repeat());
    let simple_graph = two_uniform_loopless && g.is_simple();
    let r = match p {
        Pattern::AllCycles if two_uniform_loopless => ex_cycles(g),
        Pattern::StarUnionEdge if simple_graph => ex_p1p2(g, budget),
        Pattern::Path(3) if simple_graph => ex_p3(g),
        Pattern::P3K3 if simple_graph => ex_p3k3(g),
        Pattern::Dumbbell(2) if g.edges().all(|(k, _)| k.len() <= 2) => ex_dumbbell(g),
        Pattern::OneUniform(d) if g.edges().all(|(k, _)| k.len() == 1) => Ok(ex_oneuniform(&g.loop_counts(), d).0),
        _ => return None,
    };
    match r {
        Err(crate::Error::GuardExceeded(_)) => None,
        r => Some(r),
    }
}

/// Exact `ex(g, p)` by branch-and-bound, bypassing structural solvers.
///
/// Among maximum free subgraphs the witness keeps the lexicographically
/// greatest vector of copy counts in [`class_order`].
pub fn ex_generic(g: &MultiHypergraph, p: &Pattern, budget: Budget) -> ExtremalResult {
    ex_with_tester(g, &p.tester(), budget)
}

pub fn ex_with_tester(g: &MultiHypergraph, tester: &Tester, budget: Budget) -> ExtremalResult {
    let classes = class_order(g);
    let out = generic::run(g.n(), &classes, tester, None, budget);
    let witness = witness_from(g.n(), &classes, &out.keep);
    ExtremalResult {
        value: out.value,
        witness,
        method: Method::Generic,
        nodes_explored: out.nodes,
        complete: out.complete,
    }
}

/// Answer to "is `ex(G, H)` at least `target`?".
#[derive(Clone, Debug)]
pub enum Decision {
    /// A free subgraph with at least `target` edges.
    Yes(MultiHypergraph),
    No,
    /// The budget ran out first.
    Unknown,
}

pub fn ex_at_least(g: &MultiHypergraph, tester: &Tester, target: u64, budget: Budget) -> (Decision, u64) {
    if target == 0 {
        return (Decision::Yes(MultiHypergraph::new(g.n()).expect("within cap")), 0);
    }
    if g.edge_count() < target {
        return (Decision::No, 0);
    }
    let classes = class_order(g);
    let out = generic::run(g.n(), &classes, tester, Some(target), budget);
    let d = if out.value >= target {
        Decision::Yes(witness_from(g.n(), &classes, &out.keep))
    } else if out.complete {
        Decision::No
    } else {
        Decision::Unknown
    };
    (d, out.nodes)
}

fn witness_from(n: usize, classes: &[(crate::graphs::EdgeKey, u32)], keep: &[u32]) -> MultiHypergraph {
    let mut w = MultiHypergraph::new(n).expect("within cap");
    for ((k, _), &c) in classes.iter().zip(keep) {
        if c > 0 {
            w.add_key(k.clone(), c).expect("valid edge");
        }
    }
    w
}

/// Whether `f` is free of `p`.
pub fn is_free(f: &MultiHypergraph, p: &Pattern) -> bool {
    !p.tester().contains(&IndexedGraph::from_graph(f))
}

#[cfg(test)]
mod tests;
