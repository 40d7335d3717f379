//! The inverse Turán function `E_H(k) = sup{e(G) : ex(G, H) < k}` and its
//! multigraph variant `E*_H(k)`.

mod finiteness;
mod search;

use serde::Serialize;
use serde_json::{json, Value};

pub use finiteness::{finiteness_check, Finiteness};
pub use search::{enumerate_hosts, inverse_search};

use crate::extremal::{ex_exact, Budget, ExtremalResult};
use crate::graphs::{CanonicalForm, MultiHypergraph, Simplify};
use crate::patterns::Pattern;
use crate::{Error, Result};

/// The hosts an inverse search ranges over.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchSpace {
    /// `E_H` when set, `E*_H` otherwise.
    pub simple_only: bool,
    pub n_max: usize,
    /// Cap on `e(G)`, counted with multiplicity.
    pub m_max: u64,
    /// Cap on the multiplicity of 2-edges.
    pub mult_max: u32,
    /// Cap on the number of 1-uniform loops at a vertex; zero disables loops.
    pub loop_mult_max: u32,
    /// Only hosts whose image under this simplification is complete.
    pub compression: Option<Simplify>,
    /// Hosts never have isolated vertices; kept for callers that state it.
    pub require_no_isolated: bool,
}

impl SearchSpace {
    /// Simple 2-uniform hosts.
    pub fn simple(n_max: usize, m_max: u64) -> SearchSpace {
        SearchSpace {
            simple_only: true,
            n_max,
            m_max,
            mult_max: 1,
            loop_mult_max: 0,
            compression: None,
            require_no_isolated: true,
        }
    }

    /// 2-uniform multigraph hosts.
    pub fn multi(n_max: usize, m_max: u64, mult_max: u32) -> SearchSpace {
        SearchSpace {
            simple_only: false,
            mult_max,
            ..SearchSpace::simple(n_max, m_max)
        }
    }

    pub fn with_loops(mut self, per_vertex: u32) -> SearchSpace {
        self.loop_mult_max = per_vertex;
        self
    }

    pub fn with_compression(mut self, f: Simplify) -> SearchSpace {
        self.compression = Some(f);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.into()));
        if self.n_max == 0 || self.m_max == 0 || self.mult_max == 0 {
            return bad("search caps must be positive");
        }
        if self.n_max > crate::graphs::MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n_max));
        }
        if self.simple_only && (self.mult_max != 1 || self.loop_mult_max > 1) {
            return bad("simple hosts need mult_max = 1 and at most one loop per vertex");
        }
        if matches!(self.compression, Some(Simplify::DistanceClosure(0))) {
            return bad("distance closure needs t >= 1");
        }
        if self.compression.is_some() && self.loop_mult_max > 0 {
            return bad("compression applies to 2-uniform hosts only");
        }
        Ok(())
    }
}

/// How an inverse search ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// Every host within the caps was examined. When `caps_binding` is
    /// false no valid host exceeds the caps either, so the value is exact.
    ExactWithinCaps {
        caps_binding: bool,
    },
    /// `E = ∞`: the family contains a sunflower with at most `k` edges.
    Infinite {
        core_size: usize,
    },
    BudgetExhausted,
}

impl Status {
    pub fn tag(&self) -> &'static str {
        match self {
            Status::ExactWithinCaps { .. } => "exact-within-caps",
            Status::Infinite { .. } => "infinite",
            Status::BudgetExhausted => "budget-exhausted",
        }
    }
}

/// A canonical representative of an extremal host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Host {
    pub canonical: CanonicalForm,
    pub graph: MultiHypergraph,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Stats {
    /// Valid hosts visited.
    pub nodes: u64,
    /// Exact `ex` decisions performed.
    pub ex_calls: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug)]
pub struct InverseResult {
    pub pattern: String,
    pub k: u64,
    pub status: Status,
    /// `None` when the value is infinite.
    pub best_value: Option<u64>,
    pub hosts: Vec<Host>,
    pub stats: Stats,
}

impl InverseResult {
    /// JSON document `{pattern, k, status, best_value, hosts, nodes, seconds}`.
    /// `seconds` is null unless `timing` is set, so that identical runs
    /// serialize identically.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "pattern": self.pattern,
            "k": self.k,
            "status": self.status.tag(),
            "best_value": self.best_value,
            "hosts": self.hosts.iter().map(|h| host_json(&h.canonical, &h.graph)).collect::<Vec<_>>(),
            "nodes": self.stats.nodes,
            "seconds": if timing { json!(self.stats.seconds) } else { Value::Null },
        });
        match &self.status {
            Status::ExactWithinCaps { caps_binding } => v["caps_binding"] = json!(caps_binding),
            Status::Infinite { core_size } => v["core_size"] = json!(core_size),
            Status::BudgetExhausted => {}
        }
        v
    }
}

/// `{canonical, n, edges: [{vertices, mult}]}`.
pub fn host_json(canonical: &CanonicalForm, g: &MultiHypergraph) -> Value {
    json!({
        "canonical": canonical.to_hex(),
        "n": g.n(),
        "edges": edges_json(g),
    })
}

pub fn edges_json(g: &MultiHypergraph) -> Value {
    Value::Array(
        g.edges()
            .map(|(k, m)| json!({"vertices": k.vertices().collect::<Vec<_>>(), "mult": m}))
            .collect(),
    )
}

/// Parses the `edges` array written by [`edges_json`].
pub fn graph_from_json(n: usize, edges: &Value) -> Result<MultiHypergraph> {
    let bad = || Error::InvalidArgument("malformed edge list".into());
    let mut g = MultiHypergraph::new(n)?;
    for e in edges.as_array().ok_or_else(bad)? {
        let verts: Vec<usize> = e["vertices"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let m = e["mult"].as_u64().ok_or_else(bad)? as u32;
        g.add_edge(&verts, m)?;
    }
    Ok(g)
}

/// Outcome of checking a single host.
#[derive(Clone, Debug)]
pub struct HostReport {
    pub passes: bool,
    pub edges: u64,
    pub ex: ExtremalResult,
}

/// Checks `ex(g, p) < k` exactly and reports `e(g)` with a maximum free
/// subgraph.
pub fn verify_host(p: &Pattern, k: u64, g: &MultiHypergraph, budget: Budget) -> Result<HostReport> {
    let ex = ex_exact(g, p, budget)?;
    if !ex.complete {
        return Err(Error::GuardExceeded("ex computation ran out of budget".into()));
    }
    Ok(HostReport {
        passes: ex.value < k,
        edges: g.edge_count(),
        ex,
    })
}

/// Whether `f` is admissible as a compression map for `p`: the image of
/// every member must be a complete graph.
pub fn compression_valid(p: &Pattern, f: Simplify) -> bool {
    match p {
        Pattern::AllCycles | Pattern::EvenCycles | Pattern::OddCycles => f == Simplify::ComponentClosure,
        _ => p.members().unwrap().iter().all(|h| {
            let (h, _) = h.without_isolated();
            match crate::graphs::simplify(&h, f) {
                Ok(img) => img.edge_count() as usize == h.n() * h.n().saturating_sub(1) / 2,
                Err(_) => false,
            }
        }),
    }
}
