//! The tagged regression suite behind `itl verify-paper`.
//!
//! Each tag checks one published statement at desk scale and reports the
//! first failing instance.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::constructions::{
    clique, complete_bipartite, cycle, dumbbell_multihost, dumbbell_multihost_best, dumbbell_multihost_ex,
    dumbbell_simplehost, gk_graph, matching, p1p2_host, path, pendant_graph, star,
};
use crate::extremal::{
    averaging_bound, clique_table, ex_exact, ex_generic, ex_oneuniform, fractional_cover_number, genupper_exponent,
    matching_number, turan_graph_size, Budget,
};
use crate::graphs::{canonical_form, contract, simplify, CanonicalForm, MultiHypergraph, Simplify, VertexSet};
use crate::inverse::{enumerate_hosts, finiteness_check, inverse_search, verify_host, Finiteness, SearchSpace, Status};
use crate::oneuniform::{c_bounds, c_constant, multistar_transport, OneUniformPattern};
use crate::patterns::{dominates, Pattern};
use crate::{Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

/// Deliberate corruption used to check that the suite detects errors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Adds one to every Turán graph size.
    TuranSizeOffset,
}

#[derive(Clone, Debug)]
pub struct TagReport {
    pub tag: &'static str,
    pub pass: bool,
    pub checks: u64,
    /// The first failing instance.
    pub failure: Option<Value>,
    /// Observations that are recorded without failing the tag.
    pub notes: Vec<Value>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub profile: Profile,
    pub tags: Vec<TagReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.tags.iter().all(|t| t.pass)
    }

    pub fn tag(&self, name: &str) -> Option<&TagReport> {
        self.tags.iter().find(|t| t.tag == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "profile": match self.profile { Profile::Quick => "quick", Profile::Full => "full" },
            "passed": self.tags.iter().filter(|t| t.pass).count(),
            "failed": self.tags.iter().filter(|t| !t.pass).count(),
            "tags": self.tags.iter().map(|t| {
                let mut v = json!({"tag": t.tag, "pass": t.pass, "checks": t.checks});
                if let Some(f) = &t.failure {
                    v["failure"] = f.clone();
                }
                if !t.notes.is_empty() {
                    v["notes"] = Value::Array(t.notes.clone());
                }
                v
            }).collect::<Vec<_>>(),
        })
    }
}

struct Ctx {
    full: bool,
    fault: Fault,
}

#[derive(Default)]
struct Outcome {
    checks: u64,
    failure: Option<Value>,
    notes: Vec<Value>,
}

impl Outcome {
    /// Records one check; only the first failure is kept.
    fn check(&mut self, ok: bool, instance: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(instance());
        }
    }

    fn error(&mut self, what: &str, e: crate::Error) {
        self.check(false, || json!({"instance": what, "error": e.to_string()}));
    }
}

type Check = fn(&Ctx, &mut Outcome) -> Result<()>;

const TAGS: &[(&str, Check)] = &[
    ("thm:cliques", thm_cliques),
    ("thm:cycles", thm_cycles),
    ("thm:evencycles", thm_evencycles),
    ("thm:p3", thm_p3),
    ("lem:p3cons", lem_p3cons),
    ("thm:p3k3", thm_p3k3),
    ("cor:p2p3", cor_p2p3),
    ("thm:degmatch", thm_degmatch),
    ("lem:mantelind", lem_mantelind),
    ("lem:relation", lem_relation),
    ("thm:averaging", thm_averaging),
    ("prop:sunflower", prop_sunflower),
    ("prop:genupper", prop_genupper),
    ("thm:dumbbell", thm_dumbbell),
    ("thm:multibeats", thm_multibeats),
    ("thm:necklace", thm_necklace),
    ("thm:1u", thm_1u),
    ("lem:multistar", lem_multistar),
];

pub fn tag_names() -> Vec<&'static str> {
    TAGS.iter().map(|(t, _)| *t).collect()
}

/// Runs every tag. The quick profile uses smaller instances.
pub fn verify_paper(profile: Profile, fault: Fault) -> VerifyReport {
    let ctx = Ctx {
        full: profile == Profile::Full,
        fault,
    };
    let tags = TAGS
        .iter()
        .map(|(tag, check)| {
            let mut out = Outcome::default();
            if let Err(e) = check(&ctx, &mut out) {
                out.error("internal", e);
            }
            TagReport {
                tag,
                pass: out.failure.is_none(),
                checks: out.checks,
                failure: out.failure,
                notes: out.notes,
            }
        })
        .collect();
    VerifyReport { profile, tags }
}

fn edge_list(g: &MultiHypergraph) -> Value {
    crate::inverse::edges_json(g)
}

fn forms(gs: &[MultiHypergraph]) -> BTreeSet<CanonicalForm> {
    gs.iter().map(canonical_form).collect()
}

fn ex(g: &MultiHypergraph, p: &Pattern) -> Result<u64> {
    Ok(ex_exact(g, p, Budget::UNLIMITED)?.value)
}

/// Caps that make a search certify `E` exactly when they are not binding.
fn certify(e: u64) -> SearchSpace {
    SearchSpace::simple(2 * (e as usize + 1), e + 1)
}

fn binom2(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

/// Searches and checks the value and, when given, the exact host set.
fn expect_search(
    out: &mut Outcome,
    p: &Pattern,
    k: u64,
    space: SearchSpace,
    value: u64,
    hosts: Option<&[MultiHypergraph]>,
) -> Result<BTreeSet<CanonicalForm>> {
    let r = inverse_search(p, k, &space, Budget::UNLIMITED)?;
    let found: BTreeSet<CanonicalForm> = r.hosts.iter().map(|h| h.canonical.clone()).collect();
    let exact = matches!(r.status, Status::ExactWithinCaps { .. });
    out.check(exact && r.best_value == Some(value), || {
        json!({"pattern": p.to_string(), "k": k, "expected": value, "found": r.best_value, "status": r.status.tag()})
    });
    if let Some(hs) = hosts {
        out.check(found == forms(hs), || {
            json!({"pattern": p.to_string(), "k": k, "expected_hosts": hs.len(),
                   "hosts": r.hosts.iter().map(|h| edge_list(&h.graph)).collect::<Vec<_>>()})
        });
    }
    Ok(found)
}

fn turan_size(ctx: &Ctx, n: usize, t: usize) -> Result<u64> {
    let s = turan_graph_size(n, t)?;
    Ok(if ctx.fault == Fault::TuranSizeOffset { s + 1 } else { s })
}

fn thm_cliques(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let cases: &[(usize, usize)] = if ctx.full {
        &[(5, 3), (6, 3), (7, 3), (5, 4), (6, 4)]
    } else {
        &[(5, 3), (6, 3), (5, 4)]
    };
    for &(n, t) in cases {
        let k = turan_size(ctx, n, t)? + 1;
        let g = clique(n);
        let r = verify_host(&Pattern::Clique(t), k, &g, Budget::UNLIMITED)?;
        out.check(
            r.passes && r.ex.value == k - 1 && r.edges == binom2(n),
            || json!({"witness": format!("K_{n}"), "t": t, "k": k, "ex": r.ex.value, "e": r.edges}),
        );
    }
    let k = turan_size(ctx, 5, 3)? + 1;
    expect_search(out, &Pattern::Clique(3), k, certify(10), 10, Some(&[clique(5)]))?;
    if ctx.full {
        expect_search(
            out,
            &Pattern::Clique(3),
            k,
            SearchSpace::multi(22, 11, 3),
            10,
            Some(&[clique(5)]),
        )?;
        // K_4 is not the only extremal host at n = 4; record what the
        // search finds.
        let r = inverse_search(&Pattern::Clique(3), 5, &certify(6), Budget::UNLIMITED)?;
        out.check(r.best_value == Some(6), || json!({"k": 5, "found": r.best_value}));
        if r.hosts.len() > 1 {
            out.notes.push(json!({
                "k": 5,
                "observation": "several extremal hosts besides K_4",
                "hosts": r.hosts.iter().map(|h| edge_list(&h.graph)).collect::<Vec<_>>(),
            }));
        }
    }
    Ok(())
}

fn thm_cycles(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let top = if ctx.full { 5 } else { 4 };
    for k in 3..=top {
        let e = binom2(k);
        let space = SearchSpace::simple(k + 1, e + 2);
        expect_search(out, &Pattern::AllCycles, k as u64, space, e, Some(&[clique(k)]))?;
    }
    Ok(())
}

fn thm_evencycles(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let p = Pattern::EvenCycles;
    expect_search(out, &p, 4, certify(4), 4, None)?;
    expect_search(out, &p, 5, certify(6), 6, Some(&[complete_bipartite(2, 3), clique(4)]))?;
    if ctx.full {
        expect_search(out, &p, 6, certify(9), 9, Some(&[complete_bipartite(3, 3)]))?;
    }
    out.check(
        ex(&complete_bipartite(3, 3), &p)? == 5,
        || json!({"witness": "K_{3,3}"}),
    );
    Ok(())
}

fn thm_p3(_: &Ctx, out: &mut Outcome) -> Result<()> {
    let p = Pattern::Path(3);
    let found = expect_search(out, &p, 3, certify(4), 4, None)?;
    out.check(
        found.contains(&canonical_form(&cycle(4))),
        || json!({"k": 3, "missing": "C_4"}),
    );
    let found = expect_search(out, &p, 4, certify(6), 6, None)?;
    for (name, g) in [("K_4", clique(4)), ("K_3*(1,1,1)", pendant_graph(3, &[1, 1, 1])?)] {
        out.check(found.contains(&canonical_form(&g)), || json!({"k": 4, "missing": name}));
    }
    Ok(())
}

fn lem_p3cons(_: &Ctx, out: &mut Outcome) -> Result<()> {
    for k in 4..=8usize {
        let g = pendant_graph(k - 1, &vec![1; k - 1])?;
        let v = ex(&g, &Pattern::Path(3))?;
        out.check(
            v == k as u64 - 1 && g.edge_count() == binom2(k),
            || json!({"k": k, "ex": v, "e": g.edge_count()}),
        );
    }
    let v = ex(&pendant_graph(5, &[5])?, &Pattern::Path(3))?;
    out.check(v > 5, || json!({"witness": "K_6", "ex": v}));
    Ok(())
}

fn thm_p3k3(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let top = if ctx.full { 9 } else { 6 };
    for k in 3..=top {
        let g = gk_graph(k)?;
        let expected = binom2(k + 1)
            - if k % 2 == 0 {
                (k as u64 + 2) / 2
            } else {
                (k as u64 + 1) / 2
            };
        let v = ex(&g, &Pattern::P3K3)?;
        out.check(
            v == k as u64 - 1 && g.edge_count() == expected,
            || json!({"k": k, "ex": v, "e": g.edge_count(), "expected_e": expected}),
        );
    }
    expect_search(out, &Pattern::P3K3, 3, certify(4), 4, Some(&[gk_graph(3)?]))?;
    expect_search(out, &Pattern::P3K3, 4, certify(7), 7, Some(&[gk_graph(4)?]))?;
    Ok(())
}

fn cor_p2p3(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let top = if ctx.full { 12 } else { 8 };
    for k in 7..=top {
        let g = p1p2_host(k)?;
        let e = if k % 2 == 1 {
            (k * k - k) as u64
        } else {
            (k * k - 3 * k / 2) as u64
        };
        let v = ex(&g, &Pattern::StarUnionEdge)?;
        out.check(
            g.edge_count() == e && v == k as u64 - 1,
            || json!({"k": k, "e": g.edge_count(), "expected_e": e, "ex": v}),
        );
    }
    Ok(())
}

fn small_graphs(n_max: usize) -> Result<Vec<MultiHypergraph>> {
    enumerate_hosts(&SearchSpace::simple(n_max, binom2(n_max).max(1)))
}

fn thm_degmatch(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    for g in small_graphs(if ctx.full { 8 } else { 7 })? {
        let bound = (g.max_degree() + 1) * matching_number(&g) as u64;
        out.check(
            g.edge_count() <= bound,
            || json!({"graph": edge_list(&g), "bound": bound}),
        );
    }
    Ok(())
}

pub(crate) fn independence_number(g: &MultiHypergraph) -> usize {
    let adj = g.adjacency();
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            let set = VertexSet(s);
            set.iter().all(|v| adj[v].intersection(set).is_empty())
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn lem_mantelind(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let tri = Pattern::Clique(3);
    for g in small_graphs(if ctx.full { 8 } else { 7 })? {
        if !crate::extremal::is_free(&g, &tri) {
            continue;
        }
        let a = independence_number(&g);
        let bound = (a * (g.n() - a)) as u64;
        out.check(g.edge_count() <= bound, || json!({"graph": edge_list(&g), "alpha": a}));
    }
    Ok(())
}

pub(crate) fn random_simple(rng: &mut impl Rng, n: usize, p: f64) -> MultiHypergraph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    MultiHypergraph::from_pairs(n, &pairs)
}

/// Patterns paired with a simplification mapping every member to a clique.
pub(crate) fn relation_cases() -> Vec<(Pattern, Simplify)> {
    vec![
        (Pattern::Clique(3), Simplify::UnderlyingSimple),
        (Pattern::Clique(4), Simplify::UnderlyingSimple),
        (Pattern::AllCycles, Simplify::ComponentClosure),
        (Pattern::EvenCycles, Simplify::ComponentClosure),
        (Pattern::Path(3), Simplify::DistanceClosure(3)),
        (Pattern::Path(2), Simplify::DistanceClosure(2)),
    ]
}

/// A random `I` that is independent in `f(g)`, with at least two vertices
/// when possible.
pub(crate) fn random_independent(rng: &mut impl Rng, img: &MultiHypergraph) -> VertexSet {
    let adj = img.adjacency();
    let mut order: Vec<usize> = (0..img.n()).collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut set = VertexSet::default();
    for v in order {
        if adj[v].intersection(set).is_empty() && (set.len() < 2 || rng.gen_bool(0.5)) {
            set.insert(v);
        }
    }
    set
}

fn lem_relation(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases = relation_cases();
    let trials = if ctx.full { 500 } else { 150 };
    for i in 0..trials {
        let (p, f) = &cases[i % cases.len()];
        let n = rng.gen_range(3..=7);
        let g = random_simple(&mut rng, n, 0.4);
        let set = random_independent(&mut rng, &simplify(&g, *f)?);
        let c = contract(&g, set)?;
        let (a, b) = (ex(&c, p)?, ex(&g, p)?);
        out.check(a <= b && c.edge_count() == g.edge_count(), || {
            json!({"pattern": p.to_string(), "graph": edge_list(&g), "I": set.to_vec(), "ex_contracted": a, "ex": b})
        });
    }
    Ok(())
}

fn thm_averaging(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let n_max = if ctx.full { 6 } else { 5 };
    let graphs = small_graphs(n_max)?;
    for t in [3, 4] {
        let p = Pattern::Clique(t);
        let table = clique_table(&p, n_max, Budget::UNLIMITED)?;
        for g in &graphs {
            let bound = averaging_bound(g, &p, &table)?;
            let v = ex(g, &p)?;
            out.check(
                bound <= v,
                || json!({"t": t, "graph": edge_list(g), "bound": bound, "ex": v}),
            );
        }
    }
    Ok(())
}

fn prop_sunflower(_: &Ctx, out: &mut Outcome) -> Result<()> {
    let mut doubled = MultiHypergraph::new(2)?;
    doubled.add_edge(&[0, 1], 2)?;
    for (name, h, simple) in [
        ("K_{1,3}", star(3), true),
        ("3K_2", matching(3), true),
        ("2xK_2", doubled, false),
    ] {
        let f = finiteness_check(&Pattern::Finite(vec![h]), simple)?;
        out.check(
            matches!(f, Finiteness::Infinite { .. }),
            || json!({"pattern": name, "verdict": format!("{f:?}")}),
        );
    }
    for (name, h) in [("P_3", path(3)), ("K_3", clique(3)), ("C_4", cycle(4))] {
        let f = finiteness_check(&Pattern::Finite(vec![h]), true)?;
        out.check(
            matches!(f, Finiteness::ErdosRado { .. }),
            || json!({"pattern": name, "verdict": format!("{f:?}")}),
        );
    }
    let r = inverse_search(
        &Pattern::Finite(vec![star(3)]),
        3,
        &SearchSpace::simple(8, 8),
        Budget::UNLIMITED,
    )?;
    out.check(
        r.status == Status::Infinite { core_size: 1 },
        || json!({"pattern": "K_{1,3}", "status": r.status.tag()}),
    );
    Ok(())
}

fn prop_genupper(_: &Ctx, out: &mut Outcome) -> Result<()> {
    let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
    for (name, h, v) in [
        ("K_2", path(1), q(1, 1)),
        ("K_3", clique(3), q(3, 2)),
        ("C_4", cycle(4), q(2, 1)),
    ] {
        let rho = fractional_cover_number(&h)?;
        out.check(rho == v, || json!({"graph": name, "rho_star": rho.to_string()}));
    }
    let g = genupper_exponent(&cycle(4))?;
    out.check(g == q(3, 2), || json!({"graph": "C_4", "exponent": g.to_string()}));
    Ok(())
}

fn thm_dumbbell(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let d = Pattern::Dumbbell(2);
    for k in 2..=7u64 {
        let g = dumbbell_simplehost(k as usize)?;
        let e = 3 * (k - 1) / 2;
        let v = ex(&g, &d)?;
        out.check(
            g.edge_count() == e && v == k - 1,
            || json!({"k": k, "e": g.edge_count(), "ex": v}),
        );
    }
    let top = if ctx.full { 5 } else { 4 };
    for k in 2..=top {
        let e = 3 * (k - 1) / 2;
        expect_search(out, &d, k, certify(e).with_loops(1), e, None)?;
    }
    Ok(())
}

fn thm_multibeats(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let m = if ctx.full { 7 } else { 6 };
    let hosts = enumerate_hosts(&SearchSpace::simple(2 * m as usize, m).with_loops(1))?;
    for g in hosts {
        let v = ex(&g, &Pattern::Dumbbell(2))?;
        let bound = (2 * g.edge_count()).div_ceil(3);
        out.check(v >= bound, || json!({"graph": edge_list(&g), "ex": v, "bound": bound}));
    }
    Ok(())
}

fn thm_necklace(_: &Ctx, out: &mut Outcome) -> Result<()> {
    let k = 1000;
    let n = dumbbell_multihost_best(k)?;
    let g = dumbbell_multihost(k, n)?;
    let closed = dumbbell_multihost_ex(k, n)?;
    out.check(
        closed < k && 100 * g.edge_count() >= 155 * k,
        || json!({"k": k, "n": n, "e": g.edge_count(), "ex": closed}),
    );
    // The closed form against the generic solver on small uniform hosts.
    for (k, n) in [(12, 3), (20, 4), (30, 4)] {
        let Ok(g) = dumbbell_multihost(k, n) else { continue };
        let generic = ex_generic(&g, &Pattern::Dumbbell(2), Budget::UNLIMITED).value;
        let closed = dumbbell_multihost_ex(k, n)?;
        out.check(
            generic == closed,
            || json!({"k": k, "n": n, "generic": generic, "closed": closed}),
        );
    }
    Ok(())
}

fn thm_1u(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let c = c_constant(&OneUniformPattern::new(vec![2, 2])?)?;
    out.check(
        c.c_h == Rational::new(1.into(), 4.into()),
        || json!({"d": [2, 2], "c_H": c.c_h.to_string()}),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0x1u64);
    let trials = if ctx.full { 200 } else { 60 };
    let mut done = 0;
    while done < trials {
        let t = rng.gen_range(2..=6);
        let d: Vec<u32> = (0..t).map(|_| rng.gen_range(1..=6)).collect();
        let p = OneUniformPattern::new(d)?;
        if p.check_nondegenerate().is_err() {
            continue;
        }
        done += 1;
        let c = c_constant(&p)?;
        let (lo, hi) = c_bounds(&p)?;
        out.check(
            lo <= c.c_h && c.c_h <= hi,
            || json!({"d": p.degrees(), "c_H": c.c_h.to_string()}),
        );
    }
    // The truncation formula against sub-sequence enumeration.
    for _ in 0..if ctx.full { 300 } else { 100 } {
        let x: Vec<u32> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(0..=4)).collect();
        let mut d: Vec<u32> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=3)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        let formula = ex_oneuniform(&x, &d).0.value;
        let brute = brute_loops(&x, &d);
        out.check(
            formula == brute,
            || json!({"x": x, "d": d, "formula": formula, "brute": brute}),
        );
    }
    Ok(())
}

fn brute_loops(x: &[u32], d: &[u32]) -> u64 {
    let mut f = vec![0u32; x.len()];
    let mut best = 0;
    loop {
        if !dominates(&f, d) {
            best = best.max(f.iter().map(|&v| v as u64).sum());
        }
        let mut i = 0;
        while i < f.len() && f[i] == x[i] {
            f[i] = 0;
            i += 1;
        }
        if i == f.len() {
            return best;
        }
        f[i] += 1;
    }
}

fn lem_multistar(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x57a5);
    for _ in 0..if ctx.full { 100 } else { 40 } {
        let x: Vec<u32> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..=3)).collect();
        let d: Vec<u32> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=3)).collect();
        let p = OneUniformPattern::new(d)?;
        let (a, b) = multistar_transport(&x, &p, Budget::UNLIMITED)?;
        out.check(a == b, || json!({"x": x, "d": p.degrees(), "star": a, "loops": b}));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_profile_passes() {
        let r = verify_paper(Profile::Quick, Fault::None);
        for t in &r.tags {
            assert!(t.pass, "{} failed: {:?}", t.tag, t.failure);
        }
        assert!(r.tags.len() >= 12);
    }

    #[test]
    fn turan_fault_breaks_cliques() {
        let r = verify_paper(Profile::Quick, Fault::TuranSizeOffset);
        let t = r.tag("thm:cliques").unwrap();
        assert!(!t.pass);
        assert_eq!(t.failure.as_ref().unwrap()["witness"], "K_5");
    }

    #[test]
    fn independence() {
        assert_eq!(independence_number(&cycle(5)), 2);
        assert_eq!(independence_number(&complete_bipartite(2, 3)), 3);
    }
}
