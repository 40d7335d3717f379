use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ex_exact, Budget};
use crate::constructions::clique;
use crate::graphs::MultiHypergraph;
use crate::patterns::Pattern;
use crate::{Error, Rational, Result};

/// Edge count of the Turán graph `T_{t-1}(n)`.
pub fn turan_graph_size(n: usize, t: usize) -> Result<u64> {
    check_turan(n, t)?;
    let r = t - 1;
    let (q, rem) = (n / r, n % r);
    let squares = (rem * (q + 1) * (q + 1) + (r - rem) * q * q) as u64;
    Ok((n as u64 * n as u64 - squares) / 2)
}

/// The balanced complete `(t-1)`-partite graph on `n` vertices; vertex `v`
/// lies in part `v mod (t-1)`.
pub fn turan_graph(n: usize, t: usize) -> Result<MultiHypergraph> {
    check_turan(n, t)?;
    let r = t - 1;
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u % r != v % r)
        .collect();
    Ok(MultiHypergraph::from_pairs(n, &pairs))
}

fn check_turan(n: usize, t: usize) -> Result<()> {
    if n < 1 || t < 3 {
        return Err(Error::InvalidArgument("Turán graph needs n >= 1 and t >= 3".into()));
    }
    Ok(())
}

/// `ex(K_m, p)` for `m = 0..=n_max`.
pub fn clique_table(p: &Pattern, n_max: usize, budget: Budget) -> Result<BTreeMap<usize, u64>> {
    let mut table = BTreeMap::new();
    for m in 0..=n_max {
        let r = ex_exact(&clique(m), p, budget)?;
        if !r.complete {
            return Err(Error::GuardExceeded(format!("ex(K_{m}) did not finish")));
        }
        table.insert(m, r.value);
    }
    Ok(table)
}

/// Lower bound `⌈π_n(p)·e(g)⌉` on `ex(g, p)` where `π_n = ex(K_n, p)/C(n,2)`
/// and `n = |V(g)|`. A uniformly random placement of an extremal subgraph
/// of `K_n` keeps `π_n·e(g)` edges of `g` in expectation, and `ex` is an
/// integer at least that mean.
pub fn averaging_bound(g: &MultiHypergraph, p: &Pattern, table: &BTreeMap<usize, u64>) -> Result<u64> {
    if g.edges().any(|(k, _)| k.len() != 2 || k.has_repeat()) {
        return Err(Error::NotTwoUniform(" and loopless for the averaging bound"));
    }
    if !g.is_simple() && !p.members_simple() {
        return Err(Error::InvalidArgument(
            "averaging bound on multigraphs needs a family of simple graphs".into(),
        ));
    }
    let e = g.edge_count();
    if e == 0 {
        return Ok(0);
    }
    let n = g.n() as u64;
    let ex_n = *table.get(&g.n()).ok_or(Error::MissingTableEntry(g.n()))?;
    let pairs = n * (n - 1) / 2;
    Ok((ex_n * e).div_ceil(pairs))
}

const COVER_GUARD: u64 = 5_000_000;

/// The fractional cover number `ρ*(h)`: the minimum of `Σ φ(e)` subject to
/// `Σ_{e ∋ v} φ(e) >= 1` for every vertex and `φ >= 0`, over edge classes.
/// Solved exactly by enumerating basic solutions.
pub fn fractional_cover_number(h: &MultiHypergraph) -> Result<Rational> {
    if h.edge_count() == 0 {
        return Err(Error::InvalidArgument("pattern must have an edge".into()));
    }
    if h.has_isolated_vertices() {
        return Err(Error::InvalidArgument("pattern must have no isolated vertices".into()));
    }
    let edges: Vec<_> = h.edges().map(|(k, _)| k.vertex_set()).collect();
    let m = edges.len();
    let n = h.n();
    let rows = n + m;
    if binomial(rows as u64, m as u64) > COVER_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{} candidate bases for ρ*",
            binomial(rows as u64, m as u64)
        )));
    }
    // Row i < n: coverage of vertex i (>= 1); row n + j: φ_j >= 0.
    let row = |i: usize| -> (Vec<Rational>, Rational) {
        if i < n {
            let a = edges
                .iter()
                .map(|e| {
                    if e.contains(i) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            (a, Rational::one())
        } else {
            let a = (0..m)
                .map(|j| if j == i - n { Rational::one() } else { Rational::zero() })
                .collect();
            (a, Rational::zero())
        }
    };
    let all: Vec<_> = (0..rows).map(row).collect();
    let mut best: Option<Rational> = None;
    let mut pick: Vec<usize> = (0..m).collect();
    loop {
        let system: Vec<_> = pick.iter().map(|&i| all[i].clone()).collect();
        if let Some(phi) = solve(system) {
            let feasible = all.iter().all(|(a, b)| {
                let lhs: Rational = a.iter().zip(&phi).map(|(x, y)| x * y).sum();
                &lhs >= b
            });
            if feasible {
                let obj: Rational = phi.iter().sum();
                if best.as_ref().map_or(true, |b| &obj < b) {
                    best = Some(obj);
                }
            }
        }
        if !next_combination(&mut pick, rows) {
            break;
        }
    }
    best.ok_or_else(|| Error::InvalidArgument("cover program infeasible".into()))
}

/// Exponent `(s − 1)/(s − ρ*)` of the general upper bound, `s = e(h)`.
pub fn genupper_exponent(h: &MultiHypergraph) -> Result<Rational> {
    let s = Rational::from_integer(BigInt::from(h.edge_count()));
    let rho = fractional_cover_number(h)?;
    if rho >= s {
        return Err(Error::Inapplicable(format!("ρ* = {rho} is not below e(H) = {s}")));
    }
    Ok((&s - Rational::one()) / (&s - rho))
}

fn solve(mut rows: Vec<(Vec<Rational>, Rational)>) -> Option<Vec<Rational>> {
    let m = rows.len();
    for col in 0..m {
        let piv = (col..m).find(|&r| !rows[r].0[col].is_zero())?;
        rows.swap(col, piv);
        let (pa, pb) = rows[col].clone();
        for r in 0..m {
            if r != col && !rows[r].0[col].is_zero() {
                let f = &rows[r].0[col] / &pa[col];
                for c in col..m {
                    let delta = &f * &pa[c];
                    rows[r].0[c] -= delta;
                }
                rows[r].1 -= &f * &pb;
            }
        }
    }
    Some(rows.into_iter().enumerate().map(|(i, (a, b))| b / &a[i]).collect())
}

fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r.min(u64::MAX as u128) as u64
}
