//! Exact constants for 1-uniform patterns `H = (d_1, .., d_t)`, where
//! `E*_H(k) = (c_H + o(1))k²`.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::constructions::{multi_star, one_uniform};
use crate::extremal::{ex_exact, ex_oneuniform, Budget};
use crate::patterns::Pattern;
use crate::{Error, Rational, Result};

/// A 1-uniform multigraph given by its loop counts, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneUniformPattern {
    d: Vec<u32>,
}

impl OneUniformPattern {
    /// Sorts `d` descending; entries must be positive.
    pub fn new(mut d: Vec<u32>) -> Result<Self> {
        if d.is_empty() || d.contains(&0) {
            return Err(Error::InvalidArgument("loop counts must be positive".into()));
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OneUniformPattern { d })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.d
    }

    pub fn t(&self) -> usize {
        self.d.len()
    }

    /// The sunflowers `(r)` and `(1, .., 1)` are excluded by `t >= 2` and
    /// `d_1 >= 2`.
    pub fn check_nondegenerate(&self) -> Result<()> {
        if self.t() < 2 || self.d[0] < 2 {
            return Err(Error::DegeneratePattern(format!(
                "{:?} is a sunflower; E* is infinite",
                self.d
            )));
        }
        Ok(())
    }

    pub fn to_pattern(&self) -> Pattern {
        Pattern::OneUniform(self.d.clone())
    }
}

/// Optimum of `max x·j` subject to `(t'−1)x + (d_{t'}−1)j <= 1` for every
/// `t'` and `x, j >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CHResult {
    pub c_h: Rational,
    pub x: Rational,
    pub j: Rational,
    /// 1-based indices `t'` whose constraint is tight at the optimum.
    pub active: Vec<usize>,
}

impl CHResult {
    pub fn to_json(&self) -> Value {
        json!({
            "c_H": self.c_h.to_string(),
            "x": self.x.to_string(),
            "j": self.j.to_string(),
            "active": self.active,
        })
    }
}

fn q(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

/// Constraint coefficients `(a, b)` of `a·x + b·j <= rhs`.
fn lines(p: &OneUniformPattern) -> Vec<(Rational, Rational)> {
    p.d.iter()
        .enumerate()
        .map(|(i, &d)| (q(i as u64), q(d as u64 - 1)))
        .collect()
}

/// `c_H` by enumerating every candidate optimum: pairwise intersections
/// of constraint lines and the point where `x·j` is tangent to a single
/// line. Ties go to the lexicographically smaller `(x, j)`.
pub fn c_constant(p: &OneUniformPattern) -> Result<CHResult> {
    p.check_nondegenerate()?;
    let ls = lines(p);
    let one = Rational::one();
    let feasible = |x: &Rational, j: &Rational| {
        !x.is_negative() && !j.is_negative() && ls.iter().all(|(a, b)| a * x + b * j <= one)
    };
    let mut candidates: Vec<(Rational, Rational)> = Vec::new();
    for (a, b) in &ls {
        if !a.is_zero() && !b.is_zero() {
            candidates.push((one.clone() / (a * q(2)), one.clone() / (b * q(2))));
        }
    }
    for (i, (a1, b1)) in ls.iter().enumerate() {
        for (a2, b2) in &ls[i + 1..] {
            let det = a1 * b2 - a2 * b1;
            if !det.is_zero() {
                candidates.push(((b2 - b1) / &det, (a1 - a2) / &det));
            }
        }
    }
    let mut best: Option<(Rational, Rational, Rational)> = None;
    for (x, j) in candidates.into_iter().filter(|(x, j)| feasible(x, j)) {
        let v = &x * &j;
        let better = match &best {
            None => true,
            Some((bv, bx, bj)) => v > *bv || (v == *bv && (&x, &j) < (bx, bj)),
        };
        if better {
            best = Some((v, x, j));
        }
    }
    // The pattern is non-degenerate, so the tangent point of the first
    // constraint with a positive x-coefficient is always a candidate and
    // the feasible region has a positive optimum.
    let (c_h, x, j) = best.expect("bounded feasible region");
    let active = ls
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| a * &x + b * &j == one)
        .map(|(i, _)| i + 1)
        .collect();
    Ok(CHResult { c_h, x, j, active })
}

/// The bounds `1/(4(t−1)(d_1−1)) <= c_H <= 1/((t−1)(d_1−1))`.
pub fn c_bounds(p: &OneUniformPattern) -> Result<(Rational, Rational)> {
    p.check_nondegenerate()?;
    let base = q((p.t() as u64 - 1) * (p.d[0] as u64 - 1));
    Ok((Rational::one() / (q(4) * &base), Rational::one() / base))
}

/// Largest `k` accepted by [`estar_bruteforce`].
pub const ESTAR_MAX_K: u64 = 16;

/// Exact `E*_H(k)`: the maximum of `Σx_i` over `x_1 >= .. >= x_{k−1} >= 0`
/// with `x_1 <= k−1` and `Σ_{i<t'} x_i + Σ_{i>=t'} min(x_i, d_{t'}−1) <= k−1`
/// for every `t'`.
pub fn estar_bruteforce(p: &OneUniformPattern, k: u64) -> Result<u64> {
    p.check_nondegenerate()?;
    if k > ESTAR_MAX_K {
        return Err(Error::GuardExceeded(format!("k = {k} exceeds {ESTAR_MAX_K}")));
    }
    if k <= 1 {
        return Ok(0);
    }
    let mut search = EstarSearch {
        d: &p.d,
        budget: k - 1,
        best: 0,
        lhs: vec![0; p.t()],
    };
    search.extend(0, k - 1, 0);
    Ok(search.best)
}

struct EstarSearch<'a> {
    d: &'a [u32],
    budget: u64,
    best: u64,
    /// Left-hand side of each constraint over the prefix placed so far.
    lhs: Vec<u64>,
}

impl EstarSearch<'_> {
    /// Places entry `pos` (0-based) with value at most `cap`.
    fn extend(&mut self, pos: usize, cap: u64, sum: u64) {
        self.best = self.best.max(sum);
        if pos as u64 >= self.budget || cap == 0 {
            return;
        }
        // Remaining entries are at most `cap` each.
        if sum + cap * (self.budget - pos as u64) <= self.best {
            return;
        }
        for v in (1..=cap).rev() {
            let adds: Vec<u64> = self
                .d
                .iter()
                .enumerate()
                .map(|(tp, &dt)| if pos < tp { v } else { v.min(dt as u64 - 1) })
                .collect();
            if self.lhs.iter().zip(&adds).any(|(l, a)| l + a > self.budget) {
                continue;
            }
            for (l, a) in self.lhs.iter_mut().zip(&adds) {
                *l += a;
            }
            self.extend(pos + 1, v, sum + v);
            for (l, a) in self.lhs.iter_mut().zip(&adds) {
                *l -= a;
            }
        }
    }
}

/// The multi-star `S_{d_1,..,d_t}` read as its 1-uniform loop profile.
pub fn multistar_to_oneuniform(d: &[u32]) -> Result<OneUniformPattern> {
    OneUniformPattern::new(d.to_vec())
}

/// `(ex(S_x, S_d), ex(x, d))`: the multi-star host against the multi-star
/// pattern, and the 1-uniform host against the 1-uniform pattern.
pub fn multistar_transport(x: &[u32], p: &OneUniformPattern, budget: Budget) -> Result<(u64, u64)> {
    let host = multi_star(x);
    let pattern = Pattern::Finite(vec![multi_star(p.degrees())]);
    let star = ex_exact(&host, &pattern, budget)?;
    if !star.complete {
        return Err(Error::GuardExceeded("multi-star ex ran out of budget".into()));
    }
    let loops = ex_exact(&one_uniform(x), &p.to_pattern(), budget)?;
    Ok((star.value, loops.value))
}

/// One inequality `lower <= upper <= lower + C·k` of the reduction chain.
#[derive(Clone, Debug, PartialEq)]
pub struct Sandwich {
    pub upper: &'static str,
    pub lower: &'static str,
    /// Whether `lower <= upper`.
    pub lower_holds: bool,
    /// `upper − lower`.
    pub slack: Rational,
    /// `slack / k`, the empirical constant.
    pub c: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    pub k: u64,
    /// `E*_H(k)` when `k` is within the brute-force guard.
    pub estar: Option<u64>,
    /// `None` when the program is infeasible.
    pub f1: Option<u64>,
    pub f2: Option<u64>,
    pub f3: u64,
    pub f4: Rational,
    pub sandwiches: Vec<Sandwich>,
}

impl ChainReport {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "estar": self.estar,
            "f1": self.f1,
            "f2": self.f2,
            "f3": self.f3,
            "f4": self.f4.to_string(),
            "sandwiches": self.sandwiches.iter().map(|s| json!({
                "upper": s.upper,
                "lower": s.lower,
                "lower_holds": s.lower_holds,
                "slack": s.slack.to_string(),
                "c": s.c.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Largest `k` accepted by [`reduction_chain_check`].
pub const CHAIN_MAX_K: u64 = 100_000;

/// `f⁽¹⁾` with the constraint `(t'−1)x + Σ_{i=t'}^{j} min(x, d_{t'}−1) <= k−1`
/// over integers `x >= d_1`, `j >= 0`.
pub fn f1(p: &OneUniformPattern, k: u64) -> Option<u64> {
    let km = k.saturating_sub(1);
    let mut best = None;
    for x in p.d[0] as u64..=km {
        let mut j = 0u64;
        let ok = |j: u64| {
            p.d.iter().enumerate().all(|(i, &dt)| {
                let tp = i as u64 + 1;
                let tail = (j + 1).saturating_sub(tp) * x.min(dt as u64 - 1);
                (tp - 1) * x + tail <= km
            })
        };
        if !ok(0) {
            continue;
        }
        // Constraints are nondecreasing in j and bounded through t' = 1.
        while j < km && ok(j + 1) {
            j += 1;
        }
        best = best.max(Some(x * j));
    }
    best
}

/// `f⁽²⁾`: `(t'−1)x + (j−t'+1)(d_{t'}−1) <= k−1` over integers `x >= d_1`,
/// `j >= t`.
pub fn f2(p: &OneUniformPattern, k: u64) -> Option<u64> {
    let km = k.saturating_sub(1) as i64;
    let t = p.t() as i64;
    let mut best = None;
    for x in p.d[0] as i64..=km.max(0) {
        let ok = |j: i64| {
            p.d.iter().enumerate().all(|(i, &dt)| {
                let tp = i as i64 + 1;
                (tp - 1) * x + (j - tp + 1) * (dt as i64 - 1) <= km
            })
        };
        if !ok(t) {
            continue;
        }
        let mut j = t;
        while j < km && ok(j + 1) {
            j += 1;
        }
        best = best.max(Some((x * j) as u64));
    }
    best
}

/// `f⁽³⁾`: `(t'−1)x + (d_{t'}−1)j <= k−1` over integers `x, j >= 0`.
pub fn f3(p: &OneUniformPattern, k: u64) -> u64 {
    let km = k.saturating_sub(1);
    (0..=km)
        .filter_map(|x| {
            p.d.iter()
                .enumerate()
                .map(|(i, &dt)| {
                    let used = i as u64 * x;
                    if used > km {
                        None
                    } else if dt == 1 {
                        Some(u64::MAX)
                    } else {
                        Some((km - used) / (dt as u64 - 1))
                    }
                })
                .try_fold(u64::MAX, |m, c| c.map(|c| m.min(c)))
                .map(|j| x * j)
        })
        .max()
        .unwrap_or(0)
}

/// Evaluates `f⁽¹⁾ .. f⁽⁴⁾` and `E*_H(k)` and records each sandwich
/// `f⁽ⁱ⁺¹⁾ <= f⁽ⁱ⁾ <= f⁽ⁱ⁺¹⁾ + C·k` with its empirical `C`.
pub fn reduction_chain_check(p: &OneUniformPattern, k: u64) -> Result<ChainReport> {
    p.check_nondegenerate()?;
    if k < 2 || k > CHAIN_MAX_K {
        return Err(Error::GuardExceeded(format!("k = {k} outside 2..={CHAIN_MAX_K}")));
    }
    let estar = if k <= ESTAR_MAX_K {
        Some(estar_bruteforce(p, k)?)
    } else {
        None
    };
    let (v1, v2, v3) = (f1(p, k), f2(p, k), f3(p, k));
    let km = q(k - 1);
    let v4 = c_constant(p)?.c_h * &km * &km;
    let opt = |v: Option<u64>| q(v.unwrap_or(0));
    let mut pairs: Vec<(&'static str, Rational, &'static str, Rational)> = Vec::new();
    if let Some(e) = estar {
        pairs.push(("estar", q(e), "f1", opt(v1)));
    }
    pairs.push(("f1", opt(v1), "f2", opt(v2)));
    pairs.push(("f2", opt(v2), "f3", q(v3)));
    pairs.push(("f4", v4.clone(), "f3", q(v3)));
    let sandwiches = pairs
        .into_iter()
        .map(|(upper, u, lower, l)| {
            let slack = &u - &l;
            Sandwich {
                upper,
                lower,
                lower_holds: l <= u,
                c: &slack / q(k),
                slack,
            }
        })
        .collect();
    Ok(ChainReport {
        k,
        estar,
        f1: v1,
        f2: v2,
        f3: v3,
        f4: v4,
        sandwiches,
    })
}

/// `ex` of a 1-uniform host against `p`, by the `t'`-truncation formula.
pub fn ex_loops(x: &[u32], p: &OneUniformPattern) -> u64 {
    ex_oneuniform(x, p.degrees()).0.value
}
