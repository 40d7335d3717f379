//! Generators for standard graphs and for the extremal hosts of the inverse
//! Turán problem.

use crate::extremal::dumbbell_uniform_ex;
use crate::graphs::{EdgeKey, MultiHypergraph};
use crate::{Error, Rational, Result};

pub fn clique(n: usize) -> MultiHypergraph {
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    MultiHypergraph::from_pairs(n, &pairs)
}

pub fn complete_bipartite(a: usize, b: usize) -> MultiHypergraph {
    let pairs: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    MultiHypergraph::from_pairs(a + b, &pairs)
}

/// `2K_k`: two disjoint cliques of order `k`.
pub fn two_cliques(k: usize) -> MultiHypergraph {
    clique(k).disjoint_union(&clique(k)).expect("within cap")
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> MultiHypergraph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiHypergraph::from_pairs(n, &pairs)
}

/// The path `P_t` with `t` edges.
pub fn path(t: usize) -> MultiHypergraph {
    let pairs: Vec<_> = (0..t).map(|i| (i, i + 1)).collect();
    MultiHypergraph::from_pairs(t + 1, &pairs)
}

/// The star `K_{1,t}` centred at vertex 0.
pub fn star(t: usize) -> MultiHypergraph {
    let pairs: Vec<_> = (1..=t).map(|i| (0, i)).collect();
    MultiHypergraph::from_pairs(t + 1, &pairs)
}

/// The matching `tK_2`.
pub fn matching(t: usize) -> MultiHypergraph {
    let pairs: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
    MultiHypergraph::from_pairs(2 * t, &pairs)
}

/// `P_1 ∪ P_2`: an edge disjoint from a path with two edges.
pub fn star_union_edge() -> MultiHypergraph {
    MultiHypergraph::from_pairs(5, &[(0, 1), (2, 3), (3, 4)])
}

/// The dumbbell `D_r`: one `r`-edge with a 1-uniform loop at each vertex.
pub fn dumbbell(r: usize) -> MultiHypergraph {
    let mut g = MultiHypergraph::new(r).expect("within cap");
    let all: Vec<usize> = (0..r).collect();
    g.add_edge(&all, 1).expect("valid edge");
    for v in 0..r {
        g.add_key(EdgeKey::loop1(v), 1).expect("valid loop");
    }
    g
}

/// The 1-uniform graph with `x_i` loops at vertex `i`.
pub fn one_uniform(x: &[u32]) -> MultiHypergraph {
    let mut g = MultiHypergraph::new(x.len()).expect("within cap");
    for (v, &m) in x.iter().enumerate() {
        if m > 0 {
            g.add_key(EdgeKey::loop1(v), m).expect("valid loop");
        }
    }
    g
}

/// The multi-star `S_{x_1,..,x_t}`: a centre joined to leaf `i` by `x_i`
/// parallel edges. The centre is vertex 0.
pub fn multi_star(x: &[u32]) -> MultiHypergraph {
    let mut g = MultiHypergraph::new(x.len() + 1).expect("within cap");
    for (i, &m) in x.iter().enumerate() {
        if m > 0 {
            g.add_key(EdgeKey::pair(0, i + 1), m).expect("valid edge");
        }
    }
    g
}

/// The pendant graph `K_k*(r_1,..,r_s)`: a clique on `0..k` whose vertices
/// are split into consecutive blocks of sizes `r_i`, plus a pendant vertex
/// `k + i` joined to every vertex of block `i`.
pub fn pendant_graph(k: usize, parts: &[usize]) -> Result<MultiHypergraph> {
    if parts.is_empty() || parts.contains(&0) || parts.iter().sum::<usize>() != k {
        return Err(Error::InvalidArgument(format!(
            "pendant blocks {parts:?} do not partition a {k}-clique"
        )));
    }
    let mut g = clique(k);
    g.extend_vertices(k + parts.len())?;
    let mut start = 0;
    for (i, &r) in parts.iter().enumerate() {
        for v in start..start + r {
            g.add_key(EdgeKey::pair(v, k + i), 1)?;
        }
        start += r;
    }
    Ok(g)
}

/// `G_k`: `K_{k+1}` minus a perfect matching for odd `k`, and minus
/// `(k−2)/2 K_2 ∪ P_2` for even `k`.
pub fn gk_graph(k: usize) -> Result<MultiHypergraph> {
    if k < 3 {
        return Err(Error::InvalidArgument("G_k needs k >= 3".into()));
    }
    let mut g = clique(k + 1);
    let matched = if k % 2 == 1 { k + 1 } else { k - 2 };
    for v in (0..matched).step_by(2) {
        g.remove_copy(&EdgeKey::pair(v, v + 1));
    }
    if k % 2 == 0 {
        g.remove_copy(&EdgeKey::pair(k - 2, k - 1));
        g.remove_copy(&EdgeKey::pair(k - 1, k));
    }
    Ok(g)
}

/// The host with `ex(G, P_1 ∪ P_2) = k − 1`: `2K_k` for odd `k`; for even
/// `k`, the Cayley graph on `Z_{2k−1}` with connection set
/// `[−(k−2)/2, (k−2)/2] \ {0}` plus `k − 1` alternate pairs along the cycle
/// `0, k/2, k, ..` of difference `k/2`.
pub fn p1p2_host(k: usize) -> Result<MultiHypergraph> {
    if k < 7 {
        return Err(Error::InvalidArgument("p1p2 host needs k >= 7".into()));
    }
    if k % 2 == 1 {
        return Ok(two_cliques(k));
    }
    let n = 2 * k - 1;
    let half = (k - 2) / 2;
    let mut g = MultiHypergraph::new(n)?;
    for x in 0..n {
        for d in 1..=half {
            g.add_key(EdgeKey::pair(x, (x + d) % n), 1)?;
        }
    }
    let step = |j: usize| j * (k / 2) % n;
    for j in (0..n - 1).step_by(2).take(k - 1) {
        g.add_key(EdgeKey::pair(step(j), step(j + 1)), 1)?;
    }
    Ok(g)
}

/// Overlaid cliques on `0..r_i` for `r_1 >= r_2 >= ..`; parallel edges
/// accumulate.
pub fn nested_cliques(r: &[usize]) -> Result<MultiHypergraph> {
    if r.is_empty() || r.windows(2).any(|w| w[0] < w[1]) || r[r.len() - 1] < 2 {
        return Err(Error::InvalidArgument(
            "nested cliques need non-increasing orders >= 2".into(),
        ));
    }
    let mut g = MultiHypergraph::new(r[0])?;
    for &ri in r {
        for (k, _) in clique(ri).edges() {
            g.add_key(k.clone(), 1)?;
        }
    }
    Ok(g)
}

/// Disjoint dumbbells reaching `ex(G, D) = k − 1` with `⌊3(k−1)/2⌋` edges
/// and at most one loop per vertex: `(k−1)/2` dumbbells for odd `k`, and
/// `k/2 − 1` dumbbells plus an edge for even `k`.
pub fn dumbbell_simplehost(k: usize) -> Result<MultiHypergraph> {
    if k < 2 {
        return Err(Error::InvalidArgument("dumbbell host needs k >= 2".into()));
    }
    let mut g = MultiHypergraph::default();
    for _ in 0..(k - 1) / 2 {
        g = g.disjoint_union(&dumbbell(2))?;
    }
    if k % 2 == 0 {
        g = g.disjoint_union(&path(1))?;
    }
    Ok(g)
}

/// `F_31 / F_32`, within `10^-13` of `1/φ`.
pub fn phi_hat() -> Rational {
    Rational::new(1_346_269.into(), 2_178_309.into())
}

/// Parameters `(t, s)` of the golden-ratio multigraph on `n` vertices:
/// `t = ⌊k/C(n,2) · 1/(φ̂+2φ̂²)⌋` parallel edges per pair and
/// `s = ⌊k/n · (2φ̂ − 1/n)/(φ̂+2φ̂²)⌋` loops per vertex.
pub fn dumbbell_multihost_params(k: u64, n: u64) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::InvalidArgument("dumbbell multihost needs n >= 2".into()));
    }
    let r = |x: u64| Rational::from_integer(x.into());
    let ph = phi_hat();
    let denom = &ph + r(2) * &ph * &ph;
    let t = r(k) / r(n * (n - 1) / 2) / &denom;
    let s = r(k) / r(n) * (r(2) * &ph - Rational::new(1.into(), n.into())) / &denom;
    let floor = |x: Rational| -> Result<u64> {
        u64::try_from(x.floor().to_integer()).map_err(|_| Error::InvalidArgument("parameter out of range".into()))
    };
    let (t, s) = (floor(t)?, floor(s)?);
    if t == 0 || s == 0 {
        return Err(Error::InvalidArgument(format!(
            "k = {k}, n = {n} gives t = {t}, s = {s}; both must be positive"
        )));
    }
    Ok((t, s))
}

/// `t` parallel edges on every pair of `n` vertices and `s` loops per
/// vertex, with `(t, s)` from [`dumbbell_multihost_params`].
pub fn dumbbell_multihost(k: u64, n: usize) -> Result<MultiHypergraph> {
    let (t, s) = dumbbell_multihost_params(k, n as u64)?;
    let mut g = MultiHypergraph::new(n)?;
    for u in 0..n {
        g.add_key(EdgeKey::loop1(u), s as u32)?;
        for v in u + 1..n {
            g.add_key(EdgeKey::pair(u, v), t as u32)?;
        }
    }
    Ok(g)
}

/// Closed-form `ex(G, D)` for [`dumbbell_multihost`]: the best set `L` of
/// looped vertices has size `ℓ` and drops the `C(ℓ,2)` pairs inside it.
pub fn dumbbell_multihost_ex(k: u64, n: usize) -> Result<u64> {
    let (t, s) = dumbbell_multihost_params(k, n as u64)?;
    Ok(dumbbell_uniform_ex(n as u64, t, s).0)
}

/// The vertex count `n >= 2` maximizing `e(G)` among golden-ratio hosts
/// with `ex(G, D) < k`; ties go to the smaller `n`.
pub fn dumbbell_multihost_best(k: u64) -> Result<usize> {
    let mut best: Option<(u64, usize)> = None;
    for n in 2..=crate::graphs::MAX_VERTICES {
        let Ok((t, s)) = dumbbell_multihost_params(k, n as u64) else {
            continue;
        };
        let n64 = n as u64;
        if dumbbell_uniform_ex(n64, t, s).0 >= k {
            continue;
        }
        let e = t * (n64 * (n64 - 1) / 2) + s * n64;
        if best.map_or(true, |(b, _)| e > b) {
            best = Some((e, n));
        }
    }
    best.map(|(_, n)| n)
        .ok_or_else(|| Error::InvalidArgument(format!("no golden-ratio host for k = {k}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{ex_exact, Budget};
    use crate::patterns::Pattern;
    use num_traits::Signed;

    #[test]
    fn standard_sizes() {
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(clique(5).edge_count(), 10);
        assert_eq!(two_cliques(7).edge_count(), 42);
        assert_eq!(path(3).n(), 4);
        assert_eq!(dumbbell(3).edge_count(), 4);
        assert_eq!(multi_star(&[3, 2, 1]).edge_count(), 6);
        assert_eq!(one_uniform(&[2, 0, 1]).edge_count(), 3);
    }

    fn ex(g: &MultiHypergraph, p: Pattern) -> u64 {
        let r = ex_exact(g, &p, Budget::UNLIMITED).unwrap();
        assert!(r.complete);
        r.value
    }

    #[test]
    fn pendant_graphs() {
        assert_eq!(pendant_graph(3, &[1, 1, 1]).unwrap().edge_count(), 6);
        let g = pendant_graph(5, &[2, 3]).unwrap();
        let mut degrees: Vec<u64> = (0..g.n()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [2, 3, 5, 5, 5, 5, 5]);
        assert_eq!(ex(&pendant_graph(5, &[1; 5]).unwrap(), Pattern::Path(3)), 5);
        assert!(ex(&pendant_graph(5, &[5]).unwrap(), Pattern::Path(3)) > 5);
        for k in 4..=8 {
            let g = pendant_graph(k - 1, &vec![1; k - 1]).unwrap();
            assert_eq!(ex(&g, Pattern::Path(3)), k as u64 - 1);
        }
        assert!(pendant_graph(4, &[2, 1]).is_err());
        assert!(pendant_graph(3, &[3, 0]).is_err());
    }

    #[test]
    fn gk_graphs() {
        for (k, e) in [(3, 4), (4, 7), (5, 12)] {
            assert_eq!(gk_graph(k).unwrap().edge_count(), e);
        }
        for k in 3..=9 {
            let g = gk_graph(k).unwrap();
            assert_eq!(ex(&g, Pattern::P3K3), k as u64 - 1, "k = {k}");
        }
    }

    #[test]
    fn p1p2_hosts() {
        let g = p1p2_host(7).unwrap();
        assert_eq!((g.edge_count(), g.max_degree()), (42, 6));
        assert_eq!(crate::extremal::matching_number(&g), 6);
        let g = p1p2_host(8).unwrap();
        assert_eq!(g.edge_count(), 52);
        let mut degrees: Vec<u64> = (0..g.n()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees[0], 6);
        assert!(degrees[1..].iter().all(|&d| d == 7));
        assert_eq!(p1p2_host(10).unwrap().edge_count(), 85);
        for k in 7..=12 {
            assert_eq!(ex(&p1p2_host(k).unwrap(), Pattern::StarUnionEdge), k as u64 - 1);
        }
        assert!(p1p2_host(6).is_err());
    }

    #[test]
    fn nested() {
        assert_eq!(nested_cliques(&[3]).unwrap(), clique(3));
        let g = nested_cliques(&[3, 2]).unwrap();
        assert_eq!((g.edge_count(), g.multiplicity(&EdgeKey::pair(0, 1))), (4, 2));
        assert_eq!(nested_cliques(&[4, 3, 2]).unwrap().edge_count(), 10);
        assert!(nested_cliques(&[2, 3]).is_err());
    }

    #[test]
    fn dumbbell_hosts() {
        for (k, e) in [(2, 1), (3, 3), (4, 4), (5, 6), (6, 7), (7, 9)] {
            let g = dumbbell_simplehost(k).unwrap();
            assert_eq!(g.edge_count(), e);
            assert_eq!(ex(&g, Pattern::Dumbbell(2)), k as u64 - 1);
        }
    }

    #[test]
    fn golden_ratio_host() {
        let ph = phi_hat();
        // φ̂² + φ̂ = 1 up to the approximant error.
        let err = &ph * &ph + &ph - Rational::from_integer(1.into());
        assert!(err.abs() < Rational::new(1.into(), 1_000_000_000_000i64.into()));

        for n in 2..=4usize {
            for (t, s) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
                let mut g = MultiHypergraph::new(n).unwrap();
                for u in 0..n {
                    g.add_key(EdgeKey::loop1(u), s).unwrap();
                    for v in u + 1..n {
                        g.add_key(EdgeKey::pair(u, v), t).unwrap();
                    }
                }
                let generic = crate::extremal::ex_generic(&g, &Pattern::Dumbbell(2), Budget::UNLIMITED);
                let closed = dumbbell_uniform_ex(n as u64, t as u64, s as u64).0;
                assert_eq!(generic.value, closed, "n={n} t={t} s={s}");
            }
        }

        let k = 1000;
        let n = dumbbell_multihost_best(k).unwrap();
        let g = dumbbell_multihost(k, n).unwrap();
        assert!(dumbbell_multihost_ex(k, n).unwrap() < k);
        assert!(g.edge_count() * 100 >= 155 * k);
        let (t, s) = dumbbell_multihost_params(k, n as u64).unwrap();
        assert_eq!(g.edge_count(), t * (n * (n - 1) / 2) as u64 + s * n as u64);
        assert!(dumbbell_multihost_params(3, 10).is_err());
    }
}
