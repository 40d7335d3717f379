use num_bigint::BigUint;

use crate::graphs::is_sunflower;
use crate::patterns::Pattern;
use crate::Result;

/// Whether `E_H(k)` is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finiteness {
    /// Some member is a sunflower with `edges` edges, so `E_H(k) = ∞` for
    /// every `k >= edges`; below that `E_H(k) = k - 1`.
    Infinite { from_k: u64, core_size: usize },
    /// Every `r`-uniform host with more than `r!(k−1)^{r+1}` edges
    /// (`r!(k−1)^r` for simple hosts) has `ex >= k`.
    ErdosRado { r: usize },
    /// A finite family of non-uniform graphs using `sizes` distinct edge
    /// sizes: `e_i(G) < k` for each such size.
    NonUniform { sizes: usize },
    /// A named infinite family with a known finite value.
    Named,
    /// No member can embed in a host of the requested kind.
    Unreachable,
}

impl Finiteness {
    pub fn is_infinite_at(&self, k: u64) -> bool {
        matches!(self, Finiteness::Infinite { from_k, .. } if k >= *from_k)
    }

    /// An upper bound on `E_H(k)` when one is known.
    pub fn cap(&self, k: u64, simple: bool) -> Option<BigUint> {
        let km = BigUint::from(k.saturating_sub(1));
        match self {
            Finiteness::ErdosRado { r } => {
                let fact: BigUint = (1..=*r as u64).map(BigUint::from).product();
                let exp = if simple { *r } else { r + 1 } as u32;
                Some(fact * km.pow(exp))
            }
            Finiteness::NonUniform { sizes } => Some(BigUint::from(*sizes) * km),
            Finiteness::Unreachable => Some(km),
            Finiteness::Infinite { from_k, .. } if k < *from_k => Some(km),
            _ => None,
        }
    }
}

/// Sunflower test over the family. On simple hosts, members that are not
/// simple can never embed and are ignored.
pub fn finiteness_check(p: &Pattern, simple_hosts: bool) -> Result<Finiteness> {
    p.validate()?;
    let Some(members) = p.members() else {
        return Ok(Finiteness::Named);
    };
    let members: Vec<_> = members.into_iter().filter(|h| !simple_hosts || h.is_simple()).collect();
    if members.is_empty() {
        return Ok(Finiteness::Unreachable);
    }
    let mut best: Option<(u64, usize)> = None;
    for h in members.iter().filter(|h| h.uniformity().is_some()) {
        if let Some(core) = is_sunflower(h) {
            let m = h.edge_count();
            if best.map_or(true, |(b, _)| m < b) {
                best = Some((m, core.len()));
            }
        }
    }
    if let Some((from_k, core_size)) = best {
        return Ok(Finiteness::Infinite { from_k, core_size });
    }
    if members.iter().all(|h| h.uniformity().is_none()) {
        let mut sizes: Vec<usize> = members.iter().flat_map(|h| h.edge_sizes()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        return Ok(Finiteness::NonUniform { sizes: sizes.len() });
    }
    let r = members.iter().filter_map(|h| h.uniformity()).max().unwrap();
    Ok(Finiteness::ErdosRado { r })
}
