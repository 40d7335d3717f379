//! The explicit extremal hosts, each checked to satisfy ex(G, H) < k.

use inverse_turan::constructions::{dumbbell_simplehost, gk_graph, p1p2_host, pendant_graph};
use inverse_turan::extremal::Budget;
use inverse_turan::inverse::verify_host;
use inverse_turan::Pattern;

fn main() -> inverse_turan::Result<()> {
    let u = Budget::UNLIMITED;
    for k in 4..=7 {
        let g = pendant_graph(k - 1, &vec![1; k - 1])?;
        let r = verify_host(&Pattern::Path(3), k as u64, &g, u)?;
        println!(
            "pendant K_{}*(1,..,1)  k={k}  e={:<3} ex={} ok={}",
            k - 1,
            r.edges,
            r.ex.value,
            r.passes
        );
    }
    for k in 3..=7 {
        let r = verify_host(&Pattern::P3K3, k as u64, &gk_graph(k)?, u)?;
        println!(
            "G_{k}                   k={k}  e={:<3} ex={} ok={}",
            r.edges, r.ex.value, r.passes
        );
    }
    for k in 7..=10 {
        let r = verify_host(&Pattern::StarUnionEdge, k as u64, &p1p2_host(k)?, u)?;
        println!(
            "P1uP2 host            k={k}  e={:<3} ex={} ok={}",
            r.edges, r.ex.value, r.passes
        );
    }
    for k in 2..=6 {
        let r = verify_host(&Pattern::Dumbbell(2), k as u64, &dumbbell_simplehost(k)?, u)?;
        println!(
            "dumbbell simple host  k={k}  e={:<3} ex={} ok={}",
            r.edges, r.ex.value, r.passes
        );
    }
    Ok(())
}
