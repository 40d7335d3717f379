//! Contracting an independent set and restricting a search to hosts whose
//! simplification is a clique.

use inverse_turan::constructions::cycle;
use inverse_turan::extremal::{ex_exact, Budget};
use inverse_turan::graphs::{contract, simplify, Simplify, VertexSet};
use inverse_turan::inverse::{inverse_search, SearchSpace};
use inverse_turan::Pattern;

fn main() -> inverse_turan::Result<()> {
    let u = Budget::UNLIMITED;
    let c6 = cycle(6);
    let c = contract(&c6, VertexSet::from_slice(&[0, 3]))?;
    let p = Pattern::Clique(3);
    println!(
        "C6 -> contract {{0,3}}: n={} e={}  ex(K3) {} -> {}",
        c.n(),
        c.edge_count(),
        ex_exact(&c6, &p, u)?.value,
        ex_exact(&c, &p, u)?.value
    );
    println!(
        "distance-2 closure of C6 has {} edges",
        simplify(&c6, Simplify::DistanceClosure(2))?.edge_count()
    );

    for (p, k, f) in [
        (Pattern::Clique(3), 7, Simplify::UnderlyingSimple),
        (Pattern::AllCycles, 5, Simplify::ComponentClosure),
        (Pattern::Path(3), 4, Simplify::DistanceClosure(3)),
    ] {
        let full = inverse_search(&p, k, &SearchSpace::simple(12, 11), u)?;
        let small = inverse_search(&p, k, &SearchSpace::simple(12, 11).with_compression(f), u)?;
        println!(
            "E_{p}({k}): {:?} from {} nodes, {:?} from {} nodes with {f:?}",
            full.best_value, full.stats.nodes, small.best_value, small.stats.nodes
        );
    }
    Ok(())
}
