//! ex(G, H) for a few hosts and families, with the method that decided it.

use inverse_turan::constructions::{clique, complete_bipartite, cycle, two_cliques};
use inverse_turan::extremal::{ex_exact, Budget};
use inverse_turan::Pattern;

fn main() -> inverse_turan::Result<()> {
    let cases = [
        ("K5", clique(5), Pattern::Clique(3)),
        ("K6", clique(6), Pattern::Clique(4)),
        ("K5", clique(5), Pattern::AllCycles),
        ("K3,3", complete_bipartite(3, 3), Pattern::EvenCycles),
        ("C7", cycle(7), Pattern::Path(3)),
        ("2K5", two_cliques(5), Pattern::StarUnionEdge),
        ("K5", clique(5), Pattern::P3K3),
    ];
    println!("{:<6} {:<12} {:>3}  method", "host", "pattern", "ex");
    for (name, g, p) in cases {
        let r = ex_exact(&g, &p, Budget::UNLIMITED)?;
        println!("{name:<6} {:<12} {:>3}  {}", p.to_string(), r.value, r.method);
    }
    Ok(())
}
