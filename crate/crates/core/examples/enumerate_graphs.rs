//! Isomorph-free enumeration: one canonical representative per class.

use inverse_turan::graphs::canonical_form;
use inverse_turan::inverse::{enumerate_hosts, SearchSpace};

fn main() -> inverse_turan::Result<()> {
    for n in 1..=7 {
        let graphs = enumerate_hosts(&SearchSpace::simple(n, (n * (n - 1) / 2).max(1) as u64))?;
        println!("graphs on {n} vertices: {}", graphs.len());
    }
    let multi = enumerate_hosts(&SearchSpace::multi(4, 4, 2))?;
    println!("multigraphs with <= 4 edges, multiplicity <= 2: {}", multi.len());
    let looped = enumerate_hosts(&SearchSpace::simple(6, 3).with_loops(1))?;
    println!("graphs with <= 3 edges and loops allowed: {}", looped.len());
    if let Some(g) = multi.last() {
        println!("last multigraph class: {}", canonical_form(g).to_hex());
    }
    Ok(())
}
