//! Multigraph hosts for the dumbbell whose density e(G)/k approaches the
//! golden ratio from below.

use inverse_turan::constructions::{dumbbell_multihost, dumbbell_multihost_best, dumbbell_multihost_ex};

fn main() -> inverse_turan::Result<()> {
    println!("{:>7} {:>4} {:>9} {:>8} {:>7}", "k", "n", "e(G)", "ex", "e/k");
    for k in [50u64, 100, 500, 1000, 5000, 20000] {
        let n = dumbbell_multihost_best(k)?;
        let g = dumbbell_multihost(k, n)?;
        let ex = dumbbell_multihost_ex(k, n)?;
        println!(
            "{k:>7} {n:>4} {:>9} {ex:>8} {:>7.4}",
            g.edge_count(),
            g.edge_count() as f64 / k as f64
        );
    }
    println!("phi = {:.4}", (1.0 + 5f64.sqrt()) / 2.0);
    Ok(())
}
