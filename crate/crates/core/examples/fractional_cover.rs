//! Fractional cover numbers and the resulting exponent bounds.

use inverse_turan::constructions::{clique, complete_bipartite, cycle, path, star};
use inverse_turan::extremal::{fractional_cover_number, genupper_exponent};

fn main() -> inverse_turan::Result<()> {
    let graphs = [
        ("K2", path(1)),
        ("P3", path(3)),
        ("K3", clique(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K4", clique(4)),
        ("K2,3", complete_bipartite(2, 3)),
        ("S3", star(3)),
    ];
    for (name, g) in graphs {
        let rho = fractional_cover_number(&g)?;
        match genupper_exponent(&g) {
            Ok(e) => println!("{name:<5} rho*={rho:<4} exponent={e}"),
            Err(err) => println!("{name:<5} rho*={rho:<4} ({err})"),
        }
    }
    Ok(())
}
