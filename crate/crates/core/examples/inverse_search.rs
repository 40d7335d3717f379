//! E_H(k) by canonical augmentation, with caps large enough to certify
//! the value: any valid host beyond them would have been reported.

use inverse_turan::extremal::Budget;
use inverse_turan::inverse::{inverse_search, SearchSpace, Status};
use inverse_turan::Pattern;

fn main() -> inverse_turan::Result<()> {
    let runs = [
        (Pattern::AllCycles, 4, SearchSpace::simple(14, 7)),
        (Pattern::EvenCycles, 6, SearchSpace::simple(20, 10)),
        (Pattern::Path(3), 4, SearchSpace::simple(14, 7)),
        (Pattern::P3K3, 4, SearchSpace::simple(16, 8)),
        (Pattern::Clique(3), 7, SearchSpace::multi(22, 11, 6)),
        (Pattern::Dumbbell(2), 5, SearchSpace::simple(14, 7).with_loops(1)),
    ];
    for (p, k, space) in runs {
        let r = inverse_search(&p, k, &space, Budget::UNLIMITED)?;
        let certified = r.status == Status::ExactWithinCaps { caps_binding: false };
        println!(
            "E_{p}({k}) = {:?}  hosts: {}  certified: {certified}  nodes: {}",
            r.best_value,
            r.hosts.len(),
            r.stats.nodes
        );
        for h in &r.hosts {
            let edges: Vec<String> = h
                .graph
                .edges()
                .map(|(e, m)| {
                    let vs: Vec<String> = e.vertices().map(|v| v.to_string()).collect();
                    if m > 1 {
                        format!("{}x{m}", vs.join(""))
                    } else {
                        vs.join("")
                    }
                })
                .collect();
            println!("    {}", edges.join(" "));
        }
    }
    Ok(())
}
