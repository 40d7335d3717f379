//! The tagged regression suite, printed as a table.

use inverse_turan::cli::{verify_paper, Fault, Profile};

fn main() {
    let report = verify_paper(Profile::Quick, Fault::None);
    for t in &report.tags {
        println!(
            "{:<16} {:<4} {:>6} checks",
            t.tag,
            if t.pass { "ok" } else { "FAIL" },
            t.checks
        );
    }
    let broken = verify_paper(Profile::Quick, Fault::TuranSizeOffset);
    let t = broken.tag("thm:cliques").expect("tag exists");
    println!("with a corrupted Turan size: pass={} failure={:?}", t.pass, t.failure);
}
