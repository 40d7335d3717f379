//! The constant c_H of 1-uniform patterns and the reduction chain at one k.

use inverse_turan::oneuniform::{c_bounds, c_constant, estar_bruteforce, reduction_chain_check, OneUniformPattern};

fn main() -> inverse_turan::Result<()> {
    for d in [vec![2, 2], vec![3, 1], vec![3, 3, 2], vec![5, 4, 2, 2]] {
        let p = OneUniformPattern::new(d)?;
        let c = c_constant(&p)?;
        let (lo, hi) = c_bounds(&p)?;
        println!(
            "d={:?}  c_H={}  at x={} j={}  bounds [{lo}, {hi}]",
            p.degrees(),
            c.c_h,
            c.x,
            c.j
        );
    }
    let p = OneUniformPattern::new(vec![2, 2])?;
    for k in [4, 8, 12] {
        println!("E*_(2,2)({k}) = {}", estar_bruteforce(&p, k)?);
    }
    println!("{:#}", reduction_chain_check(&p, 10)?.to_json());
    Ok(())
}
