//! The covering LP on the integrality-gap family and its rounding to k*l servers.

use mssms::generators::gen_integrality_gap;
use mssms::offline::{opt_dp, round_to_kl};

fn main() -> mssms::Result<()> {
    let inst = gen_integrality_gap(2, 2, 3)?;
    let r = round_to_kl(&inst)?;
    println!("{} requests, {} LP variables, {} pivots", inst.m(), r.lp.values.len(), r.lp.pivots);
    println!("LP value {}", r.lp.value);
    println!("integral optimum with k servers {}", opt_dp(&inst)?.0);
    println!("rounded schedule with {} servers costs {}", r.schedule.servers(), r.cost);
    r.schedule.verify(&inst.space, &inst.requests)?;
    Ok(())
}
