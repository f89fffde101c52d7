//! Draws from the coupon-collector input distribution.

use mssms::generators::gen_coupon_collector;
use mssms::harness::{trial_rng, Stats};
use mssms::offline::opt_dp;
use std::collections::BTreeMap;

fn main() -> mssms::Result<()> {
    let mut lengths = Vec::new();
    let mut opts = BTreeMap::new();
    for t in 0..2_000 {
        let draw = gen_coupon_collector(2, 2, &mut trial_rng(5, t))?;
        lengths.push(draw.instance.m() as f64);
        *opts.entry(opt_dp(&draw.instance)?.0.to_string()).or_insert(0) += 1;
    }
    let stats = Stats::of(&lengths);
    println!("mean length {:.3} +- {:.3}", stats.mean, stats.stderr);
    println!("optimum counts: {opts:?}");
    Ok(())
}
