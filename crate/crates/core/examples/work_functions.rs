//! Work function tables, supports and the quasi-convexity check.

use mssms::generators::{gen_wfa_counterexample, WfaCounterexample};
use mssms::workfunction::{QuasiConvexity, WorkFunction};
use mssms::Configuration;

fn main() -> mssms::Result<()> {
    let inst = gen_wfa_counterexample(WfaCounterexample::QuasiConvex, 0)?;
    let w = WorkFunction::new(&inst.space, &inst.initial)?.after(&inst.requests);
    println!("minimum after {} requests: {}", inst.m(), w.min_value());
    let minimizers: Vec<_> = w
        .table()
        .configs()
        .iter()
        .zip(w.values())
        .filter(|(_, v)| **v == w.min_value())
        .map(|(c, _)| c.points().iter().map(|p| p + 1).collect::<Vec<_>>())
        .collect();
    println!("attained at {minimizers:?}; {} other configurations", w.table().len() - minimizers.len());

    let (x, y) = (Configuration::new(vec![2, 4]), Configuration::new(vec![3, 5]));
    match w.quasiconvex_check(&x, &y)? {
        QuasiConvexity::Witness(g) => println!("quasi-convex with bijection {g:?}"),
        QuasiConvexity::Violated(v) => println!("not quasi-convex: all {} bijections fail", v.len()),
    }

    let support = gen_wfa_counterexample(WfaCounterexample::Support, 3)?;
    let ws = WorkFunction::new(&support.space, &support.initial)?.after(&support.requests);
    println!("support has {} configurations", ws.support().len());
    Ok(())
}
