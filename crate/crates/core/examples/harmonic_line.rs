//! Harmonic on its bad line instance: exact expectation against simulation.

use mssms::generators::gen_harmonic_line;
use mssms::harness::{run, RunOptions};
use mssms::offline::opt_mss_path;
use mssms::online::{harmonic_expected_cost, AlgorithmKind};
use num_traits::ToPrimitive;

fn main() -> mssms::Result<()> {
    for m in [1, 2, 5, 10] {
        let inst = gen_harmonic_line(m)?;
        let exact = harmonic_expected_cost(&inst.space, &inst.initial, &inst.requests);
        println!("m = {m:2}: expected cost {} ({:.6})", exact, exact.to_f64().unwrap_or(f64::NAN));
    }
    let inst = gen_harmonic_line(10)?;
    let summary = run(AlgorithmKind::Harmonic, &inst, &RunOptions { trials: 20_000, ..RunOptions::default() })?;
    println!("simulated: {:.4} +- {:.4}", summary.cost.mean, summary.cost.stderr);
    println!("optimum: {}", opt_mss_path(&inst)?.0);
    Ok(())
}
