//! The deterministic hitting set algorithm and its per-phase fault bound.

use mssms::generators::{gen_random, phase_fault_bound};
use mssms::harness::{run_trial, trial_rng};
use mssms::online::{AlgorithmKind, AlgorithmOptions};
use mssms::SpaceSpec;

fn main() -> mssms::Result<()> {
    let (k, l) = (2, 2);
    let inst = gen_random(SpaceSpec::Uniform { n: 6 }, k, l, 60, &mut trial_rng(1, 0))?;
    let trace = run_trial(AlgorithmKind::HittingSet, &inst, 0, 0, AlgorithmOptions::default())?;
    println!("cost {} over {} phases", trace.total_cost, trace.phases());
    for (phase, faults) in trace.faults_per_phase() {
        println!("  phase {phase}: {faults} faults (bound {})", phase_fault_bound(k, l));
    }
    Ok(())
}
