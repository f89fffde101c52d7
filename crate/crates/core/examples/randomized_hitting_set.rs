//! Randomized hitting set on nested requests: mean faults per sub-phase level.

use mssms::generators::{gen_nested, harmonic_number};
use mssms::harness::{run_trial, Stats};
use mssms::online::{AlgorithmKind, AlgorithmOptions};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

fn main() -> mssms::Result<()> {
    let (k, l) = (3, 2);
    let inst = gen_nested(k, l, 2 * k)?;
    let mut per_level: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for trial in 0..2_000 {
        let trace = run_trial(AlgorithmKind::RandomizedHittingSet, &inst, 42, trial, AlgorithmOptions::default())?;
        let mut runs: Vec<((Option<usize>, Option<usize>), usize)> = Vec::new();
        for r in &trace.records {
            let key = (r.phase, r.subphase);
            match runs.last_mut() {
                Some((last, faults)) if *last == key => *faults += usize::from(r.fault),
                _ => runs.push((key, usize::from(r.fault))),
            }
        }
        for ((_, level), faults) in runs {
            per_level.entry(level.unwrap_or(0)).or_default().push(faults as f64);
        }
    }
    for (s, faults) in per_level {
        let stats = Stats::of(&faults);
        let bound = 1.0 + harmonic_number(l.pow(s as u32)).to_f64().unwrap_or(f64::NAN);
        println!("level {s}: mean {:.3} +- {:.3}, bound {bound:.3}", stats.mean, stats.stderr);
    }
    Ok(())
}
