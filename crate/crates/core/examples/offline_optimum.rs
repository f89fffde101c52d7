//! Exact offline optima from the four solvers.

use mssms::generators::gen_random;
use mssms::harness::trial_rng;
use mssms::offline::{opt_bruteforce, opt_dp, opt_kserver_flow, opt_mss_path};
use mssms::SpaceSpec;

fn main() -> mssms::Result<()> {
    let mut rng = trial_rng(3, 0);
    let general = gen_random(SpaceSpec::Uniform { n: 6 }, 2, 2, 8, &mut rng)?;
    let (dp, schedule) = opt_dp(&general)?;
    println!("k=2 l=2: dp {dp}, brute force {}", opt_bruteforce(&general)?);
    for (i, moves) in schedule.steps.iter().enumerate().filter(|(_, m)| !m.is_empty()) {
        for mv in moves {
            println!("  request {}: server {} {} -> {}", i + 1, mv.server + 1, mv.from + 1, mv.to + 1);
        }
    }

    let line = SpaceSpec::Line { coords: (0..8).map(|c| (c * c).into()).collect() };
    let kserver = gen_random(line.clone(), 3, 1, 12, &mut rng)?;
    println!("k-server: flow {}, dp {}", opt_kserver_flow(&kserver)?.0, opt_dp(&kserver)?.0);

    let single = gen_random(line, 1, 3, 12, &mut rng)?;
    println!("one server: layered path {}, dp {}", opt_mss_path(&single)?.0, opt_dp(&single)?.0);
    Ok(())
}
