//! The cluster adversary against each online algorithm.

use mssms::harness::{adversary_game, GameOptions};
use mssms::online::AlgorithmKind;

fn main() -> mssms::Result<()> {
    let options = GameOptions { phases: Some(40), max_requests: 1_500, ..GameOptions::default() };
    for kind in AlgorithmKind::ALL {
        let g = adversary_game(kind, 2, 2, &options)?;
        println!(
            "{:>9}: {:4} requests, {:2} phase changes, online {:>5}, best reference {:>4}, certified {}",
            g.algorithm,
            g.requests,
            g.phase_changes,
            g.online_cost,
            g.min_reference_cost,
            g.certified()
        );
    }
    Ok(())
}
