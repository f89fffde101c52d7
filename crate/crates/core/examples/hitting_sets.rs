//! Minimum hitting sets: size, the full list, and a uniform sample.

use mssms::harness::trial_rng;
use mssms::hitting::{enumerate_min_hitting_sets, min_hitting_set, sample_min_hitting_set, SetSystem};

fn main() -> mssms::Result<()> {
    // three disjoint pairs: 2^3 minimum hitting sets of size 3
    let disjoint = SetSystem::from_slices(&[&[0, 1], &[2, 3], &[4, 5]])?;
    let all = enumerate_min_hitting_sets(&disjoint, 6).expect("hittable with 6 points");
    println!("disjoint pairs: {} minimum hitting sets of size {}", all.len(), all[0].len());

    let overlapping = SetSystem::from_slices(&[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])?;
    println!("4-cycle, lexicographically first: {:?}", min_hitting_set(&overlapping, 4));
    println!("4-cycle, all: {:?}", enumerate_min_hitting_sets(&overlapping, 4));
    let mut rng = trial_rng(7, 0);
    println!("4-cycle, sampled: {:?}", sample_min_hitting_set(&overlapping, 4, &mut rng)?);
    Ok(())
}
