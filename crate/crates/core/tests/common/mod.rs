#![allow(dead_code)]

use mssms::generators::gen_random;
use mssms::harness::trial_rng;
use mssms::{Cost, Instance, SpaceSpec};
use rand::seq::index::sample;
use rand::Rng;

/// A small random space of `n` points: uniform, line or cluster.
pub fn space<R: Rng>(rng: &mut R, n: usize) -> SpaceSpec {
    match rng.gen_range(0..3) {
        0 => SpaceSpec::Uniform { n },
        1 => {
            let mut coords: Vec<usize> = sample(rng, 25, n).into_vec();
            coords.sort_unstable();
            SpaceSpec::Line { coords: coords.into_iter().map(|c| Cost::from(c as i64)).collect() }
        }
        _ => {
            let per = rng.gen_range(1..=n);
            SpaceSpec::Cluster { clusters: n.div_ceil(per), per_cluster: per, far: Cost::new(rng.gen_range(1..=9), 2) }
        }
    }
}

/// Random instance with the given shape, reproducible from `seed`.
pub fn instance(seed: u64, n: usize, k: usize, l: usize, m: usize) -> Instance {
    let mut rng = trial_rng(seed, 0);
    let spec = space(&mut rng, n);
    gen_random(spec, k, l.min(n), m, &mut rng).expect("valid shape")
}
