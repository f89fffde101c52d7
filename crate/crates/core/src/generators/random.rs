use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{Configuration, MetricSpace, Request, SpaceSpec};
use rand::seq::index::sample;
use rand::Rng;

/// A uniformly random `l`-subset of `n` points.
pub fn random_request<R: Rng + ?Sized>(n: usize, l: usize, rng: &mut R) -> Request {
    Request::new(sample(rng, n, l).into_vec()).expect("distinct points")
}

/// `m` uniformly random `l`-point requests on the given space, with `k`
/// servers placed independently and uniformly at random.
pub fn gen_random<R: Rng + ?Sized>(spec: SpaceSpec, k: usize, l: usize, m: usize, rng: &mut R) -> Result<Instance> {
    let space = MetricSpace::build(spec)?;
    let n = space.len();
    if k == 0 || l == 0 || l > n {
        return Err(Error::Precondition(format!("need k >= 1 and 1 <= l <= n = {n}")));
    }
    let initial = Configuration::new((0..k).map(|_| rng.gen_range(0..n)).collect());
    let requests = (0..m).map(|_| random_request(n, l, rng)).collect();
    Instance::new(space, initial, requests, Some(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_and_well_formed() {
        let make = || gen_random(SpaceSpec::Uniform { n: 7 }, 2, 3, 20, &mut ChaCha8Rng::seed_from_u64(4)).unwrap();
        let a = make();
        assert_eq!(a, make());
        assert_eq!(a.m(), 20);
        assert!(a.requests.iter().all(|r| r.len() == 3 && r.points().iter().all(|&p| p < 7)));
    }
}
