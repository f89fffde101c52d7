use super::{OnlineAlgorithm, Servers, Step};
use crate::metric::{cost_to_big, cost_to_f64, Configuration, Cost, MetricSpace, Point, Request};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};
use std::collections::BTreeMap;

/// Memoryless randomized algorithm: the server at `x_i` moves to requested
/// point `y_j` with probability proportional to `1 / d(x_i, y_j)`.
///
/// A request touching a server is served for free; a requested point at
/// distance 0 from some server is taken without sampling.
#[derive(Clone, Debug)]
pub struct Harmonic<'a> {
    servers: Servers<'a>,
}

impl<'a> Harmonic<'a> {
    pub fn new(space: &'a MetricSpace, initial: &Configuration) -> Self {
        Self { servers: Servers::new(space, initial) }
    }
}

impl OnlineAlgorithm for Harmonic<'_> {
    fn name(&self) -> &'static str {
        "harmonic"
    }

    fn positions(&self) -> &[Point] {
        self.servers.positions()
    }

    fn cost(&self) -> Cost {
        self.servers.cost()
    }

    fn serve(&mut self, request: &Request, rng: &mut dyn RngCore) -> Step {
        if self.servers.covers(request) {
            return Step::default();
        }
        let space = self.servers.space();
        let mut pairs = Vec::new();
        for (s, &at) in self.servers.positions().iter().enumerate() {
            for &p in request.points() {
                let d = space.dist(at, p);
                if d.is_zero() {
                    let mv = self.servers.move_server(s, p);
                    return Step { cost: mv.cost, moves: vec![mv], fault: true, ..Step::default() };
                }
                pairs.push((s, p, 1.0 / cost_to_f64(&d)));
            }
        }
        let total: f64 = pairs.iter().map(|x| x.2).sum();
        let mut u = rng.gen::<f64>() * total;
        let mut pick = pairs[pairs.len() - 1];
        for pair in &pairs {
            if u < pair.2 {
                pick = *pair;
                break;
            }
            u -= pair.2;
        }
        let mv = self.servers.move_server(pick.0, pick.1);
        Step { cost: mv.cost, moves: vec![mv], fault: true, ..Step::default() }
    }
}

/// Exact expected cost of the harmonic algorithm, propagating the probability
/// distribution over configurations request by request.
pub fn harmonic_expected_cost(space: &MetricSpace, initial: &Configuration, requests: &[Request]) -> BigRational {
    let mut dist: BTreeMap<Configuration, BigRational> = BTreeMap::new();
    dist.insert(initial.clone(), BigRational::one());
    let mut expected = BigRational::zero();
    for r in requests {
        let mut next: BTreeMap<Configuration, BigRational> = BTreeMap::new();
        for (cfg, prob) in dist {
            if cfg.serves(r) {
                *next.entry(cfg).or_insert_with(BigRational::zero) += prob;
                continue;
            }
            let pts = cfg.points();
            let zero = pts.iter().find_map(|&x| r.points().iter().find(|&&y| space.dist(x, y).is_zero()).map(|&y| (x, y)));
            if let Some((x, y)) = zero {
                *next.entry(cfg.replace(x, y)).or_insert_with(BigRational::zero) += prob;
                continue;
            }
            let mut weights = Vec::new();
            for &x in pts {
                for &y in r.points() {
                    let d = cost_to_big(&space.dist(x, y));
                    weights.push((x, y, d.recip(), d));
                }
            }
            let total = weights.iter().fold(BigRational::zero(), |acc, w| acc + &w.2);
            for (x, y, w, d) in weights {
                let p = &prob * w / &total;
                expected += &p * d;
                *next.entry(cfg.replace(x, y)).or_insert_with(BigRational::zero) += p;
            }
        }
        dist = next;
    }
    expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn line(coords: &[i64]) -> MetricSpace {
        MetricSpace::line(coords.iter().map(|&c| Cost::from(c)).collect())
    }

    #[test]
    fn symmetric_choice() {
        // points -1, 0, 1
        let space = line(&[-1, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut left = 0;
        for _ in 0..4000 {
            let mut h = Harmonic::new(&space, &Configuration::new(vec![1]));
            h.serve(&Request::new(vec![0, 2]).unwrap(), &mut rng);
            left += usize::from(h.positions()[0] == 0);
        }
        assert!((left as f64 / 4000.0 - 0.5).abs() < 0.04);
    }

    #[test]
    fn exact_two_point_expectation() {
        // one server at 0, request {-1, 1} then {-1}: 1 + 1/2 * 2 = 2
        let space = line(&[-1, 0, 1]);
        let reqs = vec![Request::new(vec![0, 2]).unwrap(), Request::new(vec![0]).unwrap()];
        let e = harmonic_expected_cost(&space, &Configuration::new(vec![1]), &reqs);
        assert_eq!(e, BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn zero_distance_is_taken_without_sampling() {
        let m = vec![
            vec![Cost::from(0), Cost::from(0), Cost::from(3)],
            vec![Cost::from(0), Cost::from(0), Cost::from(3)],
            vec![Cost::from(3), Cost::from(3), Cost::from(0)],
        ];
        let space = MetricSpace::explicit(m).unwrap();
        let mut h = Harmonic::new(&space, &Configuration::new(vec![0]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let step = h.serve(&Request::new(vec![1, 2]).unwrap(), &mut rng);
        assert_eq!(step.cost, Cost::from(0));
        assert_eq!(h.positions(), &[1]);
    }
}
