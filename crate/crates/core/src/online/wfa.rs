use super::{OnlineAlgorithm, Servers, Step};
use crate::error::Result;
use crate::metric::{config_distance, Configuration, Cost, MetricSpace, Point, Request};
use crate::workfunction::WorkFunction;
use itertools::Itertools;
use num_traits::Zero;
use rand::RngCore;

/// Work function algorithm: after updating `w` with the request, move to the
/// serving configuration `X` minimizing `w(X) + d(current, X)`. Ties keep the
/// current configuration if it serves the request, else go to the first
/// configuration in canonical order.
///
/// With `lazy` set, candidates are limited to configurations that differ from
/// the current one in at most one server.
#[derive(Clone, Debug)]
pub struct WorkFunctionAlgorithm<'a> {
    servers: Servers<'a>,
    work: WorkFunction<'a>,
    lazy: bool,
}

impl<'a> WorkFunctionAlgorithm<'a> {
    pub fn new(space: &'a MetricSpace, initial: &Configuration, lazy: bool) -> Result<Self> {
        Ok(Self { servers: Servers::new(space, initial), work: WorkFunction::new(space, initial)?, lazy })
    }

    pub fn work_function(&self) -> &WorkFunction<'a> {
        &self.work
    }

    fn candidates(&self, current: &Configuration, request: &Request) -> Vec<Configuration> {
        if self.lazy {
            let mut out = Vec::new();
            if current.serves(request) {
                out.push(current.clone());
            }
            for &from in current.points().iter().dedup() {
                for &to in request.points() {
                    out.push(current.replace(from, to));
                }
            }
            out.sort();
            out.dedup();
            out
        } else {
            self.work.table().configs().iter().filter(|c| c.serves(request)).cloned().collect()
        }
    }
}

impl OnlineAlgorithm for WorkFunctionAlgorithm<'_> {
    fn name(&self) -> &'static str {
        "wfa"
    }

    fn positions(&self) -> &[Point] {
        self.servers.positions()
    }

    fn cost(&self) -> Cost {
        self.servers.cost()
    }

    fn serve(&mut self, request: &Request, _rng: &mut dyn RngCore) -> Step {
        let current = Configuration::new(self.servers.positions().to_vec());
        let fault = !current.serves(request);
        self.work = self.work.update(request);
        let space = self.servers.space();
        // staying put wins ties, then canonical order
        let mut best: Option<(Cost, Configuration)> = None;
        if !fault {
            let score = self.work.value(&current).expect("table holds every configuration");
            best = Some((score, current.clone()));
        }
        for cand in self.candidates(&current, request) {
            let score = self.work.value(&cand).expect("table holds every configuration")
                + config_distance(space, &current, &cand).expect("same size");
            if best.as_ref().is_none_or(|(b, _)| score < *b) {
                best = Some((score, cand));
            }
        }
        let (_, target) = best.expect("some configuration serves the request");
        let moves = self.servers.become_config(&target);
        let cost = moves.iter().fold(Cost::zero(), |acc, m| acc + m.cost);
        Step { moves, cost, fault, ..Step::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tie_goes_to_canonical_order() {
        let space = MetricSpace::uniform(3);
        let mut wfa = WorkFunctionAlgorithm::new(&space, &Configuration::new(vec![0]), false).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let step = wfa.serve(&Request::new(vec![1, 2]).unwrap(), &mut rng);
        assert_eq!(wfa.positions(), &[1]);
        assert_eq!(step.cost, Cost::from(1));
    }

    #[test]
    fn covered_request_stays() {
        let space = MetricSpace::uniform(4);
        for lazy in [false, true] {
            let mut wfa = WorkFunctionAlgorithm::new(&space, &Configuration::new(vec![0, 1]), lazy).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let step = wfa.serve(&Request::new(vec![1, 3]).unwrap(), &mut rng);
            assert_eq!(step.cost, Cost::from(0));
            assert_eq!(wfa.positions(), &[0, 1]);
        }
    }
}
