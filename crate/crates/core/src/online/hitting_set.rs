use super::{OnlineAlgorithm, Servers, Step};
use crate::hitting::{min_hitting_set, min_hitting_set_size, sample_min_hitting_set, SetSystem};
use crate::metric::{Configuration, Cost, MetricSpace, Point, Request};
use num_traits::Zero;
use rand::RngCore;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HittingSetMode {
    /// Minimum hitting set of the faulting requests of the phase,
    /// lexicographically smallest.
    Deterministic,
    /// Uniformly random minimum hitting set of all requests of the phase.
    Randomized,
}

/// The phase-based hitting set algorithms.
///
/// On a fault the algorithm recomputes a minimum hitting set `H` of the
/// phase's set system and moves `|H|` servers onto it. When `|H|` would exceed
/// `k` the phase ends and a new one starts with the current request.
#[derive(Clone, Debug)]
pub struct HittingSetAlgorithm<'a> {
    servers: Servers<'a>,
    mode: HittingSetMode,
    phase: usize,
    phase_sets: SetSystem,
    level: usize,
}

impl<'a> HittingSetAlgorithm<'a> {
    pub fn new(space: &'a MetricSpace, initial: &Configuration, mode: HittingSetMode) -> Self {
        Self { servers: Servers::new(space, initial), mode, phase: 0, phase_sets: SetSystem::default(), level: 0 }
    }

    pub fn phase(&self) -> usize {
        self.phase
    }

    /// Requests that make up the current phase's set system.
    pub fn phase_sets(&self) -> &SetSystem {
        &self.phase_sets
    }

    fn k(&self) -> usize {
        self.servers.positions().len()
    }

    fn choose(&mut self, rng: &mut dyn RngCore) -> Vec<Point> {
        match self.mode {
            HittingSetMode::Deterministic => min_hitting_set(&self.phase_sets, self.k()).expect("size checked"),
            HittingSetMode::Randomized => sample_min_hitting_set(&self.phase_sets, self.k(), rng).expect("size checked"),
        }
    }
}

impl OnlineAlgorithm for HittingSetAlgorithm<'_> {
    fn name(&self) -> &'static str {
        match self.mode {
            HittingSetMode::Deterministic => "hs",
            HittingSetMode::Randomized => "rhs",
        }
    }

    fn positions(&self) -> &[Point] {
        self.servers.positions()
    }

    fn cost(&self) -> Cost {
        self.servers.cost()
    }

    fn serve(&mut self, request: &Request, rng: &mut dyn RngCore) -> Step {
        let k = self.k();
        let randomized = self.mode == HittingSetMode::Randomized;
        if self.servers.covers(request) {
            if randomized {
                self.phase_sets.push(request.clone());
                // the configuration hits every phase request, so this stays <= k
                self.level = min_hitting_set_size(&self.phase_sets, k).unwrap_or(k);
            }
            return Step {
                phase: Some(self.phase),
                subphase: randomized.then_some(self.level),
                ..Step::default()
            };
        }
        self.phase_sets.push(request.clone());
        match min_hitting_set_size(&self.phase_sets, k) {
            Some(s) => self.level = s,
            None => {
                self.phase += 1;
                self.phase_sets = SetSystem::new(vec![request.clone()]);
                self.level = 1;
            }
        }
        let target = self.choose(rng);
        let moves = self.servers.occupy(&target);
        let cost = moves.iter().fold(Cost::zero(), |acc, m| acc + m.cost);
        Step { moves, cost, fault: true, phase: Some(self.phase), subphase: randomized.then_some(self.level) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn req(p: &[Point]) -> Request {
        Request::new(p.to_vec()).unwrap()
    }

    #[test]
    fn first_fault_moves_one_server() {
        let space = MetricSpace::uniform(4);
        let mut hs = HittingSetAlgorithm::new(&space, &Configuration::new(vec![0, 1]), HittingSetMode::Deterministic);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let step = hs.serve(&req(&[2, 3]), &mut rng);
        assert!(step.fault);
        assert_eq!(step.cost, Cost::from(1));
        assert_eq!(step.moves.len(), 1);
        assert_eq!(step.moves[0].to, 2);
    }

    #[test]
    fn covered_request_costs_nothing() {
        let space = MetricSpace::uniform(4);
        let mut hs = HittingSetAlgorithm::new(&space, &Configuration::new(vec![0, 1]), HittingSetMode::Deterministic);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let step = hs.serve(&req(&[1, 3]), &mut rng);
        assert!(!step.fault);
        assert!(step.moves.is_empty());
    }

    #[test]
    fn phase_ends_when_hitting_set_exceeds_k() {
        let space = MetricSpace::uniform(6);
        let mut hs = HittingSetAlgorithm::new(&space, &Configuration::new(vec![0]), HittingSetMode::Deterministic);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(hs.serve(&req(&[1, 2]), &mut rng).phase, Some(0));
        assert_eq!(hs.serve(&req(&[3, 4]), &mut rng).phase, Some(1));
        assert_eq!(hs.positions(), &[3]);
    }

    #[test]
    fn randomized_first_fault_is_uniform() {
        let space = MetricSpace::uniform(4);
        let mut counts = [0usize; 4];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4000 {
            let mut rhs = HittingSetAlgorithm::new(&space, &Configuration::new(vec![0, 1]), HittingSetMode::Randomized);
            let step = rhs.serve(&req(&[2, 3]), &mut rng);
            assert_eq!(step.subphase, Some(1));
            counts[step.moves[0].to] += 1;
        }
        assert_eq!(counts[0] + counts[1], 0);
        assert!((counts[2] as f64 / 4000.0 - 0.5).abs() < 0.04);
    }

    #[test]
    fn randomized_is_reproducible() {
        let space = MetricSpace::uniform(7);
        let reqs: Vec<Request> = [[2, 3], [4, 5], [2, 6], [3, 4], [5, 6], [0, 1]].iter().map(|r| req(r)).collect();
        let run = || {
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            let mut rhs = HittingSetAlgorithm::new(&space, &Configuration::new(vec![0, 1]), HittingSetMode::Randomized);
            crate::online::simulate(&mut rhs, &reqs, &mut rng)
        };
        assert_eq!(run(), run());
    }
}
