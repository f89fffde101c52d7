//! Online algorithms behind a common serve loop.

mod greedy;
mod harmonic;
mod hitting_set;
mod lazy;
mod servers;
mod wfa;

pub use greedy::Greedy;
pub use harmonic::{harmonic_expected_cost, Harmonic};
pub use hitting_set::{HittingSetAlgorithm, HittingSetMode};
pub use lazy::Lazy;
pub use servers::Servers;
pub use wfa::WorkFunctionAlgorithm;

use crate::error::{Error, Result};
use crate::metric::{Configuration, Cost, MetricSpace, Point, Request};
use num_traits::Zero;
use rand::RngCore;
use std::fmt;
use std::str::FromStr;

/// One server moving from one point to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub server: usize,
    pub from: Point,
    pub to: Point,
    pub cost: Cost,
}

/// What an algorithm did for one request.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Step {
    pub moves: Vec<Move>,
    pub cost: Cost,
    /// The request was disjoint from the configuration.
    pub fault: bool,
    pub phase: Option<usize>,
    pub subphase: Option<usize>,
}

pub trait OnlineAlgorithm {
    fn name(&self) -> &'static str;

    /// Server positions indexed by server.
    fn positions(&self) -> &[Point];

    fn configuration(&self) -> Configuration {
        Configuration::new(self.positions().to_vec())
    }

    /// Accumulated movement cost.
    fn cost(&self) -> Cost;

    /// Serves `request`; afterwards some server stands on one of its points.
    fn serve(&mut self, request: &Request, rng: &mut dyn RngCore) -> Step;
}

/// Algorithms selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgorithmKind {
    HittingSet,
    RandomizedHittingSet,
    Harmonic,
    WorkFunction,
    Greedy,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 5] = [
        AlgorithmKind::HittingSet,
        AlgorithmKind::RandomizedHittingSet,
        AlgorithmKind::Harmonic,
        AlgorithmKind::WorkFunction,
        AlgorithmKind::Greedy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmKind::HittingSet => "hs",
            AlgorithmKind::RandomizedHittingSet => "rhs",
            AlgorithmKind::Harmonic => "harmonic",
            AlgorithmKind::WorkFunction => "wfa",
            AlgorithmKind::Greedy => "greedy",
        }
    }

    pub fn is_randomized(self) -> bool {
        matches!(self, AlgorithmKind::RandomizedHittingSet | AlgorithmKind::Harmonic)
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AlgorithmOptions {
    /// Restrict the work function algorithm to moving at most one server.
    pub wfa_lazy: bool,
}

/// Builds an algorithm starting from `initial`.
pub fn build_algorithm<'a>(
    kind: AlgorithmKind,
    space: &'a MetricSpace,
    initial: &Configuration,
    options: AlgorithmOptions,
) -> Result<Box<dyn OnlineAlgorithm + 'a>> {
    initial.validate(space.len())?;
    Ok(match kind {
        AlgorithmKind::HittingSet => Box::new(HittingSetAlgorithm::new(space, initial, HittingSetMode::Deterministic)),
        AlgorithmKind::RandomizedHittingSet => {
            Box::new(HittingSetAlgorithm::new(space, initial, HittingSetMode::Randomized))
        }
        AlgorithmKind::Harmonic => Box::new(Harmonic::new(space, initial)),
        AlgorithmKind::WorkFunction => Box::new(WorkFunctionAlgorithm::new(space, initial, options.wfa_lazy)?),
        AlgorithmKind::Greedy => Box::new(Greedy::new(space, initial)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub request: Request,
    /// Configuration when the request arrived.
    pub before: Configuration,
    pub moves: Vec<Move>,
    pub cost: Cost,
    pub fault: bool,
    pub phase: Option<usize>,
    pub subphase: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub algorithm: String,
    pub initial: Vec<Point>,
    pub records: Vec<TraceRecord>,
    pub total_cost: Cost,
    pub faults: usize,
}

impl Trace {
    /// Number of distinct phases seen (0 for phase-less algorithms).
    pub fn phases(&self) -> usize {
        let mut ids: Vec<usize> = self.records.iter().filter_map(|r| r.phase).collect();
        ids.dedup();
        ids.len()
    }

    /// Faults per phase id, in phase order.
    pub fn faults_per_phase(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for r in self.records.iter().filter(|r| r.fault) {
            let Some(p) = r.phase else { continue };
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Cost per phase id, in phase order.
    pub fn cost_per_phase(&self) -> Vec<(usize, Cost)> {
        let mut out: Vec<(usize, Cost)> = Vec::new();
        for r in &self.records {
            let Some(p) = r.phase else { continue };
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += r.cost,
                _ => out.push((p, r.cost)),
            }
        }
        out
    }

    /// Replays the moves from the initial positions and recomputes every
    /// cost from the distances, independently of the algorithm.
    pub fn verify(&self, space: &MetricSpace) -> Result<Cost> {
        let mut pos = self.initial.clone();
        let mut total = Cost::zero();
        let mut faults = 0;
        for (i, rec) in self.records.iter().enumerate() {
            let before = Configuration::new(pos.clone());
            if before != rec.before {
                return Err(Error::Schedule(format!("request {}: recorded configuration differs", i + 1)));
            }
            if rec.fault != !before.serves(&rec.request) {
                return Err(Error::Schedule(format!("request {}: fault flag wrong", i + 1)));
            }
            faults += usize::from(rec.fault);
            let mut step = Cost::zero();
            for mv in &rec.moves {
                if pos.get(mv.server) != Some(&mv.from) {
                    return Err(Error::Schedule(format!("request {}: server {} is not at {}", i + 1, mv.server, mv.from + 1)));
                }
                let d = space.dist(mv.from, mv.to);
                if d != mv.cost {
                    return Err(Error::Schedule(format!("request {}: move cost mismatch", i + 1)));
                }
                pos[mv.server] = mv.to;
                step += d;
            }
            if step != rec.cost {
                return Err(Error::Schedule(format!("request {}: step cost mismatch", i + 1)));
            }
            if !Configuration::new(pos.clone()).serves(&rec.request) {
                return Err(Error::Schedule(format!("request {} left unserved", i + 1)));
            }
            total += step;
        }
        if total != self.total_cost || faults != self.faults {
            return Err(Error::Schedule("totals differ from the records".into()));
        }
        Ok(total)
    }
}

/// Runs `algorithm` over `requests`, recording everything.
pub fn simulate(algorithm: &mut dyn OnlineAlgorithm, requests: &[Request], rng: &mut dyn RngCore) -> Trace {
    let initial = algorithm.positions().to_vec();
    let mut records = Vec::with_capacity(requests.len());
    let mut total = Cost::zero();
    let mut faults = 0;
    for r in requests {
        let before = algorithm.configuration();
        let step = algorithm.serve(r, rng);
        debug_assert!(algorithm.configuration().serves(r));
        total += step.cost;
        faults += usize::from(step.fault);
        records.push(TraceRecord {
            request: r.clone(),
            before,
            moves: step.moves,
            cost: step.cost,
            fault: step.fault,
            phase: step.phase,
            subphase: step.subphase,
        });
    }
    Trace { algorithm: algorithm.name().to_string(), initial, records, total_cost: total, faults }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn names_round_trip() {
        for k in AlgorithmKind::ALL {
            assert_eq!(k.as_str().parse::<AlgorithmKind>().unwrap(), k);
        }
        assert!("opt".parse::<AlgorithmKind>().is_err());
    }

    #[test]
    fn every_algorithm_serves_and_verifies() {
        let space = MetricSpace::line((0..7).map(|x| Cost::from(x * x)).collect());
        let start = Configuration::new(vec![0, 3]);
        let reqs: Vec<Request> = [[1, 5], [2, 6], [0, 4], [3, 5], [1, 2], [4, 6]]
            .iter()
            .map(|r| Request::new(r.to_vec()).unwrap())
            .collect();
        for kind in AlgorithmKind::ALL {
            let mut alg = build_algorithm(kind, &space, &start, AlgorithmOptions::default()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let trace = simulate(alg.as_mut(), &reqs, &mut rng);
            assert_eq!(trace.verify(&space).unwrap(), alg.cost(), "{kind}");
            for rec in &trace.records {
                if !rec.fault {
                    assert!(rec.moves.is_empty() || kind == AlgorithmKind::WorkFunction, "{kind}");
                }
            }
        }
    }
}
