//! Exact offline optima, the covering LP and its `kl`-server rounding.

mod brute;
mod dp;
mod flow;
mod lp;
mod mss;
mod rounding;
mod simplex;

pub use brute::opt_bruteforce;
pub use dp::opt_dp;
pub use flow::{kserver_flow, opt_kserver_flow};
pub use lp::{build_lp, solve_lp, FractionalSolution, LpModel, LpRow, LpVar, Sense};
pub use mss::opt_mss_path;
pub use rounding::{round_to_kl, Rounding};
pub use simplex::{LinearProgram, SimplexSolution};

use crate::error::{Error, Result};
use crate::metric::{Configuration, Cost, MetricSpace, Point, Request};
use crate::online::Move;
use num_traits::Zero;

/// State budget used when `MSSMS_BUDGET` is unset.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// The state budget for the exact solvers, from `MSSMS_BUDGET` if set.
pub fn budget() -> u128 {
    std::env::var("MSSMS_BUDGET").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

fn check_budget(needed: u128) -> Result<()> {
    let budget = budget();
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// An offline solution: the moves made for each request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    /// Starting positions, indexed by server.
    pub initial: Vec<Point>,
    /// `steps[i]` holds the moves made to serve request `i`.
    pub steps: Vec<Vec<Move>>,
    pub cost: Cost,
}

impl Schedule {
    pub fn servers(&self) -> usize {
        self.initial.len()
    }

    /// Replays the moves and checks that every request ends up served and
    /// that the recorded costs are the true distances.
    pub fn verify(&self, space: &MetricSpace, requests: &[Request]) -> Result<Cost> {
        if self.steps.len() != requests.len() {
            return Err(Error::Schedule(format!("{} steps for {} requests", self.steps.len(), requests.len())));
        }
        let mut pos = self.initial.clone();
        let mut total = Cost::zero();
        for (i, (moves, r)) in self.steps.iter().zip(requests).enumerate() {
            for mv in moves {
                if pos.get(mv.server) != Some(&mv.from) {
                    return Err(Error::Schedule(format!("request {}: server {} is not at {}", i + 1, mv.server, mv.from + 1)));
                }
                if space.dist(mv.from, mv.to) != mv.cost {
                    return Err(Error::Schedule(format!("request {}: move cost mismatch", i + 1)));
                }
                pos[mv.server] = mv.to;
                total += mv.cost;
            }
            if !pos.iter().any(|&p| r.contains(p)) {
                return Err(Error::Schedule(format!("request {} left unserved", i + 1)));
            }
        }
        if total != self.cost {
            return Err(Error::Schedule("total differs from the moves".into()));
        }
        Ok(total)
    }

    /// Final configuration.
    pub fn final_configuration(&self) -> Configuration {
        let mut pos = self.initial.clone();
        for mv in self.steps.iter().flatten() {
            pos[mv.server] = mv.to;
        }
        Configuration::new(pos)
    }
}

/// Builds a schedule from one optional `(from, to)` point move per request,
/// picking any server standing on `from`.
fn schedule_from_point_moves(space: &MetricSpace, initial: &[Point], moves: &[Option<(Point, Point)>]) -> Schedule {
    let mut pos = initial.to_vec();
    let mut cost = Cost::zero();
    let steps = moves
        .iter()
        .map(|mv| match *mv {
            Some((from, to)) if from != to => {
                let server = pos.iter().position(|&p| p == from).expect("a server stands on the source point");
                let c = space.dist(from, to);
                pos[server] = to;
                cost += c;
                vec![Move { server, from, to, cost: c }]
            }
            _ => Vec::new(),
        })
        .collect();
    Schedule { initial: initial.to_vec(), steps, cost }
}
