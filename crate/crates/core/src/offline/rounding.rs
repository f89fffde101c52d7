use super::flow::kserver_flow;
use super::lp::{build_lp, solve_lp, FractionalSolution, LpVar};
use super::Schedule;
use crate::error::Result;
use crate::instance::Instance;
use crate::metric::{Cost, Point};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Result of rounding the relaxation to a `kl`-server schedule.
#[derive(Clone, Debug, PartialEq)]
pub struct Rounding {
    pub lp: FractionalSolution,
    /// Chosen slot of each request.
    pub slots: Vec<usize>,
    pub points: Vec<Point>,
    /// Schedule with `l` servers on each initial position.
    pub schedule: Schedule,
    pub cost: Cost,
}

/// Solves the relaxation, picks in every request the first point receiving
/// at least `1/l` of incoming mass, and serves those points optimally with
/// `l` copies of every initial server.
pub fn round_to_kl(inst: &Instance) -> Result<Rounding> {
    let model = build_lp(inst);
    let lp = solve_lp(&model)?;
    let l = BigRational::from_integer(inst.l().max(1).into());
    let mut slots = Vec::with_capacity(inst.m());
    for (i, r) in inst.requests.iter().enumerate() {
        let mut mass = vec![BigRational::zero(); r.len()];
        for (idx, v) in model.vars.iter().enumerate() {
            let slot = match *v {
                LpVar::G { request, slot, .. } if request == i => slot,
                LpVar::F { to, .. } if to.0 == i => to.1,
                _ => continue,
            };
            mass[slot] += &lp.values[idx];
        }
        let slot = mass
            .iter()
            .position(|w| &l * w >= BigRational::one())
            .expect("coverage guarantees a heavy point");
        slots.push(slot);
    }
    let points: Vec<Point> = slots.iter().zip(&inst.requests).map(|(&j, r)| r.points()[j]).collect();
    let initial: Vec<Point> = inst.initial.points().iter().flat_map(|&s| std::iter::repeat_n(s, inst.l().max(1))).collect();
    let (cost, schedule) = kserver_flow(&inst.space, &initial, &points)?;
    Ok(Rounding { lp, slots, points, schedule, cost })
}
