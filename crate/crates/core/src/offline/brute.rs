use super::check_budget;
use crate::error::Result;
use crate::instance::Instance;
use crate::metric::{Cost, Point};

/// Exact optimum by trying every lazy choice: on each fault, every server
/// paired with every requested point.
pub fn opt_bruteforce(inst: &Instance) -> Result<Cost> {
    let branching = (inst.k() * inst.l().max(1)) as u128;
    let needed = (0..inst.m()).try_fold(1u128, |acc, _| acc.checked_mul(branching)).unwrap_or(u128::MAX);
    check_budget(needed)?;
    let mut pos = inst.initial.points().to_vec();
    let mut best = None;
    search(inst, 0, &mut pos, Cost::from(0), &mut best);
    Ok(best.expect("every request is servable"))
}

fn search(inst: &Instance, i: usize, pos: &mut Vec<Point>, cost: Cost, best: &mut Option<Cost>) {
    if best.is_some_and(|b| cost >= b) {
        return;
    }
    let Some(r) = inst.requests.get(i) else {
        *best = Some(cost);
        return;
    };
    if pos.iter().any(|&p| r.contains(p)) {
        search(inst, i + 1, pos, cost, best);
        return;
    }
    for s in 0..pos.len() {
        let from = pos[s];
        for &to in r.points() {
            pos[s] = to;
            search(inst, i + 1, pos, cost + inst.space.dist(from, to), best);
        }
        pos[s] = from;
    }
}
