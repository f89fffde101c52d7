use super::{schedule_from_point_moves, Schedule};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{Cost, Point};

/// Exact optimum for a single server: a shortest path through the layered
/// graph whose layer `i` is the point set of request `i`.
pub fn opt_mss_path(inst: &Instance) -> Result<(Cost, Schedule)> {
    if inst.k() != 1 {
        return Err(Error::Precondition(format!("the path solver needs k = 1, got k = {}", inst.k())));
    }
    let start = inst.initial.points()[0];
    let mut layer: Vec<(Point, Cost)> = vec![(start, Cost::from(0))];
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(inst.m());
    for r in &inst.requests {
        let mut next = Vec::with_capacity(r.len());
        let mut ptr = Vec::with_capacity(r.len());
        for &p in r.points() {
            let (arg, cost) = layer
                .iter()
                .enumerate()
                .map(|(j, &(q, c))| (j, c + inst.space.dist(q, p)))
                .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
                .expect("layers are nonempty");
            next.push((p, cost));
            ptr.push(arg);
        }
        layer = next;
        back.push(ptr);
    }
    let (mut j, &(_, best)) = layer
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.cmp(&b.1 .1).then(a.0.cmp(&b.0)))
        .expect("layers are nonempty");
    let mut path = vec![start; inst.m()];
    for i in (0..inst.m()).rev() {
        path[i] = inst.requests[i].points()[j];
        j = back[i][j];
    }
    let mut at = start;
    let moves: Vec<_> = path
        .iter()
        .map(|&p| {
            let mv = (at != p).then_some((at, p));
            at = p;
            mv
        })
        .collect();
    Ok((best, schedule_from_point_moves(&inst.space, &[start], &moves)))
}
