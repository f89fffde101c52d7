use super::{check_budget, schedule_from_point_moves, Schedule};
use crate::error::Result;
use crate::instance::Instance;
use crate::metric::{Cost, Point};
use crate::workfunction::ConfigTable;
use itertools::Itertools;

/// Exact optimum by a layered dynamic program over multiset configurations.
///
/// Layer `i` holds the cheapest cost of serving the first `i` requests and
/// standing in each configuration; transitions are lazy (one server moves
/// onto a requested point, or nothing moves when already served).
pub fn opt_dp(inst: &Instance) -> Result<(Cost, Schedule)> {
    let (k, n, m) = (inst.k(), inst.n(), inst.m());
    let states = num_integer::binomial((n + k - 1) as u128, k as u128);
    check_budget(states.saturating_mul((m.max(1) * k * inst.l().max(1)) as u128))?;
    let table = ConfigTable::new(&inst.space, k)?;
    let size = table.len();
    let start = table.index_of(&inst.initial).expect("initial configuration is in the table");

    let mut layer: Vec<Option<Cost>> = vec![None; size];
    layer[start] = Some(Cost::from(0));
    // back[i][state] = (previous state, point move)
    let mut back: Vec<Vec<(usize, Option<(Point, Point)>)>> = Vec::with_capacity(m);
    for r in &inst.requests {
        let mut next: Vec<Option<Cost>> = vec![None; size];
        let mut ptr = vec![(usize::MAX, None); size];
        for (x, value) in layer.iter().enumerate() {
            let Some(value) = *value else { continue };
            let cfg = &table.configs()[x];
            if cfg.serves(r) && next[x].is_none_or(|b| value < b) {
                next[x] = Some(value);
                ptr[x] = (x, None);
            }
            for &from in cfg.points().iter().dedup() {
                for &to in r.points() {
                    if from == to {
                        continue;
                    }
                    let y = table.index_of(&cfg.replace(from, to)).expect("table holds every configuration");
                    let cand = value + inst.space.dist(from, to);
                    if next[y].is_none_or(|b| cand < b) {
                        next[y] = Some(cand);
                        ptr[y] = (x, Some((from, to)));
                    }
                }
            }
        }
        layer = next;
        back.push(ptr);
    }

    let (mut state, best) = layer
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, v)))
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("every request is servable");
    let mut moves = vec![None; m];
    for i in (0..m).rev() {
        let (prev, mv) = back[i][state];
        moves[i] = mv;
        state = prev;
    }
    let schedule = schedule_from_point_moves(&inst.space, inst.initial.points(), &moves);
    debug_assert_eq!(schedule.cost, best);
    Ok((best, schedule))
}
