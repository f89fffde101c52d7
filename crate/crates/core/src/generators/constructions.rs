use crate::error::{Error, Result};
use crate::hitting::SetSystem;
use crate::instance::Instance;
use crate::metric::{Configuration, Cost, MetricSpace, Point, Request};
use crate::offline::Schedule;
use itertools::Itertools;
use rand::seq::index::sample;
use rand::Rng;
use std::collections::BTreeSet;

/// One draw of the coupon-collector distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouponDraw {
    /// Uniform space on `k + l` points, servers on the first `k`.
    pub instance: Instance,
    /// The last collected complement, which is not requested.
    pub withheld: Request,
    /// Complement of `withheld`; it meets every request and differs from
    /// the initial configuration in one point.
    pub cover: Configuration,
    /// Sets drawn, including the withheld one.
    pub draws: usize,
}

/// Draws uniform `l`-subsets of a `k + l` point uniform space until the
/// complement of every `k`-set with exactly one point outside the initial
/// configuration has appeared, then drops the last such set.
pub fn gen_coupon_collector<R: Rng + ?Sized>(k: usize, l: usize, rng: &mut R) -> Result<CouponDraw> {
    if k == 0 || l == 0 {
        return Err(Error::Precondition("k and l must be positive".into()));
    }
    let n = k + l;
    // complements of the target k-sets: drop one initial point, add one other
    let mut missing: BTreeSet<Vec<Point>> = BTreeSet::new();
    for out in 0..k {
        for inn in k..n {
            let b: Vec<Point> = (0..k).filter(|&p| p != out).chain([inn]).collect();
            missing.insert((0..n).filter(|p| !b.contains(p)).collect());
        }
    }
    let mut requests = Vec::new();
    let mut draws = 0;
    loop {
        let mut set: Vec<Point> = sample(rng, n, l).into_vec();
        set.sort_unstable();
        draws += 1;
        if missing.remove(&set) && missing.is_empty() {
            let cover = Configuration::new((0..n).filter(|p| !set.contains(p)).collect());
            let withheld = Request::new(set)?;
            let instance = Instance::new(MetricSpace::uniform(n), Configuration::new((0..k).collect()), requests, Some(l))?;
            return Ok(CouponDraw { instance, withheld, cover, draws });
        }
        requests.push(Request::new(set)?);
    }
}

/// Uniform space on `k + kl` points with servers on the first `k`; the
/// requests are all `l`-subsets of the last `kl` points in lexicographic
/// order, repeated `rounds` times.
pub fn gen_integrality_gap(k: usize, l: usize, rounds: usize) -> Result<Instance> {
    if k < 2 || l < 2 {
        return Err(Error::Precondition("the gap construction needs k, l >= 2".into()));
    }
    let n = k + k * l;
    let block: Vec<Request> =
        (k..n).combinations(l).map(Request::new).collect::<Result<_>>()?;
    let requests = (0..rounds).flat_map(|_| block.iter().cloned()).collect();
    Instance::new(MetricSpace::uniform(n), Configuration::new((0..k).collect()), requests, Some(l))
}

/// Hypergraph vertex cover as an instance: uniform space on the vertices
/// plus `k` extra points holding the servers, every edge requested `reps`
/// times in order.
pub fn gen_vc_reduction(hypergraph: &SetSystem, k: usize, reps: usize) -> Result<Instance> {
    if k == 0 || reps == 0 || hypergraph.is_empty() {
        return Err(Error::Precondition("need k >= 1, reps >= 1 and at least one edge".into()));
    }
    let v = hypergraph.ground_size();
    let requests = (0..reps).flat_map(|_| hypergraph.sets().iter().cloned()).collect();
    Instance::new(MetricSpace::uniform(v + k), Configuration::new((v..v + k).collect()), requests, Some(hypergraph.width()))
}

/// Finds a full pass over the edges during which `schedule` keeps its
/// servers still (after the pass's first request) and returns the vertices
/// occupied during it, which form a vertex cover.
pub fn extract_vertex_cover(hypergraph: &SetSystem, schedule: &Schedule) -> Option<Vec<Point>> {
    let edges = hypergraph.len();
    let v = hypergraph.ground_size();
    let mut pos = schedule.initial.clone();
    for block in schedule.steps.chunks(edges) {
        for mv in &block[0] {
            pos[mv.server] = mv.to;
        }
        if block.len() == edges && block[1..].iter().all(Vec::is_empty) {
            let cover: Vec<Point> = pos.iter().copied().filter(|&p| p < v).sorted().dedup().collect();
            if hypergraph.is_hit_by(&cover) {
                return Some(cover);
            }
        }
        for mv in block[1..].iter().flatten() {
            pos[mv.server] = mv.to;
        }
    }
    None
}

/// The harmonic counterexample on the line: points `-1, 0, 1, ..., m`, one
/// server at `0`, requests `{-1, i}` for `i = 1..m` and finally `{-1}`.
pub fn gen_harmonic_line(m: usize) -> Result<Instance> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let coords = (-1..=m as i64).map(Cost::from).collect();
    let mut requests: Vec<Request> = (1..=m).map(|i| Request::new(vec![0, i + 1])).collect::<Result<_>>()?;
    requests.push(Request::new(vec![0])?);
    Instance::new(MetricSpace::line(coords), Configuration::new(vec![1]), requests, Some(2))
}

/// The two work-function counterexamples on uniform spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WfaCounterexample {
    /// `2m + 2` points, servers on the first pair, request `i` is pair `i`.
    Support,
    /// Six points, servers on 1 and 2, requests 34, 56, 36, 54.
    QuasiConvex,
}

pub fn gen_wfa_counterexample(which: WfaCounterexample, m: usize) -> Result<Instance> {
    match which {
        WfaCounterexample::Support => {
            if m == 0 {
                return Err(Error::Precondition("m must be at least 1".into()));
            }
            let requests = (1..=m).map(|i| Request::new(vec![2 * i, 2 * i + 1])).collect::<Result<_>>()?;
            Instance::new(MetricSpace::uniform(2 * m + 2), Configuration::new(vec![0, 1]), requests, Some(2))
        }
        WfaCounterexample::QuasiConvex => {
            let requests = [[2, 3], [4, 5], [2, 5], [4, 3]].iter().map(|r| Request::new(r.to_vec())).collect::<Result<_>>()?;
            Instance::new(MetricSpace::uniform(6), Configuration::new(vec![0, 1]), requests, Some(2))
        }
    }
}

/// Nested request sequences for the randomized hitting set algorithm on a
/// uniform space of `(k + 1) l` points split into groups `G_1..G_{k+1}`.
///
/// Phase `p` targets level `s = p mod k + 1`: it requests `G_1..G_s`, then
/// shrinks each of them one point at a time (`G_i` minus its first point,
/// minus its first two points, ...), then requests the remaining groups so
/// that the hitting set outgrows `k` and the next phase begins.
pub fn gen_nested(k: usize, l: usize, phases: usize) -> Result<Instance> {
    if k == 0 || l == 0 {
        return Err(Error::Precondition("k and l must be positive".into()));
    }
    let group = |g: usize| -> Vec<Point> { (g * l..(g + 1) * l).collect() };
    let mut requests = Vec::new();
    for p in 0..phases {
        let s = p % k + 1;
        for g in 0..s {
            requests.push(Request::new(group(g))?);
        }
        for g in 0..s {
            for cut in 1..l {
                requests.push(Request::new(group(g)[cut..].to_vec())?);
            }
        }
        for g in s..=k {
            requests.push(Request::new(group(g))?);
        }
    }
    let n = (k + 1) * l;
    let initial = Configuration::new((0..k).map(|i| (i * l + l - 1) % n).collect());
    Instance::new(MetricSpace::uniform(n), initial, requests, Some(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn coupon_draws_avoid_the_withheld_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let d = gen_coupon_collector(2, 2, &mut rng).unwrap();
            assert!(!d.instance.requests.contains(&d.withheld));
            assert!(d.instance.requests.iter().all(|r| d.cover.serves(r) && r.len() == 2));
            assert_eq!(d.instance.m() + 1, d.draws);
            let moved = d.cover.points().iter().filter(|&&p| p >= 2).count();
            assert_eq!(moved, 1);
        }
    }

    #[test]
    fn gap_instance_shape() {
        let inst = gen_integrality_gap(2, 2, 1).unwrap();
        assert_eq!(inst.m(), 6);
        assert_eq!(inst.n(), 6);
        assert!(inst.requests.iter().all(|r| r.points().iter().all(|&p| p >= 2)));
    }

    #[test]
    fn harmonic_line_shape() {
        let inst = gen_harmonic_line(3).unwrap();
        assert_eq!(inst.m(), 4);
        assert_eq!(inst.requests.last().unwrap().points(), &[0]);
        assert_eq!(inst.space.dist(0, 4), Cost::from(4));
    }

    #[test]
    fn counterexample_shapes() {
        let s = gen_wfa_counterexample(WfaCounterexample::Support, 2).unwrap();
        assert_eq!((s.n(), s.m()), (6, 2));
        let q = gen_wfa_counterexample(WfaCounterexample::QuasiConvex, 0).unwrap();
        assert_eq!((q.n(), q.m()), (6, 4));
    }

    #[test]
    fn vc_reduction_shape() {
        let tri = SetSystem::from_slices(&[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let inst = gen_vc_reduction(&tri, 2, 3).unwrap();
        assert_eq!((inst.m(), inst.n()), (9, 5));
    }
}
