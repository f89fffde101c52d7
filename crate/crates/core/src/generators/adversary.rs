//! The cluster adversary for deterministic online algorithms.
//!
//! The space has `l` clusters of `k + 1` points (distance 1 inside a
//! cluster, `D` across). Each request takes the lowest free point of every
//! cluster, so the online algorithm faults every time. Alongside it the
//! adversary runs `h(k, l)` reference algorithms, `g(kappa)` per cluster
//! composition `kappa`, which together never pay more than the online
//! algorithm apart from an additive start-up cost.

use super::bounds::{compositions, det_lb_value, g_kappa};
use crate::error::{Error, Result};
use crate::metric::{config_distance, Configuration, Cost, MetricSpace, Point, Request};
use crate::online::Move;
use num_traits::Zero;
use std::collections::HashMap;

/// The lowest unoccupied point of every cluster. `online` must have `k`
/// points on a space of `l` clusters of `k + 1` points.
pub fn adversary_next(k: usize, l: usize, online: &[Point]) -> Request {
    let points = (0..l)
        .map(|i| {
            let j = (0..=k).find(|&j| !online.contains(&(i * (k + 1) + j))).expect("k servers leave a free point");
            i * (k + 1) + j
        })
        .collect();
    Request::new(points).expect("one distinct point per cluster")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceAlgorithm {
    /// Servers per cluster, fixed for the whole game.
    pub kind: Vec<usize>,
    pub config: Configuration,
    pub cost: Cost,
}

/// Costs caused by one online move.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AccountStep {
    pub online_cost: Cost,
    /// `(reference index, cost)` for every reference algorithm that moved.
    pub reference_costs: Vec<(usize, Cost)>,
    pub phase_change: bool,
}

#[derive(Clone, Debug)]
pub struct Adversary {
    k: usize,
    l: usize,
    far: Cost,
    space: MetricSpace,
    online: Vec<Point>,
    kind: Vec<usize>,
    refs: Vec<ReferenceAlgorithm>,
    /// Reference indices of each composition.
    by_kind: HashMap<Vec<usize>, Vec<usize>>,
    /// Placement (omitted slot per cluster) of each reference of the
    /// current composition.
    placement: HashMap<Vec<usize>, usize>,
    next: Request,
    phase_changes: usize,
    requests: usize,
    online_cost: Cost,
    start_cost: Cost,
}

impl Adversary {
    /// Default cross-cluster distance `l * h(k, l) + 1`.
    pub fn default_far(k: usize, l: usize) -> Cost {
        Cost::from((l as u128 * det_lb_value(k, l) + 1) as i64)
    }

    /// Phase changes after which the online cost is certified to reach
    /// `h(k, l)` times the best reference: `ceil(kDh / (D - lh)) + 1`.
    pub fn threshold_phases(k: usize, l: usize, far: Cost) -> Result<u64> {
        let h = Cost::from(det_lb_value(k, l) as i64);
        let slack = far - Cost::from(l as i64) * h;
        if slack <= Cost::zero() {
            return Err(Error::Precondition(format!("D must exceed l*h(k,l) = {}", Cost::from(l as i64) * h)));
        }
        let ratio = Cost::from(k as i64) * far * h / slack;
        Ok(ratio.ceil().to_integer() as u64 + 1)
    }

    pub fn new(k: usize, l: usize, far: Option<Cost>) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::Precondition("k and l must be positive".into()));
        }
        let far = far.unwrap_or_else(|| Self::default_far(k, l));
        Self::threshold_phases(k, l, far)?;
        let space = MetricSpace::cluster(l, k + 1, far)?;
        let online: Vec<Point> = (0..k).collect();
        let mut kind = vec![0; l];
        kind[0] = k;
        let next = adversary_next(k, l, &online);
        let start = Configuration::new(online.clone());
        let mut this = Self {
            k,
            l,
            far,
            space,
            online,
            kind: kind.clone(),
            refs: Vec::new(),
            by_kind: HashMap::new(),
            placement: HashMap::new(),
            next,
            phase_changes: 0,
            requests: 0,
            online_cost: Cost::zero(),
            start_cost: Cost::zero(),
        };
        for kappa in compositions(k, l) {
            let ids: Vec<usize> = (0..g_kappa(&kappa) as usize).map(|i| this.refs.len() + i).collect();
            for _ in &ids {
                this.refs.push(ReferenceAlgorithm { kind: kappa.clone(), config: start.clone(), cost: Cost::zero() });
            }
            this.by_kind.insert(kappa, ids);
        }
        // establish the invariant
        for kappa in compositions(k, l) {
            let targets = if kappa == kind { this.spread(&kappa) } else { Vec::new() };
            for (n, &id) in this.by_kind[&kappa].clone().iter().enumerate() {
                let target = if kappa == kind { targets[n].1.clone() } else { this.anchor(&kappa) };
                let c = this.move_reference(id, target);
                this.start_cost += c;
            }
            if kappa == kind {
                this.placement = targets.into_iter().enumerate().map(|(n, (o, _))| (o, this.by_kind[&kappa][n])).collect();
            }
        }
        Ok(this)
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn far(&self) -> Cost {
        self.far
    }

    pub fn h(&self) -> u128 {
        det_lb_value(self.k, self.l)
    }

    pub fn initial(&self) -> Configuration {
        Configuration::new((0..self.k).collect())
    }

    pub fn online(&self) -> Configuration {
        Configuration::new(self.online.clone())
    }

    /// Current phase type.
    pub fn kind(&self) -> &[usize] {
        &self.kind
    }

    pub fn next_request(&self) -> &Request {
        &self.next
    }

    pub fn references(&self) -> &[ReferenceAlgorithm] {
        &self.refs
    }

    pub fn phase_changes(&self) -> usize {
        self.phase_changes
    }

    pub fn requests(&self) -> usize {
        self.requests
    }

    pub fn online_cost(&self) -> Cost {
        self.online_cost
    }

    /// Reference cost spent establishing the invariant before any request.
    pub fn start_cost(&self) -> Cost {
        self.start_cost
    }

    pub fn min_reference_cost(&self) -> Cost {
        self.refs.iter().map(|r| r.cost).min().unwrap_or_else(Cost::zero)
    }

    pub fn total_reference_cost(&self) -> Cost {
        self.refs.iter().map(|r| r.cost).sum()
    }

    /// Whether every reference algorithm already covers `request`.
    pub fn references_serve(&self, request: &Request) -> bool {
        self.refs.iter().all(|r| r.config.serves(request))
    }

    fn point(&self, cluster: usize, slot: usize) -> Point {
        cluster * (self.k + 1) + slot
    }

    /// Servers of composition `kappa` on the first `k_i` points of each cluster.
    fn anchor(&self, kappa: &[usize]) -> Configuration {
        Configuration::new(kappa.iter().enumerate().flat_map(|(i, &ki)| (0..ki).map(move |j| (i, j))).map(|(i, j)| self.point(i, j)).collect())
    }

    /// Placement leaving out slot `omit[i]` among the first `k_i + 1`
    /// points of each cluster.
    fn place(&self, kappa: &[usize], omit: &[usize]) -> Configuration {
        let mut pts = Vec::with_capacity(self.k);
        for (i, &ki) in kappa.iter().enumerate() {
            pts.extend((0..=ki).filter(|&j| j != omit[i]).map(|j| self.point(i, j)));
        }
        Configuration::new(pts)
    }

    /// Omitted slots that leave `request` uncovered under composition `kappa`.
    fn excluded(&self, kappa: &[usize], request: &Request) -> Vec<usize> {
        request
            .points()
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let slot = p - i * (self.k + 1);
                debug_assert!(slot <= kappa[i]);
                slot
            })
            .collect()
    }

    /// Every placement of `kappa` except the one missing the next request.
    fn spread(&self, kappa: &[usize]) -> Vec<(Vec<usize>, Configuration)> {
        let skip = self.excluded(kappa, &self.next);
        let mut out = Vec::new();
        let mut omit = vec![0; self.l];
        loop {
            if omit != skip {
                out.push((omit.clone(), self.place(kappa, &omit)));
            }
            // odometer over omit[i] in 0..=k_i
            let mut i = self.l;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if omit[i] < kappa[i] {
                    omit[i] += 1;
                    break;
                }
                omit[i] = 0;
            }
        }
    }

    fn move_reference(&mut self, id: usize, target: Configuration) -> Cost {
        let c = config_distance(&self.space, &self.refs[id].config, &target).expect("same size");
        self.refs[id].config = target;
        self.refs[id].cost += c;
        c
    }

    /// Charges one online move and updates the reference algorithms for the
    /// next request. The move must serve the current request with a single
    /// server.
    pub fn account(&mut self, moves: &[Move]) -> Result<AccountStep> {
        let [mv] = moves else {
            return Err(Error::NonLazyMove(format!("expected one move, got {}", moves.len())));
        };
        if !self.next.contains(mv.to) {
            return Err(Error::NonLazyMove(format!("point {} was not requested", mv.to + 1)));
        }
        let Some(slot) = self.online.iter().position(|&p| p == mv.from) else {
            return Err(Error::NonLazyMove(format!("no online server at {}", mv.from + 1)));
        };
        let cost = self.space.dist(mv.from, mv.to);
        self.online[slot] = mv.to;
        self.online_cost += cost;
        self.requests += 1;
        let before = self.next.clone();
        self.next = adversary_next(self.k, self.l, &self.online);

        let (from_cluster, to_cluster) = (mv.from / (self.k + 1), mv.to / (self.k + 1));
        let mut step = AccountStep { online_cost: cost, ..AccountStep::default() };
        if from_cluster != to_cluster {
            step.phase_change = true;
            self.phase_changes += 1;
            let old = self.kind.clone();
            let mut new = old.clone();
            new[from_cluster] -= 1;
            new[to_cluster] += 1;
            for id in self.by_kind[&old].clone() {
                let c = self.move_reference(id, self.anchor(&old));
                if !c.is_zero() {
                    step.reference_costs.push((id, c));
                }
            }
            let targets = self.spread(&new);
            let ids = self.by_kind[&new].clone();
            self.placement.clear();
            for (&id, (omit, target)) in ids.iter().zip(targets) {
                let c = self.move_reference(id, target);
                if !c.is_zero() {
                    step.reference_costs.push((id, c));
                }
                self.placement.insert(omit, id);
            }
            self.kind = new;
        } else {
            let kappa = self.kind.clone();
            let vacated = self.excluded(&kappa, &before);
            let taken = self.excluded(&kappa, &self.next);
            let id = self.placement.remove(&taken).expect("the online configuration matched a reference");
            let c = self.move_reference(id, self.place(&kappa, &vacated));
            step.reference_costs.push((id, c));
            self.placement.insert(vacated, id);
        }
        debug_assert!(self.references_serve(&self.next));
        Ok(step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn request_picks_lowest_free_points() {
        // (1,1),(1,2) occupied -> (1,3),(2,1)
        let r = adversary_next(2, 2, &[0, 1]);
        assert_eq!(r.points(), &[2, 3]);
        assert!(!r.contains(0) && !r.contains(1));
    }

    #[test]
    fn reference_count_and_start() {
        let adv = Adversary::new(2, 2, None).unwrap();
        assert_eq!(adv.references().len(), 7);
        assert_eq!(adv.far(), Cost::from(15));
        assert!(adv.references_serve(adv.next_request()));
        for r in adv.references() {
            assert!(r.cost <= Cost::from(2) * adv.far());
        }
    }

    #[test]
    fn intra_cluster_move_charges_one_reference() {
        let mut adv = Adversary::new(2, 2, None).unwrap();
        let mv = Move { server: 0, from: 0, to: 2, cost: Cost::from(1) };
        let step = adv.account(&[mv]).unwrap();
        assert!(!step.phase_change);
        assert_eq!(step.reference_costs.len(), 1);
        assert_eq!(step.reference_costs[0].1, Cost::from(1));
        assert!(adv.references_serve(adv.next_request()));
    }

    #[test]
    fn non_lazy_moves_are_rejected() {
        let mut adv = Adversary::new(2, 2, None).unwrap();
        assert!(adv.account(&[]).is_err());
        let bad = Move { server: 0, from: 0, to: 4, cost: Cost::from(15) };
        assert!(adv.account(&[bad]).is_err());
    }
}
