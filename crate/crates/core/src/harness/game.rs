//! Playing the cluster adversary against an online algorithm.

use super::report::trial_rng;
use crate::error::Result;
use crate::generators::Adversary;
use crate::metric::Cost;
use crate::online::{build_algorithm, AlgorithmKind, AlgorithmOptions, Lazy, OnlineAlgorithm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameOptions {
    /// Phase changes to play; defaults to the certification threshold.
    pub phases: Option<u64>,
    /// Cross-cluster distance; defaults to `l * h(k, l) + 1`.
    pub far: Option<Cost>,
    /// Stop after this many requests even if the phases were not reached
    /// (an algorithm may never leave its cluster).
    pub max_requests: usize,
    pub seed: u64,
    pub algorithm: AlgorithmOptions,
}

impl Default for GameOptions {
    fn default() -> Self {
        Self { phases: None, far: None, max_requests: 2_000, seed: 0, algorithm: AlgorithmOptions::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameReport {
    pub algorithm: String,
    pub k: usize,
    pub l: usize,
    pub far: Cost,
    pub h: u128,
    pub threshold: u64,
    pub phase_changes: usize,
    pub requests: usize,
    pub online_cost: Cost,
    /// `(composition, cost)` of every reference algorithm.
    pub reference_costs: Vec<(Vec<usize>, Cost)>,
    pub min_reference_cost: Cost,
    pub total_reference_cost: Cost,
    pub start_cost: Cost,
    /// Every request was a fault for the online algorithm.
    pub all_faults: bool,
    /// Every reference algorithm covered every request before it was served.
    pub references_always_served: bool,
    /// Every phase change cost the online algorithm exactly `D`.
    pub phase_changes_cost_far: bool,
    /// `total reference <= kDh + r l h + (m - r)`.
    pub total_bound_holds: bool,
    /// Reference algorithms run; equals `h`.
    pub reference_count: usize,
}

impl GameReport {
    /// `online_cost >= h * min_reference_cost`.
    pub fn certified(&self) -> bool {
        self.online_cost >= Cost::from(self.h as i64) * self.min_reference_cost
    }
}

/// Plays the adversary against the lazy version of `kind` on `k` servers
/// and `l` clusters.
pub fn adversary_game(kind: AlgorithmKind, k: usize, l: usize, options: &GameOptions) -> Result<GameReport> {
    let mut adv = Adversary::new(k, l, options.far)?;
    let threshold = Adversary::threshold_phases(k, l, adv.far())?;
    let phases = options.phases.unwrap_or(threshold);
    let space = adv.space().clone();
    let inner = build_algorithm(kind, &space, &adv.initial(), options.algorithm)?;
    let mut alg = Lazy::new(&space, inner);
    let mut rng = trial_rng(options.seed, 0);
    let (mut all_faults, mut served, mut far_ok) = (true, true, true);
    while (adv.phase_changes() as u64) < phases && adv.requests() < options.max_requests {
        let request = adv.next_request().clone();
        served &= adv.references_serve(&request);
        let step = alg.serve(&request, &mut rng);
        all_faults &= step.fault;
        let account = adv.account(&step.moves)?;
        if account.phase_change {
            far_ok &= account.online_cost == adv.far();
        }
    }
    let h = adv.h();
    let (kk, ll, r, m) = (k as i64, l as i64, adv.phase_changes() as i64, adv.requests() as i64);
    let hc = Cost::from(h as i64);
    let bound = Cost::from(kk) * adv.far() * hc + Cost::from(r * ll) * hc + Cost::from(m - r);
    let total = adv.total_reference_cost();
    Ok(GameReport {
        algorithm: alg.name().to_string(),
        k,
        l,
        far: adv.far(),
        h,
        threshold,
        phase_changes: adv.phase_changes(),
        requests: adv.requests(),
        online_cost: adv.online_cost(),
        reference_costs: adv.references().iter().map(|r| (r.kind.clone(), r.cost)).collect(),
        min_reference_cost: adv.min_reference_cost(),
        total_reference_cost: total,
        start_cost: adv.start_cost(),
        all_faults,
        references_always_served: served,
        phase_changes_cost_far: far_ok,
        total_bound_holds: total <= bound,
        reference_count: adv.references().len(),
    })
}
