use itertools::Itertools;
use mssms::generators::{
    compositions, det_lb_value, extract_vertex_cover, g_kappa, gen_coupon_collector, gen_vc_reduction,
    gen_wfa_counterexample, phase_fault_bound, Adversary, WfaCounterexample,
};
use mssms::harness::trial_rng;
use mssms::hitting::{enumerate_min_hitting_sets, min_hitting_set_size, SetSystem};
use mssms::offline::opt_dp;
use mssms::workfunction::WorkFunction;
use mssms::Cost;
use proptest::prelude::*;

fn binomial(n: u128, r: u128) -> u128 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn reference_count_matches_the_closed_form() {
    for k in 1..=4 {
        for l in 1..=4 {
            let sum: u128 = compositions(k, l).iter().map(|c| g_kappa(c)).sum();
            assert_eq!(sum, det_lb_value(k, l), "k={k} l={l}");
            assert_eq!(phase_fault_bound(k, l), binomial((k + l) as u128, l as u128) - 1);
        }
    }
    assert_eq!(det_lb_value(2, 2), 7);
}

#[test]
fn adversary_threshold_needs_room() {
    assert!(Adversary::threshold_phases(2, 2, Cost::from(14)).is_err());
    let r = Adversary::threshold_phases(2, 2, Adversary::default_far(2, 2)).unwrap();
    assert!(Cost::from(r as i64) > Cost::from(2 * 15 * 7));
}

#[test]
fn coupon_draws_withhold_one_set() {
    for t in 0..200 {
        let draw = gen_coupon_collector(2, 2, &mut trial_rng(1, t)).unwrap();
        assert!(draw.instance.requests.iter().all(|r| *r != draw.withheld));
        assert!(draw.instance.requests.iter().all(|r| draw.cover.serves(r)));
        assert!(opt_dp(&draw.instance).unwrap().0 <= Cost::from(1));
    }
}

#[test]
fn vertex_cover_round_trip() {
    // a 5-cycle needs 3 vertices
    let cycle = SetSystem::from_slices(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]]).unwrap();
    let tau = min_hitting_set_size(&cycle, 5).unwrap();
    assert_eq!(tau, 3);
    let inst = gen_vc_reduction(&cycle, tau, 4).unwrap();
    let (opt, schedule) = opt_dp(&inst).unwrap();
    assert_eq!(opt, Cost::from(tau as i64));
    let cover = extract_vertex_cover(&cycle, &schedule).expect("a still pass exists");
    assert!(cycle.is_hit_by(&cover) && cover.len() <= tau);

    let short = gen_vc_reduction(&cycle, tau - 1, 4).unwrap();
    assert!(opt_dp(&short).unwrap().0 > Cost::from(tau as i64 - 1));
}

#[test]
fn support_counterexample_for_several_lengths() {
    for m in 1..=4 {
        let inst = gen_wfa_counterexample(WfaCounterexample::Support, m).unwrap();
        assert_eq!(inst.n(), 2 * m + 2);
        let w = WorkFunction::new(&inst.space, &inst.initial).unwrap().after(&inst.requests);
        let (x, y) = (2 * m, 2 * m + 1);
        for c in w.support() {
            let p = c.points();
            assert!(p[0] != p[1]);
            assert!(p.contains(&x) != p.contains(&y), "{p:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn min_hitting_sets_are_bounded(sets in prop::collection::vec(prop::collection::btree_set(0usize..7, 1..=3), 1..7)) {
        let system = SetSystem::new(sets.into_iter().map(|s| mssms::Request::new(s.into_iter().collect()).unwrap()).collect());
        let l = system.width();
        let all = enumerate_min_hitting_sets(&system, 7).unwrap();
        let s = all[0].len();
        prop_assert!(all.len() <= l.pow(s as u32));
        prop_assert!(all.iter().all(|h| h.len() == s && system.is_hit_by(h)));
        // nothing smaller hits
        prop_assert!((0..7).combinations(s.saturating_sub(1)).all(|c| s == 0 || !system.is_hit_by(&c)));
    }
}
