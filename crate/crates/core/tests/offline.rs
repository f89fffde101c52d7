mod common;

use mssms::generators::{gen_harmonic_line, gen_integrality_gap};
use mssms::metric::cost_to_big;
use mssms::offline::{
    build_lp, kserver_flow, opt_bruteforce, opt_dp, opt_kserver_flow, opt_mss_path, round_to_kl, solve_lp, LpVar,
};
use mssms::{Configuration, Cost, Instance, MetricSpace, Request};
use num_rational::BigRational;
use proptest::prelude::*;

fn requests(points: &[&[usize]]) -> Vec<Request> {
    points.iter().map(|r| Request::new(r.to_vec()).unwrap()).collect()
}

#[test]
fn flow_alternating_on_two_points() {
    let space = MetricSpace::uniform(2);
    let (cost, schedule) = kserver_flow(&space, &[0], &[1, 0, 1, 0]).unwrap();
    assert_eq!(cost, Cost::from(4));
    assert_eq!(schedule.steps.iter().filter(|s| !s.is_empty()).count(), 4);
}

#[test]
fn flow_uses_the_closer_server_on_a_line() {
    let space = MetricSpace::line([0, 10, 11].map(Cost::from).to_vec());
    let (cost, schedule) = kserver_flow(&space, &[0, 1], &[2, 0, 2]).unwrap();
    assert_eq!(cost, Cost::from(1));
    assert_eq!(schedule.steps[0][0].server, 1);
}

#[test]
fn flow_handles_no_requests() {
    let (cost, schedule) = kserver_flow(&MetricSpace::uniform(3), &[0, 1], &[]).unwrap();
    assert_eq!(cost, Cost::from(0));
    assert!(schedule.steps.is_empty());
}

#[test]
fn path_solver_on_the_harmonic_line() {
    let inst = gen_harmonic_line(6).unwrap();
    let (cost, schedule) = opt_mss_path(&inst).unwrap();
    assert_eq!(cost, Cost::from(1));
    assert_eq!(schedule.verify(&inst.space, &inst.requests).unwrap(), cost);
}

#[test]
fn dp_prefers_staying_when_covered() {
    let inst = Instance::new(MetricSpace::uniform(4), Configuration::new(vec![0, 1]), requests(&[&[0, 2], &[1, 3]]), None).unwrap();
    assert_eq!(opt_dp(&inst).unwrap().0, Cost::from(0));
    assert_eq!(opt_bruteforce(&inst).unwrap(), Cost::from(0));
}

#[test]
fn gap_instance_values() {
    let inst = gen_integrality_gap(2, 2, 1).unwrap();
    let lp = solve_lp(&build_lp(&inst)).unwrap();
    assert!(lp.value <= BigRational::from_integer(2.into()));
    assert!(opt_dp(&inst).unwrap().0 >= Cost::from(3));
}

#[test]
fn lp_names_are_one_based() {
    let inst = Instance::new(MetricSpace::uniform(3), Configuration::new(vec![0]), requests(&[&[1, 2], &[0]]), None).unwrap();
    let model = build_lp(&inst);
    assert_eq!(model.vars[0].to_string(), "g(1,1,1)");
    assert!(model.vars.iter().any(|v| matches!(v, LpVar::F { .. })));
    assert!(model.dump().starts_with("minimize:"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_brute_force(seed in any::<u64>(), n in 2usize..6, k in 1usize..3, l in 1usize..3, m in 1usize..6) {
        let inst = common::instance(seed, n, k, l, m);
        let (dp, schedule) = opt_dp(&inst).unwrap();
        prop_assert_eq!(dp, opt_bruteforce(&inst).unwrap());
        prop_assert_eq!(schedule.verify(&inst.space, &inst.requests).unwrap(), dp);
    }

    #[test]
    fn flow_matches_dp(seed in any::<u64>(), n in 2usize..7, k in 1usize..4, m in 0usize..8) {
        let inst = common::instance(seed, n, k, 1, m);
        prop_assert_eq!(opt_kserver_flow(&inst).unwrap().0, opt_dp(&inst).unwrap().0);
    }

    #[test]
    fn path_matches_dp(seed in any::<u64>(), n in 2usize..8, l in 1usize..4, m in 0usize..10) {
        let inst = common::instance(seed, n, 1, l, m);
        prop_assert_eq!(opt_mss_path(&inst).unwrap().0, opt_dp(&inst).unwrap().0);
    }

    /// An optimal schedule, read as a 0/1 point, is feasible for the LP and
    /// has the same objective, so the LP value cannot exceed the optimum.
    #[test]
    fn optimal_schedule_is_an_lp_point(seed in any::<u64>(), n in 2usize..6, k in 1usize..3, l in 1usize..3, m in 1usize..5) {
        let inst = common::instance(seed, n, k, l, m);
        let (dp, schedule) = opt_dp(&inst).unwrap();
        let model = build_lp(&inst);
        let x = model.point_from_schedule(&inst, &schedule).unwrap();
        prop_assert_eq!(model.evaluate(&x), Some(dp));
        prop_assert!(solve_lp(&model).unwrap().value <= cost_to_big(&dp));
    }

    #[test]
    fn rounding_stays_within_l_times_lp(seed in any::<u64>(), n in 2usize..6, k in 1usize..3, l in 1usize..4, m in 1usize..5) {
        let inst = common::instance(seed, n, k, l, m);
        let r = round_to_kl(&inst).unwrap();
        let l = BigRational::from_integer(inst.l().into());
        prop_assert!(cost_to_big(&r.cost) <= l * &r.lp.value);
        prop_assert_eq!(r.schedule.servers(), inst.k() * inst.l());
        prop_assert_eq!(r.schedule.verify(&inst.space, &inst.requests).unwrap(), r.cost);
        for (p, req) in r.points.iter().zip(&inst.requests) {
            prop_assert!(req.contains(*p));
        }
    }
}
