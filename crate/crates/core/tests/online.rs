mod common;

use mssms::generators::{gen_harmonic_line, gen_nested, gen_random, phase_fault_bound};
use mssms::harness::{adversary_game, run, run_trial, write_csv, GameOptions, RunOptions};
use mssms::offline::opt_dp;
use mssms::online::{build_algorithm, simulate, AlgorithmKind, AlgorithmOptions, Lazy};
use mssms::{Cost, SpaceSpec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn every_algorithm_serves_every_request(seed in any::<u64>(), n in 3usize..8, k in 1usize..3, l in 1usize..3, m in 1usize..15) {
        let inst = common::instance(seed, n, k, l, m);
        let opt = opt_dp(&inst).unwrap().0;
        for kind in AlgorithmKind::ALL {
            let trace = run_trial(kind, &inst, seed, 0, AlgorithmOptions::default()).unwrap();
            prop_assert_eq!(trace.records.len(), inst.m());
            prop_assert!(trace.total_cost >= opt);
        }
    }

    #[test]
    fn hitting_set_phases_respect_the_bound(seed in any::<u64>(), k in 1usize..4, l in 1usize..4, m in 1usize..80) {
        let inst = common::instance(seed, k + l + 3, k, l, m);
        let trace = run_trial(AlgorithmKind::HittingSet, &inst, 0, 0, AlgorithmOptions::default()).unwrap();
        let bound = phase_fault_bound(k, l) as usize;
        prop_assert!(trace.faults_per_phase().iter().all(|&(_, f)| f <= bound));
    }

    /// A new phase starts only when the previous phase's requests and the
    /// current one have no hitting set of size `k`, so on a uniform space
    /// the optimum pays at least one per phase change.
    #[test]
    fn phase_changes_force_opt_to_move(seed in any::<u64>(), k in 1usize..3, l in 1usize..3, m in 1usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = gen_random(SpaceSpec::Uniform { n: k + l + 1 }, k, l, m, &mut rng).unwrap();
        let trace = run_trial(AlgorithmKind::HittingSet, &inst, 0, 0, AlgorithmOptions::default()).unwrap();
        let opt = opt_dp(&inst).unwrap().0;
        prop_assert!(opt >= Cost::from(trace.phases() as i64 - 1));
    }

    #[test]
    fn lazy_wrapper_moves_at_most_one_server(seed in any::<u64>(), n in 3usize..8, k in 1usize..3, l in 1usize..3, m in 1usize..15) {
        let inst = common::instance(seed, n, k, l, m);
        for kind in AlgorithmKind::ALL {
            let inner = build_algorithm(kind, &inst.space, &inst.initial, AlgorithmOptions::default()).unwrap();
            let mut lazy = Lazy::new(&inst.space, inner);
            let trace = simulate(&mut lazy, &inst.requests, &mut ChaCha8Rng::seed_from_u64(seed));
            let inner_cost = lazy.inner().cost();
            prop_assert!(trace.records.iter().all(|r| r.moves.len() <= 1 && r.fault == !r.moves.is_empty()));
            prop_assert_eq!(trace.verify(&inst.space).unwrap(), trace.total_cost);
            prop_assert!(trace.total_cost <= inner_cost);
        }
    }
}

#[test]
fn nested_instance_drives_every_level() {
    for (k, l) in [(2, 2), (3, 2), (3, 3)] {
        let inst = gen_nested(k, l, 2 * k).unwrap();
        let trace = run_trial(AlgorithmKind::RandomizedHittingSet, &inst, 1, 0, AlgorithmOptions::default()).unwrap();
        let levels: std::collections::BTreeSet<usize> = trace.records.iter().filter_map(|r| r.subphase).collect();
        assert_eq!(levels, (1..=k).collect());
    }
}

#[test]
fn harmonic_monte_carlo_is_near_the_exact_value() {
    let inst = gen_harmonic_line(10).unwrap();
    let options = RunOptions { trials: 20_000, seed: 3, ..RunOptions::default() };
    let summary = run(AlgorithmKind::Harmonic, &inst, &options).unwrap();
    let exact = mssms::online::harmonic_expected_cost(&inst.space, &inst.initial, &inst.requests);
    let exact: f64 = num_traits::ToPrimitive::to_f64(&exact).unwrap();
    assert!((summary.cost.mean - exact).abs() <= 4.0 * summary.cost.stderr);
    assert_eq!(summary.opt, Some(Cost::from(1)));
}

#[test]
fn csv_is_identical_across_runs() {
    let inst = common::instance(17, 6, 2, 2, 20);
    let options = RunOptions { trials: 50, seed: 9, ..RunOptions::default() };
    let render = |kind| {
        let mut out = Vec::new();
        write_csv(&mut out, &run(kind, &inst, &options).unwrap().reports).unwrap();
        String::from_utf8(out).unwrap()
    };
    for kind in [AlgorithmKind::Greedy, AlgorithmKind::RandomizedHittingSet] {
        let first = render(kind);
        assert_eq!(first, render(kind));
        assert!(first.starts_with("run_id,algorithm,seed,k,l,n,m,cost,opt,ratio,phases,faults"));
    }
}

#[test]
fn adversary_invariants_hold_for_every_algorithm() {
    for kind in AlgorithmKind::ALL {
        let options = GameOptions { phases: Some(3), max_requests: 300, seed: 4, ..GameOptions::default() };
        let report = adversary_game(kind, 2, 2, &options).unwrap();
        assert!(report.all_faults, "{kind}");
        assert!(report.references_always_served, "{kind}");
        assert!(report.phase_changes_cost_far, "{kind}");
        assert!(report.total_bound_holds, "{kind}");
        assert_eq!(report.reference_count, 7);
    }
}

#[test]
fn one_phase_change_costs_the_online_algorithm_far() {
    let options = GameOptions { phases: Some(1), max_requests: 500, ..GameOptions::default() };
    let report = adversary_game(AlgorithmKind::HittingSet, 2, 2, &options).unwrap();
    if report.phase_changes == 1 {
        assert!(report.online_cost >= report.far);
    }
}

#[test]
fn wfa_lazy_variant_runs() {
    let inst = common::instance(21, 5, 2, 2, 12);
    let full = run_trial(AlgorithmKind::WorkFunction, &inst, 0, 0, AlgorithmOptions { wfa_lazy: false }).unwrap();
    let lazy = run_trial(AlgorithmKind::WorkFunction, &inst, 0, 0, AlgorithmOptions { wfa_lazy: true }).unwrap();
    assert!(lazy.records.iter().all(|r| r.moves.len() <= 1));
    assert_eq!(full.records.len(), lazy.records.len());
}
