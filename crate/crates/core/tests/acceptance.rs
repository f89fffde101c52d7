//! The ten acceptance criteria, one test each. Every test prints a single
//! PASS/FAIL line before asserting.

use mssms::harness::acceptance::run_criterion;

fn check(id: u8) {
    let result = run_criterion(id);
    println!("{result}");
    assert!(result.passed, "{result}");
}

#[test]
fn c01_hitting_set_phase_bound() {
    check(1);
}

#[test]
fn c02_minimum_hitting_set_count() {
    check(2);
}

#[test]
fn c03_randomized_subphase_faults() {
    check(3);
}

#[test]
fn c04_coupon_collector() {
    check(4);
}

#[test]
fn c05_adversary_game() {
    check(5);
}

#[test]
fn c06_offline_oracles_agree() {
    check(6);
}

#[test]
fn c07_lp_relaxation_and_rounding() {
    check(7);
}

#[test]
fn c08_harmonic_on_the_line() {
    check(8);
}

#[test]
fn c09_work_function_counterexamples() {
    check(9);
}

#[test]
fn c10_work_function_on_kserver() {
    check(10);
}
