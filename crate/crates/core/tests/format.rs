mod common;

use mssms::harness::{emit_instance, parse_instance};
use mssms::{Configuration, Cost, Instance, MetricSpace, Request};
use proptest::prelude::*;

#[test]
fn explicit_metric_with_comments() {
    let text = "# triangle\nmetric explicit 3\n0 1 3/2\n1 0 1\n3/2 1 0\nservers 1\nrequest 2 3  # either\nrequest 3\n";
    let inst = parse_instance(text).unwrap();
    assert_eq!((inst.n(), inst.k(), inst.l(), inst.m()), (3, 1, 2, 2));
    assert_eq!(inst.space.dist(0, 2), Cost::new(3, 2));
}

#[test]
fn triangle_violation_is_rejected() {
    let text = "metric explicit 3\n0 1 5\n1 0 1\n5 1 0\nservers 1\n";
    assert!(parse_instance(text).is_err());
}

#[test]
fn scaled_union_is_written_out_as_a_matrix() {
    let space = MetricSpace::scaled_union(vec![(2, Cost::from(1)), (2, Cost::from(3))], Cost::from(10)).unwrap();
    let inst = Instance::new(space, Configuration::new(vec![0, 2]), vec![Request::new(vec![1, 3]).unwrap()], None).unwrap();
    let back = parse_instance(&emit_instance(&inst)).unwrap();
    assert_eq!(back.space.matrix(), inst.space.matrix());
    assert_eq!(back.requests, inst.requests);
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(seed in any::<u64>(), n in 1usize..9, k in 1usize..4, l in 1usize..4, m in 0usize..12) {
        let inst = common::instance(seed, n, k, l, m);
        prop_assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
    }
}
