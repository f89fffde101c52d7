//! Lower-bound constructions, counterexamples and random workloads.

mod adversary;
mod bounds;
mod constructions;
mod random;

pub use adversary::{adversary_next, AccountStep, Adversary, ReferenceAlgorithm};
pub use bounds::{compositions, det_lb_value, g_kappa, harmonic_number, phase_fault_bound};
pub use constructions::{
    extract_vertex_cover, gen_coupon_collector, gen_harmonic_line, gen_integrality_gap, gen_nested, gen_vc_reduction,
    gen_wfa_counterexample, CouponDraw, WfaCounterexample,
};
pub use random::{gen_random, random_request};
