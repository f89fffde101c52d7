//! Exact minimum hitting sets of small set systems.
//!
//! The search branches on the elements of the first set not yet hit, so a
//! system whose minimum hitting set has size `s` is explored to depth `s` with
//! branching factor at most `l`. Every minimum hitting set is reached this way
//! and there are at most `l^s` of them.

use crate::error::{Error, Result};
use crate::metric::{Point, Request};
use rand::Rng;
use std::collections::BTreeSet;

/// Sorted set of points.
pub type HittingSet = Vec<Point>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetSystem {
    sets: Vec<Request>,
}

impl SetSystem {
    pub fn new(sets: Vec<Request>) -> Self {
        Self { sets }
    }

    pub fn from_slices(sets: &[&[Point]]) -> Result<Self> {
        let sets = sets.iter().map(|s| Request::new(s.to_vec())).collect::<Result<_>>()?;
        Ok(Self { sets })
    }

    pub fn push(&mut self, set: Request) {
        self.sets.push(set);
    }

    pub fn sets(&self) -> &[Request] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Largest member size.
    pub fn width(&self) -> usize {
        self.sets.iter().map(Request::len).max().unwrap_or(0)
    }

    /// One past the largest point mentioned.
    pub fn ground_size(&self) -> usize {
        self.sets.iter().filter_map(|s| s.points().last()).max().map_or(0, |p| p + 1)
    }

    pub fn is_hit_by(&self, points: &[Point]) -> bool {
        self.sets.iter().all(|s| s.points().iter().any(|p| points.contains(p)))
    }

    fn first_unhit(&self, chosen: &[Point]) -> Option<&Request> {
        self.sets.iter().find(|s| !s.points().iter().any(|p| chosen.contains(p)))
    }
}

fn exists_within(system: &SetSystem, chosen: &mut Vec<Point>, budget: usize) -> bool {
    let Some(set) = system.first_unhit(chosen) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for &e in set.points() {
        chosen.push(e);
        let found = exists_within(system, chosen, budget - 1);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Size of a minimum hitting set, or `None` when it exceeds `cap`.
pub fn min_hitting_set_size(system: &SetSystem, cap: usize) -> Option<usize> {
    let mut chosen = Vec::with_capacity(cap);
    (0..=cap).find(|&s| exists_within(system, &mut chosen, s))
}

fn collect(system: &SetSystem, chosen: &mut Vec<Point>, budget: usize, out: &mut BTreeSet<HittingSet>) {
    let Some(set) = system.first_unhit(chosen) else {
        let mut found = chosen.clone();
        found.sort_unstable();
        out.insert(found);
        return;
    };
    if budget == 0 {
        return;
    }
    for &e in set.points() {
        chosen.push(e);
        collect(system, chosen, budget - 1, out);
        chosen.pop();
    }
}

/// All minimum hitting sets in lexicographic order, or `None` when the
/// minimum size exceeds `cap`.
pub fn enumerate_min_hitting_sets(system: &SetSystem, cap: usize) -> Option<Vec<HittingSet>> {
    let s = min_hitting_set_size(system, cap)?;
    let mut out = BTreeSet::new();
    collect(system, &mut Vec::with_capacity(s), s, &mut out);
    debug_assert!(out.iter().all(|h| h.len() == s));
    debug_assert!(
        (out.len() as u128) <= (system.width() as u128).pow(s as u32).max(1),
        "more than l^s minimum hitting sets"
    );
    Some(out.into_iter().collect())
}

/// Lexicographically smallest minimum hitting set.
pub fn min_hitting_set(system: &SetSystem, cap: usize) -> Option<HittingSet> {
    enumerate_min_hitting_sets(system, cap).and_then(|all| all.into_iter().next())
}

/// A minimum hitting set drawn uniformly from all of them.
pub fn sample_min_hitting_set<R: Rng + ?Sized>(system: &SetSystem, cap: usize, rng: &mut R) -> Result<HittingSet> {
    let mut all = enumerate_min_hitting_sets(system, cap)
        .ok_or_else(|| Error::Precondition(format!("minimum hitting set exceeds cap {cap}")))?;
    let at = rng.gen_range(0..all.len());
    Ok(all.swap_remove(at))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sys(sets: &[&[Point]]) -> SetSystem {
        SetSystem::from_slices(sets).unwrap()
    }

    /// Every subset of the ground set up to `cap` points, filtered to the
    /// hitting ones of minimum size.
    fn brute(system: &SetSystem, cap: usize) -> Option<Vec<HittingSet>> {
        let ground = system.ground_size();
        for s in 0..=cap {
            let hits: Vec<HittingSet> = (0..ground).combinations(s).filter(|c| system.is_hit_by(c)).collect();
            if !hits.is_empty() {
                return Some(hits);
            }
        }
        None
    }

    #[test]
    fn sizes() {
        assert_eq!(min_hitting_set_size(&sys(&[&[1, 2], &[2, 3]]), 2), Some(1));
        assert_eq!(min_hitting_set_size(&sys(&[&[1, 2], &[3, 4]]), 2), Some(2));
        assert_eq!(min_hitting_set_size(&sys(&[&[1, 2], &[3, 4], &[5, 6]]), 2), None);
        assert_eq!(min_hitting_set_size(&SetSystem::default(), 1), Some(0));
    }

    #[test]
    fn enumeration() {
        let all = enumerate_min_hitting_sets(&sys(&[&[1, 2], &[3, 4]]), 2).unwrap();
        assert_eq!(all, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        assert_eq!(brute(&sys(&[&[1, 2], &[3, 4]]), 2).unwrap(), all);
        assert_eq!(enumerate_min_hitting_sets(&sys(&[&[1, 2], &[2, 3]]), 2).unwrap(), vec![vec![2]]);
        assert_eq!(enumerate_min_hitting_sets(&sys(&[&[1, 2], &[3, 4], &[5, 6]]), 2), None);
        assert_eq!(min_hitting_set(&sys(&[&[4, 2], &[3, 4]]), 2), Some(vec![4]));
    }

    #[test]
    fn disjoint_systems_have_l_pow_s() {
        for l in 1..=3usize {
            for s in 1..=3usize {
                let sets: Vec<Request> = (0..s).map(|b| Request::new((b * l..(b + 1) * l).collect()).unwrap()).collect();
                let system = SetSystem::new(sets);
                let all = enumerate_min_hitting_sets(&system, s).unwrap();
                assert_eq!(all.len(), l.pow(s as u32));
                assert_eq!(brute(&system, s).unwrap(), all);
            }
        }
    }

    #[test]
    fn sampling_is_certain_for_unique_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert_eq!(sample_min_hitting_set(&sys(&[&[1, 2], &[2, 3]]), 2, &mut rng).unwrap(), vec![2]);
        }
    }

    #[test]
    fn sampling_is_uniform() {
        let system = sys(&[&[1, 2], &[3, 4]]);
        let all = enumerate_min_hitting_sets(&system, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let trials = 10_000;
        let mut counts = vec![0usize; all.len()];
        for _ in 0..trials {
            let h = sample_min_hitting_set(&system, 2, &mut rng).unwrap();
            counts[all.iter().position(|a| *a == h).unwrap()] += 1;
        }
        let expected = trials as f64 / 4.0;
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        // 3 degrees of freedom, 99.9% quantile
        assert!(chi2 < 16.27, "chi-square {chi2}");
        for c in counts {
            assert!((c as f64 / trials as f64 - 0.25).abs() <= 0.02);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let system = sys(&[&[1, 2, 3], &[4, 5, 6]]);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..10).map(|_| sample_min_hitting_set(&system, 3, &mut rng).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
    }

    #[test]
    fn over_cap_sampling_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_min_hitting_set(&sys(&[&[1], &[2]]), 1, &mut rng).is_err());
    }

    fn arb_system() -> impl Strategy<Value = SetSystem> {
        (1usize..=4, 1usize..=12).prop_flat_map(|(l, ground)| {
            let l = l.min(ground);
            prop::collection::vec(prop::sample::subsequence((0..ground).collect::<Vec<_>>(), l), 0..8)
                .prop_map(|sets| SetSystem::new(sets.into_iter().map(|s| Request::new(s).unwrap()).collect()))
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force(system in arb_system()) {
            let cap = 4;
            let fast = enumerate_min_hitting_sets(&system, cap);
            prop_assert_eq!(&fast, &brute(&system, cap));
            if let Some(all) = fast {
                let s = all[0].len();
                prop_assert!(all.len() <= system.width().max(1).pow(s as u32));
                for h in &all {
                    prop_assert!(system.is_hit_by(h));
                }
            }
        }
    }
}
