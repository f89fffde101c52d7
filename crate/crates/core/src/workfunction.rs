//! Work functions over every `k`-configuration of a finite space.
//!
//! `w(X)` is the cheapest way to start in the initial configuration, serve the
//! requests so far and end in `X`. After a request `R` the table is updated
//! with the single-exchange rule
//! `w'(X) = min over x in X, r in R of w(X - x + r) + d(x, r)`,
//! which covers every serve-then-move history because the previous table is
//! 1-Lipschitz in configuration distance.

use crate::error::{Error, Result};
use crate::metric::{config_distance, Configuration, Cost, MetricSpace, Point, Request};
use itertools::Itertools;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// Largest configuration table we are willing to materialize.
pub const MAX_TABLE: usize = 1_000_000;

/// Every multiset of `k` points of a space, in canonical order.
#[derive(Debug)]
pub struct ConfigTable<'a> {
    space: &'a MetricSpace,
    k: usize,
    configs: Vec<Configuration>,
    index: HashMap<Configuration, usize>,
    distances: OnceLock<Vec<Cost>>,
}

impl<'a> ConfigTable<'a> {
    pub fn new(space: &'a MetricSpace, k: usize) -> Result<Self> {
        let n = space.len();
        let size = num_integer::binomial((n + k).saturating_sub(1) as u128, k as u128);
        if size > MAX_TABLE as u128 {
            return Err(Error::BudgetExceeded { needed: size, budget: MAX_TABLE as u128 });
        }
        let configs: Vec<Configuration> =
            (0..n).combinations_with_replacement(k).map(Configuration::new).collect();
        let index = configs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(Self { space, k, configs, index, distances: OnceLock::new() })
    }

    pub fn space(&self) -> &'a MetricSpace {
        self.space
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    pub fn index_of(&self, c: &Configuration) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Configuration distance between table entries `i` and `j`.
    pub fn distance(&self, i: usize, j: usize) -> Cost {
        let n = self.configs.len();
        let table = self.distances.get_or_init(|| {
            let mut d = vec![Cost::zero(); n * n];
            for a in 0..n {
                for b in a + 1..n {
                    let v = config_distance(self.space, &self.configs[a], &self.configs[b]).expect("same size");
                    d[a * n + b] = v;
                    d[b * n + a] = v;
                }
            }
            d
        });
        table[i * n + j]
    }
}

#[derive(Clone, Debug)]
pub struct WorkFunction<'a> {
    table: Arc<ConfigTable<'a>>,
    values: Vec<Cost>,
    initial: Configuration,
    last_request: Option<Request>,
}

/// A violated quasi-convexity inequality for one bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiConvexViolation {
    /// Slot `i` of `X` is mapped to slot `bijection[i]` of `Y`.
    pub bijection: Vec<usize>,
    /// Slots of `X` forming the sub-multiset `X'`.
    pub subset: Vec<usize>,
    pub left: Cost,
    pub right: Cost,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiConvexity {
    /// A bijection (slot `i` of `X` to slot `g[i]` of `Y`) satisfying every
    /// exchange inequality.
    Witness(Vec<usize>),
    /// One violation for every bijection.
    Violated(Vec<QuasiConvexViolation>),
}

impl<'a> WorkFunction<'a> {
    /// The work function before any request: `w(X) = d(X0, X)`.
    pub fn new(space: &'a MetricSpace, initial: &Configuration) -> Result<Self> {
        initial.validate(space.len())?;
        let table = Arc::new(ConfigTable::new(space, initial.len())?);
        Ok(Self::with_table(table, initial))
    }

    /// Starts a work function over an existing table.
    pub fn with_table(table: Arc<ConfigTable<'a>>, initial: &Configuration) -> Self {
        let values = table
            .configs()
            .iter()
            .map(|c| config_distance(table.space(), initial, c).expect("same size"))
            .collect();
        Self { table, values, initial: initial.clone(), last_request: None }
    }

    pub fn table(&self) -> &Arc<ConfigTable<'a>> {
        &self.table
    }

    pub fn initial(&self) -> &Configuration {
        &self.initial
    }

    pub fn last_request(&self) -> Option<&Request> {
        self.last_request.as_ref()
    }

    pub fn values(&self) -> &[Cost] {
        &self.values
    }

    pub fn value(&self, c: &Configuration) -> Option<Cost> {
        self.table.index_of(c).map(|i| self.values[i])
    }

    /// Optimal cost of serving the requests so far.
    pub fn min_value(&self) -> Cost {
        self.values.iter().copied().min().unwrap_or_else(Cost::zero)
    }

    /// The work function after one more request.
    pub fn update(&self, request: &Request) -> Self {
        let space = self.table.space();
        let values = self
            .table
            .configs()
            .iter()
            .map(|x| {
                let mut best: Option<Cost> = None;
                for &from in x.points().iter().dedup() {
                    for &to in request.points() {
                        let y = if from == to { x.clone() } else { x.replace(from, to) };
                        let idx = self.table.index_of(&y).expect("table holds every configuration");
                        let cand = self.values[idx] + space.dist(from, to);
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
                best.expect("configurations and requests are nonempty")
            })
            .collect();
        Self { table: Arc::clone(&self.table), values, initial: self.initial.clone(), last_request: Some(request.clone()) }
    }

    /// Applies a whole request sequence.
    pub fn after(&self, requests: &[Request]) -> Self {
        requests.iter().fold(self.clone(), |w, r| w.update(r))
    }

    /// Whether `y` dominates `x`: `w(x) = w(y) + d(x, y)`.
    fn dominated(&self, x: usize) -> bool {
        (0..self.values.len()).any(|y| y != x && self.values[x] == self.values[y] + self.table.distance(x, y))
    }

    /// Configurations not dominated by any other configuration.
    pub fn support(&self) -> Vec<Configuration> {
        (0..self.values.len())
            .filter(|&x| !self.dominated(x))
            .map(|x| self.table.configs()[x].clone())
            .collect()
    }

    /// First pair `(X, Y)` with `w(X) > w(Y) + d(X, Y)`, if any.
    pub fn lipschitz_violation(&self) -> Option<(Configuration, Configuration)> {
        let n = self.values.len();
        for x in 0..n {
            for y in 0..n {
                if self.values[x] > self.values[y] + self.table.distance(x, y) {
                    let c = self.table.configs();
                    return Some((c[x].clone(), c[y].clone()));
                }
            }
        }
        None
    }

    /// Searches every bijection `g: X -> Y` for one with
    /// `w(g(X') + (X - X')) + w(X' + g(X - X')) <= w(X) + w(Y)` for all `X'`.
    pub fn quasiconvex_check(&self, x: &Configuration, y: &Configuration) -> Result<QuasiConvexity> {
        let k = self.table.k();
        if x.len() != k || y.len() != k {
            return Err(Error::SizeMismatch { left: x.len(), right: y.len() });
        }
        let w = |pts: Vec<Point>| {
            self.value(&Configuration::new(pts))
                .ok_or_else(|| Error::InvalidConfiguration("configuration outside the table".into()))
        };
        let right = w(x.points().to_vec())? + w(y.points().to_vec())?;
        let (xs, ys) = (x.points(), y.points());
        let mut violations = Vec::new();
        for perm in (0..k).permutations(k) {
            let mut failed = None;
            for mask in 0u32..(1 << k) {
                let mut a = Vec::with_capacity(k);
                let mut b = Vec::with_capacity(k);
                for i in 0..k {
                    if mask & (1 << i) != 0 {
                        a.push(ys[perm[i]]);
                        b.push(xs[i]);
                    } else {
                        a.push(xs[i]);
                        b.push(ys[perm[i]]);
                    }
                }
                let left = w(a)? + w(b)?;
                if left > right {
                    let subset = (0..k).filter(|i| mask & (1 << i) != 0).collect();
                    failed = Some(QuasiConvexViolation { bijection: perm.clone(), subset, left, right });
                    break;
                }
            }
            match failed {
                None => return Ok(QuasiConvexity::Witness(perm)),
                Some(v) => violations.push(v),
            }
        }
        Ok(QuasiConvexity::Violated(violations))
    }
}
