//! Finite metric spaces, server configurations and requests.

mod assignment;
mod config;
mod rational;
mod space;

pub use assignment::min_cost_assignment;
pub use config::{Configuration, Request};
pub use rational::{cost_to_big, cost_to_f64, format_cost, parse_cost};
pub use space::{MetricSpace, SpaceSpec};

use crate::error::{Error, Result};

/// Index of a point, 0-based.
pub type Point = usize;

/// Exact distance/cost value.
pub type Cost = num_rational::Rational64;

/// Cost of the cheapest way to turn `x` into `y`: the weight of a minimum
/// weight perfect matching between the two multisets.
pub fn config_distance(space: &MetricSpace, x: &Configuration, y: &Configuration) -> Result<Cost> {
    points_distance(space, x.points(), y.points())
}

/// [`config_distance`] on raw point lists (order irrelevant).
pub fn points_distance(space: &MetricSpace, x: &[Point], y: &[Point]) -> Result<Cost> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch { left: x.len(), right: y.len() });
    }
    let (cost, _) = min_cost_assignment(x.len(), y.len(), |i, j| space.dist(x[i], y[j]));
    Ok(cost)
}
