//! Metrical service systems with multiple servers.
//!
//! `k` servers live on a finite metric space; each request is a set of at most
//! `l` points and is served once some server stands on one of them. The crate
//! provides the online algorithms (hitting set, randomized hitting set,
//! harmonic, work function, greedy), exact offline solvers, the covering LP
//! with its `kl`-server rounding, work-function diagnostics and the lower-bound
//! instance generators, plus a small harness for running them from files.

pub mod error;
pub mod generators;
pub mod harness;
pub mod hitting;
pub mod instance;
pub mod metric;
pub mod offline;
pub mod online;
pub mod workfunction;

pub use error::{Error, Result};
pub use instance::Instance;
pub use metric::{config_distance, Configuration, Cost, MetricSpace, Point, Request, SpaceSpec};
