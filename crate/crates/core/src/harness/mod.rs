//! File formats, simulation runs, the adversary game and acceptance suites.

pub mod acceptance;
mod format;
mod game;
mod report;

pub use format::{emit_instance, parse_instance};
pub use game::{adversary_game, GameOptions, GameReport};
pub use report::{run, run_trial, trial_rng, write_csv, PhaseSummary, RunOptions, RunReport, RunSummary, Stats};
