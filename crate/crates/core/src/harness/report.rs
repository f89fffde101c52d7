//! Simulation runs and their CSV reports.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{cost_to_f64, format_cost, Cost};
use crate::offline::opt_dp;
use crate::online::{build_algorithm, simulate, AlgorithmKind, AlgorithmOptions, Trace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;

/// The generator behind trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Sample mean, sample standard deviation and standard error.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Stats {
    pub count: usize,
    pub mean: f64,
    pub std: f64,
    pub stderr: f64,
}

impl Stats {
    pub fn of(values: &[f64]) -> Self {
        let count = values.len();
        if count == 0 {
            return Self::default();
        }
        let mean = values.iter().sum::<f64>() / count as f64;
        let var = if count > 1 { values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1) as f64 } else { 0.0 };
        let std = var.sqrt();
        Self { count, mean, std, stderr: std / (count as f64).sqrt() }
    }
}

/// Cost and faults of one phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseSummary {
    pub phase: usize,
    pub faults: usize,
    pub cost: Cost,
}

/// One simulated trial.
#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub run_id: String,
    pub algorithm: String,
    pub seed: u64,
    pub trial: u64,
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub m: usize,
    pub cost: Cost,
    pub opt: Option<Cost>,
    pub faults: usize,
    pub phases: Vec<PhaseSummary>,
}

impl RunReport {
    /// `cost / opt` when the optimum is known and positive.
    pub fn ratio(&self) -> Option<f64> {
        self.opt.filter(|o| *o > Cost::from(0)).map(|o| cost_to_f64(&(self.cost / o)))
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    run_id: &'a str,
    algorithm: &'a str,
    seed: u64,
    k: usize,
    l: usize,
    n: usize,
    m: usize,
    cost: String,
    opt: String,
    ratio: String,
    phases: usize,
    faults: usize,
}

/// Writes reports with the columns
/// `run_id, algorithm, seed, k, l, n, m, cost, opt, ratio, phases, faults`.
pub fn write_csv<W: Write>(out: W, reports: &[RunReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        let row = CsvRow {
            run_id: &r.run_id,
            algorithm: &r.algorithm,
            seed: r.seed,
            k: r.k,
            l: r.l,
            n: r.n,
            m: r.m,
            cost: format_cost(&r.cost),
            opt: r.opt.as_ref().map(format_cost).unwrap_or_default(),
            ratio: r.ratio().map(|x| format!("{x:.6}")).unwrap_or_default(),
            phases: r.phases.len(),
            faults: r.faults,
        };
        w.serialize(row).map_err(|e| Error::Precondition(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::Precondition(format!("csv: {e}")))?;
    Ok(())
}

/// Settings of [`run`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub run_id: String,
    pub seed: u64,
    /// Trials for randomized algorithms; deterministic ones run once.
    pub trials: u64,
    pub algorithm: AlgorithmOptions,
    /// Compute the optimum with the dynamic program when within budget.
    pub with_opt: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { run_id: "run".into(), seed: 0, trials: 10_000, algorithm: AlgorithmOptions::default(), with_opt: true }
    }
}

/// All trials of one algorithm on one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct RunSummary {
    pub reports: Vec<RunReport>,
    pub cost: Stats,
    pub opt: Option<Cost>,
    /// Why the optimum is missing, if it is.
    pub opt_error: Option<Error>,
}

fn phase_summaries(trace: &Trace) -> Vec<PhaseSummary> {
    let faults = trace.faults_per_phase();
    trace
        .cost_per_phase()
        .into_iter()
        .map(|(phase, cost)| PhaseSummary {
            phase,
            faults: faults.iter().find(|(p, _)| *p == phase).map_or(0, |(_, f)| *f),
            cost,
        })
        .collect()
}

/// Runs one trial and checks its trace independently of the algorithm.
pub fn run_trial(kind: AlgorithmKind, inst: &Instance, seed: u64, trial: u64, options: AlgorithmOptions) -> Result<Trace> {
    let mut alg = build_algorithm(kind, &inst.space, &inst.initial, options)?;
    let mut rng = trial_rng(seed, trial);
    let trace = simulate(alg.as_mut(), &inst.requests, &mut rng);
    let verified = trace.verify(&inst.space)?;
    if verified != alg.cost() {
        return Err(Error::Schedule("algorithm cost differs from its moves".into()));
    }
    Ok(trace)
}

/// Runs `kind` on `inst`; randomized algorithms get `options.trials`
/// independent trials, in parallel, reported in trial order.
pub fn run(kind: AlgorithmKind, inst: &Instance, options: &RunOptions) -> Result<RunSummary> {
    let trials = if kind.is_randomized() { options.trials.max(1) } else { 1 };
    let (opt, opt_error) = if options.with_opt {
        match opt_dp(inst) {
            Ok((c, _)) => (Some(c), None),
            Err(e) => (None, Some(e)),
        }
    } else {
        (None, None)
    };
    let reports: Vec<RunReport> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let trace = run_trial(kind, inst, options.seed, t, options.algorithm)?;
            Ok(RunReport {
                run_id: options.run_id.clone(),
                algorithm: kind.to_string(),
                seed: options.seed,
                trial: t,
                k: inst.k(),
                l: inst.l(),
                n: inst.n(),
                m: inst.m(),
                cost: trace.total_cost,
                opt,
                faults: trace.faults,
                phases: phase_summaries(&trace),
            })
        })
        .collect::<Result<_>>()?;
    let costs: Vec<f64> = reports.iter().map(|r| cost_to_f64(&r.cost)).collect();
    Ok(RunSummary { reports, cost: Stats::of(&costs), opt, opt_error })
}
