use clap::{Parser, Subcommand, ValueEnum};
use mssms::generators::{
    gen_coupon_collector, gen_harmonic_line, gen_integrality_gap, gen_nested, gen_random, gen_vc_reduction,
    gen_wfa_counterexample, WfaCounterexample,
};
use mssms::harness::acceptance::run_suite;
use mssms::harness::{
    adversary_game, emit_instance, parse_instance, run, trial_rng, write_csv, GameOptions, RunOptions,
};
use mssms::hitting::SetSystem;
use mssms::metric::{format_cost, parse_cost};
use mssms::offline::{build_lp, opt_bruteforce, opt_dp, opt_kserver_flow, opt_mss_path, round_to_kl, solve_lp, Schedule};
use mssms::online::{AlgorithmKind, AlgorithmOptions};
use mssms::workfunction::WorkFunction;
use mssms::{Cost, Error, Instance, Request, Result, SpaceSpec};
use num_traits::Zero;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mssms", version, about = "Metrical service systems with multiple servers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run an online algorithm and print one CSV row per trial.
    Run {
        /// hs, rhs, harmonic, wfa or greedy.
        algorithm: AlgorithmKind,
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value = "run")]
        run_id: String,
        /// Restrict the work function algorithm to single-server moves.
        #[arg(long)]
        wfa_lazy: bool,
        /// Skip the offline optimum.
        #[arg(long)]
        no_opt: bool,
    },
    /// Solve an instance offline.
    Opt {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OptMethod::Dp)]
        method: OptMethod,
        /// Print the moves of the optimal schedule.
        #[arg(long)]
        schedule: bool,
    },
    /// Solve the covering LP.
    Lp {
        file: PathBuf,
        /// Print the model instead of solving it.
        #[arg(long)]
        dump: bool,
    },
    /// Round the LP to a schedule with k*l servers.
    Round { file: PathBuf },
    /// Play the cluster adversary against an algorithm.
    Adversary {
        algorithm: AlgorithmKind,
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(short, default_value_t = 2)]
        l: usize,
        /// Phase changes to play (default: the certification threshold).
        #[arg(long)]
        phases: Option<u64>,
        /// Distance between clusters, e.g. 15 or 31/2.
        #[arg(long, value_parser = cost_arg)]
        far: Option<Cost>,
        #[arg(long, default_value_t = 2_000)]
        max_requests: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an acceptance suite: bounds, oracles, lp, counterexamples, randomized or all.
    Acceptance { suite: String },
    /// Print the work function after all requests.
    Wf {
        file: PathBuf,
        /// Only list the support.
        #[arg(long)]
        support: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Uniformly random requests of size l.
    Random {
        #[arg(short, default_value_t = 6)]
        n: usize,
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(short, default_value_t = 2)]
        l: usize,
        #[arg(short, default_value_t = 20)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Metric::Uniform)]
        metric: Metric,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One draw of the coupon-collector distribution.
    Coupon {
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(short, default_value_t = 2)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The LP integrality-gap family.
    Gap {
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(short, default_value_t = 2)]
        l: usize,
        #[arg(long, default_value_t = 3)]
        rounds: usize,
    },
    /// Vertex cover as an offline instance; sets are 1-based, e.g. "1 2,2 3".
    Vc {
        #[arg(long)]
        sets: String,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        reps: usize,
    },
    /// Harmonic's bad sequence on the line.
    Harmonic {
        #[arg(short, default_value_t = 10)]
        m: usize,
    },
    /// Work function whose support misses most of the last request's neighbours.
    WfaSupport {
        #[arg(short, default_value_t = 3)]
        m: usize,
    },
    /// Work function that is not quasi-convex.
    WfaQuasiconvex,
    /// Nested requests driving the randomized hitting set through every level.
    Nested {
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(short, default_value_t = 2)]
        l: usize,
        #[arg(long, default_value_t = 4)]
        phases: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Uniform,
    Line,
}

#[derive(Clone, Copy, ValueEnum)]
enum OptMethod {
    Dp,
    Brute,
    Flow,
    Path,
}

fn cost_arg(s: &str) -> std::result::Result<Cost, String> {
    parse_cost(s).ok_or_else(|| format!("not a rational: {s}"))
}

fn load(path: &PathBuf) -> Result<Instance> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
    parse_instance(&text)
}

fn parse_sets(text: &str) -> Result<SetSystem> {
    let sets = text
        .split(',')
        .map(|set| {
            let points = set
                .split_whitespace()
                .map(|p| match p.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Precondition(format!("bad point {p:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            Request::new(points)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SetSystem::new(sets))
}

fn generate(kind: GenKind) -> Result<Instance> {
    match kind {
        GenKind::Random { n, k, l, m, metric, seed } => {
            let spec = match metric {
                Metric::Uniform => SpaceSpec::Uniform { n },
                Metric::Line => SpaceSpec::Line { coords: (0..n as i64).map(Cost::from).collect() },
            };
            gen_random(spec, k, l, m, &mut trial_rng(seed, 0))
        }
        GenKind::Coupon { k, l, seed } => Ok(gen_coupon_collector(k, l, &mut trial_rng(seed, 0))?.instance),
        GenKind::Gap { k, l, rounds } => gen_integrality_gap(k, l, rounds),
        GenKind::Vc { sets, k, reps } => gen_vc_reduction(&parse_sets(&sets)?, k, reps),
        GenKind::Harmonic { m } => gen_harmonic_line(m),
        GenKind::WfaSupport { m } => gen_wfa_counterexample(WfaCounterexample::Support, m),
        GenKind::WfaQuasiconvex => gen_wfa_counterexample(WfaCounterexample::QuasiConvex, 0),
        GenKind::Nested { k, l, phases } => gen_nested(k, l, phases),
    }
}

fn print_schedule(out: &mut impl Write, schedule: &Schedule) -> io::Result<()> {
    let start: Vec<String> = schedule.initial.iter().map(|p| (p + 1).to_string()).collect();
    writeln!(out, "servers {}", start.join(" "))?;
    for (i, moves) in schedule.steps.iter().enumerate() {
        if moves.is_empty() {
            continue;
        }
        let text: Vec<String> = moves
            .iter()
            .map(|m| format!("s{} {}->{} ({})", m.server + 1, m.from + 1, m.to + 1, format_cost(&m.cost)))
            .collect();
        writeln!(out, "request {}: {}", i + 1, text.join(", "))?;
    }
    Ok(())
}

fn io_err(e: io::Error) -> Error {
    Error::Precondition(format!("output: {e}"))
}

fn execute(command: Command) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Gen { kind } => {
            write!(out, "{}", emit_instance(&generate(kind)?)).map_err(io_err)?;
        }
        Command::Run { algorithm, file, seed, trials, run_id, wfa_lazy, no_opt } => {
            let inst = load(&file)?;
            let options = RunOptions {
                run_id,
                seed,
                trials,
                algorithm: AlgorithmOptions { wfa_lazy },
                with_opt: !no_opt,
            };
            let summary = run(algorithm, &inst, &options)?;
            write_csv(&mut out, &summary.reports)?;
            eprintln!(
                "{algorithm}: mean cost {:.6} (std {:.6}, {} trials)",
                summary.cost.mean, summary.cost.std, summary.cost.count
            );
            match (&summary.opt, &summary.opt_error) {
                (Some(opt), _) => eprintln!("opt {}", format_cost(opt)),
                (None, Some(e)) => eprintln!("opt unavailable: {e}"),
                _ => {}
            }
        }
        Command::Opt { file, method, schedule } => {
            let inst = load(&file)?;
            let (cost, sched) = match method {
                OptMethod::Dp => {
                    let (c, s) = opt_dp(&inst)?;
                    (c, Some(s))
                }
                OptMethod::Brute => (opt_bruteforce(&inst)?, None),
                OptMethod::Flow => {
                    let (c, s) = opt_kserver_flow(&inst)?;
                    (c, Some(s))
                }
                OptMethod::Path => {
                    let (c, s) = opt_mss_path(&inst)?;
                    (c, Some(s))
                }
            };
            writeln!(out, "opt {}", format_cost(&cost)).map_err(io_err)?;
            if let (true, Some(s)) = (schedule, sched) {
                print_schedule(&mut out, &s).map_err(io_err)?;
            }
        }
        Command::Lp { file, dump } => {
            let inst = load(&file)?;
            let model = build_lp(&inst);
            if dump {
                write!(out, "{}", model.dump()).map_err(io_err)?;
            } else {
                let sol = solve_lp(&model)?;
                writeln!(out, "lp {} ({} vars, {} rows, {} pivots)", sol.value, model.vars.len(), model.rows.len(), sol.pivots)
                    .map_err(io_err)?;
                for (var, x) in model.vars.iter().zip(&sol.values) {
                    if !x.is_zero() {
                        writeln!(out, "{var} = {x}").map_err(io_err)?;
                    }
                }
            }
        }
        Command::Round { file } => {
            let inst = load(&file)?;
            let r = round_to_kl(&inst)?;
            writeln!(out, "lp {}", r.lp.value).map_err(io_err)?;
            writeln!(out, "rounded {} with {} servers", format_cost(&r.cost), r.schedule.servers()).map_err(io_err)?;
            print_schedule(&mut out, &r.schedule).map_err(io_err)?;
        }
        Command::Adversary { algorithm, k, l, phases, far, max_requests, seed } => {
            let options = GameOptions { phases, far, max_requests, seed, algorithm: AlgorithmOptions::default() };
            let report = adversary_game(algorithm, k, l, &options)?;
            let w = &mut out;
            let lines = [
                format!("algorithm {} k={} l={} D={} h={}", report.algorithm, k, l, format_cost(&report.far), report.h),
                format!("requests {} phase changes {} (threshold {})", report.requests, report.phase_changes, report.threshold),
                format!("online cost {}", format_cost(&report.online_cost)),
                format!("min reference cost {}", format_cost(&report.min_reference_cost)),
                format!("total reference cost {}", format_cost(&report.total_reference_cost)),
                format!("every request faulted: {}", report.all_faults),
                format!("references always served: {}", report.references_always_served),
                format!("online >= h * min reference: {}", report.certified()),
            ];
            for line in lines {
                writeln!(w, "{line}").map_err(io_err)?;
            }
            for (kappa, cost) in &report.reference_costs {
                let kappa: Vec<String> = kappa.iter().map(|x| x.to_string()).collect();
                writeln!(w, "  reference ({}) {}", kappa.join(","), format_cost(cost)).map_err(io_err)?;
            }
        }
        Command::Acceptance { suite } => {
            let results = run_suite(&suite)?;
            for r in &results {
                writeln!(out, "{r}").map_err(io_err)?;
            }
            return Ok(results.iter().all(|r| r.passed));
        }
        Command::Wf { file, support } => {
            let inst = load(&file)?;
            let wf = WorkFunction::new(&inst.space, &inst.initial)?.after(&inst.requests);
            let show = |c: &mssms::Configuration| c.points().iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(" ");
            if support {
                for c in wf.support() {
                    writeln!(out, "{{{}}}", show(&c)).map_err(io_err)?;
                }
            } else {
                for (c, v) in wf.table().configs().iter().zip(wf.values()) {
                    writeln!(out, "{{{}}} {}", show(c), format_cost(v)).map_err(io_err)?;
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match execute(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
