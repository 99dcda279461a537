// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Subcommand implementations. Each returns a [`Report`]; `passed` is false
//! when a verification did not hold.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use framekit::clifford::CliffordGroup;
use framekit::dense::gates;
use framekit::frame_rules::{
    classify_cnot_pair, classify_t_input, classify_t_input_dense, good_pairs,
    verify_relations_with, TClass,
};
use framekit::protocol::{
    cnot_assumptions, parse_circuit, run_cnot_protocol, run_pauli_frame_protocol, run_t_walk,
    run_t_walk_symbolic, BufferDistribution, BufferModel, Executor, FrameOptions, ProtocolError,
    SimStats,
};
use framekit::stabilizer::{build_five_qubit_code, CodeChannel, ErrorClass};
use framekit::walk::{
    fig6_curve, hyp2f1_special, min_steps_for_target, partial_sum, tail_probability,
    termination_probability, upper_bound_check, WalkParameters,
};
use framekit::{CliffordTableau2, DenseMatrix64};

use crate::report::{to_value, CliError, Report, Table};

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is outside the range [0, 1]"))
    }
}

fn open_probability(s: &str) -> Result<f64, String> {
    let q = probability(s)?;
    if q > 0.0 && q < 1.0 {
        Ok(q)
    } else {
        Err(format!("{q} is outside the open range (0, 1)"))
    }
}

fn positive_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(format!("tolerance must be positive, got {t}"))
    }
}

fn config<A: Serialize>(command: &str, args: &A) -> Value {
    let mut v = to_value(args);
    if let Value::Object(map) = &mut v {
        map.insert("command".into(), Value::String(command.into()));
    }
    v
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn histogram_table(key: &'static str, stats: &SimStats) -> Table {
    let mut t = Table::new(&[key, "count"]);
    for (k, c) in &stats.histogram {
        t.push([k.to_string(), c.to_string()]);
    }
    t
}

// ---------------------------------------------------------------- counts

#[derive(Args, Debug, Serialize)]
pub struct CountsArgs {}

#[derive(Serialize)]
struct Counts {
    good_pairs: usize,
    total_pairs: usize,
    c_minus: usize,
    c_plus: usize,
}

const EXPECTED_COUNTS: (usize, usize, usize, usize) = (64, 576, 8, 16);

pub fn counts(args: &CountsArgs) -> Result<Report, CliError> {
    let group = CliffordGroup::get();
    let cx = gates::cnot::<f64>();
    let (mut table, mut dense) = (
        Counts {
            good_pairs: 0,
            total_pairs: 0,
            c_minus: 0,
            c_plus: 0,
        },
        (0usize, 0usize),
    );
    for a in group.elements() {
        for b in group.elements() {
            table.total_pairs += 1;
            if classify_cnot_pair(a, b).is_good() {
                table.good_pairs += 1;
            }
            let u: DenseMatrix64 = cx
                .matmul(&a.to_dense::<f64>().kron(&b.to_dense()))
                .matmul(&cx);
            if CliffordTableau2::from_unitary(&u, 1e-10)
                .and_then(|t| t.factor_tensor())
                .is_some()
            {
                dense.0 += 1;
            }
        }
        match classify_t_input(a) {
            TClass::CMinus => table.c_minus += 1,
            TClass::CPlus => table.c_plus += 1,
        }
        if classify_t_input_dense::<f64>(a) == TClass::CMinus {
            dense.1 += 1;
        }
    }
    let passed = (
        table.good_pairs,
        table.total_pairs,
        table.c_minus,
        table.c_plus,
    ) == EXPECTED_COUNTS
        && dense == (table.good_pairs, table.c_minus);
    let mut t = Table::new(&["good_pairs", "total_pairs", "c_minus", "c_plus"]);
    t.push(
        [
            table.good_pairs,
            table.total_pairs,
            table.c_minus,
            table.c_plus,
        ]
        .map(|v| v.to_string()),
    );
    let mut results = to_value(&table);
    results["dense_good_pairs"] = json!(dense.0);
    results["dense_c_minus"] = json!(dense.1);
    results["good_pair_list"] = json!(good_pairs()
        .iter()
        .map(|&(a, b)| [a, b])
        .collect::<Vec<_>>());
    Ok(Report {
        config: config("counts", args),
        results,
        table: t,
        passed,
    })
}

// ------------------------------------------------------------- relations

#[derive(Args, Debug, Serialize)]
pub struct RelationsArgs {
    /// Maximum entry deviation after removing the global phase.
    #[arg(long, default_value_t = 1e-10, value_parser = positive_tol)]
    tol: f64,
}

pub fn relations(args: &RelationsArgs) -> Result<Report, CliError> {
    let r = verify_relations_with::<f64>(args.tol);
    let mut t = Table::new(&["name", "holds", "deviation"]);
    for c in &r.checks {
        t.push([
            c.name.to_string(),
            c.holds.to_string(),
            format!("{:e}", c.deviation),
        ]);
    }
    let passed = r.all_hold();
    let mut results = to_value(&r);
    results["all_hold"] = json!(passed);
    Ok(Report {
        config: config("relations", args),
        results,
        table: t,
        passed,
    })
}

// --------------------------------------------------------- walk-analytic

#[derive(Args, Debug, Serialize)]
pub struct WalkArgs {
    /// Probability that a buffer Clifford lies in C+.
    #[arg(long, value_parser = probability)]
    p: f64,
    /// Cutoff in time steps.
    #[arg(long)]
    n: u64,
    /// Target success probability; also reports the minimal cutoff reaching it.
    #[arg(long, value_parser = open_probability)]
    q: Option<f64>,
}

pub fn walk_analytic(args: &WalkArgs) -> Result<Report, CliError> {
    let (p, n) = (args.p, args.n);
    let cutoff: f64 = framekit::walk::cutoff_probability(p, n);
    let tail: f64 = tail_probability(p, n);
    let termination: f64 = termination_probability(p);
    let hyp = hyp2f1_special(n, 4.0 * p * (1.0 - p)).map_err(usage)?;
    let mut results = json!({
        "cutoff_probability": cutoff,
        "tail_probability": tail,
        "termination_probability": termination,
        "partial_sum": partial_sum(p, n),
        "hyp2f1": hyp,
        "hyp2f1_at_least_2p_plus_1": hyp >= 2.0 * p + 1.0,
        "bounds": upper_bound_check(p, n),
    });
    if let Some(q) = args.q {
        let params = WalkParameters::new(p, n, q).map_err(usage)?;
        results["epsilon"] = json!(params.epsilon());
        results["min_steps"] = to_value(&min_steps_for_target(p, q).map_err(usage)?);
    }
    let mut t = Table::new(&["p", "n", "cutoff", "tail", "termination"]);
    t.push([
        p.to_string(),
        n.to_string(),
        cutoff.to_string(),
        tail.to_string(),
        termination.to_string(),
    ]);
    Ok(Report {
        config: config("walk-analytic", args),
        results,
        table: t,
        passed: true,
    })
}

// ------------------------------------------------------------------ fig6

#[derive(Args, Debug, Serialize)]
pub struct Fig6Args {
    /// Target probabilities q, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.99, 0.999], value_parser = open_probability)]
    targets: Vec<f64>,
    #[arg(long, default_value_t = 0.02, value_parser = probability)]
    p_min: f64,
    #[arg(long, default_value_t = 0.5, value_parser = probability)]
    p_max: f64,
    #[arg(long, default_value_t = 0.02, value_parser = positive_tol)]
    p_step: f64,
}

pub fn fig6(args: &Fig6Args) -> Result<Report, CliError> {
    if args.p_max < args.p_min {
        return Err(CliError::Usage(format!(
            "--p-max {} is below --p-min {}",
            args.p_max, args.p_min
        )));
    }
    // Index-based grid, rounded so printed values stay short (0.42, not 0.42000000000000004).
    let steps = ((args.p_max - args.p_min) / args.p_step + 1e-9).floor() as u64;
    let ps: Vec<f64> = (0..=steps)
        .map(|i| ((args.p_min + i as f64 * args.p_step) * 1e12).round() / 1e12)
        .collect();
    let points = fig6_curve(&args.targets, &ps);
    let mut t = Table::new(&["q", "p", "n"]);
    for pt in &points {
        t.push([pt.q.to_string(), pt.p.to_string(), pt.n.to_string()]);
    }
    Ok(Report {
        config: config("fig6", args),
        results: json!({ "points": points }),
        table: t,
        passed: true,
    })
}

// ---------------------------------------------------------------- t-walk

#[derive(Args, Debug, Serialize)]
pub struct TWalkArgs {
    /// Probability that a buffer Clifford lies in C+.
    #[arg(long, value_parser = probability)]
    p: f64,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_steps: u64,
    /// Track the concrete operator word and check it against the abstract walk.
    #[arg(long)]
    symbolic: bool,
}

pub fn t_walk(args: &TWalkArgs) -> Result<Report, CliError> {
    let ex = Executor::from_env();
    let run = if args.symbolic {
        run_t_walk_symbolic
    } else {
        run_t_walk
    };
    let stats = match run(args.p, args.trials, args.seed, args.max_steps, &ex) {
        Ok(s) => s,
        Err(e @ ProtocolError::SymbolicMismatch { .. }) => {
            return Ok(Report {
                config: config("t-walk", args),
                results: json!({ "mismatch": e.to_string() }),
                table: Table::new(&["steps", "count"]),
                passed: false,
            })
        }
        Err(e) => return Err(usage(e)),
    };
    let results = json!({
        "stats": stats,
        "summary": stats.summary(),
        "termination_probability": termination_probability(args.p),
    });
    Ok(Report {
        config: config("t-walk", args),
        results,
        table: histogram_table("steps", &stats),
        passed: true,
    })
}

// --------------------------------------------------------------- cnot-mc

#[derive(Args, Debug, Serialize)]
pub struct CnotArgs {
    /// Buffer model: uniform, biased:EPS or pauli:EPS.
    #[arg(long, default_value = "uniform")]
    model: BufferDistribution,
    /// EC rounds per buffer.
    #[arg(long, default_value_t = 1)]
    latency: u32,
    #[arg(long, default_value_t = 500_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_rounds: u32,
    /// Compile retries with the inverse of the known frame [default: on for pauli:EPS only].
    #[arg(long)]
    pre_correction: Option<bool>,
}

fn buffer_model(dist: BufferDistribution, latency: u32) -> Result<BufferModel, CliError> {
    BufferModel::new(dist, latency).map_err(usage)
}

pub fn cnot_mc(args: &CnotArgs) -> Result<Report, CliError> {
    let mut model = buffer_model(args.model, args.latency)?;
    if let Some(on) = args.pre_correction {
        model = model.with_pre_correction(on);
    }
    let stats = run_cnot_protocol(
        &model,
        args.trials,
        args.seed,
        args.max_rounds,
        &Executor::from_env(),
    )
    .map_err(usage)?;
    let results = json!({
        "assumptions": cnot_assumptions(&model),
        "pre_correction": model.pre_correction(),
        "stats": stats,
        "summary": stats.summary(),
        "mean_total_cnots": stats.histogram_mean(),
    });
    Ok(Report {
        config: config("cnot-mc", args),
        results,
        table: histogram_table("cnots", &stats),
        passed: true,
    })
}

// -------------------------------------------------------------- simulate

#[derive(Args, Debug, Serialize)]
pub struct SimulateArgs {
    /// Circuit file: one `GATE idx [idx2]` per line, optional `qubits N` header.
    file: PathBuf,
    /// Buffer model: uniform, biased:EPS or pauli:EPS.
    #[arg(long, default_value = "uniform")]
    model: BufferDistribution,
    #[arg(long, default_value_t = 1)]
    latency: u32,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip the C† restore after each buffer (the frame is then expected to break).
    #[arg(long)]
    no_restore: bool,
}

pub fn simulate(args: &SimulateArgs) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.file.display())))?;
    let circuit = parse_circuit(&text).map_err(usage)?;
    let model = buffer_model(args.model, args.latency)?;
    let options = FrameOptions {
        restore: !args.no_restore,
    };
    let mut cfg = config("simulate", args);
    cfg["circuit"] = json!({ "qubits": circuit.num_qubits(), "gates": circuit.gates().len(), "t_count": circuit.t_count() });
    match run_pauli_frame_protocol(
        &circuit,
        &model,
        options,
        args.trials,
        args.seed,
        &Executor::from_env(),
    ) {
        Ok(stats) => {
            let passed = stats.checkpoint_violations == 0;
            let results = json!({
                "stats": stats,
                "summary": stats.summary(),
                "pauli_checkpoint_fraction": if stats.checkpoints == 0 { 1.0 } else {
                    1.0 - stats.checkpoint_violations as f64 / stats.checkpoints as f64
                },
            });
            Ok(Report {
                config: cfg,
                results,
                table: histogram_table("restores", &stats),
                passed,
            })
        }
        Err(e @ ProtocolError::Violation { .. }) => Ok(Report {
            config: cfg,
            results: json!({ "violation": e.to_string() }),
            table: Table::new(&["restores", "count"]),
            passed: false,
        }),
        Err(e) => Err(usage(e)),
    }
}

// ------------------------------------------------------------ appendix-a

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeChoice {
    FiveQubit,
}

#[derive(Args, Debug, Serialize)]
pub struct AppendixArgs {
    #[arg(long, value_enum, default_value = "five-qubit")]
    code: CodeChoice,
    /// Number of random physical errors.
    #[arg(long, default_value_t = 200)]
    errors: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tolerance for the signed-permutation test.
    #[arg(long, default_value_t = 1e-9, value_parser = positive_tol)]
    tol: f64,
    /// Draw random entangling Clifford circuits of this many gates instead of
    /// transversal single-qubit Cliffords.
    #[arg(long)]
    entangling_gates: Option<usize>,
}

pub fn appendix_a(args: &AppendixArgs) -> Result<Report, CliError> {
    let code = match args.code {
        CodeChoice::FiveQubit => build_five_qubit_code(),
    };
    let generators: Vec<String> = code.generators().iter().map(|g| g.to_string()).collect();
    let channel = CodeChannel::<f64>::new(code);
    let class = match args.entangling_gates {
        Some(gates) => ErrorClass::Entangling { gates },
        None => ErrorClass::Transversal,
    };
    let report = channel
        .verify_random_errors(
            class,
            args.errors,
            args.seed,
            args.tol,
            &Executor::from_env(),
        )
        .map_err(usage)?;
    let mut t = Table::new(&[
        "error",
        "syndrome",
        "probability",
        "logical_clifford",
        "pass",
    ]);
    for e in &report.errors {
        for o in &e.outcomes {
            t.push([
                e.index.to_string(),
                o.syndrome.clone(),
                o.probability.to_string(),
                o.logical_clifford
                    .map(|c| c.to_string())
                    .unwrap_or_default(),
                o.pass.to_string(),
            ]);
        }
    }
    let passed = report.all_pass;
    let mut results = to_value(&report);
    results["generators"] = json!(generators);
    Ok(Report {
        config: config("appendix-a", args),
        results,
        table: t,
        passed,
    })
}
