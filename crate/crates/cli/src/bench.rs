//! Repeated timed runs over a set of instances, reported as JSON lines plus
//! an aligned summary table.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::Args;
use mincut_core::{
    generate_clustered_er, noi_mincut, read_metis_file, ClusteredErParams, Graph, PhaseSeconds,
    DEFAULT_EPSILON, DEFAULT_KERNEL_SIZE,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::run::{run, Algorithm, SolveOptions};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// METIS files or generator strings like `cluster-er:n=1000,d=5,k=2,seed=1`.
    pub instances: Vec<String>,
    /// JSON plan file; replaces the instance list and the plan flags below.
    #[arg(long, conflicts_with = "instances")]
    pub plan: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_values = ["viecut", "noi"])]
    pub algorithms: Vec<Algorithm>,
    #[arg(long, default_value_t = 5)]
    pub repetitions: usize,
    /// Thread counts to sweep for viecut, e.g. `1,2,4`.
    #[arg(
        long,
        value_delimiter = ',',
        env = "MINCUT_THREADS",
        default_value = "1"
    )]
    pub threads: Vec<usize>,
    /// Repetition `r` runs with seed `seed + r`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skips the exact reference solve, leaving the quality columns empty.
    #[arg(long)]
    pub no_reference: bool,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[arg(long, default_value_t = DEFAULT_KERNEL_SIZE)]
    pub n0: usize,
    /// Re-evaluates every reported cut on its bipartition.
    #[arg(long)]
    pub check_partitions: bool,
    /// Writes the JSON lines here and the table to standard output; otherwise
    /// JSON goes to standard output and the table to standard error.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn default_repetitions() -> usize {
    5
}

fn default_threads() -> Vec<usize> {
    vec![1]
}

fn default_true() -> bool {
    true
}

fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}

fn default_n0() -> usize {
    DEFAULT_KERNEL_SIZE
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchPlan {
    pub instances: Vec<String>,
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
    #[serde(default = "default_threads")]
    pub threads: Vec<usize>,
    #[serde(default)]
    pub seed: u64,
    /// Solve every instance exactly first and score the rows against it.
    #[serde(default = "default_true")]
    pub reference: bool,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_n0")]
    pub n0: usize,
    #[serde(default)]
    pub check_partitions: bool,
}

impl BenchPlan {
    pub fn from_args(a: &BenchArgs) -> Result<Self, CliError> {
        let plan = match &a.plan {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
            }
            None => BenchPlan {
                instances: a.instances.clone(),
                algorithms: a.algorithms.clone(),
                repetitions: a.repetitions,
                threads: a.threads.clone(),
                seed: a.seed,
                reference: !a.no_reference,
                epsilon: a.epsilon,
                n0: a.n0,
                check_partitions: a.check_partitions,
            },
        };
        plan.validate()?;
        Ok(plan)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Usage(m.into()));
        if self.instances.is_empty() {
            return bad("the plan lists no instances");
        }
        if self.algorithms.is_empty() {
            return bad("the plan lists no algorithms");
        }
        if self.repetitions == 0 {
            return bad("repetitions must be at least 1");
        }
        if self.threads.is_empty() || self.threads.contains(&0) {
            return bad("thread counts must be at least 1");
        }
        Ok(())
    }

    /// Thread counts to run `alg` with: the sweep for viecut, one otherwise.
    fn thread_counts(&self, alg: Algorithm) -> Vec<usize> {
        if alg != Algorithm::Viecut {
            return vec![1];
        }
        let mut t = self.threads.clone();
        t.sort_unstable();
        t.dedup();
        t
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
}

/// One (instance, algorithm, threads) group. Field set is the same for every
/// algorithm; see `schemas/bench.schema.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: Algorithm,
    pub threads: usize,
    pub status: Status,
    pub error: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub repetitions: usize,
    pub seed: u64,
    pub cuts: Vec<u64>,
    /// Smallest cut over the repetitions.
    pub cut: Option<u64>,
    pub mean_time_s: Option<f64>,
    /// Mean time divided by the number of undirected edges.
    pub ns_per_edge: Option<f64>,
    pub reference: Option<u64>,
    pub optimal: Option<bool>,
    pub non_optimal_runs: Option<usize>,
    /// Mean of `(cut - reference) / reference` over the repetitions.
    pub relative_error: Option<f64>,
    /// Mean time of the smallest thread count in the sweep over this row's.
    pub speedup: Option<f64>,
    pub partition_verified: Option<bool>,
    pub phases: Option<PhaseSeconds>,
}

impl BenchRow {
    fn failed(
        instance: &str,
        alg: Algorithm,
        threads: usize,
        plan: &BenchPlan,
        error: String,
    ) -> Self {
        BenchRow {
            instance: instance.into(),
            algorithm: alg,
            threads,
            status: Status::Failed,
            error: Some(error),
            n: None,
            m: None,
            repetitions: plan.repetitions,
            seed: plan.seed,
            cuts: Vec::new(),
            cut: None,
            mean_time_s: None,
            ns_per_edge: None,
            reference: None,
            optimal: None,
            non_optimal_runs: None,
            relative_error: None,
            speedup: None,
            partition_verified: None,
            phases: None,
        }
    }
}

/// Reads a METIS path or builds a graph from a `cluster-er:key=value,...` string.
pub fn load_instance(spec: &str) -> Result<Graph, String> {
    let Some(rest) = spec.strip_prefix("cluster-er:") else {
        return read_metis_file(std::path::Path::new(spec)).map_err(|e| format!("{spec}: {e}"));
    };
    let mut p = ClusteredErParams {
        n: 0,
        d: 0.0,
        k: 2,
        seed: 0,
    };
    for kv in rest.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = kv
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{kv}`"))?;
        let bad = |e: &dyn std::fmt::Display| format!("bad value for {key}: {e}");
        match key {
            "n" => p.n = value.parse().map_err(|e| bad(&e))?,
            "d" => p.d = value.parse().map_err(|e| bad(&e))?,
            "k" => p.k = value.parse().map_err(|e| bad(&e))?,
            "seed" => p.seed = value.parse().map_err(|e| bad(&e))?,
            _ => return Err(format!("unknown generator parameter `{key}`")),
        }
    }
    generate_clustered_er(&p).map_err(|e| e.to_string())
}

fn mean_phases(all: &[PhaseSeconds]) -> PhaseSeconds {
    let k = all.len().max(1) as f64;
    let sum = |f: fn(&PhaseSeconds) -> f64| all.iter().map(f).sum::<f64>() / k;
    PhaseSeconds {
        label_propagation: sum(|p| p.label_propagation),
        correcting: sum(|p| p.correcting),
        contraction: sum(|p| p.contraction),
        padberg_rinaldi: sum(|p| p.padberg_rinaldi),
        final_solve: sum(|p| p.final_solve),
    }
}

fn measure(
    g: &Graph,
    spec: &str,
    alg: Algorithm,
    threads: usize,
    plan: &BenchPlan,
    reference: Option<u64>,
) -> BenchRow {
    let mut cuts = Vec::with_capacity(plan.repetitions);
    let mut seconds = 0.0;
    let mut phases = Vec::with_capacity(plan.repetitions);
    let mut verified = true;
    for r in 0..plan.repetitions {
        let opts = SolveOptions {
            threads,
            seed: plan.seed.wrapping_add(r as u64),
            epsilon: plan.epsilon,
            n0: plan.n0,
        };
        let out = match run(g, alg, &opts) {
            Ok(out) => out,
            Err(e) => return BenchRow::failed(spec, alg, threads, plan, e.to_string()),
        };
        if plan.check_partitions {
            verified &= g.cut_capacity(&out.cut.side) == Ok(out.cut.value);
        }
        cuts.push(out.cut.value);
        seconds += out.time.as_secs_f64();
        phases.push(out.phases);
    }
    let reps = plan.repetitions as f64;
    let mean = seconds / reps;
    let non_optimal = reference.map(|l| cuts.iter().filter(|&&c| c != l).count());
    let relative_error = reference.and_then(|l| {
        let errs: Option<Vec<f64>> = cuts
            .iter()
            .map(|&c| match (c, l) {
                (c, l) if c == l => Some(0.0),
                (_, 0) => None,
                (c, l) => Some(c.abs_diff(l) as f64 / l as f64),
            })
            .collect();
        errs.map(|e| e.iter().sum::<f64>() / reps)
    });
    BenchRow {
        instance: spec.into(),
        algorithm: alg,
        threads,
        status: Status::Ok,
        error: None,
        n: Some(g.n()),
        m: Some(g.m()),
        repetitions: plan.repetitions,
        seed: plan.seed,
        cut: cuts.iter().copied().min(),
        cuts,
        mean_time_s: Some(mean),
        ns_per_edge: (g.m() > 0).then(|| mean * 1e9 / g.m() as f64),
        reference,
        optimal: non_optimal.map(|k| k == 0),
        non_optimal_runs: non_optimal,
        relative_error,
        speedup: None,
        partition_verified: plan.check_partitions.then_some(verified),
        phases: Some(mean_phases(&phases)),
    }
}

/// Runs every group of the plan in order, one at a time.
pub fn run_plan(plan: &BenchPlan) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for spec in &plan.instances {
        let g = match load_instance(spec) {
            Ok(g) => g,
            Err(e) => {
                for &alg in &plan.algorithms {
                    for t in plan.thread_counts(alg) {
                        rows.push(BenchRow::failed(spec, alg, t, plan, e.clone()));
                    }
                }
                continue;
            }
        };
        let reference = (plan.reference && g.n() >= 2).then(|| noi_mincut(&g).value);
        for &alg in &plan.algorithms {
            let counts = plan.thread_counts(alg);
            let first = rows.len();
            for &t in &counts {
                rows.push(measure(&g, spec, alg, t, plan, reference));
            }
            if counts.len() > 1 {
                let base = rows[first].mean_time_s;
                for row in &mut rows[first..] {
                    row.speedup = base
                        .zip(row.mean_time_s)
                        .map(|(b, t)| if t > 0.0 { b / t } else { 0.0 });
                }
            }
        }
    }
    rows
}

fn cell<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

/// Plain aligned table, one line per row.
pub fn summary_table(rows: &[BenchRow]) -> String {
    let header = [
        "instance",
        "algorithm",
        "threads",
        "cut",
        "reference",
        "mean time (s)",
        "ns/edge",
        "non-optimal",
        "speedup",
    ];
    let body: Vec<[String; 9]> = rows
        .iter()
        .map(|r| {
            [
                r.instance.clone(),
                r.algorithm.name().into(),
                r.threads.to_string(),
                match r.status {
                    Status::Ok => cell(r.cut),
                    Status::Failed => "failed".into(),
                },
                cell(r.reference),
                cell(r.mean_time_s.map(|t| format!("{t:.4}"))),
                cell(r.ns_per_edge.map(|t| format!("{t:.1}"))),
                cell(r.non_optimal_runs.map(|k| format!("{k}/{}", r.repetitions))),
                cell(r.speedup.map(|s| format!("{s:.2}"))),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for line in &body {
        for (w, c) in width.iter_mut().zip(line) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for b in &body {
        line(b);
    }
    for r in rows.iter().filter(|r| r.status == Status::Failed) {
        let _ = writeln!(
            out,
            "failed: {} / {}: {}",
            r.instance,
            r.algorithm.name(),
            r.error.as_deref().unwrap_or("")
        );
    }
    out
}

pub fn bench(args: &BenchArgs) -> Result<(), CliError> {
    let plan = BenchPlan::from_args(args)?;
    let rows = run_plan(&plan);
    let mut json = String::new();
    for r in &rows {
        json.push_str(&serde_json::to_string(r).expect("rows always serialize"));
        json.push('\n');
    }
    let table = summary_table(&rows);
    match &args.out {
        Some(path) => {
            let io = |e| CliError::io(path, e);
            let mut w = BufWriter::new(File::create(path).map_err(io)?);
            w.write_all(json.as_bytes())
                .and_then(|_| w.flush())
                .map_err(io)?;
            print!("{table}");
        }
        None => {
            print!("{json}");
            eprint!("{table}");
        }
    }
    Ok(())
}
