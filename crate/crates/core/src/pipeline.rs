//! The multilevel heuristic: label-propagation contraction and exact
//! reductions until the graph is small, then an exact solve on the kernel.

use std::borrow::Cow;
use std::time::{Duration, Instant};

use crate::contraction::{contract_clustering, contract_clustering_parallel};
use crate::cut::{CutResult, Hierarchy};
use crate::exact::noi_mincut;
use crate::graph::{EdgeWeight, Graph};
use crate::lpa::{
    fix_misplaced, fix_misplaced_parallel, label_propagation, label_propagation_parallel, LpaConfig,
};
use crate::reductions::pr_run_bounded_owned;
use crate::rng::mix_seed;

pub const DEFAULT_KERNEL_SIZE: usize = 10_000;

/// Reduction runs stop once a run merges less than this share of the vertices.
pub const DEFAULT_PR_MIN_PROGRESS: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineConfig {
    /// Graphs with at most this many vertices go straight to the exact solver.
    pub n0: usize,
    pub lpa: LpaConfig,
    /// See [`crate::pr_run_bounded`]; 0 runs reductions to a fixpoint on every level.
    pub pr_min_progress: f64,
    pub threads: usize,
    pub seed: u64,
    /// Only affects output; the partition is always tracked.
    pub emit_partition: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            n0: DEFAULT_KERNEL_SIZE,
            lpa: LpaConfig::default(),
            pr_min_progress: DEFAULT_PR_MIN_PROGRESS,
            threads: 1,
            seed: 0,
            emit_partition: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimes {
    pub label_propagation: Duration,
    pub correcting: Duration,
    pub contraction: Duration,
    pub padberg_rinaldi: Duration,
}

impl PhaseTimes {
    pub fn total(&self) -> Duration {
        self.label_propagation + self.correcting + self.contraction + self.padberg_rinaldi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTrace {
    pub vertices_before: usize,
    pub edges_before: usize,
    pub clusters: usize,
    pub vertices_after: usize,
    pub edges_after: usize,
    pub lambda_hat: EdgeWeight,
    pub singleton_guard: bool,
    pub times: PhaseTimes,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PipelineTrace {
    pub levels: Vec<LevelTrace>,
    pub kernel_vertices: usize,
    pub final_solve: Duration,
    /// Set when an isolated vertex ended the run early.
    pub early_exit: bool,
}

impl PipelineTrace {
    /// Per-phase totals over all levels.
    pub fn phase_totals(&self) -> PhaseTimes {
        self.levels
            .iter()
            .fold(PhaseTimes::default(), |acc, l| PhaseTimes {
                label_propagation: acc.label_propagation + l.times.label_propagation,
                correcting: acc.correcting + l.times.correcting,
                contraction: acc.contraction + l.times.contraction,
                padberg_rinaldi: acc.padberg_rinaldi + l.times.padberg_rinaldi,
            })
    }

    pub fn total(&self) -> Duration {
        self.phase_totals().total() + self.final_solve
    }
}

fn timed<T>(slot: &mut Duration, f: impl FnOnce() -> T) -> T {
    let t = Instant::now();
    let out = f();
    *slot += t.elapsed();
    out
}

fn run(g: &Graph, cfg: &PipelineConfig, parallel: bool) -> (CutResult, PipelineTrace) {
    let mut trace = PipelineTrace::default();
    if g.n() < 2 {
        return (CutResult::degenerate(g.n()), trace);
    }
    let n0 = cfg.n0.max(2);
    let mut h = Hierarchy::new(g);
    let mut current = Cow::Borrowed(g);
    let mut guard = cfg.lpa.singleton_guard;

    while current.n() > n0 && h.lambda_hat() > 0 {
        let mut times = PhaseTimes::default();
        let (n_before, m_before) = (current.n(), current.m());
        let lpa_cfg = LpaConfig {
            singleton_guard: guard,
            seed: mix_seed(cfg.seed, trace.levels.len() as u64),
            ..cfg.lpa
        };
        let clustering = timed(&mut times.label_propagation, || {
            if parallel {
                label_propagation_parallel(&current, &lpa_cfg)
            } else {
                label_propagation(&current, &lpa_cfg)
            }
        });
        // the correcting step can split pairs, which would void the shrink
        // guarantee of a guarded round
        let clustering = if guard {
            clustering
        } else {
            timed(&mut times.correcting, || {
                if parallel {
                    fix_misplaced_parallel(&current, &clustering)
                } else {
                    fix_misplaced(&current, &clustering)
                }
            })
        };
        let clusters = clustering.cluster_count();
        if clusters == n_before {
            if guard {
                break;
            }
            // no contraction at all; retry this level with the guard, which
            // halves any graph without isolated vertices
            guard = true;
            continue;
        }
        let (coarse, level) = timed(&mut times.contraction, || {
            if parallel {
                contract_clustering_parallel(&current, clustering.labels())
            } else {
                contract_clustering(&current, clustering.labels())
            }
        });
        h.push(level, &coarse);
        // release the finer graph before reductions build the next one
        current = Cow::Borrowed(g);
        let coarse = if h.lambda_hat() > 0 && coarse.n() > n0 {
            timed(&mut times.padberg_rinaldi, || {
                pr_run_bounded_owned(coarse, &mut h, n0, cfg.pr_min_progress, parallel).0
            })
        } else {
            coarse
        };
        trace.levels.push(LevelTrace {
            vertices_before: n_before,
            edges_before: m_before,
            clusters,
            vertices_after: coarse.n(),
            edges_after: coarse.m(),
            lambda_hat: h.lambda_hat(),
            singleton_guard: guard,
            times,
        });
        let shrunk = coarse.n() < n_before;
        if !shrunk && guard {
            // only possible with isolated vertices, which set λ̂ to 0 above
            break;
        }
        guard = coarse.n() * 2 > n_before;
        current = Cow::Owned(coarse);
    }

    if h.lambda_hat() == 0 {
        trace.early_exit = true;
        trace.kernel_vertices = current.n();
        return (h.finish(), trace);
    }
    trace.kernel_vertices = current.n();
    if current.n() >= 2 {
        let kernel = timed(&mut trace.final_solve, || noi_mincut(&current));
        h.offer(kernel.value, kernel.side);
    }
    (h.finish(), trace)
}

/// Sequential multilevel minimum cut; deterministic for a fixed seed.
///
/// The returned value is never below the true minimum cut and always equals
/// the capacity of the returned bipartition in `g`.
pub fn viecut(g: &Graph, cfg: &PipelineConfig) -> (CutResult, PipelineTrace) {
    run(g, cfg, false)
}

/// Shared-memory parallel variant using `cfg.threads` worker threads.
///
/// Everything but the final exact solve runs in parallel. With one thread this
/// is exactly [`viecut`]. Results with more threads depend on scheduling but
/// keep the same guarantees.
pub fn viecut_parallel(g: &Graph, cfg: &PipelineConfig) -> (CutResult, PipelineTrace) {
    if cfg.threads <= 1 {
        return viecut(g, cfg);
    }
    match rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
    {
        Ok(pool) => pool.install(|| run(g, cfg, true)),
        Err(_) => viecut(g, cfg),
    }
}
