//! Dispatch from an algorithm name to a timed solver run.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use mincut_core::{
    matula_approx, noi_mincut, stoer_wagner, viecut, viecut_parallel, CutResult, Graph,
    PhaseSeconds, PipelineConfig, SolverError,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Viecut,
    Noi,
    StoerWagner,
    Matula,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Viecut => "viecut",
            Algorithm::Noi => "noi",
            Algorithm::StoerWagner => "stoer-wagner",
            Algorithm::Matula => "matula",
        }
    }

    /// Only the multilevel pipeline has a parallel variant; the others always
    /// run on one thread whatever was requested.
    pub fn threads_used(self, requested: usize) -> usize {
        if self == Algorithm::Viecut {
            requested
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub threads: usize,
    pub seed: u64,
    pub epsilon: f64,
    pub n0: usize,
}

pub struct Run {
    pub cut: CutResult,
    pub time: Duration,
    pub phases: PhaseSeconds,
}

/// Solves `g` with `alg`. The clock covers the solver only, never I/O.
pub fn run(g: &Graph, alg: Algorithm, opts: &SolveOptions) -> Result<Run, SolverError> {
    if g.n() < 2 {
        return Err(SolverError::TooFewVertices(g.n()));
    }
    let start = Instant::now();
    let (cut, phases) = match alg {
        Algorithm::Viecut => {
            let cfg = PipelineConfig {
                n0: opts.n0,
                threads: opts.threads,
                seed: opts.seed,
                ..Default::default()
            };
            let (cut, trace) = if opts.threads > 1 {
                viecut_parallel(g, &cfg)
            } else {
                viecut(g, &cfg)
            };
            let p = trace.phase_totals();
            let phases = PhaseSeconds {
                label_propagation: p.label_propagation.as_secs_f64(),
                correcting: p.correcting.as_secs_f64(),
                contraction: p.contraction.as_secs_f64(),
                padberg_rinaldi: p.padberg_rinaldi.as_secs_f64(),
                final_solve: trace.final_solve.as_secs_f64(),
            };
            (cut, phases)
        }
        Algorithm::Noi => (noi_mincut(g), PhaseSeconds::default()),
        Algorithm::StoerWagner => (stoer_wagner(g), PhaseSeconds::default()),
        Algorithm::Matula => (matula_approx(g, opts.epsilon)?, PhaseSeconds::default()),
    };
    let time = start.elapsed();
    let phases = if alg == Algorithm::Viecut {
        phases
    } else {
        PhaseSeconds {
            final_solve: time.as_secs_f64(),
            ..phases
        }
    };
    Ok(Run { cut, time, phases })
}
