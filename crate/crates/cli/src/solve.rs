use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Args;
use mincut_core::{
    emit_results, read_metis_file, ResultRecord, DEFAULT_EPSILON, DEFAULT_KERNEL_SIZE,
};

use crate::error::CliError;
use crate::run::{run, Algorithm, SolveOptions};

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// METIS graph file; `.gz` files are decompressed.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "viecut")]
    pub algorithm: Algorithm,
    /// Worker threads for viecut; other algorithms are sequential.
    #[arg(long, env = "MINCUT_THREADS", default_value_t = 1)]
    pub threads: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Approximation slack for matula.
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Graphs this small are handed to the exact solver (viecut only).
    #[arg(long, default_value_t = DEFAULT_KERNEL_SIZE)]
    pub n0: usize,
    /// Writes the vertex ids of one side, one per line.
    #[arg(long)]
    pub partition_out: Option<PathBuf>,
    /// Prints the result as one JSON line.
    #[arg(long)]
    pub json: bool,
}

pub fn solve(args: &SolveArgs) -> Result<(), CliError> {
    if args.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let g = read_metis_file(&args.graph).map_err(|source| CliError::Parse {
        path: args.graph.clone(),
        source,
    })?;
    let opts = SolveOptions {
        threads: args.threads,
        seed: args.seed,
        epsilon: args.epsilon,
        n0: args.n0,
    };
    let out = run(&g, args.algorithm, &opts)?;

    let side_a = match &args.partition_out {
        Some(path) => Some(write_partition(path, &out.cut.side)?),
        None => None,
    };
    let record = ResultRecord {
        algorithm: args.algorithm.name().into(),
        graph: args.graph.display().to_string(),
        n: g.n(),
        m: g.m(),
        seed: args.seed,
        threads: args.algorithm.threads_used(args.threads),
        repetition: 0,
        cut: out.cut.value,
        time_s: out.time.as_secs_f64(),
        phases: out.phases,
        partition_side_a: side_a,
    };
    if args.json {
        print!("{}", emit_results(&[record]));
    } else {
        println!(
            "graph      {} (n={}, m={})",
            record.graph, record.n, record.m
        );
        println!(
            "algorithm  {} ({} thread(s))",
            record.algorithm, record.threads
        );
        println!("cut        {}", record.cut);
        println!("time       {:.6} s", record.time_s);
        if let Some(a) = side_a {
            println!("partition  {a} vertices on side A");
        }
    }
    Ok(())
}

/// Writes the 0-indexed ids of the `true` side and returns how many there are.
fn write_partition(path: &Path, side: &[bool]) -> Result<usize, CliError> {
    let io = |e| CliError::io(path, e);
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    let mut count = 0;
    for (v, _) in side.iter().enumerate().filter(|(_, &s)| s) {
        writeln!(w, "{v}").map_err(io)?;
        count += 1;
    }
    w.flush().map_err(io)?;
    Ok(count)
}
