use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Subcommand};
use mincut_core::{generate_clustered_er, write_metis_file, write_metis_to, ClusteredErParams};

use crate::error::CliError;

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// Clustered Erdős-Rényi graph with heavy intra-cluster edges.
    ClusterEr(ClusterErArgs),
}

#[derive(Debug, Args)]
pub struct ClusterErArgs {
    #[arg(long)]
    pub n: usize,
    /// Density in percent of all vertex pairs.
    #[arg(long)]
    pub d: f64,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output METIS file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn generate(cmd: &GenerateCommand) -> Result<(), CliError> {
    let GenerateCommand::ClusterEr(a) = cmd;
    let g = generate_clustered_er(&ClusteredErParams {
        n: a.n,
        d: a.d,
        k: a.k,
        seed: a.seed,
    })?;
    match &a.out {
        Some(path) => write_metis_file(&g, path).map_err(|e| CliError::io(path, e)),
        None => {
            let mut out = std::io::stdout().lock();
            write_metis_to(&g, &mut out)
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}
