use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Args;
use mincut_core::{kcore, read_metis_file, write_metis_file, NodeId};

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct KcoreArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Minimum number of distinct neighbors.
    #[arg(long)]
    pub k: usize,
    /// Output METIS file. The id mapping goes to `<out>.map`.
    #[arg(long)]
    pub out: PathBuf,
}

/// `foo.metis` maps to `foo.metis.map`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".map");
    PathBuf::from(s)
}

/// Writes the largest component of the k-core. Line `i` of the sidecar holds
/// the input id (0-indexed) of output vertex `i`.
pub fn run_kcore(args: &KcoreArgs) -> Result<(), CliError> {
    let g = read_metis_file(&args.input).map_err(|source| CliError::Parse {
        path: args.input.clone(),
        source,
    })?;
    let (core, core_ids) = kcore(&g, args.k);
    if core.n() == 0 {
        println!(
            "empty core: no vertex of {} has {} or more neighbors in the core; nothing written",
            args.input.display(),
            args.k
        );
        return Ok(());
    }
    let (part, part_ids) = core.largest_component();
    let original: Vec<NodeId> = part_ids.iter().map(|&i| core_ids[i as usize]).collect();

    write_metis_file(&part, &args.out).map_err(|e| CliError::io(&args.out, e))?;
    let map = sidecar_path(&args.out);
    let io = |e| CliError::io(&map, e);
    let mut w = BufWriter::new(File::create(&map).map_err(io)?);
    for v in &original {
        writeln!(w, "{v}").map_err(io)?;
    }
    w.flush().map_err(io)?;
    println!(
        "{}-core has {} vertices; wrote its largest component (n={}, m={}) to {}",
        args.k,
        core.n(),
        part.n(),
        part.m(),
        args.out.display()
    );
    Ok(())
}
