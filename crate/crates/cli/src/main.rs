//! `mincut`: solve, generate, extract cores and benchmark from the shell.

mod bench;
mod error;
mod generate;
mod kcore;
mod run;
mod solve;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "mincut",
    version,
    about = "Global minimum cuts of weighted undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Computes a minimum cut of a METIS graph.
    Solve(solve::SolveArgs),
    /// Writes a generated graph in METIS format.
    #[command(subcommand)]
    Generate(generate::GenerateCommand),
    /// Extracts the largest connected component of a k-core.
    Kcore(kcore::KcoreArgs),
    /// Times algorithms over instances and reports JSON lines plus a table.
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(), CliError> = match &cli.command {
        Command::Solve(a) => solve::solve(a),
        Command::Generate(g) => generate::generate(g),
        Command::Kcore(a) => kcore::run_kcore(a),
        Command::Bench(a) => bench::bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
