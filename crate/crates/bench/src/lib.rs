//! Shared inputs for the criterion benches.

use mincut_core::{generate_clustered_er, ClusteredErParams, Graph};

/// Clustered Erdős-Rényi graph with roughly the requested average degree.
pub fn clustered(n: usize, avg_degree: f64, k: usize, seed: u64) -> Graph {
    let d = ClusteredErParams::density_for_average_degree(n, avg_degree);
    generate_clustered_er(&ClusteredErParams { n, d, k, seed })
        .expect("fixture parameters are valid")
}

/// Sizes swept by the scaling benches, average degree 20 as in the
/// linear-time trend check.
pub const SCALING_SIZES: [usize; 3] = [1_000, 10_000, 100_000];

pub const SCALING_DEGREE: f64 = 20.0;

/// Label used for a fixture in bench ids, e.g. `n=10000,deg=20`.
pub fn label(g: &Graph) -> String {
    let deg = if g.n() == 0 { 0 } else { 2 * g.m() / g.n() };
    format!("n={},deg={deg}", g.n())
}
