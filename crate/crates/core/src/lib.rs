//! Global minimum cuts of weighted undirected graphs.
//!
//! The main entry point is [`viecut`], a multilevel heuristic that contracts
//! label-propagation clusters, applies exact local reductions and finishes
//! with an exact solve on a small kernel. Exact solvers ([`noi_mincut`],
//! [`stoer_wagner`], [`brute_force_mincut`]) and a (2+ε)-approximation
//! ([`matula_approx`]) are available on their own.
//!
//! ```
//! use mincut_core::{noi_mincut, viecut, Graph, PipelineConfig};
//!
//! let g = Graph::from_edges(4, &[(0, 1, 3), (1, 2, 1), (2, 3, 3), (3, 0, 1)]).unwrap();
//! let (cut, _trace) = viecut(&g, &PipelineConfig::default());
//! assert_eq!(cut.value, 2);
//! assert_eq!(cut.value, noi_mincut(&g).value);
//! assert_eq!(g.cut_capacity(&cut.side), Ok(2));
//! ```

pub mod contraction;
pub mod cut;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lpa;
pub mod pipeline;
pub mod reductions;
pub mod rng;
pub mod union_find;

pub use contraction::{
    contract_clustering, contract_clustering_parallel, contract_marked, solution_transfer,
    ContractionLevel, ContractionMap,
};
pub use cut::{CutResult, Hierarchy};
pub use error::{CutError, GeneratorError, GraphError, ParseError, SolverError};
pub use exact::{
    brute_force_mincut, edge_lower_bounds, matula_approx, noi_mincut, stoer_wagner,
    BRUTE_FORCE_MAX_N, DEFAULT_EPSILON,
};
pub use generators::{generate_clustered_er, ClusteredErParams};
pub use graph::{Components, EdgeWeight, Graph, NodeId};
pub use io::{
    emit_results, kcore, parse_metis, read_metis_file, write_metis, write_metis_file,
    write_metis_to, PhaseSeconds, ResultRecord,
};
pub use lpa::{
    block_shuffled_order, correcting_size_limit, fix_misplaced, fix_misplaced_parallel,
    label_propagation, label_propagation_parallel, Clustering, LpaConfig,
};
pub use pipeline::{
    viecut, viecut_parallel, LevelTrace, PhaseTimes, PipelineConfig, PipelineTrace,
    DEFAULT_KERNEL_SIZE, DEFAULT_PR_MIN_PROGRESS,
};
pub use reductions::{
    pr_pass_12, pr_pass_34, pr_run, pr_run_bounded, pr_run_bounded_owned, pr_run_parallel,
    PrRunState, PrStats,
};
pub use union_find::UnionFind;
