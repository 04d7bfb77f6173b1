//! Exact solvers, oracles and the Matula approximation.

mod brute_force;
mod capforest;
mod matula;
mod noi;
mod stoer_wagner;

pub use brute_force::{brute_force_mincut, BRUTE_FORCE_MAX_N};
pub use capforest::edge_lower_bounds;
pub use matula::{matula_approx, DEFAULT_EPSILON};
pub use noi::noi_mincut;
pub use stoer_wagner::stoer_wagner;

use crate::cut::CutResult;
use crate::graph::Graph;

/// Zero-weight cut for disconnected graphs: side A is the component of vertex 0.
pub(crate) fn disconnected_cut(g: &Graph) -> Option<CutResult> {
    let comps = g.connected_components();
    if comps.count() <= 1 {
        return None;
    }
    let home = comps.label[0];
    Some(CutResult {
        value: 0,
        side: comps.label.iter().map(|&c| c == home).collect(),
        degenerate: false,
    })
}
