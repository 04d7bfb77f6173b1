use std::borrow::Cow;

use super::capforest::scan;
use crate::contraction::contract_marked;
use crate::cut::{CutResult, Hierarchy};
use crate::error::SolverError;
use crate::graph::Graph;
use crate::union_find::UnionFind;

pub const DEFAULT_EPSILON: f64 = 0.1;

const SCALE: u128 = 1_000_000;

/// (2+ε)-approximate minimum cut.
///
/// Same scan as the exact solver, but every edge with `q(e) >= λ̂ / (2+ε)` is
/// contracted. The returned value lies in `[λ, (2+ε)·λ]` and is the capacity
/// of the returned bipartition. Disconnected input is rejected.
pub fn matula_approx(g: &Graph, epsilon: f64) -> Result<CutResult, SolverError> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(SolverError::InvalidEpsilon(epsilon));
    }
    if g.n() < 2 {
        return Err(SolverError::TooFewVertices(g.n()));
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    // floor keeps the effective ratio at or below 2+ε
    let factor = ((2.0 + epsilon) * SCALE as f64).floor() as u128;
    let mut h = Hierarchy::new(g);
    let mut current = Cow::Borrowed(g);
    while current.n() > 2 {
        let bound = h.lambda_hat() as u128 * SCALE;
        let mut uf = UnionFind::new(current.n());
        scan(&current, 0, |v, u, q| {
            if q as u128 * factor >= bound {
                uf.union(v, u);
            }
        });
        assert!(
            uf.set_count() < current.n(),
            "scan made no contraction progress"
        );
        let (coarse, level) = contract_marked(&current, &mut uf);
        h.push(level, &coarse);
        current = Cow::Owned(coarse);
    }
    Ok(h.finish())
}
