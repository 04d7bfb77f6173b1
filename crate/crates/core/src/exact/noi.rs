use std::borrow::Cow;

use super::capforest::scan;
use super::disconnected_cut;
use crate::contraction::contract_marked;
use crate::cut::{CutResult, Hierarchy};
use crate::graph::Graph;
use crate::union_find::UnionFind;

/// Exact minimum cut by repeated maximum-adjacency scans.
///
/// Each scan yields lower bounds q(e) on the connectivity of edge endpoints;
/// every edge with `q(e) >= λ̂` is contracted, since some minimum cut avoids it
/// or λ̂ is already optimal. λ̂ tracks the smallest trivial cut over all
/// contracted graphs. Disconnected input returns value 0 with the component of
/// vertex 0 as side A.
pub fn noi_mincut(g: &Graph) -> CutResult {
    if g.n() < 2 {
        return CutResult::degenerate(g.n());
    }
    if let Some(cut) = disconnected_cut(g) {
        return cut;
    }
    let mut h = Hierarchy::new(g);
    let mut current = Cow::Borrowed(g);
    while current.n() > 2 && h.lambda_hat() > 0 {
        let bound = h.lambda_hat();
        let mut uf = UnionFind::new(current.n());
        scan(&current, 0, |v, u, q| {
            if q >= bound {
                uf.union(v, u);
            }
        });
        // the last scanned vertex has q = c(t) >= δ >= λ̂ on its final edge
        assert!(
            uf.set_count() < current.n(),
            "scan made no contraction progress"
        );
        let (coarse, level) = contract_marked(&current, &mut uf);
        h.push(level, &coarse);
        current = Cow::Owned(coarse);
    }
    h.finish()
}
