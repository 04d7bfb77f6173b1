use crate::cut::CutResult;
use crate::error::SolverError;
use crate::graph::{EdgeWeight, Graph, NodeId};

pub const BRUTE_FORCE_MAX_N: usize = 24;

/// Exhaustive minimum cut over all `2^(n-1) - 1` proper bipartitions with
/// vertex 0 fixed on side A. Among equal values the bipartition whose side-A
/// bitmask (bit `i` for vertex `i + 1`) is smallest wins.
pub fn brute_force_mincut(g: &Graph) -> Result<CutResult, SolverError> {
    let n = g.n();
    if n < 2 {
        return Err(SolverError::TooFewVertices(n));
    }
    if n > BRUTE_FORCE_MAX_N {
        return Err(SolverError::TooManyVertices(n));
    }
    let full: u32 = (1u32 << (n - 1)) - 1;
    let mut side = vec![false; n];
    side[0] = true;
    // Gray-code walk; A = {0} at mask 0
    let mut value: EdgeWeight = g.degree(0);
    let mut best = (value, 0u32);
    for k in 1..=full {
        let bit = k.trailing_zeros();
        let x = (bit + 1) as NodeId;
        let xs = side[x as usize];
        for (u, w) in g.neighbors(x) {
            if side[u as usize] == xs {
                value = value.wrapping_add(w);
            } else {
                value = value.wrapping_sub(w);
            }
        }
        side[x as usize] = !xs;
        let mask = k ^ (k >> 1);
        if mask != full && (value, mask) < best {
            best = (value, mask);
        }
    }
    let (value, mask) = best;
    let mut side = vec![false; n];
    side[0] = true;
    for (i, s) in side.iter_mut().enumerate().skip(1) {
        *s = mask & (1 << (i - 1)) != 0;
    }
    Ok(CutResult {
        value,
        side,
        degenerate: false,
    })
}
