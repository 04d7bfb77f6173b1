#![allow(dead_code)]

use mincut_core::{brute_force_mincut, noi_mincut, pr_run, EdgeWeight, Graph, Hierarchy, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`; weights uniform in `1..=max_w`.
pub fn random_connected(n: usize, p: f64, max_w: EdgeWeight, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut present = vec![false; n * n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        present[u * n + v] = true;
        edges.push((u as NodeId, v as NodeId, rng.random_range(1..=max_w)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.random_bool(p) {
                edges.push((u as NodeId, v as NodeId, rng.random_range(1..=max_w)));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with no connectivity guarantee.
pub fn random_graph(n: usize, p: f64, max_w: EdgeWeight, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u as NodeId, v as NodeId, rng.random_range(1..=max_w)));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The oracle suite: connected graphs with n in [3, 12] and weights in [1, 10].
pub fn oracle_suite(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(3..=12);
            let p = rng.random_range(0.1..0.9);
            random_connected(n, p, 10, rng.random())
        })
        .collect()
}

pub fn brute_lambda(g: &Graph) -> EdgeWeight {
    brute_force_mincut(g).unwrap().value
}

/// Exhaustive reductions followed by an exact solve of whatever is left.
pub fn pr_then_noi(g: &Graph) -> EdgeWeight {
    let mut h = Hierarchy::new(g);
    let (kernel, _) = pr_run(g, &mut h, 1);
    if kernel.n() >= 2 {
        let cut = noi_mincut(&kernel);
        h.offer(cut.value, cut.side);
    }
    let cut = h.finish();
    assert_eq!(g.cut_capacity(&cut.side), Ok(cut.value));
    cut.value
}

/// Disjoint union of the given graphs, in order.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut base = 0;
    for g in parts {
        edges.extend(g.edges().map(|(u, v, w)| (u + base, v + base, w)));
        base += g.n() as NodeId;
    }
    Graph::from_edges(base as usize, &edges).unwrap()
}
