use std::collections::VecDeque;

use crate::graph::{Graph, NodeId};

/// Maximum subgraph in which every vertex has at least `k` neighbors.
///
/// Degree here is the number of distinct neighbors, not the weighted degree.
/// Returns the induced core, densely relabeled, and the new-to-old id map.
/// An empty core is returned as a graph with no vertices.
pub fn kcore(g: &Graph, k: usize) -> (Graph, Vec<NodeId>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n as NodeId).map(|v| g.neighbor_count(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<NodeId> = (0..n as NodeId).filter(|&v| deg[v as usize] < k).collect();
    for &v in &queue {
        removed[v as usize] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.targets(v) {
            let u = u as usize;
            if removed[u] {
                continue;
            }
            deg[u] -= 1;
            if deg[u] < k {
                removed[u] = true;
                queue.push_back(u as NodeId);
            }
        }
    }
    let keep: Vec<NodeId> = (0..n as NodeId).filter(|&v| !removed[v as usize]).collect();
    (g.induced_subgraph(&keep), keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_plus_pendant() -> Graph {
        let mut e = vec![(3, 4, 1)];
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v, 1));
            }
        }
        Graph::from_edges(5, &e).unwrap()
    }

    #[test]
    fn star_has_empty_two_core() {
        let g = Graph::from_edges(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        let (core, map) = kcore(&g, 2);
        assert_eq!(core.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn pendant_is_peeled() {
        let (core, map) = kcore(&k4_plus_pendant(), 3);
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!((core.n(), core.m()), (4, 6));
    }

    #[test]
    fn weights_do_not_count() {
        // heavy pendant still has one neighbor
        let g = Graph::from_edges(3, &[(0, 1, 50), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(kcore(&g, 2).0.n(), 3);
        assert_eq!(kcore(&g, 3).0.n(), 0);
    }
}
