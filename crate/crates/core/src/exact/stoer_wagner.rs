use std::collections::{BTreeMap, BinaryHeap};

use crate::cut::CutResult;
use crate::graph::{EdgeWeight, Graph, NodeId};

/// Stoer-Wagner minimum cut: `n - 1` maximum-adjacency phases, each merging
/// the last two vertices of the ordering after recording the cut of the phase.
///
/// Kept deliberately independent of the contraction machinery so it can serve
/// as a cross-check for the other solvers.
pub fn stoer_wagner(g: &Graph) -> CutResult {
    let n = g.n();
    if n < 2 {
        return CutResult::degenerate(n);
    }
    let mut adj: Vec<BTreeMap<NodeId, EdgeWeight>> =
        (0..n as NodeId).map(|v| g.neighbors(v).collect()).collect();
    let mut members: Vec<Vec<NodeId>> = (0..n as NodeId).map(|v| vec![v]).collect();
    let mut active: Vec<NodeId> = (0..n as NodeId).collect();
    let mut best_value = EdgeWeight::MAX;
    let mut best_members: Vec<NodeId> = Vec::new();

    let mut key = vec![0 as EdgeWeight; n];
    let mut in_order = vec![false; n];
    while active.len() > 1 {
        for &v in &active {
            key[v as usize] = 0;
            in_order[v as usize] = false;
        }
        let mut heap: BinaryHeap<(EdgeWeight, std::cmp::Reverse<NodeId>)> = BinaryHeap::new();
        let mut next_unvisited = 0usize;
        let (mut prev, mut last) = (active[0], active[0]);
        for step in 0..active.len() {
            let v = loop {
                match heap.pop() {
                    Some((k, std::cmp::Reverse(v))) => {
                        if !in_order[v as usize] && key[v as usize] == k {
                            break v;
                        }
                    }
                    None => {
                        // disconnected remainder: continue from the lowest unvisited vertex
                        while in_order[active[next_unvisited] as usize] {
                            next_unvisited += 1;
                        }
                        break active[next_unvisited];
                    }
                }
            };
            in_order[v as usize] = true;
            if step > 0 {
                prev = last;
            }
            last = v;
            for (&u, &w) in &adj[v as usize] {
                if !in_order[u as usize] {
                    key[u as usize] += w;
                    heap.push((key[u as usize], std::cmp::Reverse(u)));
                }
            }
        }
        let (s, t) = (prev, last);
        let phase_cut = key[t as usize];
        if phase_cut < best_value {
            best_value = phase_cut;
            best_members = members[t as usize].clone();
        }
        // merge t into s
        let t_adj = std::mem::take(&mut adj[t as usize]);
        for (u, w) in t_adj {
            adj[u as usize].remove(&t);
            if u != s {
                *adj[s as usize].entry(u).or_insert(0) += w;
                *adj[u as usize].entry(s).or_insert(0) += w;
            }
        }
        let moved = std::mem::take(&mut members[t as usize]);
        members[s as usize].extend(moved);
        active.retain(|&x| x != t);
    }
    let mut side = vec![false; n];
    for v in best_members {
        side[v as usize] = true;
    }
    CutResult {
        value: best_value,
        side,
        degenerate: false,
    }
}
