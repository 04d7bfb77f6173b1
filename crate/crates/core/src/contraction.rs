//! Bulk contraction of vertex groups and the level stack used to lift cuts
//! back to the input graph.

use rayon::prelude::*;

use crate::graph::{EdgeWeight, Graph, NodeId};
use crate::union_find::UnionFind;

/// One coarsening step: fine vertex `v` becomes coarse vertex `map[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionLevel {
    pub map: Vec<NodeId>,
    pub coarse_n: usize,
}

impl ContractionLevel {
    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n as NodeId).collect(),
            coarse_n: n,
        }
    }

    pub fn fine_n(&self) -> usize {
        self.map.len()
    }

    /// Pushes a coarse side marker down to the fine vertices.
    pub fn lift(&self, coarse_side: &[bool]) -> Vec<bool> {
        self.map.iter().map(|&c| coarse_side[c as usize]).collect()
    }
}

/// Ordered stack of contraction levels, finest first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ContractionMap {
    levels: Vec<ContractionLevel>,
}

impl ContractionMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, level: ContractionLevel) {
        if let Some(last) = self.levels.last() {
            assert_eq!(
                last.coarse_n,
                level.fine_n(),
                "level does not chain onto the map"
            );
        }
        self.levels.push(level);
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[ContractionLevel] {
        &self.levels
    }

    /// Lifts a marker defined on the graph after the first `depth` levels to
    /// the original vertices.
    pub fn lift_from(&self, depth: usize, side: Vec<bool>) -> Vec<bool> {
        self.levels[..depth]
            .iter()
            .rev()
            .fold(side, |acc, level| level.lift(&acc))
    }
}

/// Lifts a side marker of the coarsest graph through every level of `map`.
pub fn solution_transfer(map: &ContractionMap, kernel_side: &[bool]) -> Vec<bool> {
    map.lift_from(map.depth(), kernel_side.to_vec())
}

/// Maps arbitrary labels to dense coarse ids in order of first appearance.
fn dense_relabel(labels: &[NodeId]) -> ContractionLevel {
    let max = labels.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut id_of = vec![NodeId::MAX; max];
    let mut next: NodeId = 0;
    let map = labels
        .iter()
        .map(|&l| {
            let slot = &mut id_of[l as usize];
            if *slot == NodeId::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    ContractionLevel {
        map,
        coarse_n: next as usize,
    }
}

/// Members of every coarse vertex, each list in ascending fine id.
pub(crate) fn group_members(map: &[NodeId], coarse_n: usize) -> (Vec<usize>, Vec<NodeId>) {
    let mut start = vec![0usize; coarse_n + 1];
    for &c in map {
        start[c as usize + 1] += 1;
    }
    for i in 0..coarse_n {
        start[i + 1] += start[i];
    }
    let mut cursor = start.clone();
    let mut members = vec![0 as NodeId; map.len()];
    for (v, &c) in map.iter().enumerate() {
        members[cursor[c as usize]] = v as NodeId;
        cursor[c as usize] += 1;
    }
    (start, members)
}

/// Sparse accumulator over coarse ids, reset lazily by timestamp.
struct RowAccumulator {
    // (stamp, weight) side by side: one cache miss per lookup
    slots: Vec<(u32, EdgeWeight)>,
    now: u32,
    touched: Vec<NodeId>,
}

impl RowAccumulator {
    fn new(n: usize) -> Self {
        Self {
            slots: vec![(0, 0); n],
            now: 0,
            touched: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.touched.clear();
        self.now = self.now.wrapping_add(1);
        if self.now == 0 {
            self.slots.fill((0, 0));
            self.now = 1;
        }
    }

    fn add(&mut self, key: NodeId, w: EdgeWeight) {
        let k = key as usize;
        let slot = &mut self.slots[k];
        if slot.0 != self.now {
            *slot = (self.now, w);
            self.touched.push(key);
        } else {
            slot.1 += w;
        }
    }

    /// Builds the coarse row for one coarse vertex into `targets`/`weights`.
    fn build_row(
        &mut self,
        g: &Graph,
        map: &[NodeId],
        me: NodeId,
        members: &[NodeId],
        targets: &mut Vec<NodeId>,
        weights: &mut Vec<EdgeWeight>,
    ) {
        if let [v] = members {
            // a lone vertex keeps its row; relabeling usually preserves order
            let row_start = targets.len();
            let mut last: Option<NodeId> = None;
            let mut in_order = true;
            for (u, w) in g.neighbors(*v) {
                let cu = map[u as usize];
                if last.is_some_and(|l| l >= cu) {
                    in_order = false;
                    break;
                }
                last = Some(cu);
                targets.push(cu);
                weights.push(w);
            }
            if in_order {
                return;
            }
            targets.truncate(row_start);
            weights.truncate(row_start);
        }
        self.reset();
        for &v in members {
            for (u, w) in g.neighbors(v) {
                let cu = map[u as usize];
                if cu != me {
                    self.add(cu, w);
                }
            }
        }
        self.touched.sort_unstable();
        for &t in &self.touched {
            targets.push(t);
            weights.push(self.slots[t as usize].1);
        }
    }
}

fn contract_with_level(g: &Graph, level: ContractionLevel) -> (Graph, ContractionLevel) {
    let c = level.coarse_n;
    let (start, members) = group_members(&level.map, c);
    let mut acc = RowAccumulator::new(c);
    let mut offsets = Vec::with_capacity(c + 1);
    offsets.push(0);
    // the coarse graph never has more adjacency entries than the fine one
    let mut targets = Vec::with_capacity(2 * g.m());
    let mut weights = Vec::with_capacity(2 * g.m());
    for a in 0..c {
        acc.build_row(
            g,
            &level.map,
            a as NodeId,
            &members[start[a]..start[a + 1]],
            &mut targets,
            &mut weights,
        );
        offsets.push(targets.len());
    }
    targets.shrink_to_fit();
    weights.shrink_to_fit();
    (Graph::from_csr(offsets, targets, weights), level)
}

/// Contracts every block of `labels` into a single vertex.
///
/// Coarse ids follow the order in which labels first appear by ascending
/// vertex id. Edge weights between blocks are summed; intra-block edges vanish.
pub fn contract_clustering(g: &Graph, labels: &[NodeId]) -> (Graph, ContractionLevel) {
    assert_eq!(labels.len(), g.n(), "labels must cover every vertex");
    contract_with_level(g, dense_relabel(labels))
}

/// Contracts every union-find set into a single vertex.
pub fn contract_marked(g: &Graph, uf: &mut UnionFind) -> (Graph, ContractionLevel) {
    assert_eq!(uf.len(), g.n(), "union-find must cover every vertex");
    let roots = uf.roots();
    contract_clustering(g, &roots)
}

/// Parallel [`contract_clustering`] on the current rayon pool.
///
/// With `c` blocks, `c² > n` builds coarse rows per block in parallel; otherwise
/// each worker accumulates a dense `c × c` matrix over its vertex range and one
/// thread merges the matrices. Both produce the same graph as the sequential
/// routine.
pub fn contract_clustering_parallel(g: &Graph, labels: &[NodeId]) -> (Graph, ContractionLevel) {
    assert_eq!(labels.len(), g.n(), "labels must cover every vertex");
    let level = dense_relabel(labels);
    let c = level.coarse_n;
    let n = g.n();
    if c.saturating_mul(c) > n {
        let (start, members) = group_members(&level.map, c);
        // each row gets a slot sized by the summed member degrees, so workers
        // write straight into one shared buffer that is compacted afterwards
        let mut bound = Vec::with_capacity(c + 1);
        bound.push(0usize);
        for a in 0..c {
            let d: usize = members[start[a]..start[a + 1]]
                .iter()
                .map(|&v| g.neighbor_count(v))
                .sum();
            bound.push(bound[a] + d);
        }
        let total = bound[c];
        let mut targets = vec![0 as NodeId; total];
        let mut weights = vec![0 as EdgeWeight; total];
        let mut lens = vec![0usize; c];

        let threads = rayon::current_num_threads().max(1);
        let per_chunk = total.div_ceil(threads * 8).max(1);
        let mut chunks = Vec::new();
        {
            let (mut rest_t, mut rest_w, mut rest_l) =
                (&mut targets[..], &mut weights[..], &mut lens[..]);
            let mut a = 0;
            while a < c {
                let mut b = a + 1;
                while b < c && bound[b] - bound[a] < per_chunk {
                    b += 1;
                }
                let len = bound[b] - bound[a];
                let (t, rt) = std::mem::take(&mut rest_t).split_at_mut(len);
                let (w, rw) = std::mem::take(&mut rest_w).split_at_mut(len);
                let (l, rl) = std::mem::take(&mut rest_l).split_at_mut(b - a);
                (rest_t, rest_w, rest_l) = (rt, rw, rl);
                chunks.push((a, t, w, l));
                a = b;
            }
        }
        chunks.into_par_iter().for_each(|(first, t, w, l)| {
            let mut acc = RowAccumulator::new(c);
            let (mut row_t, mut row_w) = (Vec::new(), Vec::new());
            let base = bound[first];
            for (i, len) in l.iter_mut().enumerate() {
                let a = first + i;
                row_t.clear();
                row_w.clear();
                acc.build_row(
                    g,
                    &level.map,
                    a as NodeId,
                    &members[start[a]..start[a + 1]],
                    &mut row_t,
                    &mut row_w,
                );
                let at = bound[a] - base;
                t[at..at + row_t.len()].copy_from_slice(&row_t);
                w[at..at + row_w.len()].copy_from_slice(&row_w);
                *len = row_t.len();
            }
        });

        let mut offsets = Vec::with_capacity(c + 1);
        offsets.push(0);
        let mut end = 0;
        for a in 0..c {
            targets.copy_within(bound[a]..bound[a] + lens[a], end);
            weights.copy_within(bound[a]..bound[a] + lens[a], end);
            end += lens[a];
            offsets.push(end);
        }
        targets.truncate(end);
        weights.truncate(end);
        targets.shrink_to_fit();
        weights.shrink_to_fit();
        (Graph::from_csr(offsets, targets, weights), level)
    } else {
        let threads = rayon::current_num_threads().max(1);
        let chunk = n.div_ceil(threads).max(1);
        let map = &level.map;
        let partials: Vec<Vec<EdgeWeight>> = (0..n)
            .into_par_iter()
            .with_min_len(chunk)
            .fold(
                || vec![0 as EdgeWeight; c * c],
                |mut mat, v| {
                    let a = map[v] as usize;
                    for (u, w) in g.neighbors(v as NodeId) {
                        let b = map[u as usize] as usize;
                        if a != b {
                            mat[a * c + b] += w;
                        }
                    }
                    mat
                },
            )
            .collect();
        let mut merged = vec![0 as EdgeWeight; c * c];
        for mat in &partials {
            for (m, x) in merged.iter_mut().zip(mat) {
                *m += x;
            }
        }
        let mut offsets = Vec::with_capacity(c + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        let mut weights = Vec::new();
        for a in 0..c {
            for b in 0..c {
                let w = merged[a * c + b];
                if w > 0 {
                    targets.push(b as NodeId);
                    weights.push(w);
                }
            }
            offsets.push(targets.len());
        }
        (Graph::from_csr(offsets, targets, weights), level)
    }
}
