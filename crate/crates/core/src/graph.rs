//! Immutable weighted undirected graph in compressed sparse row form.
//!
//! Every undirected edge is stored twice, once per endpoint. Neighbor lists are
//! kept sorted by neighbor id, which makes structural equality a meaningful
//! comparison and keeps METIS output canonical.

use std::collections::VecDeque;

use crate::error::{CutError, GraphError};

pub type NodeId = u32;
pub type EdgeWeight = u64;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    weights: Vec<EdgeWeight>,
    degrees: Vec<EdgeWeight>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            weights: Vec::new(),
            degrees: vec![0; n],
        }
    }

    /// Builds a graph from an undirected edge list.
    ///
    /// Self-loops are dropped and parallel edges are merged by summing their
    /// weights. Input that is sorted by `(max(u, v), min(u, v))` (the order the
    /// generators emit) skips the per-vertex sort entirely.
    pub fn from_edges(
        n: usize,
        edges: &[(NodeId, NodeId, EdgeWeight)],
    ) -> Result<Self, GraphError> {
        if n > NodeId::MAX as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut counts = vec![0usize; n + 1];
        for &(u, v, w) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(GraphError::VertexOutOfRange { id: x as u64, n });
                }
            }
            if w == 0 {
                return Err(GraphError::NonPositiveWeight { u, v });
            }
            if u != v {
                counts[u as usize + 1] += 1;
                counts[v as usize + 1] += 1;
            }
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let total = counts[n];
        let mut cursor = counts.clone();
        let mut targets = vec![0 as NodeId; total];
        let mut weights = vec![0 as EdgeWeight; total];
        for &(u, v, w) in edges {
            if u == v {
                continue;
            }
            let pu = &mut cursor[u as usize];
            targets[*pu] = v;
            weights[*pu] = w;
            *pu += 1;
            let pv = &mut cursor[v as usize];
            targets[*pv] = u;
            weights[*pv] = w;
            *pv += 1;
        }
        drop(cursor);
        Ok(Self::normalize(counts, targets, weights))
    }

    /// Sorts each neighbor list, merges duplicates and compacts the arrays.
    fn normalize(
        offsets: Vec<usize>,
        mut targets: Vec<NodeId>,
        mut weights: Vec<EdgeWeight>,
    ) -> Self {
        let n = offsets.len() - 1;
        let mut new_offsets = Vec::with_capacity(n + 1);
        new_offsets.push(0);
        let mut write = 0usize;
        let mut scratch: Vec<(NodeId, EdgeWeight)> = Vec::new();
        for v in 0..n {
            let (lo, hi) = (offsets[v], offsets[v + 1]);
            let sorted = targets[lo..hi].windows(2).all(|p| p[0] < p[1]);
            if sorted {
                if write != lo {
                    targets.copy_within(lo..hi, write);
                    weights.copy_within(lo..hi, write);
                }
                write += hi - lo;
            } else {
                scratch.clear();
                scratch.extend(
                    targets[lo..hi]
                        .iter()
                        .copied()
                        .zip(weights[lo..hi].iter().copied()),
                );
                scratch.sort_unstable_by_key(|&(t, _)| t);
                let mut last: Option<NodeId> = None;
                for &(t, w) in &scratch {
                    if last == Some(t) {
                        weights[write - 1] += w;
                    } else {
                        targets[write] = t;
                        weights[write] = w;
                        write += 1;
                        last = Some(t);
                    }
                }
            }
            new_offsets.push(write);
        }
        targets.truncate(write);
        weights.truncate(write);
        targets.shrink_to_fit();
        weights.shrink_to_fit();
        Self::from_csr(new_offsets, targets, weights)
    }

    /// Wraps already-canonical CSR arrays (sorted, merged, symmetric).
    pub(crate) fn from_csr(
        offsets: Vec<usize>,
        targets: Vec<NodeId>,
        weights: Vec<EdgeWeight>,
    ) -> Self {
        let n = offsets.len() - 1;
        let degrees = (0..n)
            .map(|v| weights[offsets[v]..offsets[v + 1]].iter().sum())
            .collect();
        Self {
            offsets,
            targets,
            weights,
            degrees,
        }
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn targets(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn weights(&self, v: NodeId) -> &[EdgeWeight] {
        let v = v as usize;
        &self.weights[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: NodeId) -> impl Iterator<Item = (NodeId, EdgeWeight)> + '_ {
        self.targets(v)
            .iter()
            .copied()
            .zip(self.weights(v).iter().copied())
    }

    pub fn neighbor_count(&self, v: NodeId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Weighted degree c(v).
    pub fn degree(&self, v: NodeId) -> EdgeWeight {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[EdgeWeight] {
        &self.degrees
    }

    /// Weight of edge (u, v), if present.
    pub fn edge_weight(&self, u: NodeId, v: NodeId) -> Option<EdgeWeight> {
        let ts = self.targets(u);
        ts.binary_search(&v).ok().map(|i| self.weights(u)[i])
    }

    /// Each undirected edge once, as `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, EdgeWeight)> + '_ {
        (0..self.n() as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, w)| (u, v, w))
        })
    }

    pub fn total_weight(&self) -> EdgeWeight {
        self.weights.iter().sum::<EdgeWeight>() / 2
    }

    /// Vertex of minimum weighted degree and that degree; ties go to the lowest id.
    pub fn min_degree(&self) -> Option<(NodeId, EdgeWeight)> {
        let mut best: Option<(NodeId, EdgeWeight)> = None;
        for (v, &d) in self.degrees.iter().enumerate() {
            if best.is_none_or(|(_, b)| d < b) {
                best = Some((v as NodeId, d));
            }
        }
        best
    }

    /// Total weight of edges whose endpoints lie on different sides.
    pub fn cut_capacity(&self, side: &[bool]) -> Result<EdgeWeight, CutError> {
        if side.len() != self.n() {
            return Err(CutError::LengthMismatch {
                expected: self.n(),
                found: side.len(),
            });
        }
        let a = side.iter().filter(|&&s| s).count();
        if a == 0 || a == side.len() {
            return Err(CutError::Degenerate);
        }
        Ok(self
            .edges()
            .filter(|&(u, v, _)| side[u as usize] != side[v as usize])
            .map(|(_, _, w)| w)
            .sum())
    }

    pub fn connected_components(&self) -> Components {
        let n = self.n();
        let mut label = vec![NodeId::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != NodeId::MAX {
                continue;
            }
            let id = sizes.len() as NodeId;
            label[s] = id;
            queue.push_back(s as NodeId);
            let mut size = 0usize;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &u in self.targets(v) {
                    if label[u as usize] == NodeId::MAX {
                        label[u as usize] = id;
                        queue.push_back(u);
                    }
                }
            }
            sizes.push(size);
        }
        Components { label, sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count() <= 1
    }

    /// Largest connected component, densely relabeled, plus the new-to-old id map.
    ///
    /// Components are discovered in order of their smallest vertex id, so on a
    /// size tie the component containing the smallest original id wins.
    pub fn largest_component(&self) -> (Graph, Vec<NodeId>) {
        let comps = self.connected_components();
        let Some(best) = comps.largest() else {
            return (Graph::default(), Vec::new());
        };
        let keep: Vec<NodeId> = (0..self.n() as NodeId)
            .filter(|&v| comps.label[v as usize] == best)
            .collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Subgraph induced by `keep` (ascending ids); vertex `i` of the result is `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[NodeId]) -> Graph {
        let mut new_id = vec![NodeId::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v as usize] = i as NodeId;
        }
        let mut offsets = Vec::with_capacity(keep.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        let mut weights = Vec::new();
        for &v in keep {
            for (u, w) in self.neighbors(v) {
                let nu = new_id[u as usize];
                if nu != NodeId::MAX {
                    targets.push(nu);
                    weights.push(w);
                }
            }
            offsets.push(targets.len());
        }
        // relabeling is monotone, so lists stay sorted
        Graph::from_csr(offsets, targets, weights)
    }
}

/// Connected-component labeling; component ids follow discovery order by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub label: Vec<NodeId>,
    pub sizes: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Id of the largest component (first discovered on ties).
    pub fn largest(&self) -> Option<NodeId> {
        let mut best: Option<(usize, usize)> = None;
        for (id, &s) in self.sizes.iter().enumerate() {
            if best.is_none_or(|(_, b)| s > b) {
                best = Some((id, s));
            }
        }
        best.map(|(id, _)| id as NodeId)
    }
}
