//! Maximum-adjacency scan computing per-edge connectivity lower bounds.

use crate::graph::{EdgeWeight, Graph, NodeId};

const ABSENT: u32 = u32::MAX;

/// Binary max-heap over vertex ids keyed by an external array, with increase-key.
pub(crate) struct IndexedMaxHeap {
    heap: Vec<NodeId>,
    pos: Vec<u32>,
}

impl IndexedMaxHeap {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            heap: Vec::new(),
            pos: vec![ABSENT; n],
        }
    }

    fn less(key: &[EdgeWeight], a: NodeId, b: NodeId) -> bool {
        // lower id wins ties, keeping scans deterministic
        key[a as usize] < key[b as usize] || (key[a as usize] == key[b as usize] && a > b)
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.pos[self.heap[i] as usize] = i as u32;
        self.pos[self.heap[j] as usize] = j as u32;
    }

    fn sift_up(&mut self, key: &[EdgeWeight], mut i: usize) {
        while i > 0 {
            let p = (i - 1) / 2;
            if Self::less(key, self.heap[p], self.heap[i]) {
                self.swap(i, p);
                i = p;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, key: &[EdgeWeight], mut i: usize) {
        let len = self.heap.len();
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut top = i;
            if l < len && Self::less(key, self.heap[top], self.heap[l]) {
                top = l;
            }
            if r < len && Self::less(key, self.heap[top], self.heap[r]) {
                top = r;
            }
            if top == i {
                break;
            }
            self.swap(i, top);
            i = top;
        }
    }

    /// Inserts `v` or restores heap order after its key increased.
    pub(crate) fn push_or_increase(&mut self, key: &[EdgeWeight], v: NodeId) {
        let p = self.pos[v as usize];
        if p == ABSENT {
            self.heap.push(v);
            let i = self.heap.len() - 1;
            self.pos[v as usize] = i as u32;
            self.sift_up(key, i);
        } else {
            self.sift_up(key, p as usize);
        }
    }

    pub(crate) fn pop(&mut self, key: &[EdgeWeight]) -> Option<NodeId> {
        let top = *self.heap.first()?;
        let last = self.heap.len() - 1;
        self.swap(0, last);
        self.heap.pop();
        self.pos[top as usize] = ABSENT;
        if !self.heap.is_empty() {
            self.sift_down(key, 0);
        }
        Some(top)
    }
}

/// Runs one scan from `start`, calling `on_edge(v, u, q)` for every edge from
/// the visited vertex `v` to a not-yet-visited `u`, where `q` is `r(u)` after
/// adding `c(v, u)`.
///
/// Vertices unreachable from `start` are never visited.
pub(crate) fn scan<F: FnMut(NodeId, NodeId, EdgeWeight)>(g: &Graph, start: NodeId, mut on_edge: F) {
    let n = g.n();
    let mut r = vec![0 as EdgeWeight; n];
    let mut visited = vec![false; n];
    let mut heap = IndexedMaxHeap::new(n);
    heap.push_or_increase(&r, start);
    while let Some(v) = heap.pop(&r) {
        visited[v as usize] = true;
        for (u, w) in g.neighbors(v) {
            if visited[u as usize] {
                continue;
            }
            r[u as usize] += w;
            on_edge(v, u, r[u as usize]);
            heap.push_or_increase(&r, u);
        }
    }
}

/// Lower bounds q(e) on the local connectivity λ(G, v, u) for every edge the
/// scan from the lowest id touches, as `(v, u, q)` in scan order.
pub fn edge_lower_bounds(g: &Graph) -> Vec<(NodeId, NodeId, EdgeWeight)> {
    let mut out = Vec::new();
    if g.n() > 0 {
        scan(g, 0, |v, u, q| out.push((v, u, q)));
    }
    out
}
