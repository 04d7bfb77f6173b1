use crate::graph::NodeId;

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<NodeId>,
    size: Vec<u32>,
    set_count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as NodeId).collect(),
            size: vec![1; n],
            set_count: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn set_count(&self) -> usize {
        self.set_count
    }

    pub fn find(&mut self, x: NodeId) -> NodeId {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Root lookup without compression, usable behind a shared reference.
    pub fn find_const(&self, x: NodeId) -> NodeId {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        root
    }

    /// Merges the sets of `a` and `b`. Returns `false` if they were already joined.
    pub fn union(&mut self, a: NodeId, b: NodeId) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.set_count -= 1;
        true
    }

    pub fn set_size(&mut self, x: NodeId) -> usize {
        let r = self.find(x);
        self.size[r as usize] as usize
    }

    pub fn is_singleton(&self, x: NodeId) -> bool {
        self.size[self.find_const(x) as usize] == 1
    }

    /// Root of every element, in element order.
    pub fn roots(&mut self) -> Vec<NodeId> {
        (0..self.parent.len() as NodeId)
            .map(|v| self.find(v))
            .collect()
    }
}
