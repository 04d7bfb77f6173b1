//! Cut results and the running upper bound λ̂ maintained across contractions.

use crate::contraction::{ContractionLevel, ContractionMap};
use crate::graph::{EdgeWeight, Graph, NodeId};

/// A cut value together with the bipartition of the original vertices that
/// realizes it. `side[v]` is `true` for vertices on side A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: EdgeWeight,
    pub side: Vec<bool>,
    /// Set when the graph has fewer than two vertices and no proper cut exists.
    pub degenerate: bool,
}

impl CutResult {
    pub fn degenerate(n: usize) -> Self {
        Self {
            value: 0,
            side: vec![true; n],
            degenerate: true,
        }
    }

    /// Vertex ids on side A, ascending.
    pub fn side_a(&self) -> Vec<NodeId> {
        self.side
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(v, _)| v as NodeId)
            .collect()
    }
}

#[derive(Debug, Clone)]
enum Witness {
    Vertex(NodeId),
    Marker(Vec<bool>),
}

/// Contraction history of a graph plus the best cut seen so far.
///
/// The bound starts at the minimum weighted degree of the input graph and is
/// lowered whenever a contracted graph (with at least two vertices) has a
/// smaller minimum degree, or when a solver offers a better cut. Each bound
/// keeps a witness at the level where it was found, and [`Hierarchy::finish`]
/// lifts it to the input vertices.
#[derive(Debug, Clone)]
pub struct Hierarchy {
    original_n: usize,
    map: ContractionMap,
    best_value: EdgeWeight,
    best_depth: usize,
    best: Option<Witness>,
}

impl Hierarchy {
    pub fn new(g: &Graph) -> Self {
        let mut h = Self {
            original_n: g.n(),
            map: ContractionMap::new(),
            best_value: EdgeWeight::MAX,
            best_depth: 0,
            best: None,
        };
        h.observe(g);
        h
    }

    /// λ̂, or `EdgeWeight::MAX` if no proper cut has been observed.
    pub fn lambda_hat(&self) -> EdgeWeight {
        self.best_value
    }

    pub fn depth(&self) -> usize {
        self.map.depth()
    }

    pub fn map(&self) -> &ContractionMap {
        &self.map
    }

    /// Records a contraction level and updates λ̂ from the coarse graph's
    /// minimum degree.
    pub fn push(&mut self, level: ContractionLevel, coarse: &Graph) {
        debug_assert_eq!(level.coarse_n, coarse.n());
        self.map.push(level);
        self.observe(coarse);
    }

    fn observe(&mut self, g: &Graph) {
        if g.n() < 2 {
            return;
        }
        if let Some((v, d)) = g.min_degree() {
            if d < self.best_value {
                self.best_value = d;
                self.best_depth = self.map.depth();
                self.best = Some(Witness::Vertex(v));
            }
        }
    }

    /// Offers a cut of the current (coarsest) graph. Returns whether it improved λ̂.
    pub fn offer(&mut self, value: EdgeWeight, side: Vec<bool>) -> bool {
        if value < self.best_value {
            self.best_value = value;
            self.best_depth = self.map.depth();
            self.best = Some(Witness::Marker(side));
            true
        } else {
            false
        }
    }

    /// Lifts the best witness to the original vertices.
    pub fn finish(self) -> CutResult {
        let Some(witness) = self.best else {
            return CutResult::degenerate(self.original_n);
        };
        let side = match witness {
            Witness::Marker(side) => side,
            Witness::Vertex(v) => {
                let n = if self.best_depth == 0 {
                    self.original_n
                } else {
                    self.map.levels()[self.best_depth - 1].coarse_n
                };
                let mut side = vec![false; n];
                side[v as usize] = true;
                side
            }
        };
        CutResult {
            value: self.best_value,
            side: self.map.lift_from(self.best_depth, side),
            degenerate: false,
        }
    }
}
