//! Clustered Erdős-Rényi graphs: `k` planted clusters whose internal edges are
//! `n` times heavier than the edges between clusters, so the minimum cut
//! separates clusters with high probability.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GeneratorError;
use crate::graph::{EdgeWeight, Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusteredErParams {
    pub n: usize,
    /// Density in percent of all vertex pairs, in `(0, 100]`.
    pub d: f64,
    pub k: usize,
    pub seed: u64,
}

impl ClusteredErParams {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        let bad = |msg: String| Err(GeneratorError::InvalidParams(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.n > NodeId::MAX as usize {
            return bad(format!("n = {} exceeds the 32-bit vertex id space", self.n));
        }
        if !(self.d > 0.0 && self.d <= 100.0) {
            return bad(format!("density d = {} must lie in (0, 100]", self.d));
        }
        if self.k == 0 || self.k > self.n {
            return bad(format!(
                "cluster count k = {} must lie in 1..={}",
                self.k, self.n
            ));
        }
        Ok(())
    }

    pub fn pair_count(&self) -> u64 {
        let n = self.n as u64;
        n * n.saturating_sub(1) / 2
    }

    /// Number of edges, `n(n-1)/2 · d/100` rounded half up.
    pub fn edge_count(&self) -> u64 {
        let exact = self.pair_count() as f64 * self.d / 100.0;
        ((exact + 0.5).floor() as u64).min(self.pair_count())
    }

    /// Density that gives roughly the requested average degree.
    pub fn density_for_average_degree(n: usize, avg_degree: f64) -> f64 {
        (100.0 * avg_degree / (n.saturating_sub(1).max(1)) as f64).min(100.0)
    }

    pub fn cluster_of(&self, v: NodeId) -> usize {
        v as usize % self.k
    }
}

/// Below this many pairs, or when at least a quarter of them are drawn, pairs
/// are sampled exactly without replacement; otherwise by drawing with
/// replacement and topping up duplicates.
const EXACT_SAMPLING_PAIRS: u64 = 1 << 22;

fn sample_pairs(rng: &mut ChaCha8Rng, pairs: u64, m: u64) -> Vec<u64> {
    let mut picked: Vec<u64> = if pairs <= EXACT_SAMPLING_PAIRS || m * 4 >= pairs {
        index::sample(rng, pairs as usize, m as usize)
            .into_iter()
            .map(|i| i as u64)
            .collect()
    } else {
        let mut v: Vec<u64> = Vec::with_capacity(m as usize);
        while (v.len() as u64) < m {
            let missing = m - v.len() as u64;
            v.extend((0..missing).map(|_| rng.random_range(0..pairs)));
            v.sort_unstable();
            v.dedup();
        }
        v
    };
    picked.sort_unstable();
    picked
}

/// Generates a clustered Erdős-Rényi graph; vertex `v` belongs to cluster `v mod k`.
///
/// Exactly `m` distinct pairs are chosen uniformly. Edges between clusters
/// get weights uniform in `[1, 100]`; edges inside a cluster get a weight
/// uniform in `[1, 100]` multiplied by `n`. Deterministic for a fixed seed.
pub fn generate_clustered_er(p: &ClusteredErParams) -> Result<Graph, GeneratorError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let picked = sample_pairs(&mut rng, p.pair_count(), p.edge_count());

    // pair index i encodes (a, b), a > b, as i = a(a-1)/2 + b, so ascending
    // indices come out ordered by (a, b) and hit the fast CSR build
    let scale = p.n as EdgeWeight;
    let mut edges: Vec<(NodeId, NodeId, EdgeWeight)> = Vec::with_capacity(picked.len());
    let (mut a, mut base) = (1u64, 0u64);
    for i in picked {
        while i >= base + a {
            base += a;
            a += 1;
        }
        let b = i - base;
        let (u, v) = (b as NodeId, a as NodeId);
        let w: EdgeWeight = rng.random_range(1..=100);
        let w = if p.cluster_of(u) == p.cluster_of(v) {
            w * scale
        } else {
            w
        };
        edges.push((u, v, w));
    }
    Ok(Graph::from_edges(p.n, &edges)?)
}
