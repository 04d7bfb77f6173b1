//! Label-propagation clustering with block-shuffled traversal, and the
//! correcting step that splits misplaced vertices out of small clusters.

use std::sync::atomic::{AtomicBool, AtomicU32, Ordering};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::contraction::group_members;
use crate::graph::{EdgeWeight, Graph, NodeId};
use crate::rng::mix_seed;

/// Partition of the vertices into clusters `0..cluster_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    labels: Vec<NodeId>,
    sizes: Vec<usize>,
}

impl Clustering {
    /// Compacts arbitrary labels to `0..k`, numbered by first appearance.
    pub fn from_labels(raw: &[NodeId]) -> Self {
        let max = raw.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut id_of = vec![NodeId::MAX; max];
        let mut sizes = Vec::new();
        let labels = raw
            .iter()
            .map(|&l| {
                let slot = &mut id_of[l as usize];
                if *slot == NodeId::MAX {
                    *slot = sizes.len() as NodeId;
                    sizes.push(0);
                }
                sizes[*slot as usize] += 1;
                *slot
            })
            .collect();
        Self { labels, sizes }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (0..n as NodeId).collect(),
            sizes: vec![1; n],
        }
    }

    pub fn labels(&self) -> &[NodeId] {
        &self.labels
    }

    pub fn label(&self, v: NodeId) -> NodeId {
        self.labels[v as usize]
    }

    pub fn cluster_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn cluster_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LpaConfig {
    /// Number of rounds ℓ.
    pub iterations: usize,
    pub shuffle_block_size: usize,
    /// In round one, vertex `i` keeps label `i` once another vertex adopted it.
    pub singleton_guard: bool,
    pub seed: u64,
}

impl Default for LpaConfig {
    fn default() -> Self {
        Self {
            iterations: 2,
            shuffle_block_size: 128,
            singleton_guard: false,
            seed: 0,
        }
    }
}

/// Permutation of `0..n` that shuffles consecutive blocks of `block_size` ids
/// independently while keeping the blocks in natural order.
pub fn block_shuffled_order(n: usize, block_size: usize, seed: u64) -> Vec<NodeId> {
    let block_size = block_size.max(1);
    let mut order: Vec<NodeId> = (0..n as NodeId).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for block in order.chunks_mut(block_size) {
        block.shuffle(&mut rng);
    }
    order
}

/// Per-thread label scores, reset lazily by timestamp.
struct LabelScores {
    // (stamp, weight) side by side: one cache miss per lookup
    slots: Vec<(u32, EdgeWeight)>,
    now: u32,
    touched: Vec<NodeId>,
}

impl LabelScores {
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

    fn add(&mut self, label: NodeId, w: EdgeWeight) {
        let l = label as usize;
        let slot = &mut self.slots[l];
        if slot.0 != self.now {
            *slot = (self.now, w);
            self.touched.push(label);
        } else {
            slot.1 += w;
        }
    }

    /// Label of maximum score; ties resolved uniformly at random.
    fn pick<R: Rng>(&self, rng: &mut R) -> Option<NodeId> {
        let mut best: Option<NodeId> = None;
        let mut best_w = 0;
        let mut ties = 0u32;
        for &l in &self.touched {
            let w = self.slots[l as usize].1;
            if best.is_none() || w > best_w {
                best = Some(l);
                best_w = w;
                ties = 1;
            } else if w == best_w {
                ties += 1;
                if rng.random_range(0..ties) == 0 {
                    best = Some(l);
                }
            }
        }
        best
    }
}

struct RoundState<'a> {
    g: &'a Graph,
    labels: &'a [AtomicU32],
    taken: Option<&'a [AtomicBool]>,
}

impl RoundState<'_> {
    fn process_block(&self, block: &[NodeId], scores: &mut LabelScores, rng: &mut ChaCha8Rng) {
        for &v in block {
            if self.g.neighbor_count(v) == 0 {
                continue;
            }
            if let Some(taken) = self.taken {
                if taken[v as usize].load(Ordering::Relaxed) {
                    continue;
                }
            }
            scores.reset();
            for (u, w) in self.g.neighbors(v) {
                scores.add(self.labels[u as usize].load(Ordering::Relaxed), w);
            }
            let Some(best) = scores.pick(rng) else {
                continue;
            };
            self.labels[v as usize].store(best, Ordering::Relaxed);
            if let Some(taken) = self.taken {
                if best != v {
                    taken[best as usize].store(true, Ordering::Relaxed);
                }
            }
        }
    }
}

fn propagate(g: &Graph, cfg: &LpaConfig, parallel: bool) -> Clustering {
    let n = g.n();
    let block = cfg.shuffle_block_size.max(1);
    let labels: Vec<AtomicU32> = (0..n as NodeId).map(AtomicU32::new).collect();
    let taken: Option<Vec<AtomicBool>> = cfg
        .singleton_guard
        .then(|| (0..n).map(|_| AtomicBool::new(false)).collect());

    let threads = if parallel {
        rayon::current_num_threads().max(1)
    } else {
        1
    };
    let scores: Vec<Mutex<LabelScores>> = (0..threads)
        .map(|_| Mutex::new(LabelScores::new(n)))
        .collect();

    for round in 0..cfg.iterations.max(1) {
        let round_seed = mix_seed(cfg.seed, round as u64);
        let order = block_shuffled_order(n, block, round_seed);
        let state = RoundState {
            g,
            labels: &labels,
            taken: if round == 0 { taken.as_deref() } else { None },
        };
        let run_block = |scores: &mut LabelScores, bi: usize, blk: &[NodeId]| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(round_seed, bi as u64 + 1));
            state.process_block(blk, scores, &mut rng);
        };
        if parallel {
            let blocks_per_task = (n / block / (threads * 8)).max(1);
            order
                .par_chunks(block * blocks_per_task)
                .enumerate()
                .for_each(|(ti, chunk)| {
                    let slot = rayon::current_thread_index().unwrap_or(0) % threads;
                    let mut scores = scores[slot].lock().expect("label scores poisoned");
                    for (j, blk) in chunk.chunks(block).enumerate() {
                        run_block(&mut scores, ti * blocks_per_task + j, blk);
                    }
                });
        } else {
            let mut scores = scores[0].lock().expect("label scores poisoned");
            for (bi, blk) in order.chunks(block).enumerate() {
                run_block(&mut scores, bi, blk);
            }
        }
    }
    let raw: Vec<NodeId> = labels.into_iter().map(AtomicU32::into_inner).collect();
    Clustering::from_labels(&raw)
}

/// Sequential label propagation: deterministic for a fixed graph and config.
///
/// Every vertex starts in its own cluster. In each of `cfg.iterations` rounds
/// the vertices are visited in block-shuffled order and each adopts the
/// neighboring label of largest total incident weight, ties broken at random.
/// Isolated vertices keep their own label.
pub fn label_propagation(g: &Graph, cfg: &LpaConfig) -> Clustering {
    propagate(g, cfg, false)
}

/// Label propagation on the current rayon pool.
///
/// Threads share one label array and read and write it without
/// synchronization beyond relaxed atomics, so the result depends on the
/// interleaving.
pub fn label_propagation_parallel(g: &Graph, cfg: &LpaConfig) -> Clustering {
    propagate(g, cfg, true)
}

/// Size limit for clusters the correcting step examines: ⌊log₂ n⌋.
pub fn correcting_size_limit(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        n.ilog2() as usize
    }
}

/// First vertex of a cluster whose extraction lowers the contracted minimum degree.
fn misplaced_in(g: &Graph, labels: &[NodeId], members: &[NodeId]) -> Option<NodeId> {
    let me = labels[members[0] as usize];
    let mut outside = Vec::with_capacity(members.len());
    let mut cluster_degree: EdgeWeight = 0;
    for &v in members {
        let out: EdgeWeight = g
            .neighbors(v)
            .filter(|&(u, _)| labels[u as usize] != me)
            .map(|(_, w)| w)
            .sum();
        outside.push(out);
        cluster_degree += out;
    }
    for (&v, &out) in members.iter().zip(&outside) {
        let inside = g.degree(v) - out;
        let rest = cluster_degree - out + inside;
        if g.degree(v).min(rest) < cluster_degree {
            return Some(v);
        }
    }
    None
}

fn fix(g: &Graph, c: &Clustering, parallel: bool) -> Clustering {
    let n = g.n();
    let limit = correcting_size_limit(n);
    let k = c.cluster_count();
    let (start, members) = group_members(c.labels(), k);
    let candidates: Vec<usize> = (0..k)
        .filter(|&i| (2..=limit).contains(&c.sizes[i]))
        .collect();
    let check = |&i: &usize| misplaced_in(g, c.labels(), &members[start[i]..start[i + 1]]);
    let found: Vec<Option<NodeId>> = if parallel {
        candidates.par_iter().map(check).collect()
    } else {
        candidates.iter().map(check).collect()
    };
    let mut labels = c.labels().to_vec();
    let mut sizes = c.sizes.clone();
    for v in found.into_iter().flatten() {
        sizes[labels[v as usize] as usize] -= 1;
        labels[v as usize] = sizes.len() as NodeId;
        sizes.push(1);
    }
    Clustering { labels, sizes }
}

/// Moves misplaced vertices of small clusters into fresh singleton clusters.
///
/// For each cluster `C` with `2 <= |C| <= ⌊log₂ n⌋`, the members are scanned by
/// ascending id and the first `v` with `min(c(v), deg(C) - c(v, V∖C) + c(v, C∖{v})) < deg(C)`
/// is extracted. Existing cluster ids are kept; new clusters are appended.
pub fn fix_misplaced(g: &Graph, c: &Clustering) -> Clustering {
    fix(g, c, false)
}

/// [`fix_misplaced`] with clusters checked in parallel; the result is identical.
pub fn fix_misplaced_parallel(g: &Graph, c: &Clustering) -> Clustering {
    fix(g, c, true)
}
