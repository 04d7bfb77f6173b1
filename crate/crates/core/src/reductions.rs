//! Padberg-Rinaldi exact reductions, applied in linear-time "runs".
//!
//! A run makes two passes over the graph, marking contractible edges in a
//! union-find, and then contracts all marked edges at once:
//!
//! * pass one tests every edge for `c(v,w) >= λ̂` (condition 1) and
//!   `c(v) <= 2c(v,w)` or `c(w) <= 2c(v,w)` (condition 2);
//! * pass two pairs up unscanned adjacent vertices and, over their common
//!   neighborhood, tests condition 3 (`∃u: c(v) <= 2(c(v,w)+c(v,u))` and
//!   `c(w) <= 2(c(v,w)+c(w,u))`) and condition 4
//!   (`c(v,w) + Σ_u min(c(v,u), c(w,u)) >= λ̂`).
//!
//! No condition is applied to an edge that is the only edge at one of its
//! endpoints. Conditions 2 and 3 rely on the exact weighted degree of the
//! endpoint, so within a pass they are only applied while that endpoint is
//! still unmerged; conditions 1 and 4 bound the connectivity between the
//! endpoints and stay valid for merged endpoints.

use std::borrow::Cow;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::contraction::{contract_clustering_parallel, contract_marked};
use crate::cut::Hierarchy;
use crate::graph::{EdgeWeight, Graph, NodeId};
use crate::union_find::UnionFind;

/// Marking state of a single run.
#[derive(Debug, Clone)]
pub struct PrRunState {
    pub lambda_hat: EdgeWeight,
    pub uf: UnionFind,
    pub scanned: Vec<bool>,
    /// Adjacency entries read while evaluating conditions (instrumentation).
    pub edge_touches: usize,
}

impl PrRunState {
    pub fn new(g: &Graph, lambda_hat: EdgeWeight) -> Self {
        Self {
            lambda_hat,
            uf: UnionFind::new(g.n()),
            scanned: vec![false; g.n()],
            edge_touches: 0,
        }
    }
}

fn guard_ok(g: &Graph, v: NodeId, w: NodeId) -> bool {
    g.neighbor_count(v) > 1 && g.neighbor_count(w) > 1
}

/// Condition 1 and 2 pass. Returns the number of unions performed.
pub fn pr_pass_12(g: &Graph, state: &mut PrRunState) -> usize {
    let mut unions = 0;
    for (v, w, c) in g.edges() {
        state.edge_touches += 1;
        if !guard_ok(g, v, w) || state.uf.find(v) == state.uf.find(w) {
            continue;
        }
        let cond1 = c >= state.lambda_hat;
        let cond2 = (state.uf.is_singleton(v) && g.degree(v) <= 2 * c)
            || (state.uf.is_singleton(w) && g.degree(w) <= 2 * c);
        if (cond1 || cond2) && state.uf.union(v, w) {
            unions += 1;
        }
    }
    unions
}

/// Timestamped membership marks for N(v).
struct NeighborMarks {
    weight: Vec<EdgeWeight>,
    stamp: Vec<u32>,
    now: u32,
}

impl NeighborMarks {
    fn new(n: usize) -> Self {
        Self {
            weight: vec![0; n],
            stamp: vec![0; n],
            now: 0,
        }
    }

    fn load(&mut self, g: &Graph, v: NodeId) {
        self.now = self.now.wrapping_add(1);
        if self.now == 0 {
            self.stamp.fill(0);
            self.now = 1;
        }
        for (u, c) in g.neighbors(v) {
            self.stamp[u as usize] = self.now;
            self.weight[u as usize] = c;
        }
    }

    fn get(&self, u: NodeId) -> Option<EdgeWeight> {
        (self.stamp[u as usize] == self.now).then(|| self.weight[u as usize])
    }
}

/// Conditions 3 and 4 for edge (v, w) over the common neighborhood.
/// `exact_degrees` says whether c(v) and c(w) are the degrees of unmerged vertices.
fn pair_conditions(
    g: &Graph,
    marks: &mut NeighborMarks,
    v: NodeId,
    w: NodeId,
    c_vw: EdgeWeight,
    lambda_hat: EdgeWeight,
    exact_degrees: bool,
) -> (bool, usize) {
    marks.load(g, v);
    let (dv, dw) = (g.degree(v), g.degree(w));
    let mut sum = c_vw;
    let mut cond3 = false;
    for (u, c_wu) in g.neighbors(w) {
        let Some(c_vu) = marks.get(u) else { continue };
        if u == v {
            continue;
        }
        sum += c_vu.min(c_wu);
        if exact_degrees && dv <= 2 * (c_vw + c_vu) && dw <= 2 * (c_vw + c_wu) {
            cond3 = true;
        }
    }
    let touches = g.neighbor_count(v) + g.neighbor_count(w);
    (cond3 || sum >= lambda_hat, touches)
}

/// Heaviest neighbor of `v` that is unscanned and not yet merged with `v`.
fn pick_partner(
    g: &Graph,
    v: NodeId,
    scanned: impl Fn(NodeId) -> bool,
    same: impl Fn(NodeId) -> bool,
) -> Option<(NodeId, EdgeWeight)> {
    let mut best: Option<(NodeId, EdgeWeight)> = None;
    for (w, c) in g.neighbors(v) {
        if scanned(w) || same(w) {
            continue;
        }
        if best.is_none_or(|(_, bc)| c > bc) {
            best = Some((w, c));
        }
    }
    best
}

/// Condition 3 and 4 pass. Each vertex takes part in at most one examined
/// edge, so every adjacency entry is read at most twice. Returns the number
/// of unions performed.
pub fn pr_pass_34(g: &Graph, state: &mut PrRunState) -> usize {
    let mut marks = NeighborMarks::new(g.n());
    let mut unions = 0;
    for v in 0..g.n() as NodeId {
        if state.scanned[v as usize] {
            continue;
        }
        let rv = state.uf.find(v);
        let uf = &state.uf;
        let scanned = &state.scanned;
        let Some((w, c_vw)) = pick_partner(
            g,
            v,
            |x| x == v || scanned[x as usize],
            |x| uf.find_const(x) == rv,
        ) else {
            continue;
        };
        state.scanned[v as usize] = true;
        state.scanned[w as usize] = true;
        if !guard_ok(g, v, w) {
            continue;
        }
        let exact = state.uf.is_singleton(v) && state.uf.is_singleton(w);
        let (hit, touches) = pair_conditions(g, &mut marks, v, w, c_vw, state.lambda_hat, exact);
        state.edge_touches += touches;
        if hit && state.uf.union(v, w) {
            unions += 1;
        }
    }
    unions
}

/// Parallel run passes. Condition 1 is evaluated in parallel, condition 2
/// sequentially, and the pairing pass for conditions 3 and 4 claims vertices
/// with atomic flags. Unions are always applied by a single thread.
fn parallel_passes(g: &Graph, state: &mut PrRunState) -> usize {
    let n = g.n();
    let lambda_hat = state.lambda_hat;
    let heavy: Vec<(NodeId, NodeId)> = (0..n as NodeId)
        .into_par_iter()
        .flat_map_iter(|v| {
            g.neighbors(v)
                .filter(move |&(w, c)| v < w && c >= lambda_hat && guard_ok(g, v, w))
                .map(move |(w, _)| (v, w))
        })
        .collect();
    state.edge_touches += g.m();
    let mut unions = 0;
    for (v, w) in heavy {
        if state.uf.union(v, w) {
            unions += 1;
        }
    }
    for (v, w, c) in g.edges() {
        if !guard_ok(g, v, w) || state.uf.find(v) == state.uf.find(w) {
            continue;
        }
        let cond2 = (state.uf.is_singleton(v) && g.degree(v) <= 2 * c)
            || (state.uf.is_singleton(w) && g.degree(w) <= 2 * c);
        if cond2 && state.uf.union(v, w) {
            unions += 1;
        }
    }

    let claimed: Vec<AtomicBool> = (0..n).map(|_| AtomicBool::new(false)).collect();
    let touches = AtomicUsize::new(0);
    let uf = &state.uf;
    let threads = rayon::current_num_threads().max(1);
    let marked: Vec<(NodeId, NodeId)> = (0..n as NodeId)
        .into_par_iter()
        .with_min_len((n / (threads * 8)).max(64))
        .fold(
            || (Vec::new(), None::<NeighborMarks>),
            |(mut out, mut marks), v| {
                if claimed[v as usize].swap(true, Ordering::AcqRel) {
                    return (out, marks);
                }
                let rv = uf.find_const(v);
                let mut partner = None;
                for _ in 0..4 {
                    let Some((w, c)) = pick_partner(
                        g,
                        v,
                        |x| x == v || claimed[x as usize].load(Ordering::Relaxed),
                        |x| uf.find_const(x) == rv,
                    ) else {
                        break;
                    };
                    if !claimed[w as usize].swap(true, Ordering::AcqRel) {
                        partner = Some((w, c));
                        break;
                    }
                }
                let Some((w, c_vw)) = partner else {
                    claimed[v as usize].store(false, Ordering::Release);
                    return (out, marks);
                };
                if guard_ok(g, v, w) {
                    let marks = marks.get_or_insert_with(|| NeighborMarks::new(n));
                    let exact = uf.is_singleton(v) && uf.is_singleton(w);
                    let (hit, t) = pair_conditions(g, marks, v, w, c_vw, lambda_hat, exact);
                    touches.fetch_add(t, Ordering::Relaxed);
                    if hit {
                        out.push((v, w));
                    }
                }
                (out, marks)
            },
        )
        .map(|(out, _)| out)
        .flatten_iter()
        .collect();
    state.edge_touches += touches.into_inner();
    for (v, w) in marked {
        if state.uf.union(v, w) {
            unions += 1;
        }
    }
    unions
}

/// Summary of a sequence of runs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PrStats {
    pub runs: usize,
    pub contracted_vertices: usize,
}

/// Repeats runs on `g` until a run contracts nothing, the graph has at most
/// `stop_at` vertices, or λ̂ drops to 0.
///
/// Every contraction is recorded in `h`, which also lowers λ̂ to the minimum
/// degree of each contracted graph. Returns the final graph.
pub fn pr_run(g: &Graph, h: &mut Hierarchy, stop_at: usize) -> (Graph, PrStats) {
    run_loop(Cow::Borrowed(g), h, stop_at, 0.0, false)
}

/// [`pr_run`] using the parallel passes on the current rayon pool.
pub fn pr_run_parallel(g: &Graph, h: &mut Hierarchy, stop_at: usize) -> (Graph, PrStats) {
    run_loop(Cow::Borrowed(g), h, stop_at, 0.0, true)
}

/// Like [`pr_run`], but also stops after a run that merged fewer than
/// `min_progress · n` vertices.
///
/// Every run costs a full pass over the graph, so a long tail of runs that
/// each remove a handful of vertices costs more than the next clustering
/// level would.
pub fn pr_run_bounded(
    g: &Graph,
    h: &mut Hierarchy,
    stop_at: usize,
    min_progress: f64,
    parallel: bool,
) -> (Graph, PrStats) {
    run_loop(Cow::Borrowed(g), h, stop_at, min_progress, parallel)
}

/// [`pr_run_bounded`] on an owned graph, which is dropped as soon as the
/// first run has contracted it.
pub fn pr_run_bounded_owned(
    g: Graph,
    h: &mut Hierarchy,
    stop_at: usize,
    min_progress: f64,
    parallel: bool,
) -> (Graph, PrStats) {
    run_loop(Cow::Owned(g), h, stop_at, min_progress, parallel)
}

fn run_loop(
    mut current: Cow<'_, Graph>,
    h: &mut Hierarchy,
    stop_at: usize,
    min_progress: f64,
    parallel: bool,
) -> (Graph, PrStats) {
    let mut stats = PrStats::default();
    while current.n() > stop_at.max(1) && h.lambda_hat() > 0 {
        let mut state = PrRunState::new(&current, h.lambda_hat());
        let unions = if parallel {
            parallel_passes(&current, &mut state)
        } else {
            pr_pass_12(&current, &mut state) + pr_pass_34(&current, &mut state)
        };
        stats.runs += 1;
        if unions == 0 {
            break;
        }
        stats.contracted_vertices += unions;
        let stalled = (unions as f64) < min_progress * current.n() as f64;
        let (coarse, level) = if parallel {
            let roots = state.uf.roots();
            contract_clustering_parallel(&current, &roots)
        } else {
            contract_marked(&current, &mut state.uf)
        };
        h.push(level, &coarse);
        current = Cow::Owned(coarse);
        if stalled {
            break;
        }
    }
    (current.into_owned(), stats)
}
