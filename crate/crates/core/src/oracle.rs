//! Exact local antimagic chromatic number by exhaustive branch and bound.
//!
//! Labels are assigned to edges in an order that completes vertices early.
//! A branch dies as soon as two adjacent completed vertices share a sum, or
//! once its completed sums already use as many colours as the best labeling
//! found so far. The tree is split on the first edge's label and searched in
//! parallel; workers share only the current best colour count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Graph};
use crate::labeling::EdgeLabeling;

pub const DEFAULT_MAX_EDGES: usize = 10;
pub const BUDGET_ENV: &str = "ANTIMAGIC_BUDGET_EDGES";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_edges: usize,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: DEFAULT_MAX_EDGES,
            node_limit: None,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_max_edges(max_edges: usize) -> Self {
        SearchBudget {
            max_edges,
            ..Self::default()
        }
    }

    /// Default budget, edge cap overridden by `ANTIMAGIC_BUDGET_EDGES`.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::with_max_edges)
            .unwrap_or_default()
    }

    pub fn admits(&self, g: &Graph) -> bool {
        g.edge_count() <= self.max_edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiLa {
    pub value: usize,
    pub witness: EdgeLabeling,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub witness: Option<EdgeLabeling>,
    pub stats: SearchStats,
}

/// `χ_la(g)` with an optimal witness.
pub fn exact_chi_la(g: &Graph, budget: SearchBudget) -> Result<ChiLa> {
    let lower = chromatic_number(g);
    let (found, stats) = search(g, budget, usize::MAX, lower)?;
    let (value, labels) = found.ok_or_else(|| {
        Error::NotApplicable("the graph has no local antimagic labeling".into())
    })?;
    Ok(ChiLa {
        value,
        witness: EdgeLabeling::new(labels)?,
        stats,
    })
}

/// A local antimagic labeling using at most `k` colours, or certified absence.
pub fn feasible_with_colors(g: &Graph, k: usize, budget: SearchBudget) -> Result<Feasibility> {
    let (found, stats) = search(g, budget, k.saturating_add(1), usize::MAX)?;
    let witness = found.map(|(_, l)| EdgeLabeling::new(l)).transpose()?;
    Ok(Feasibility { witness, stats })
}

/// Edges in the order their later endpoint is reached by BFS from vertex 0.
fn edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut rank = vec![usize::MAX; n];
    let mut queue = vec![0];
    rank[0] = 0;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for w in g.neighbor_set(v) {
            if rank[w] == usize::MAX {
                rank[w] = queue.len();
                queue.push(w);
            }
        }
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (rank[u].max(rank[v]), rank[u].min(rank[v]), e)
    });
    order
}

struct Problem {
    q: usize,
    /// Endpoints of the `d`-th edge in search order.
    ends: Vec<(usize, usize)>,
    /// Original index of the `d`-th edge.
    original: Vec<usize>,
    /// Vertices whose last incident edge is the `d`-th.
    completes: Vec<Vec<usize>>,
    adjacency: Vec<Vec<usize>>,
    max_sum: usize,
}

struct Shared {
    best: AtomicUsize,
    stop: AtomicBool,
    nodes: AtomicU64,
    witness: Mutex<Option<(usize, Vec<usize>)>>,
    overrun: Mutex<Option<String>>,
    start: Instant,
    budget: SearchBudget,
    /// Stop once this many colours is reached.
    floor: usize,
}

struct Worker<'a> {
    p: &'a Problem,
    s: &'a Shared,
    labels: Vec<usize>,
    used: u64,
    sums: Vec<usize>,
    done: Vec<bool>,
    counts: Vec<u32>,
    distinct: usize,
    local_nodes: u64,
}

impl Worker<'_> {
    fn flush_nodes(&mut self) -> bool {
        let total = self.s.nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
        self.local_nodes = 0;
        let over = match (self.s.budget.node_limit, self.s.budget.time_limit) {
            (Some(lim), _) if total > lim => Some(format!("node limit {lim} exceeded")),
            (_, Some(t)) if self.s.start.elapsed() > t => Some(format!("time limit {t:?} exceeded")),
            _ => None,
        };
        if let Some(msg) = over {
            self.s.overrun.lock().unwrap().get_or_insert(msg);
            self.s.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    /// Completes the vertices finished by edge `d`; false on a tie or once the
    /// colour count reaches the bound. Returns how many vertices were marked.
    fn complete(&mut self, d: usize) -> (bool, usize) {
        let bound = self.s.best.load(Ordering::Relaxed);
        let mut marked = 0;
        for &v in &self.p.completes[d] {
            let sum = self.sums[v];
            if self.p.adjacency[v]
                .iter()
                .any(|&w| self.done[w] && self.sums[w] == sum)
            {
                return (false, marked);
            }
            self.done[v] = true;
            marked += 1;
            if self.counts[sum] == 0 {
                self.distinct += 1;
            }
            self.counts[sum] += 1;
            if self.distinct >= bound {
                return (false, marked);
            }
        }
        (true, marked)
    }

    fn uncomplete(&mut self, d: usize, marked: usize) {
        for &v in &self.p.completes[d][..marked] {
            self.done[v] = false;
            let sum = self.sums[v];
            self.counts[sum] -= 1;
            if self.counts[sum] == 0 {
                self.distinct -= 1;
            }
        }
    }

    fn assign(&mut self, d: usize, label: usize) -> bool {
        let (u, v) = self.p.ends[d];
        self.labels[d] = label;
        self.used |= 1 << label;
        self.sums[u] += label;
        self.sums[v] += label;
        self.local_nodes += 1;
        if self.local_nodes >= 4096 && !self.flush_nodes() {
            self.unassign(d, label);
            return false;
        }
        let (ok, marked) = self.complete(d);
        if ok {
            self.descend(d + 1);
        }
        self.uncomplete(d, marked);
        self.unassign(d, label);
        true
    }

    fn unassign(&mut self, d: usize, label: usize) {
        let (u, v) = self.p.ends[d];
        self.used &= !(1 << label);
        self.sums[u] -= label;
        self.sums[v] -= label;
    }

    fn descend(&mut self, d: usize) {
        if self.s.stop.load(Ordering::Relaxed) {
            return;
        }
        if d == self.p.ends.len() {
            self.record();
            return;
        }
        for label in 1..=self.p.q {
            if self.used & (1 << label) == 0 && !self.assign(d, label) {
                return;
            }
        }
    }

    fn record(&mut self) {
        let prev = self.s.best.fetch_min(self.distinct, Ordering::Relaxed);
        if self.distinct >= prev {
            return;
        }
        let mut labels = vec![0; self.p.q];
        for (d, &e) in self.p.original.iter().enumerate() {
            labels[e] = self.labels[d];
        }
        let mut w = self.s.witness.lock().unwrap();
        if w.as_ref().is_none_or(|(c, _)| self.distinct < *c) {
            *w = Some((self.distinct, labels));
        }
        if self.distinct <= self.s.floor {
            self.s.stop.store(true, Ordering::Relaxed);
        }
    }
}

/// Finds a labeling with fewer than `bound` colours, minimising; stops early
/// at `floor`.
fn search(
    g: &Graph,
    budget: SearchBudget,
    bound: usize,
    floor: usize,
) -> Result<(Option<(usize, Vec<usize>)>, SearchStats)> {
    let q = g.edge_count();
    if q > budget.max_edges {
        return Err(Error::BudgetExceeded(format!(
            "{q} edges exceeds the budget of {}",
            budget.max_edges
        )));
    }
    if q > 63 {
        return Err(Error::BudgetExceeded(format!("{q} edges exceeds the search limit of 63")));
    }
    if !g.is_connected() || q == 0 {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    let n = g.vertex_count();
    let order = edge_order(g);
    let ends: Vec<(usize, usize)> = order.iter().map(|&e| g.edge(e)).collect();
    let mut last = vec![0; n];
    for (d, &(u, v)) in ends.iter().enumerate() {
        last[u] = d;
        last[v] = d;
    }
    let mut completes = vec![Vec::new(); q];
    for v in 0..n {
        completes[last[v]].push(v);
    }
    let problem = Problem {
        q,
        ends,
        original: order,
        completes,
        adjacency: (0..n).map(|v| g.neighbor_set(v).into_iter().collect()).collect(),
        max_sum: g.degrees().into_iter().max().unwrap_or(0) * q,
    };
    let shared = Shared {
        best: AtomicUsize::new(bound),
        stop: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        witness: Mutex::new(None),
        overrun: Mutex::new(None),
        start,
        budget,
        floor,
    };
    // The complement of a labeling on a regular graph has the same colour
    // count, so the first edge may take the smaller of `x` and `q + 1 - x`.
    let first_labels = if g.regular_degree().is_some() {
        q.div_ceil(2)
    } else {
        q
    };
    (1..=first_labels).into_par_iter().for_each(|label| {
        let mut w = Worker {
            p: &problem,
            s: &shared,
            labels: vec![0; q],
            used: 0,
            sums: vec![0; n],
            done: vec![false; n],
            counts: vec![0; problem.max_sum + 1],
            distinct: 0,
            local_nodes: 0,
        };
        w.assign(0, label);
        w.flush_nodes();
    });
    if let Some(msg) = shared.overrun.into_inner().unwrap() {
        return Err(Error::BudgetExceeded(msg));
    }
    let stats = SearchStats {
        nodes: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    };
    Ok((shared.witness.into_inner().unwrap(), stats))
}
