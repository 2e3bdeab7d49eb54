//! Undirected loop-free multigraphs with stable vertex and edge indices.
//!
//! Edge `i` is always the `i`-th pair handed to the constructor, so a labeling
//! can be stored positionally next to the graph. Parallel edges are allowed;
//! loops are not.

mod iso;
mod partite;

pub use iso::are_isomorphic;
pub use partite::{chromatic_number, k_coloring, partite_classes};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    provenance: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

/// `{"n", "edges": [[u, v], ...], "provenance": [[orig, ...], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Vec<Vec<usize>>>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        let edges = r.edges.into_iter().map(|[u, v]| (u, v)).collect();
        match r.provenance {
            Some(p) => Graph::with_provenance(r.n, edges, p),
            None => Graph::new(r.n, edges),
        }
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            provenance: Some(g.provenance),
        }
    }
}

impl Graph {
    /// Builds a graph with identity provenance.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let provenance = (0..n).map(|v| vec![v]).collect();
        Self::with_provenance(n, edges, provenance)
    }

    pub fn with_provenance(
        n: usize,
        edges: Vec<(usize, usize)>,
        provenance: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if provenance.len() != n {
            return Err(Error::InvalidPlan(format!(
                "provenance has {} entries for {} vertices",
                provenance.len(),
                n
            )));
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u, v));
            }
            incidence[u].push(i);
            incidence[v].push(i);
        }
        Ok(Graph {
            n,
            edges,
            provenance,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Original vertex identifiers folded into `v` by merges.
    pub fn provenance(&self, v: usize) -> &[usize] {
        &self.provenance[v]
    }

    pub fn provenances(&self) -> &[Vec<usize>] {
        &self.provenance
    }

    /// Indices of the edges incident to `v`, parallel edges listed separately.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.incidence.first().map(Vec::len)?;
        self.incidence.iter().all(|inc| inc.len() == d).then_some(d)
    }

    pub fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbors of `v` with repetition for parallel edges.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    /// Distinct neighbors of `v`.
    pub fn neighbor_set(&self, v: usize) -> BTreeSet<usize> {
        self.neighbors(v).collect()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.neighbors(u).filter(|&w| w == v).count()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).any(|w| w == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn pendants(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Display name in the `v_{i,j}` style: `v3` or `v0,4`.
    pub fn vertex_name(&self, v: usize) -> String {
        let ids: Vec<String> = self.provenance[v].iter().map(|i| i.to_string()).collect();
        format!("v{}", ids.join(","))
    }

    /// Sorted multiset of normalized edge pairs; used to compare edge sets.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The circulant `C_m(a_0, ..., a_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    m: usize,
    steps: Vec<usize>,
}

impl CirculantSpec {
    /// Strict constructor: steps must be strictly increasing, each in `[1, ⌈m/2⌉)`.
    pub fn new(m: usize, steps: Vec<usize>) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidOrder(m));
        }
        if steps.is_empty() {
            return Err(Error::InvalidCirculant("empty step set".into()));
        }
        let half = m.div_ceil(2);
        for w in steps.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidCirculant(format!(
                    "steps must be strictly increasing, got {steps:?}"
                )));
            }
        }
        if let Some(&a) = steps.iter().find(|&&a| a == 0 || a >= half) {
            return Err(Error::InvalidCirculant(format!(
                "step {a} outside [1, {half}) for m = {m}"
            )));
        }
        Ok(CirculantSpec { m, steps })
    }

    /// Reduces each step to `min(a, m - a)`, then sorts. Duplicates after
    /// reduction are rejected, so `C_16(1, 11)` becomes `C_16(1, 5)`.
    pub fn normalized(m: usize, steps: &[usize]) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidOrder(m));
        }
        let mut reduced: Vec<usize> = steps
            .iter()
            .map(|&a| {
                let a = a % m;
                a.min(m - a)
            })
            .collect();
        reduced.sort_unstable();
        let before = reduced.len();
        reduced.dedup();
        if reduced.len() != before {
            return Err(Error::InvalidCirculant(format!(
                "duplicate steps after reduction mod {m}: {steps:?}"
            )));
        }
        Self::new(m, reduced)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// `t` in `C_m(a_0, ..., a_t)`.
    pub fn t(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn degree(&self) -> usize {
        2 * self.steps.len()
    }
}

impl std::fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(|a| a.to_string()).collect();
        write!(f, "C_{}({})", self.m, steps.join(","))
    }
}

/// `C_m` with edge `j` joining `j` and `j + 1 mod m`.
pub fn build_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidOrder(m));
    }
    Graph::new(m, (0..m).map(|j| (j, (j + 1) % m)).collect())
}

/// Union of the Hamiltonian cycles `Γ_a`, one per step. Edges of `Γ_{a_0}`
/// come first, each cycle in order `(0, a, 2a, ...)`.
pub fn build_circulant(spec: &CirculantSpec) -> Result<Graph> {
    let m = spec.m;
    let mut edges = Vec::with_capacity(m * spec.steps.len());
    for &a in &spec.steps {
        if gcd(a, m) != 1 {
            return Err(Error::UnsupportedStep { m, step: a });
        }
        edges.extend((0..m).map(|j| (j * a % m, (j + 1) * a % m)));
    }
    Graph::new(m, edges)
}

/// Role of a merge block: `A` holds even cycle indices, `B` odd ones and `C`
/// is the special block, which may mix parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    A,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub members: Vec<usize>,
    pub kind: BlockKind,
}

/// A partition of `0..n` whose blocks are identified into single vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergePlan {
    n: usize,
    blocks: Vec<Block>,
}

impl MergePlan {
    pub fn new(n: usize, blocks: Vec<(Vec<usize>, BlockKind)>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(blocks.len());
        for (mut members, kind) in blocks {
            if members.is_empty() {
                return Err(Error::InvalidPlan("empty block".into()));
            }
            members.sort_unstable();
            for &v in &members {
                if v >= n {
                    return Err(Error::InvalidPlan(format!("vertex {v} out of range 0..{n}")));
                }
                if seen[v] {
                    return Err(Error::InvalidPlan(format!("vertex {v} in two blocks")));
                }
                seen[v] = true;
                let parity_ok = match kind {
                    BlockKind::A => v % 2 == 0,
                    BlockKind::B => v % 2 == 1,
                    BlockKind::C => true,
                };
                if !parity_ok {
                    return Err(Error::InvalidPlan(format!(
                        "vertex {v} has the wrong parity for a {kind:?} block"
                    )));
                }
            }
            out.push(Block { members, kind });
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPlan(format!("vertex {v} not covered")));
        }
        Ok(MergePlan { n, blocks: out })
    }

    /// All singleton blocks, kind by parity.
    pub fn identity(n: usize) -> Self {
        let blocks = (0..n)
            .map(|v| Block {
                members: vec![v],
                kind: if v % 2 == 0 { BlockKind::A } else { BlockKind::B },
            })
            .collect();
        MergePlan { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Blocks sorted by smallest member; index in this order is the merged vertex id.
    pub fn ordered_blocks(&self) -> Vec<&Block> {
        let mut blocks: Vec<&Block> = self.blocks.iter().collect();
        blocks.sort_by_key(|b| b.members[0]);
        blocks
    }

    /// Merged vertex id for every original vertex.
    pub fn vertex_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.n];
        for (rank, block) in self.ordered_blocks().into_iter().enumerate() {
            for &v in &block.members {
                map[v] = rank;
            }
        }
        map
    }
}

/// Identifies the vertices of every block. Edge indices are preserved; the
/// merged vertex takes the rank of its smallest member.
pub fn merge_vertices(g: &Graph, plan: &MergePlan) -> Result<Graph> {
    if plan.n != g.vertex_count() {
        return Err(Error::InvalidPlan(format!(
            "plan covers {} vertices, graph has {}",
            plan.n,
            g.vertex_count()
        )));
    }
    let map = plan.vertex_map();
    for &(u, v) in g.edges() {
        if map[u] == map[v] {
            let block = plan
                .blocks
                .iter()
                .find(|b| b.members.contains(&u))
                .map(|b| b.members.clone())
                .unwrap_or_default();
            return Err(Error::MergeLoop { block, u, v });
        }
    }
    let provenance = plan
        .ordered_blocks()
        .into_iter()
        .map(|b| {
            let mut ids: Vec<usize> = b
                .members
                .iter()
                .flat_map(|&v| g.provenance(v).iter().copied())
                .collect();
            ids.sort_unstable();
            ids
        })
        .collect::<Vec<_>>();
    let edges = g.edges().iter().map(|&(u, v)| (map[u], map[v])).collect();
    Graph::with_provenance(provenance.len(), edges, provenance)
}

/// One-point union; see [`one_point_union_with_maps`].
pub fn one_point_union(graphs: &[Graph], attach: &[usize]) -> Result<Graph> {
    one_point_union_with_maps(graphs, attach).map(|(g, _)| g)
}

/// Disjoint union with every attach vertex identified into vertex 0. The
/// remaining vertices follow graph by graph in their original order, and
/// edges are concatenated. Also returns, per input graph, the new id of each
/// of its vertices.
pub fn one_point_union_with_maps(
    graphs: &[Graph],
    attach: &[usize],
) -> Result<(Graph, Vec<Vec<usize>>)> {
    if graphs.is_empty() {
        return Err(Error::OutOfRange("one-point union of no graphs".into()));
    }
    if graphs.len() != attach.len() {
        return Err(Error::OutOfRange(format!(
            "{} graphs but {} attach vertices",
            graphs.len(),
            attach.len()
        )));
    }
    let mut maps = Vec::with_capacity(graphs.len());
    let mut next = 1;
    for (g, &a) in graphs.iter().zip(attach) {
        if a >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                n: g.vertex_count(),
            });
        }
        let map: Vec<usize> = (0..g.vertex_count())
            .map(|v| {
                if v == a {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        maps.push(map);
    }
    let edges = graphs
        .iter()
        .zip(&maps)
        .flat_map(|(g, map)| g.edges().iter().map(move |&(u, v)| (map[u], map[v])))
        .collect();
    Ok((Graph::new(next, edges)?, maps))
}

/// Removes edge `e`; later edges shift down by one, order is kept.
pub fn delete_edge(g: &Graph, e: usize) -> Result<Graph> {
    if e >= g.edge_count() {
        return Err(Error::EdgeOutOfRange {
            index: e,
            count: g.edge_count(),
        });
    }
    let mut edges = g.edges.clone();
    edges.remove(e);
    Graph::with_provenance(g.n, edges, g.provenance.clone())
}
