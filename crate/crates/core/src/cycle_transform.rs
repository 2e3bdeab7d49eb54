//! Label-preserving merges of a C-labeled cycle into 4-regular (or nearly
//! regular) bipartite and tripartite graphs, and the iterated even/odd array
//! construction that yields `2^s`-regular circulants.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::circulant::c_labeling;
use crate::error::{Error, Result};
use crate::graph::{
    build_circulant, merge_vertices, BlockKind, CirculantSpec, Graph, MergePlan,
};
use crate::labeling::{vertex_sums, EdgeLabeling};

/// The four merge families, keyed by `n mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `G_{2m}` from `C_{4m}`.
    G,
    /// `G^1_{2m+1}` from `C_{4m+2}`, special block `{v_0, v_{2m+1}}`.
    G1,
    /// `G^2_{2m+1}` from `C_{4m+1}`, `v_0` left alone.
    G2,
    /// `G^3_{2m+1}` from `C_{4m+3}`, special block `{v_0, v_{m+1}, v_{3m+2}}`.
    G3,
}

impl Family {
    /// Family and `m` for a cycle order.
    pub fn of_order(n: usize) -> (Family, usize) {
        let fam = match n % 4 {
            0 => Family::G,
            2 => Family::G1,
            1 => Family::G2,
            _ => Family::G3,
        };
        (fam, n / 4)
    }

    pub fn order(self, m: usize) -> usize {
        4 * m
            + match self {
                Family::G => 0,
                Family::G1 => 2,
                Family::G2 => 1,
                Family::G3 => 3,
            }
    }

    /// Members of the block holding `v_0`.
    pub fn special_block(self, m: usize) -> Vec<usize> {
        match self {
            Family::G => Vec::new(),
            Family::G1 => vec![0, 2 * m + 1],
            Family::G2 => vec![0],
            Family::G3 => vec![0, m + 1, 3 * m + 2],
        }
    }

    /// Sums of the `v_0` block, the even-pair blocks and the odd-pair blocks.
    pub fn profile(self, m: usize) -> ColorProfile {
        let (special, even, odd) = match self {
            Family::G => (6 * m + 4, 8 * m + 4, 8 * m + 2),
            Family::G1 => (6 * m + 6, 8 * m + 8, 8 * m + 6),
            Family::G2 => (2 * m + 2, 8 * m + 6, 8 * m + 4),
            Family::G3 => (10 * m + 12, 8 * m + 10, 8 * m + 8),
        };
        ColorProfile { special, even, odd }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::G => "G",
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
        })
    }
}

/// Induced sums of a transformed cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColorProfile {
    pub special: usize,
    pub even: usize,
    pub odd: usize,
}

impl ColorProfile {
    pub fn colors(&self) -> BTreeSet<usize> {
        [self.special, self.even, self.odd].into_iter().collect()
    }
}

/// A named merge plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CasePlanId {
    /// One of the eight circulant-style plans, `1..=8`, with parameter `k`.
    Case(u8, usize),
    /// The half-shift pairing of a family with parameter `m`.
    Family(Family, usize),
}

impl CasePlanId {
    pub fn order(&self) -> usize {
        match *self {
            CasePlanId::Case(c, k) => case_order(c, k),
            CasePlanId::Family(fam, m) => fam.order(m),
        }
    }
}

impl fmt::Display for CasePlanId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CasePlanId::Case(c, k) => write!(f, "case {c} (k = {k})"),
            CasePlanId::Family(fam, m) => write!(f, "{fam} (m = {m})"),
        }
    }
}

/// Cycle order of a case.
pub fn case_order(case: u8, k: usize) -> usize {
    8 * k
        + match case {
            1 => 0,
            2 => 4,
            3 => 2,
            4 => 6,
            5 => 1,
            6 => 5,
            7 => 3,
            _ => 7,
        }
}

/// The case and `k` covering a cycle order, when `k` is in range.
pub fn case_for_order(n: usize) -> Option<(u8, usize)> {
    let case = match n % 8 {
        0 => 1,
        4 => 2,
        2 => 3,
        6 => 4,
        1 => 5,
        5 => 6,
        3 => 7,
        _ => 8,
    };
    let k = n / 8;
    (k >= min_k(case)).then_some((case, k))
}

/// Case 2 still yields a (non-simple) graph at `k = 1`.
fn min_k(case: u8) -> usize {
    if case == 2 {
        1
    } else {
        2
    }
}

/// Colours of each case as stated per case: `(special, A blocks, B blocks)`.
pub fn case_colors(case: u8, k: usize) -> Option<ColorProfile> {
    let (special, even, odd) = match case {
        1 => (12 * k + 4, 16 * k + 4, 16 * k + 2),
        2 => (12 * k + 10, 16 * k + 12, 16 * k + 10),
        3 => (12 * k + 6, 16 * k + 8, 16 * k + 6),
        4 => (12 * k + 12, 16 * k + 16, 16 * k + 14),
        5 => (4 * k + 2, 16 * k + 6, 16 * k + 4),
        6 => (4 * k + 4, 16 * k + 14, 16 * k + 12),
        7 => (20 * k + 12, 16 * k + 10, 16 * k + 8),
        8 => (20 * k + 22, 16 * k + 18, 16 * k + 16),
        _ => return None,
    };
    Some(ColorProfile { special, even, odd })
}

fn pairs<I>(kind: BlockKind, it: I) -> impl Iterator<Item = (Vec<usize>, BlockKind)>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    it.into_iter().map(move |(a, b)| (vec![a, b], kind))
}

/// Blocks of a case, written out with `v_i` as vertex `i`.
fn case_blocks(case: u8, k: usize) -> Vec<(Vec<usize>, BlockKind)> {
    use BlockKind::{A, B, C};
    let mut blocks = Vec::new();
    match case {
        1 => {
            blocks.extend(pairs(A, (0..2 * k).map(|i| (2 * i, 4 * k + 2 * i))));
            blocks.extend(pairs(
                B,
                (0..k)
                    .chain(2 * k..3 * k)
                    .map(|j| (2 * j + 1, 2 * k + 2 * j + 1)),
            ));
        }
        2 => {
            blocks.extend(pairs(A, (0..=2 * k).map(|i| (2 * i, 4 * k + 2 * i + 2))));
            blocks.extend(pairs(B, (0..=k).map(|j| (2 * j + 1, 2 * k + 2 * j + 3))));
            blocks.extend(pairs(
                B,
                (0..k).map(|j| (4 * k + 2 * j + 5, 6 * k + 2 * j + 5)),
            ));
        }
        3 => {
            blocks.extend(pairs(A, (1..=2 * k).map(|i| (2 * i, 4 * k + 2 * i))));
            blocks.extend(pairs(B, (0..2 * k).map(|j| (2 * j + 1, 4 * k + 2 * j + 3))));
            blocks.push((vec![0, 4 * k + 1], C));
        }
        4 => {
            blocks.extend(pairs(A, (1..=2 * k + 1).map(|i| (2 * i, 4 * k + 2 + 2 * i))));
            blocks.extend(pairs(B, (0..=k).map(|j| (2 * j + 1, 6 * k + 5 + 2 * j))));
            blocks.extend(pairs(
                B,
                (0..k).map(|j| (2 * k + 3 + 2 * j, 4 * k + 5 + 2 * j)),
            ));
            blocks.push((vec![0, 4 * k + 3], C));
        }
        5 => {
            blocks.extend(pairs(A, (1..=2 * k).map(|i| (2 * i, 4 * k + 2 * i))));
            blocks.extend(pairs(B, (0..k).map(|j| (2 * j + 1, 2 * k + 2 * j + 1))));
            blocks.extend(pairs(
                B,
                (0..k).map(|j| (4 * k + 2 * j + 1, 6 * k + 2 * j + 1)),
            ));
            blocks.push((vec![0], C));
        }
        6 => {
            blocks.extend(pairs(A, (1..=2 * k + 1).map(|i| (2 * i, 4 * k + 2 + 2 * i))));
            blocks.extend(pairs(B, (0..=k).map(|j| (2 * j + 1, 6 * k + 3 + 2 * j))));
            blocks.extend(pairs(
                B,
                (0..k).map(|j| (2 * k + 3 + 2 * j, 4 * k + 3 + 2 * j)),
            ));
            blocks.push((vec![0], C));
        }
        7 => {
            blocks.extend(pairs(A, (1..=k).map(|i| (2 * i, 4 * k + 2 * i))));
            blocks.extend(pairs(A, (1..=k).map(|i| (2 * k + 2 * i, 6 * k + 2 + 2 * i))));
            blocks.extend(pairs(B, (0..k).map(|j| (2 * j + 1, 8 * k + 1 - 2 * j))));
            blocks.extend(pairs(
                B,
                (0..k).map(|j| (2 * k + 3 + 2 * j, 4 * k + 3 + 2 * j)),
            ));
            blocks.push((vec![0, 2 * k + 1, 6 * k + 2], C));
        }
        _ => {
            blocks.extend(pairs(A, (1..=k).map(|i| (2 * i, 4 * k + 4 + 2 * i))));
            blocks.extend(pairs(
                A,
                (1..=k + 1).map(|i| (2 * k + 2 + 2 * i, 6 * k + 4 + 2 * i)),
            ));
            blocks.extend(pairs(B, (0..=k).map(|j| (4 * j + 1, 4 * k + 3 + 2 * j))));
            blocks.extend(pairs(B, (0..k).map(|j| (4 * j + 3, 6 * k + 7 + 2 * j))));
            blocks.push((vec![0, 2 * k + 2, 6 * k + 5], C));
        }
    }
    blocks
}

/// Half-shift pairing: the special block, then the remaining evens and odds
/// each split in sorted order into first half against second half.
fn family_blocks(fam: Family, m: usize) -> Vec<(Vec<usize>, BlockKind)> {
    let n = fam.order(m);
    let special = fam.special_block(m);
    let mut blocks = Vec::new();
    if !special.is_empty() {
        blocks.push((special.clone(), BlockKind::C));
    }
    for parity in [0, 1] {
        let rest: Vec<usize> = (0..n)
            .filter(|v| v % 2 == parity && !special.contains(v))
            .collect();
        let half = rest.len() / 2;
        let kind = if parity == 0 { BlockKind::A } else { BlockKind::B };
        blocks.extend(pairs(kind, (0..half).map(|i| (rest[i], rest[half + i]))));
    }
    blocks
}

pub fn case_plan(id: CasePlanId) -> Result<MergePlan> {
    match id {
        CasePlanId::Case(case, k) => {
            if !(1..=8).contains(&case) {
                return Err(Error::OutOfRange(format!("case {case} not in 1..=8")));
            }
            if k < min_k(case) {
                return Err(Error::OutOfRange(format!(
                    "case {case} needs k >= {}, got {k}",
                    min_k(case)
                )));
            }
            MergePlan::new(case_order(case, k), case_blocks(case, k))
        }
        CasePlanId::Family(fam, m) => {
            if m < 2 {
                return Err(Error::OutOfRange(format!("{fam} needs m >= 2, got {m}")));
            }
            MergePlan::new(fam.order(m), family_blocks(fam, m))
        }
    }
}

/// A merged, C-labeled cycle with its family profile already checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedCycle {
    pub n: usize,
    pub family: Family,
    pub m: usize,
    pub plan: MergePlan,
    pub graph: Graph,
    pub labeling: EdgeLabeling,
    pub profile: ColorProfile,
    /// Merged vertex carrying the special sum.
    pub special_vertex: usize,
}

impl TransformedCycle {
    pub fn colors(&self) -> BTreeSet<usize> {
        self.profile.colors()
    }
}

/// Applies the C-labeling of `C_n`, merges along `plan` and checks every
/// merged sum against the family formula.
pub fn transform_cycle(n: usize, plan: &MergePlan) -> Result<TransformedCycle> {
    if plan.n() != n {
        return Err(Error::InvalidPlan(format!(
            "plan is for C_{}, not C_{n}",
            plan.n()
        )));
    }
    let (family, m) = Family::of_order(n);
    if m < 2 {
        return Err(Error::OutOfRange(format!("cycle order {n} below 8")));
    }
    let special = family.special_block(m);
    for block in plan.blocks() {
        let ok = if block.members.contains(&0) {
            match family {
                Family::G => block.members.len() == 2 && block.kind == BlockKind::A,
                _ => block.members == special,
            }
        } else {
            block.members.len() == 2 && block.kind != BlockKind::C
        };
        if !ok {
            return Err(Error::InvalidPlan(format!(
                "block {:?} does not fit the {family} family",
                block.members
            )));
        }
    }
    let (cycle, labeling) = c_labeling(n)?;
    let graph = merge_vertices(&cycle, plan)?;
    let profile = family.profile(m);
    let sums = vertex_sums(&graph, &labeling)?;
    let special_vertex = plan.vertex_map()[0];
    for (v, &s) in sums.iter().enumerate() {
        let first = graph.provenance(v)[0];
        let want = if v == special_vertex {
            profile.special
        } else if first % 2 == 0 {
            profile.even
        } else {
            profile.odd
        };
        if s != want {
            return Err(Error::Certification(format!(
                "{} has sum {s}, {family} formula gives {want}",
                graph.vertex_name(v)
            )));
        }
    }
    Ok(TransformedCycle {
        n,
        family,
        m,
        plan: plan.clone(),
        graph,
        labeling,
        profile,
        special_vertex,
    })
}

/// The `u`-renaming of a Case 1 graph onto `C_{4k}(1, 2k-1)`, certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case1Certificate {
    pub k: usize,
    pub graph: Graph,
    pub spec: CirculantSpec,
    /// Merged vertex `w` becomes `u_{u_of[w]}`.
    pub u_of: Vec<usize>,
}

pub fn verify_case1_circulant(k: usize) -> Result<Case1Certificate> {
    let plan = case_plan(CasePlanId::Case(1, k))?;
    let t = transform_cycle(8 * k, &plan)?;
    let graph = t.graph;
    let u_of: Vec<usize> = (0..graph.vertex_count())
        .map(|w| {
            let low = graph.provenance(w)[0];
            // Odd blocks from j in [2k, 3k-1] start at 4k+1 or later.
            if low % 2 == 1 && low > 4 * k {
                low - 2 * k
            } else {
                low
            }
        })
        .collect();
    let spec = CirculantSpec::new(4 * k, vec![1, 2 * k - 1])?;
    let target = build_circulant(&spec)?;
    let renamed = Graph::new(
        4 * k,
        graph
            .edges()
            .iter()
            .map(|&(a, b)| (u_of[a], u_of[b]))
            .collect(),
    )?;
    if renamed.edge_multiset() != target.edge_multiset() {
        return Err(Error::Certification(format!(
            "u-renaming of G_{} is not {spec}",
            4 * k
        )));
    }
    Ok(Case1Certificate {
        k,
        graph,
        spec,
        u_of,
    })
}

/// The even array `A` (`R × 2^{s-1}`) and odd array `B` (`2^{s-1} × R`),
/// `R = 2^{s-1}(t+2)`, `n = 2^{2s-1}(t+2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenOddArrays {
    pub s: u32,
    pub t: usize,
    pub n: usize,
    pub a: Vec<Vec<usize>>,
    pub b: Vec<Vec<usize>>,
}

fn offset(m: &[Vec<usize>], c: usize) -> Vec<Vec<usize>> {
    m.iter().map(|row| row.iter().map(|x| x + c).collect()).collect()
}

/// `[[X, X+2M], [X+M, X+3M]]`.
fn quadruple(x: &[Vec<usize>], big: usize) -> Vec<Vec<usize>> {
    let top = x.iter().zip(offset(x, 2 * big)).map(|(l, r)| [l.clone(), r].concat());
    let bottom = offset(x, big)
        .into_iter()
        .zip(offset(x, 3 * big))
        .map(|(l, r)| [l, r].concat());
    top.chain(bottom).collect()
}

pub fn build_even_odd_arrays(s: u32, t: usize) -> Result<EvenOddArrays> {
    if s < 2 {
        return Err(Error::OutOfRange(format!("s = {s}, need s >= 2")));
    }
    let n = (1usize << (2 * s - 1)) * (t + 2);
    let width = 2 * t + 4;
    let mut a: Vec<Vec<usize>> = (0..t + 2).map(|c| vec![2 * c]).collect();
    let mut b: Vec<Vec<usize>> = vec![(0..t + 2).map(|c| 2 * c + 1).collect()];
    for i in 1..s {
        let big = (1usize << (2 * i - 2)) * width;
        a = quadruple(&a, big);
        b = quadruple(&b, big);
    }
    Ok(EvenOddArrays { s, t, n, a, b })
}

/// The 0/1 pattern `M01`, the label matrix `Mlab` and the circulant they
/// describe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionMatrix {
    pub arrays: EvenOddArrays,
    pub m01: Vec<Vec<u8>>,
    pub mlab: Vec<Vec<Option<usize>>>,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    #[serde(serialize_with = "spec_string")]
    pub spec: CirculantSpec,
    /// The circulant on `u_0..u_{2R-1}`, edges in cycle order with the
    /// cycle's C-labels.
    #[serde(skip)]
    pub graph: Graph,
    #[serde(skip)]
    pub labeling: EdgeLabeling,
}

fn spec_string<S: serde::Serializer>(spec: &CirculantSpec, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&spec.to_string())
}

/// Steps `1 + i(2t+4)` and `2t+3 + i(2t+4)` for `i < 2^{s-2}`.
pub fn construction_spec(s: u32, t: usize) -> Result<CirculantSpec> {
    let w = 2 * t + 4;
    let mut steps: Vec<usize> = (0..1usize << (s - 2))
        .flat_map(|i| [1 + i * w, 2 * t + 3 + i * w])
        .collect();
    steps.sort_unstable();
    CirculantSpec::new((1usize << s) * (t + 2), steps)
}

impl ConstructionMatrix {
    pub fn order(&self) -> usize {
        self.m01.len()
    }

    /// The merge plan behind the matrix: rows of `A`, columns of `B`.
    pub fn plan(&self) -> Result<MergePlan> {
        plan_from_arrays(&self.arrays)
    }

    /// Arrays on top and left, labels inside, sums on the right and bottom.
    pub fn render(&self) -> String {
        let a = &self.arrays.a;
        let b = &self.arrays.b;
        let r = self.order();
        let w = self.arrays.n.to_string().len().max(3) + 1;
        let left = a[0].len() * w;
        let mut out = String::new();
        for (i, brow) in b.iter().enumerate() {
            let label = if i == 0 { self.spec.to_string() } else { String::new() };
            let _ = write!(out, "{label:>left$} |");
            for x in brow {
                let _ = write!(out, "{x:>w$}");
            }
            if i + 1 == b.len() {
                out.push_str(" | Sum");
            }
            out.push('\n');
        }
        for x in 0..r {
            for v in &a[x] {
                let _ = write!(out, "{v:>w$}");
            }
            out.push_str(" |");
            for cell in &self.mlab[x] {
                match cell {
                    Some(l) => {
                        let _ = write!(out, "{l:>w$}");
                    }
                    None => {
                        let _ = write!(out, "{:>w$}", "*");
                    }
                }
            }
            let _ = writeln!(out, " | {}", self.row_sums[x]);
        }
        let _ = write!(out, "{:>left$} |", "Sum");
        for c in &self.col_sums {
            let _ = write!(out, "{c:>w$}");
        }
        out.push('\n');
        out
    }
}

pub fn plan_from_arrays(arrays: &EvenOddArrays) -> Result<MergePlan> {
    let rows = arrays.a.iter().map(|row| (row.clone(), BlockKind::A));
    let cols = (0..arrays.b[0].len())
        .map(|y| (arrays.b.iter().map(|row| row[y]).collect(), BlockKind::B));
    MergePlan::new(arrays.n, rows.chain(cols).collect())
}

/// Builds and certifies the construction: bijective labels, a circulant
/// `M01`, matching occupancy, the row and column sums, the `u`-renaming onto
/// [`construction_spec`], and a 3-colour labeling on that circulant.
pub fn build_construction_matrix(s: u32, t: usize) -> Result<ConstructionMatrix> {
    let arrays = build_even_odd_arrays(s, t)?;
    let n = arrays.n;
    let r = arrays.a.len();
    let (cycle, labeling) = c_labeling(n)?;
    let plan = plan_from_arrays(&arrays)?;
    let merged = merge_vertices(&cycle, &plan)?;

    let mut row_of = vec![usize::MAX; n];
    let mut col_of = vec![usize::MAX; n];
    for (x, row) in arrays.a.iter().enumerate() {
        for &v in row {
            row_of[v] = x;
        }
    }
    for brow in &arrays.b {
        for (y, &v) in brow.iter().enumerate() {
            col_of[v] = y;
        }
    }
    let mut m01 = vec![vec![0u8; r]; r];
    let mut mlab = vec![vec![None; r]; r];
    let mut cycle_edges = Vec::with_capacity(n);
    for (j, &(p, q)) in cycle.edges().iter().enumerate() {
        let (even, odd) = if p % 2 == 0 { (p, q) } else { (q, p) };
        let (x, y) = (row_of[even], col_of[odd]);
        if m01[x][y] != 0 {
            return Err(Error::Certification(format!(
                "cell ({x}, {y}) holds two consecutive pairs"
            )));
        }
        m01[x][y] = 1;
        mlab[x][y] = Some(labeling.label(j));
        cycle_edges.push((2 * x, 2 * y + 1));
    }
    for x in 0..r {
        let prev = &m01[(x + r - 1) % r];
        if (0..r).any(|y| m01[x][y] != prev[(y + r - 1) % r]) {
            return Err(Error::Certification(format!("row {x} is not a cyclic shift")));
        }
    }
    let row_sums: Vec<usize> = mlab.iter().map(|row| row.iter().flatten().sum()).collect();
    let col_sums: Vec<usize> = (0..r)
        .map(|y| mlab.iter().filter_map(|row| row[y]).sum())
        .collect();
    let half = 1usize << (s - 1);
    let (row_sum, col_sum) = (half * (n + 2), half * (n + 1));
    for (x, &sum) in row_sums.iter().enumerate() {
        let want = if x == 0 { row_sum - n / 2 } else { row_sum };
        if sum != want {
            return Err(Error::Certification(format!("row {x} sums to {sum}, not {want}")));
        }
    }
    if let Some(y) = col_sums.iter().position(|&c| c != col_sum) {
        return Err(Error::Certification(format!(
            "column {y} sums to {}, not {col_sum}",
            col_sums[y]
        )));
    }
    // merge_vertices agrees with the matrix reading of the same plan.
    let merged_sums = vertex_sums(&merged, &labeling)?;
    let map = plan.vertex_map();
    for x in 0..r {
        let w = map[arrays.a[x][0]];
        if merged_sums[w] != row_sums[x] {
            return Err(Error::Certification(format!("row {x} disagrees with merge")));
        }
    }

    let spec = construction_spec(s, t)?;
    let graph = Graph::new(2 * r, cycle_edges)?;
    if graph.edge_multiset() != build_circulant(&spec)?.edge_multiset() {
        return Err(Error::Certification(format!("u-renamed graph is not {spec}")));
    }
    Ok(ConstructionMatrix {
        arrays,
        m01,
        mlab,
        row_sums,
        col_sums,
        spec,
        graph,
        labeling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::partite_classes;
    use crate::labeling::color_count;

    #[test]
    fn case1_k2_blocks() {
        let plan = case_plan(CasePlanId::Case(1, 2)).unwrap();
        let blocks: Vec<Vec<usize>> = plan.blocks().iter().map(|b| b.members.clone()).collect();
        assert_eq!(
            blocks,
            vec![
                vec![0, 8],
                vec![2, 10],
                vec![4, 12],
                vec![6, 14],
                vec![1, 5],
                vec![3, 7],
                vec![9, 13],
                vec![11, 15],
            ]
        );
    }

    #[test]
    fn every_case_is_a_partition() {
        for case in 1..=8 {
            for k in 2..=6 {
                let plan = case_plan(CasePlanId::Case(case, k)).unwrap();
                assert_eq!(plan.n(), case_order(case, k));
            }
        }
        assert!(case_plan(CasePlanId::Case(2, 1)).is_ok());
        assert!(case_plan(CasePlanId::Case(1, 1)).is_err());
        assert!(case_plan(CasePlanId::Case(9, 2)).is_err());
    }

    #[test]
    fn case_colors_match_family_formulas() {
        for case in 1..=8 {
            for k in 2..=6 {
                let n = case_order(case, k);
                let (fam, m) = Family::of_order(n);
                assert_eq!(Some(fam.profile(m)), case_colors(case, k), "case {case}, k {k}");
            }
        }
    }

    #[test]
    fn case3_triangle_and_colors() {
        let t = transform_cycle(18, &case_plan(CasePlanId::Case(3, 2)).unwrap()).unwrap();
        assert_eq!(t.colors(), [30, 38, 40].into_iter().collect());
        assert!(partite_classes(&t.graph, 2).is_none());
        assert_eq!(t.graph.regular_degree(), Some(4));
    }

    #[test]
    fn family_plans() {
        for fam in [Family::G, Family::G1, Family::G2, Family::G3] {
            for m in 2..8 {
                let plan = case_plan(CasePlanId::Family(fam, m)).unwrap();
                let t = transform_cycle(fam.order(m), &plan).unwrap();
                let cc = color_count(&t.graph, &t.labeling).unwrap();
                assert_eq!(cc.colors().into_iter().collect::<BTreeSet<_>>(), t.colors());
            }
        }
        let t = transform_cycle(16, &case_plan(CasePlanId::Family(Family::G, 4)).unwrap()).unwrap();
        assert_eq!(t.colors(), [28, 34, 36].into_iter().collect());
    }

    #[test]
    fn wrong_family_block_rejected() {
        let plan = case_plan(CasePlanId::Case(3, 2)).unwrap();
        assert!(transform_cycle(17, &plan).is_err());
        let id = MergePlan::identity(16);
        assert!(matches!(transform_cycle(16, &id), Err(Error::InvalidPlan(_))));
    }

    #[test]
    fn case1_circulants() {
        for k in 2..=6 {
            let cert = verify_case1_circulant(k).unwrap();
            assert_eq!(cert.spec.steps(), &[1, 2 * k - 1]);
        }
    }

    #[test]
    fn arrays_small() {
        let ar = build_even_odd_arrays(2, 0).unwrap();
        assert_eq!(ar.n, 16);
        assert_eq!(ar.a, vec![vec![0, 8], vec![2, 10], vec![4, 12], vec![6, 14]]);
        assert_eq!(ar.b, vec![vec![1, 3, 9, 11], vec![5, 7, 13, 15]]);
        let ar = build_even_odd_arrays(3, 2).unwrap();
        assert_eq!(ar.a[0], vec![0, 16, 64, 80]);
        let col: Vec<usize> = ar.b.iter().map(|r| r[0]).collect();
        assert_eq!(col, vec![1, 9, 33, 41]);
    }

    #[test]
    fn matrix_128() {
        let cm = build_construction_matrix(3, 2).unwrap();
        assert_eq!(cm.spec.to_string(), "C_32(1,7,9,15)");
        assert_eq!(cm.row_sums[0], 456);
        assert!(cm.row_sums[1..].iter().all(|&x| x == 520));
        assert!(cm.col_sums.iter().all(|&x| x == 516));
        assert_eq!(cm.mlab[0][0], Some(1));
        assert_eq!(cm.mlab[0][15], Some(65));
        assert_eq!(cm.mlab[1][0], Some(128));
    }

    #[test]
    fn matrix_16_is_k44() {
        let cm = build_construction_matrix(2, 0).unwrap();
        assert_eq!(cm.spec.to_string(), "C_8(1,3)");
        assert!(cm.m01.iter().flatten().all(|&x| x == 1));
    }
}
