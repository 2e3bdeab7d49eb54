//! One-point unions of cycles, their explicit 2- and 3-colour labelings, and
//! label-preserving transformation of the member cycles.

use std::collections::BTreeMap;
use std::fmt;

use crate::cycle_transform::{
    build_even_odd_arrays, case_for_order, case_plan, plan_from_arrays, CasePlanId,
};
use crate::error::{Error, Result};
use crate::graph::{build_cycle, gcd, one_point_union_with_maps, Graph, MergePlan};
use crate::labeling::EdgeLabeling;

/// `U(a_1, ..., a_r)`, orders kept in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnionSpec {
    orders: Vec<usize>,
}

impl UnionSpec {
    pub fn new(mut orders: Vec<usize>) -> Result<Self> {
        if orders.len() < 2 {
            return Err(Error::OutOfRange(format!(
                "a one-point union needs at least 2 cycles, got {}",
                orders.len()
            )));
        }
        if let Some(&a) = orders.iter().find(|&&a| a < 3) {
            return Err(Error::InvalidOrder(a));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(UnionSpec { orders })
    }

    /// Shape given as `(order, copies)` groups.
    pub fn from_groups(groups: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            groups
                .iter()
                .flat_map(|&(a, c)| std::iter::repeat_n(a, c))
                .collect(),
        )
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn r(&self) -> usize {
        self.orders.len()
    }

    /// Edge count `m`.
    pub fn size(&self) -> usize {
        self.orders.iter().sum()
    }

    /// Edge offsets `s_i`.
    pub fn offsets(&self) -> Vec<usize> {
        self.orders
            .iter()
            .scan(0, |acc, &a| {
                let s = *acc;
                *acc += a;
                Some(s)
            })
            .collect()
    }
}

impl fmt::Display for UnionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|a| a.to_string()).collect();
        write!(f, "U({})", parts.join(","))
    }
}

/// Where a member cycle sits inside the union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEmbedding {
    pub order: usize,
    /// Global id of local vertex `p`; local `0` is the centre.
    pub vertices: Vec<usize>,
    /// Global index of local edge `0`; local edge `p` joins `p` and `p + 1`.
    pub edge_offset: usize,
}

/// A labeled one-point union. The centre is vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledUnion {
    pub spec: UnionSpec,
    pub graph: Graph,
    pub labeling: EdgeLabeling,
    pub cycles: Vec<CycleEmbedding>,
}

impl LabeledUnion {
    pub fn center(&self) -> usize {
        0
    }
}

/// The bare union with its embeddings.
pub fn build_union(spec: &UnionSpec) -> Result<(Graph, Vec<CycleEmbedding>)> {
    let cycles = spec
        .orders()
        .iter()
        .map(|&a| build_cycle(a))
        .collect::<Result<Vec<_>>>()?;
    let (graph, maps) = one_point_union_with_maps(&cycles, &vec![0; cycles.len()])?;
    let embeddings = spec
        .orders()
        .iter()
        .zip(maps)
        .zip(spec.offsets())
        .map(|((&order, vertices), edge_offset)| CycleEmbedding {
            order,
            vertices,
            edge_offset,
        })
        .collect();
    Ok((graph, embeddings))
}

fn label_union(spec: UnionSpec, labels: Vec<usize>) -> Result<LabeledUnion> {
    let (graph, cycles) = build_union(&spec)?;
    let labeling = EdgeLabeling::new(labels)?;
    Ok(LabeledUnion {
        spec,
        graph,
        labeling,
        cycles,
    })
}

/// `len` labels alternating `low + k·step` and `high - k·step`.
fn zigzag(len: usize, low: usize, high: usize, step: usize) -> Vec<usize> {
    (0..len)
        .map(|p| {
            let k = p / 2;
            if p % 2 == 0 {
                low + k * step
            } else {
                high - k * step
            }
        })
        .collect()
}

fn expect_at(seq: &[usize], pos: usize, want: usize, what: &str) -> Result<()> {
    match seq.get(pos) {
        Some(&got) if got == want => Ok(()),
        got => Err(Error::Certification(format!(
            "{what}: position {pos} is {got:?}, expected {want}"
        ))),
    }
}

/// `U((4r-2)^{[r-1]}, 2r-2)` with its 2-colour labeling.
pub fn union_2labeling_family1(r: usize) -> Result<LabeledUnion> {
    if r < 3 {
        return Err(Error::OutOfRange(format!("family 1 needs r >= 3, got {r}")));
    }
    let big = 4 * r - 2;
    let small = 2 * r - 2;
    let sq = 4 * r * r;
    let mut labels = Vec::with_capacity((r - 1) * big + small);
    for i in 1..r {
        let seq = zigzag(big, i, sq - 4 * r + 1 - i, 2 * r - 1);
        let what = format!("copy {i} of C_{big}");
        expect_at(&seq, big - 2, sq - 6 * r + 2 + i, &what)?;
        expect_at(&seq, big - 1, 2 * r - 1 - i, &what)?;
        labels.extend(seq);
    }
    let seq = zigzag(small, 2 * r - 1, sq - 6 * r + 2, 2 * r - 1);
    let what = format!("C_{small}");
    expect_at(&seq, small - 2, 2 * r * r - 3 * r + 1, &what)?;
    expect_at(&seq, small - 1, 2 * r * r - r, &what)?;
    labels.extend(seq);
    let spec = UnionSpec::from_groups(&[(big, r - 1), (small, 1)])?;
    label_union(spec, labels)
}

/// `U((2r)^{[(r-1)/2]}, (2r-2)^{[(r+1)/2]})`, `r` odd, with its 2-colour
/// labeling.
pub fn union_2labeling_family2(r: usize) -> Result<LabeledUnion> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "family 2 needs odd r >= 3, got {r}"
        )));
    }
    let sq = 2 * r * r;
    let mut labels = Vec::new();
    for i in 1..=(r - 1) / 2 {
        let seq = zigzag(2 * r, i, sq - r - i, 2 * r);
        let what = format!("copy {i} of C_{}", 2 * r);
        expect_at(&seq, r - 1, r * r - r + i, &what)?;
        expect_at(&seq, r, r * r - i, &what)?;
        expect_at(&seq, 2 * r - 2, sq - 2 * r + i, &what)?;
        expect_at(&seq, 2 * r - 1, r - i, &what)?;
        labels.extend(seq);
    }
    for j in 0..=(r - 1) / 2 {
        let seq = zigzag(2 * r - 2, r + j, sq - 2 * r - j, 2 * r);
        let what = format!("copy {j} of C_{}", 2 * r - 2);
        expect_at(&seq, r - 2, r * r + r - j, &what)?;
        expect_at(&seq, r - 1, r * r + j, &what)?;
        expect_at(&seq, 2 * r - 4, sq - 3 * r + j, &what)?;
        expect_at(&seq, 2 * r - 3, 2 * r - j, &what)?;
        labels.extend(seq);
    }
    let spec = UnionSpec::from_groups(&[(2 * r, (r - 1) / 2), (2 * r - 2, r.div_ceil(2))])?;
    label_union(spec, labels)
}

/// `f(e_i) = i/2` for even `i`, `m - (i-1)/2` for odd `i` (1-based), every
/// order at least 16.
pub fn union_3labeling(spec: &UnionSpec) -> Result<LabeledUnion> {
    if let Some(&a) = spec.orders().iter().find(|&&a| a < 16) {
        return Err(Error::OutOfRange(format!(
            "the 3-labeling needs every order >= 16, got {a}"
        )));
    }
    let m = spec.size();
    let labels = (1..=m)
        .map(|i| if i % 2 == 0 { i / 2 } else { m - (i - 1) / 2 })
        .collect();
    label_union(spec.clone(), labels)
}

/// What to do with one member cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    Keep,
    /// Merge along an explicit plan on the cycle's local vertices.
    Merge(MergePlan),
    /// The case plan matching the cycle's order.
    Case,
    /// The even/odd array plan for `n = 2^{2s-1}(t+2)`.
    Matrix { s: u32, t: usize },
    /// Lay this cycle onto cycle `onto` as `Γ_step`: local `p` here becomes
    /// local `p·step` there.
    Rewire { onto: usize, step: usize },
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Directive::Keep => f.write_str("keep"),
            Directive::Merge(_) => f.write_str("merge"),
            Directive::Case => f.write_str("case"),
            Directive::Matrix { s, t } => write!(f, "matrix:{s}:{t}"),
            Directive::Rewire { onto, step } => write!(f, "rewire:{onto}:{step}"),
        }
    }
}

impl std::str::FromStr for Directive {
    type Err = Error;

    /// `keep`, `case`, `matrix:S:T` or `rewire:ONTO:STEP`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDirective(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["keep"] => Ok(Directive::Keep),
            ["case"] => Ok(Directive::Case),
            ["matrix", a, b] => Ok(Directive::Matrix {
                s: a.parse().map_err(|_| bad())?,
                t: num(b)?,
            }),
            ["rewire", a, b] => Ok(Directive::Rewire {
                onto: num(a)?,
                step: num(b)?,
            }),
            _ => Err(bad()),
        }
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            x = std::mem::replace(&mut self.parent[x], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn plan_for(d: &Directive, order: usize, index: usize) -> Result<Option<MergePlan>> {
    match d {
        Directive::Keep | Directive::Rewire { .. } => Ok(None),
        Directive::Merge(plan) => {
            if plan.n() != order {
                return Err(Error::InvalidDirective(format!(
                    "cycle {index} has order {order}, plan is for {}",
                    plan.n()
                )));
            }
            Ok(Some(plan.clone()))
        }
        Directive::Case => {
            let (case, k) = case_for_order(order).ok_or_else(|| {
                Error::InvalidDirective(format!("no case plan for C_{order} (cycle {index})"))
            })?;
            case_plan(CasePlanId::Case(case, k)).map(Some)
        }
        Directive::Matrix { s, t } => {
            let arrays = build_even_odd_arrays(*s, *t)?;
            if arrays.n != order {
                return Err(Error::InvalidDirective(format!(
                    "matrix ({s}, {t}) needs C_{}, cycle {index} is C_{order}",
                    arrays.n
                )));
            }
            plan_from_arrays(&arrays).map(Some)
        }
    }
}

/// Applies one directive per member cycle, then identifies everything that
/// was merged. Labels and edge order are unchanged; the centre stays vertex
/// 0 and every merged vertex sums its originals.
pub fn transform_union(u: &LabeledUnion, directives: &[Directive]) -> Result<(Graph, EdgeLabeling)> {
    if directives.len() != u.cycles.len() {
        return Err(Error::InvalidDirective(format!(
            "{} directives for {} cycles",
            directives.len(),
            u.cycles.len()
        )));
    }
    let n = u.graph.vertex_count();
    let mut dsu = Dsu::new(n);
    for (c, (d, emb)) in directives.iter().zip(&u.cycles).enumerate() {
        if let Directive::Rewire { onto, step } = *d {
            let target = u.cycles.get(onto).ok_or_else(|| {
                Error::InvalidDirective(format!("cycle {c}: no cycle {onto} to rewire onto"))
            })?;
            let order = emb.order;
            if onto == c || target.order != order {
                return Err(Error::InvalidDirective(format!(
                    "cycle {c} (C_{order}) cannot be laid onto cycle {onto} (C_{})",
                    target.order
                )));
            }
            if !matches!(directives[onto], Directive::Keep) {
                return Err(Error::InvalidDirective(format!(
                    "rewire target {onto} must be kept"
                )));
            }
            if step <= 1 || 2 * step >= order || gcd(step, order) != 1 {
                return Err(Error::InvalidDirective(format!(
                    "step {step} is not a generator in (1, {}) for C_{order}",
                    order.div_ceil(2)
                )));
            }
            for p in 0..order {
                dsu.union(emb.vertices[p], target.vertices[p * step % order]);
            }
        } else if let Some(plan) = plan_for(d, emb.order, c)? {
            for block in plan.blocks() {
                let first = emb.vertices[block.members[0]];
                for &v in &block.members[1..] {
                    dsu.union(first, emb.vertices[v]);
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let root = dsu.find(v);
        classes.entry(root).or_default().push(v);
    }
    // Roots are class minima, so the centre keeps id 0.
    let mut new_id = vec![0; n];
    let mut provenance = Vec::with_capacity(classes.len());
    for (id, members) in classes.values().enumerate() {
        for &v in members {
            new_id[v] = id;
        }
        let mut ids: Vec<usize> = members
            .iter()
            .flat_map(|&v| u.graph.provenance(v).iter().copied())
            .collect();
        ids.sort_unstable();
        provenance.push(ids);
    }
    let mut edges = Vec::with_capacity(u.graph.edge_count());
    for &(a, b) in u.graph.edges() {
        let (x, y) = (new_id[a], new_id[b]);
        if x == y {
            return Err(Error::MergeLoop {
                block: classes.values().nth(x).cloned().unwrap_or_default(),
                u: a,
                v: b,
            });
        }
        edges.push((x, y));
    }
    let graph = Graph::with_provenance(provenance.len(), edges, provenance)?;
    Ok((graph, u.labeling.clone()))
}

/// Smallest `a` with `1 < a < n/2` and `gcd(a, n) = 1`.
pub fn smallest_step(n: usize) -> Option<usize> {
    (2..n.div_ceil(2)).find(|&a| 2 * a < n && gcd(a, n) == 1)
}

/// Pairs consecutive equal-order cycles by rewiring the second onto the first
/// with `step`. A trailing unpaired cycle of an order gets `Case`.
pub fn pairing_directives(spec: &UnionSpec, step: impl Fn(usize) -> Option<usize>) -> Result<Vec<Directive>> {
    let orders = spec.orders();
    let mut out = vec![Directive::Keep; orders.len()];
    let mut c = 0;
    while c < orders.len() {
        let run = orders[c..].iter().take_while(|&&a| a == orders[c]).count();
        let pairs = run / 2;
        for p in 0..pairs {
            let a = step(orders[c]).ok_or_else(|| {
                Error::InvalidDirective(format!("no rewiring step for C_{}", orders[c]))
            })?;
            out[c + 2 * p + 1] = Directive::Rewire {
                onto: c + 2 * p,
                step: a,
            };
        }
        if run % 2 == 1 {
            out[c + run - 1] = Directive::Case;
        }
        c += run;
    }
    Ok(out)
}

/// `Case` for every cycle.
pub fn case_directives(spec: &UnionSpec) -> Vec<Directive> {
    vec![Directive::Case; spec.r()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{color_count, vertex_sums};

    #[test]
    fn spec_sorted_and_offsets() {
        let s = UnionSpec::new(vec![16, 20]).unwrap();
        assert_eq!(s.orders(), &[20, 16]);
        assert_eq!(s.offsets(), vec![0, 20]);
        assert_eq!(s.to_string(), "U(20,16)");
        assert!(UnionSpec::new(vec![5]).is_err());
    }

    #[test]
    fn zigzag_matches_sequence() {
        // Family 1, r = 3, copy 1: 1, 24, 6, 19 ... closing 20, 4
        let seq = zigzag(10, 1, 24, 5);
        assert_eq!(seq, vec![1, 24, 6, 19, 11, 14, 16, 9, 21, 4]);
    }

    #[test]
    fn family1_r9() {
        let u = union_2labeling_family1(9).unwrap();
        assert_eq!(u.spec.size(), 4 * 81 - 36);
        let cc = color_count(&u.graph, &u.labeling).unwrap();
        assert_eq!(cc.colors(), vec![289, 306]);
        assert_eq!(vertex_sums(&u.graph, &u.labeling).unwrap()[0], 306);
        assert_eq!(u.graph.degree(0), 18);
    }

    #[test]
    fn family2_small() {
        for r in [3, 5, 7, 9] {
            let u = union_2labeling_family2(r).unwrap();
            let cc = color_count(&u.graph, &u.labeling).unwrap();
            assert_eq!(cc.colors(), vec![2 * r * r - r, 2 * r * r + r]);
        }
        assert!(union_2labeling_family2(4).is_err());
    }

    #[test]
    fn three_labeling_u16_16() {
        let u = union_3labeling(&UnionSpec::new(vec![16, 16]).unwrap()).unwrap();
        let cc = color_count(&u.graph, &u.labeling).unwrap();
        assert_eq!(cc.count(), 3);
        assert!(cc.colors()[..2] == [32, 33]);
        assert!(cc.colors()[2] >= 80);
        assert!(union_3labeling(&UnionSpec::new(vec![15, 16]).unwrap()).is_err());
    }

    #[test]
    fn identity_directives() {
        let u = union_2labeling_family1(3).unwrap();
        let (g, f) = transform_union(&u, &vec![Directive::Keep; u.cycles.len()]).unwrap();
        assert_eq!(g, u.graph);
        assert_eq!(f, u.labeling);
    }

    #[test]
    fn family1_transform_r9() {
        let u = union_2labeling_family1(9).unwrap();
        let dirs = pairing_directives(&u.spec, smallest_step).unwrap();
        assert_eq!(dirs[1], Directive::Rewire { onto: 0, step: 3 });
        assert_eq!(dirs[8], Directive::Case);
        let (g, f) = transform_union(&u, &dirs).unwrap();
        let cc = color_count(&g, &f).unwrap();
        assert_eq!(cc.colors(), vec![578, 612]);
        assert_eq!(vertex_sums(&g, &f).unwrap()[0], 612);
    }

    #[test]
    fn directive_parsing() {
        assert_eq!("keep".parse::<Directive>().unwrap(), Directive::Keep);
        assert_eq!(
            "rewire:0:3".parse::<Directive>().unwrap(),
            Directive::Rewire { onto: 0, step: 3 }
        );
        assert_eq!(
            "matrix:2:0".parse::<Directive>().unwrap(),
            Directive::Matrix { s: 2, t: 0 }
        );
        assert!("bogus".parse::<Directive>().is_err());
    }

    #[test]
    fn bad_rewires() {
        let u = union_2labeling_family1(3).unwrap();
        // orders 10, 10, 4
        let step2 = vec![Directive::Keep, Directive::Rewire { onto: 0, step: 2 }, Directive::Keep];
        assert!(transform_union(&u, &step2).is_err());
        let wrong = vec![Directive::Keep, Directive::Keep, Directive::Rewire { onto: 0, step: 3 }];
        assert!(transform_union(&u, &wrong).is_err());
    }
}
