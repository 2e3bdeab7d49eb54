//! Edge labelings, induced vertex sums and the local antimagic checks.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{delete_edge, partite_classes, Graph};

/// A bijection from edge positions onto `1..=q`; `labels[i]` labels edge `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabelsRepr", into = "LabelsRepr")]
pub struct EdgeLabeling {
    labels: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct LabelsRepr {
    labels: Vec<usize>,
}

impl TryFrom<LabelsRepr> for EdgeLabeling {
    type Error = Error;
    fn try_from(r: LabelsRepr) -> Result<Self> {
        EdgeLabeling::new(r.labels)
    }
}

impl From<EdgeLabeling> for LabelsRepr {
    fn from(f: EdgeLabeling) -> Self {
        LabelsRepr { labels: f.labels }
    }
}

impl EdgeLabeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let q = labels.len();
        let mut seen = vec![false; q + 1];
        for &l in &labels {
            if l == 0 || l > q {
                return Err(Error::InvalidLabeling(format!("label {l} outside 1..={q}")));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidLabeling(format!("label {l} used twice")));
            }
        }
        Ok(EdgeLabeling { labels })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn q(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    /// Position of the edge carrying `label`.
    pub fn edge_with_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// `q + 1 - f`, positionwise.
    pub fn complement(&self) -> EdgeLabeling {
        let q = self.q();
        EdgeLabeling {
            labels: self.labels.iter().map(|&l| q + 1 - l).collect(),
        }
    }

    /// Drops edge `e` and closes the gap: labels above `f(e)` move down by one.
    /// Matches [`crate::graph::delete_edge`]'s compaction.
    pub fn remove_edge(&self, e: usize) -> Result<EdgeLabeling> {
        if e >= self.q() {
            return Err(Error::EdgeOutOfRange {
                index: e,
                count: self.q(),
            });
        }
        let gone = self.labels[e];
        let labels = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &l)| if l > gone { l - 1 } else { l })
            .collect();
        Ok(EdgeLabeling { labels })
    }
}

/// Per-vertex sums `f^+(v)`, the set of distinct sums and every adjacent
/// pair that shares a sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedColoring {
    pub sums: Vec<usize>,
    pub colors: BTreeSet<usize>,
    pub conflicts: Vec<(usize, usize)>,
}

fn check_sizes(g: &Graph, f: &EdgeLabeling) -> Result<()> {
    if g.edge_count() != f.q() {
        return Err(Error::InvalidLabeling(format!(
            "{} labels for {} edges",
            f.q(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// Sums of incident labels; parallel edges each contribute.
pub fn vertex_sums(g: &Graph, f: &EdgeLabeling) -> Result<Vec<usize>> {
    check_sizes(g, f)?;
    let mut sums = vec![0; g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        sums[u] += f.label(i);
        sums[v] += f.label(i);
    }
    Ok(sums)
}

pub fn induced_coloring(g: &Graph, f: &EdgeLabeling) -> Result<InducedColoring> {
    let sums = vertex_sums(g, f)?;
    let colors = sums.iter().copied().collect();
    let conflicts: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| sums[u] == sums[v])
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    Ok(InducedColoring {
        sums,
        colors,
        conflicts: conflicts.into_iter().collect(),
    })
}

/// First adjacent pair with equal sums, if any.
pub fn local_antimagic_conflict(g: &Graph, f: &EdgeLabeling) -> Result<Option<(usize, usize)>> {
    Ok(induced_coloring(g, f)?.conflicts.first().copied())
}

pub fn is_local_antimagic(g: &Graph, f: &EdgeLabeling) -> Result<bool> {
    Ok(local_antimagic_conflict(g, f)?.is_none())
}

/// Colour number `c(f)` and the vertex partition by sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClasses {
    pub classes: BTreeMap<usize, Vec<usize>>,
}

impl ColorClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.classes.keys().copied().collect()
    }

    pub fn class_sizes(&self) -> Vec<(usize, usize)> {
        self.classes.iter().map(|(&s, vs)| (s, vs.len())).collect()
    }
}

/// Requires a local antimagic labeling.
pub fn color_count(g: &Graph, f: &EdgeLabeling) -> Result<ColorClasses> {
    let induced = induced_coloring(g, f)?;
    if let Some(&(u, v)) = induced.conflicts.first() {
        return Err(Error::NotLocalAntimagic(u, v));
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &s) in induced.sums.iter().enumerate() {
        classes.entry(s).or_default().push(v);
    }
    Ok(ColorClasses { classes })
}

pub fn complement_labeling(g: &Graph, f: &EdgeLabeling) -> Result<EdgeLabeling> {
    check_sizes(g, f)?;
    Ok(f.complement())
}

/// Sufficient condition for `q + 1 - f` to stay local antimagic with the same
/// colour number on a non-regular graph: equal sums imply equal degrees, and
/// unequal sums never differ by exactly `(q + 1)(deg x - deg y)`.
pub fn check_nonreg_conditions(g: &Graph, f: &EdgeLabeling) -> Result<bool> {
    let sums = vertex_sums(g, f)?;
    let q1 = f.q() as i64 + 1;
    // Only distinct (sum, degree) pairs matter.
    let profile: BTreeSet<(usize, usize)> = (0..g.vertex_count())
        .map(|v| (sums[v], g.degree(v)))
        .collect();
    let profile: Vec<(i64, i64)> = profile.into_iter().map(|(s, d)| (s as i64, d as i64)).collect();
    for (i, &(sx, dx)) in profile.iter().enumerate() {
        for &(sy, dy) in &profile[i + 1..] {
            if sx == sy && dx != dy {
                return Ok(false);
            }
            if sx != sy && q1 * (dx - dy) == sx - sy {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Edge-deletion test: `f(e) = 1`, every colour class has a single degree
/// `d_k`, and the shifted values `f^+(x) - d_k` stay distinct across classes.
/// When it holds, `f - 1` on `G - e` is local antimagic with at most as many
/// colours as `f`.
pub fn check_edge_deletion_lemma(g: &Graph, f: &EdgeLabeling, e: usize) -> Result<bool> {
    if e >= g.edge_count() {
        return Err(Error::EdgeOutOfRange {
            index: e,
            count: g.edge_count(),
        });
    }
    if f.label(e) != 1 {
        return Ok(false);
    }
    let classes = match color_count(g, f) {
        Ok(c) => c,
        Err(Error::NotLocalAntimagic(..)) => return Ok(false),
        Err(err) => return Err(err),
    };
    let mut shifted = BTreeSet::new();
    for (&sum, members) in &classes.classes {
        let d = g.degree(members[0]);
        if members.iter().any(|&v| g.degree(v) != d) {
            return Ok(false);
        }
        if sum < d || !shifted.insert(sum - d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G - e` for the edge labelled `label` with its induced labeling. Label 1
/// is deleted directly; label `q` is first turned into 1 by complementing,
/// which needs a regular graph or [`check_nonreg_conditions`]. Either way the
/// edge-deletion test must pass.
pub fn delete_extreme_edge(g: &Graph, f: &EdgeLabeling, label: usize) -> Result<(Graph, EdgeLabeling)> {
    check_sizes(g, f)?;
    let base = if label == 1 {
        f.clone()
    } else if label == f.q() {
        if g.regular_degree().is_none() && !check_nonreg_conditions(g, f)? {
            return Err(Error::NotApplicable(
                "complement not guaranteed on this non-regular graph".into(),
            ));
        }
        f.complement()
    } else {
        return Err(Error::NotApplicable(format!(
            "label {label} is neither 1 nor {}",
            f.q()
        )));
    };
    let e = base.edge_with_label(1).expect("bijection contains 1");
    if !check_edge_deletion_lemma(g, &base, e)? {
        return Err(Error::NotApplicable(format!(
            "edge-deletion test fails for edge {e}"
        )));
    }
    Ok((delete_edge(g, e)?, base.remove_edge(e)?))
}

/// Lemma-style identity for a 2-colour labeling with colours `x < y` on `X`
/// and `Y` vertices: `xX = yY = q(q+1)/2`, and the two classes form a
/// bipartition with `X > Y`. Errors unless `f` is local antimagic with
/// exactly two colours.
pub fn check_two_color_identity(g: &Graph, f: &EdgeLabeling) -> Result<bool> {
    let classes = color_count(g, f)?;
    if classes.count() != 2 {
        return Err(Error::NotApplicable(format!(
            "{} colours, expected 2",
            classes.count()
        )));
    }
    let half = f.q() * (f.q() + 1) / 2;
    let sizes = classes.class_sizes();
    let (x, nx) = sizes[0];
    let (y, ny) = sizes[1];
    // Local antimagic already makes each class independent.
    Ok(x * nx == half && y * ny == half && nx > ny)
}

/// Why a 2-colour labeling is or is not ruled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoColorOutcome {
    /// No necessary condition fails; a 2-colour labeling may or may not exist.
    Possible,
    NotBipartite,
    EqualParts,
    Indivisible,
    TwoPendants,
    EvenSizeWithPendant,
}

/// Necessary conditions for `χ_la = 2`, reported field by field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColorVerdict {
    /// Part sizes `(|V_1|, |V_2|)` when bipartite, larger part first.
    pub parts: Option<(usize, usize)>,
    pub q: usize,
    pub parts_unequal: bool,
    /// `C(q+1, 2)` divisible by `|V_1|` and by `|V_2|`.
    pub divisible: (bool, bool),
    pub pendant_count: usize,
    pub even_size_with_pendant: bool,
    pub outcome: TwoColorOutcome,
}

impl TwoColorVerdict {
    /// Bipartite with unequal parts that both divide `C(q+1, 2)`.
    pub fn part_conditions_hold(&self) -> bool {
        self.parts.is_some() && self.parts_unequal && self.divisible.0 && self.divisible.1
    }

    pub fn forces_at_least_three(&self) -> bool {
        self.outcome != TwoColorOutcome::Possible
    }
}

pub fn check_two_color_necessary(g: &Graph) -> TwoColorVerdict {
    let q = g.edge_count();
    let total = q * (q + 1) / 2;
    let pendant_count = g.pendants().len();
    let parts = partite_classes(g, 2).map(|classes| {
        let (a, b) = (classes[0].len(), classes[1].len());
        (a.max(b), a.min(b))
    });
    let parts_unequal = parts.is_some_and(|(a, b)| a != b);
    let divides = |p: usize| p > 0 && total.is_multiple_of(p);
    let divisible = parts.map_or((false, false), |(a, b)| (divides(a), divides(b)));
    let even_size_with_pendant = parts.is_some() && q.is_multiple_of(2) && pendant_count == 1;
    let outcome = if parts.is_none() {
        TwoColorOutcome::NotBipartite
    } else if !parts_unequal {
        TwoColorOutcome::EqualParts
    } else if !(divisible.0 && divisible.1) {
        TwoColorOutcome::Indivisible
    } else if pendant_count >= 2 {
        TwoColorOutcome::TwoPendants
    } else if even_size_with_pendant {
        TwoColorOutcome::EvenSizeWithPendant
    } else {
        TwoColorOutcome::Possible
    };
    TwoColorVerdict {
        parts,
        q,
        parts_unequal,
        divisible,
        pendant_count,
        even_size_with_pendant,
        outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, delete_edge};

    fn lab(v: &[usize]) -> EdgeLabeling {
        EdgeLabeling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bijection_checked() {
        assert!(EdgeLabeling::new(vec![1, 1]).is_err());
        assert!(EdgeLabeling::new(vec![0, 1]).is_err());
        assert!(EdgeLabeling::new(vec![3, 1]).is_err());
        assert!(EdgeLabeling::new(vec![]).is_ok());
    }

    #[test]
    fn path_sums() {
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let ic = induced_coloring(&p3, &lab(&[1, 2])).unwrap();
        assert_eq!(ic.sums, vec![1, 3, 2]);
        assert!(ic.conflicts.is_empty());
    }

    #[test]
    fn c4_c_labeling_sums() {
        let c4 = build_cycle(4).unwrap();
        let f = lab(&[1, 4, 2, 3]);
        let ic = induced_coloring(&c4, &f).unwrap();
        assert_eq!(ic.sums, vec![4, 5, 6, 5]);
        assert!(is_local_antimagic(&c4, &f).unwrap());
        assert_eq!(color_count(&c4, &f).unwrap().count(), 3);
        let g = f.complement();
        assert_eq!(g.labels(), &[4, 1, 3, 2]);
        assert_eq!(vertex_sums(&c4, &g).unwrap(), vec![6, 5, 4, 5]);
        assert_eq!(g.complement(), f);
    }

    #[test]
    fn triangle_three_colors() {
        let c3 = build_cycle(3).unwrap();
        let cc = color_count(&c3, &lab(&[1, 3, 2])).unwrap();
        assert_eq!(cc.colors(), vec![3, 4, 5]);
    }

    #[test]
    fn conflicts_reported() {
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let f = lab(&[3, 1, 2]);
        assert_eq!(vertex_sums(&p4, &f).unwrap(), vec![3, 4, 3, 2]);
        assert!(is_local_antimagic(&p4, &f).unwrap());
        let k2 = Graph::new(2, vec![(0, 1)]).unwrap();
        let f = lab(&[1]);
        assert_eq!(local_antimagic_conflict(&k2, &f).unwrap(), Some((0, 1)));
        assert_eq!(color_count(&k2, &f), Err(Error::NotLocalAntimagic(0, 1)));
    }

    #[test]
    fn size_mismatch() {
        let c3 = build_cycle(3).unwrap();
        assert!(induced_coloring(&c3, &lab(&[1, 2])).is_err());
    }

    #[test]
    fn regular_graphs_pass_nonreg_check() {
        let c4 = build_cycle(4).unwrap();
        assert!(check_nonreg_conditions(&c4, &lab(&[1, 4, 2, 3])).unwrap());
    }

    #[test]
    fn remove_edge_compacts() {
        let f = lab(&[3, 1, 4, 2]);
        assert_eq!(f.remove_edge(1).unwrap().labels(), &[2, 3, 1]);
        assert_eq!(f.remove_edge(2).unwrap().labels(), &[3, 1, 2]);
    }

    #[test]
    fn edge_deletion_on_cycle() {
        // C_6 with the C-labeling: sums 5 at v0, 7 odd, 8 even, degree 2 throughout.
        let c6 = build_cycle(6).unwrap();
        let f = lab(&[1, 6, 2, 5, 3, 4]);
        assert_eq!(color_count(&c6, &f).unwrap().colors(), vec![5, 7, 8]);
        assert!(check_edge_deletion_lemma(&c6, &f, 0).unwrap());
        assert!(!check_edge_deletion_lemma(&c6, &f, 1).unwrap());
        let h = delete_edge(&c6, 0).unwrap();
        let f2 = f.remove_edge(0).unwrap();
        assert!(is_local_antimagic(&h, &f2).unwrap());
        assert!(color_count(&h, &f2).unwrap().count() <= 3);
    }

    #[test]
    fn two_color_verdicts() {
        // Counterexample: P_7 plus chords u1u4 and u2u5 (0-based 0-3, 1-4).
        let g = Graph::new(
            7,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 3), (1, 4)],
        )
        .unwrap();
        let v = check_two_color_necessary(&g);
        assert_eq!(v.parts, Some((4, 3)));
        assert!(v.part_conditions_hold());
        assert_eq!(v.pendant_count, 1);
        assert_eq!(v.outcome, TwoColorOutcome::EvenSizeWithPendant);

        let c4 = build_cycle(4).unwrap();
        assert_eq!(check_two_color_necessary(&c4).outcome, TwoColorOutcome::EqualParts);
        let c5 = build_cycle(5).unwrap();
        assert_eq!(check_two_color_necessary(&c5).outcome, TwoColorOutcome::NotBipartite);
        // Star K_{1,3}: three pendants.
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let v = check_two_color_necessary(&star);
        assert_eq!(v.parts, Some((3, 1)));
        assert!(v.forces_at_least_three());
    }
}
