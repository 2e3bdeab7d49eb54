//! The claims table: every headline result rebuilt and checked end to end.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::circulant::{
    c_labeling, certify_multiplier, circulant_closed_forms, circulant_labeling, circulant_spectrum,
    labeling_matrix_view, spectra_equal,
};
use crate::cycle_transform::{
    build_construction_matrix, case_colors, case_order, case_plan, transform_cycle,
    verify_case1_circulant, CasePlanId,
};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, build_cycle, chromatic_number, gcd, CirculantSpec, Graph};
use crate::labeling::{
    check_nonreg_conditions, check_two_color_identity, check_two_color_necessary, color_count,
    delete_extreme_edge, is_local_antimagic, EdgeLabeling, TwoColorOutcome,
};
use crate::oracle::{exact_chi_la, feasible_with_colors, SearchBudget};
use crate::union::{
    case_directives, pairing_directives, smallest_step, transform_union, union_2labeling_family1,
    union_2labeling_family2, union_3labeling, UnionSpec,
};

const GOLDEN_C16_1_3: &str = include_str!("../tests/data/m_g_c16_1_3.txt");
const GOLDEN_C16_1_7: &str = include_str!("../tests/data/m_g_c16_1_7.txt");

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub budget: SearchBudget,
    /// Swap two labels of every C-labeling before checking, to show that the
    /// table notices a broken formula.
    pub tamper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub id: u8,
    pub title: &'static str,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, detail) = match &self.outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => ("FAIL", d),
            Outcome::Skipped(d) => ("SKIP", d),
        };
        write!(
            f,
            "{:>2}  {tag}  {:<34} {:>8.2?}  {detail}",
            self.id, self.title, self.elapsed
        )
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub rows: Vec<ClaimResult>,
}

impl Table {
    pub fn passed(&self) -> bool {
        !self.rows.iter().any(|r| r.outcome.is_fail())
    }

    pub fn first_failure(&self) -> Option<&ClaimResult> {
        self.rows.iter().find(|r| r.outcome.is_fail())
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

type Check = fn(&Options) -> Result<String>;

pub const CLAIMS: [(u8, &str, Check); 10] = [
    (1, "C-labeling of C_m, m < 200", claim_c_labeling),
    (2, "circulant labeling, even m <= 60", claim_circulant),
    (3, "C_16 label matrices", claim_matrices),
    (4, "C_16 spectra and multipliers", claim_spectra),
    (5, "Cases 1-8, k = 2..6", claim_cases),
    (6, "G_4k is C_4k(1, 2k-1)", claim_case1_circulant),
    (7, "even/odd array construction", claim_construction),
    (8, "one-point unions of cycles", claim_unions),
    (9, "exact oracle", claim_oracle),
    (10, "complement lemmas", claim_lemmas),
];

/// Runs every claim, in parallel, reporting in table order.
pub fn reproduce_all(opts: &Options) -> Table {
    let rows = CLAIMS
        .par_iter()
        .map(|&(id, title, check)| {
            let start = Instant::now();
            let outcome = match check(opts) {
                Ok(d) => Outcome::Pass(d),
                Err(Error::BudgetExceeded(why)) => Outcome::Skipped(why),
                Err(e) => Outcome::Fail(e.to_string()),
            };
            ClaimResult {
                id,
                title,
                outcome,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    Table { rows }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Certification(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn cycle_labeling(m: usize, opts: &Options) -> Result<(Graph, EdgeLabeling)> {
    let (g, f) = c_labeling(m)?;
    if !opts.tamper {
        return Ok((g, f));
    }
    let mut labels = f.labels().to_vec();
    labels.swap(0, 1);
    Ok((g, EdgeLabeling::new(labels)?))
}

fn colors_of(g: &Graph, f: &EdgeLabeling) -> Result<BTreeSet<usize>> {
    Ok(color_count(g, f)?.colors().into_iter().collect())
}

fn claim_c_labeling(opts: &Options) -> Result<String> {
    for m in 3..200 {
        let (g, f) = cycle_labeling(m, opts)?;
        let want: BTreeSet<usize> = [m / 2 + 2, m + 1, m + 2].into();
        let got = colors_of(&g, &f)?;
        ensure(got == want, || format!("C_{m}: colours {got:?}, expected {want:?}"))?;
    }
    Ok("m = 3..199".into())
}

/// Step sets `{1} ∪ S'` with `|S'| <= 2`, odd steps coprime to `m`, below `m/2`.
pub fn circulant_step_sets(m: usize) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (3..m / 2).step_by(2).filter(|&a| gcd(a, m) == 1).collect();
    let mut sets = vec![vec![1]];
    for (i, &a) in pool.iter().enumerate() {
        sets.push(vec![1, a]);
        for &b in &pool[i + 1..] {
            sets.push(vec![1, a, b]);
        }
    }
    sets
}

fn claim_circulant(_: &Options) -> Result<String> {
    let mut count = 0;
    for m in (4..=60).step_by(2) {
        for steps in circulant_step_sets(m) {
            let spec = CirculantSpec::new(m, steps)?;
            let (g, f) = circulant_labeling(&spec)?;
            let (c0, c1, c2) = circulant_closed_forms(&spec);
            let got = colors_of(&g, &f)?;
            let want: BTreeSet<usize> = [c0, c1, c2].into();
            ensure(got == want && got.len() == 3, || {
                format!("{spec}: colours {got:?}, expected {want:?}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} circulants"))
}

fn claim_matrices(_: &Options) -> Result<String> {
    for (steps, golden) in [([1, 3], GOLDEN_C16_1_3), ([1, 7], GOLDEN_C16_1_7)] {
        let spec = CirculantSpec::new(16, steps.to_vec())?;
        let (g, f) = circulant_labeling(&spec)?;
        let view = labeling_matrix_view(&g, &f)?;
        let rendered = view.render();
        ensure(rendered.trim_end() == golden.trim_end(), || {
            format!("{spec} matrix differs from the transcribed table")
        })?;
        let sums: BTreeSet<usize> = view.row_sums.iter().copied().collect();
        ensure(sums == [52, 66, 68].into(), || format!("{spec} sums {sums:?}"))?;
    }
    Ok("C_16(1,3), C_16(1,7) cell for cell".into())
}

fn claim_spectra(_: &Options) -> Result<String> {
    let a = CirculantSpec::new(16, vec![1, 3])?;
    let b = CirculantSpec::new(16, vec![1, 7])?;
    let (sa, sb) = (circulant_spectrum(&a), circulant_spectrum(&b));
    ensure(!spectra_equal(&sa, &sb, 1e-9), || "spectra coincide".into())?;
    for s in [&sa, &sb] {
        ensure((s[0] - 4.0).abs() < 1e-9 && (s[8] + 4.0).abs() < 1e-9, || {
            format!("λ_0 = {}, λ_8 = {}", s[0], s[8])
        })?;
    }
    let maps = [
        (vec![1, 3], 11, vec![1, 5]),
        (vec![1, 3, 5], 3, vec![1, 3, 7]),
        (vec![1, 3, 5], 5, vec![1, 5, 7]),
    ];
    for (from, b, to) in maps {
        let cert = certify_multiplier(&CirculantSpec::new(16, from)?, b)?;
        ensure(cert.to.steps() == to.as_slice(), || {
            format!("i -> {b}i lands on {}", cert.to)
        })?;
    }
    Ok("distinct spectra, maps 11i, 3i, 5i".into())
}

/// Degree profile and chromatic number each case must have.
pub fn case_shape(case: u8) -> (Option<usize>, usize) {
    match case {
        1 | 2 => (None, 2),
        3 | 4 => (None, 3),
        5 | 6 => (Some(2), 3),
        _ => (Some(6), 3),
    }
}

fn claim_cases(_: &Options) -> Result<String> {
    for case in 1..=8u8 {
        for k in 2..=6 {
            let n = case_order(case, k);
            let t = transform_cycle(n, &case_plan(CasePlanId::Case(case, k))?)?;
            let g = &t.graph;
            ensure(t.labeling.q() == n && g.edge_count() == n, || {
                format!("Case {case}, k = {k}: labels not conserved")
            })?;
            let (odd_degree, chi) = case_shape(case);
            let degrees = g.degrees();
            let off: Vec<usize> = degrees.iter().copied().filter(|&d| d != 4).collect();
            ensure(off == odd_degree.into_iter().collect::<Vec<_>>(), || {
                format!("Case {case}, k = {k}: degrees {off:?} besides 4")
            })?;
            ensure(chromatic_number(g) == chi, || {
                format!("Case {case}, k = {k}: not {chi}-chromatic")
            })?;
            let want = case_colors(case, k).expect("case in range").colors();
            let got = colors_of(g, &t.labeling)?;
            ensure(got == want, || {
                format!("Case {case}, k = {k}: colours {got:?}, expected {want:?}")
            })?;
            for label in [1, n] {
                let (h, f) = delete_extreme_edge(g, &t.labeling, label)?;
                let c = color_count(&h, &f)?.count();
                ensure(c == 3, || {
                    format!("Case {case}, k = {k}, minus label {label}: {c} colours")
                })?;
            }
        }
    }
    Ok("40 graphs and 80 edge deletions".into())
}

fn k44() -> Result<Graph> {
    Graph::new(
        8,
        (0..4).flat_map(|i| (4..8).map(move |j| (i, j))).collect(),
    )
}

fn claim_case1_circulant(_: &Options) -> Result<String> {
    for k in 2..=6 {
        let cert = verify_case1_circulant(k)?;
        let target = crate::graph::build_circulant(&cert.spec)?;
        ensure(are_isomorphic(&cert.graph, &target).is_some(), || {
            format!("G_{} not isomorphic to {}", 4 * k, cert.spec)
        })?;
        if k == 2 {
            ensure(are_isomorphic(&cert.graph, &k44()?).is_some(), || {
                "G_8 is not K_4,4".into()
            })?;
        }
    }
    Ok("k = 2..6, K_4,4 at k = 2".into())
}

fn claim_construction(_: &Options) -> Result<String> {
    for s in [2, 3] {
        for t in 0..=2 {
            let m = build_construction_matrix(s, t)?;
            let c = color_count(&m.graph, &m.labeling)?.count();
            ensure(c == 3, || format!("(s, t) = ({s}, {t}): {c} colours"))?;
            if (s, t) == (3, 2) {
                let rows: BTreeSet<usize> = m.row_sums.iter().copied().collect();
                let cols: BTreeSet<usize> = m.col_sums.iter().copied().collect();
                ensure(rows == [456, 520].into() && cols == [516].into(), || {
                    format!("n = 128 sums {rows:?} / {cols:?}")
                })?;
            }
        }
    }
    Ok("(s, t) in {2,3} x {0,1,2}; n = 128 gives 456/520/516".into())
}

fn two_colour_family(u: &crate::union::LabeledUnion, center: usize) -> Result<()> {
    let c = color_count(&u.graph, &u.labeling)?;
    ensure(c.count() == 2, || format!("{}: {} colours", u.spec, c.count()))?;
    let sums = crate::labeling::vertex_sums(&u.graph, &u.labeling)?;
    ensure(sums[0] == center, || format!("{}: centre {}", u.spec, sums[0]))?;
    ensure(check_two_color_identity(&u.graph, &u.labeling)?, || {
        format!("{}: identity fails", u.spec)
    })
}

fn claim_unions(_: &Options) -> Result<String> {
    for r in [9, 13] {
        two_colour_family(&union_2labeling_family1(r)?, 4 * r * r - 2 * r)?;
    }
    for r in [9, 17] {
        two_colour_family(&union_2labeling_family2(r)?, 2 * r * r + r)?;
    }
    let u = union_2labeling_family1(9)?;
    let (g, f) = transform_union(&u, &pairing_directives(&u.spec, smallest_step)?)?;
    let got = colors_of(&g, &f)?;
    ensure(got == [578, 612].into(), || format!("transformed family 1: {got:?}"))?;

    for orders in [vec![16, 16], vec![16, 20], vec![20, 20, 24]] {
        let spec = UnionSpec::new(orders)?;
        let u = union_3labeling(&spec)?;
        let m = spec.size();
        let c = color_count(&u.graph, &u.labeling)?;
        ensure(c.count() == 3, || format!("{spec}: {} colours", c.count()))?;
        let sums = crate::labeling::vertex_sums(&u.graph, &u.labeling)?;
        let deg2: BTreeSet<usize> = sums[1..].iter().copied().collect();
        ensure(deg2 == [m, m + 1].into(), || format!("{spec}: degree-2 sums {deg2:?}"))?;
        let (h, hf) = transform_union(&u, &case_directives(&spec))?;
        let hc = color_count(&h, &hf)?.count();
        ensure(hc == 3, || format!("{spec} transformed: {hc} colours"))?;
        let verdict = check_two_color_necessary(&h);
        ensure(verdict.outcome == TwoColorOutcome::Indivisible, || {
            format!("{spec} transformed: {:?}", verdict.outcome)
        })?;
    }
    Ok("families r = 9, 13 / 9, 17; 3-labelings on 3 shapes".into())
}

/// `P_7` with chords `u_1u_4` and `u_2u_5`.
pub fn p7_with_chords() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
    edges.extend([(0, 3), (1, 4)]);
    Graph::new(7, edges).expect("valid graph")
}

fn claim_oracle(opts: &Options) -> Result<String> {
    for m in 3..=7 {
        let g = build_cycle(m)?;
        let r = exact_chi_la(&g, opts.budget)?;
        ensure(r.value == 3, || format!("χ_la(C_{m}) = {}", r.value))?;
        ensure(is_local_antimagic(&g, &r.witness)?, || "bad witness".into())?;
    }
    let p7 = p7_with_chords();
    ensure(
        feasible_with_colors(&p7, 2, opts.budget)?.witness.is_none(),
        || "P_7 with chords has a 2-colour labeling".into(),
    )?;
    let r = exact_chi_la(&p7, opts.budget)?;
    ensure(r.value >= 3, || format!("P_7 with chords: {}", r.value))?;
    Ok(format!("C_3..C_7 = 3, P_7 with chords = {}", r.value))
}

fn claim_lemmas(_: &Options) -> Result<String> {
    let mut regular = 0;
    let mut nonreg = 0;
    let mut check_complement = |g: &Graph, f: &EdgeLabeling, what: String| -> Result<()> {
        let before = color_count(g, f)?.count();
        if g.regular_degree().is_none() {
            ensure(check_nonreg_conditions(g, f)?, || format!("{what}: conditions fail"))?;
            nonreg += 1;
        } else {
            regular += 1;
        }
        let after = color_count(g, &f.complement())?.count();
        ensure(before == after, || format!("{what}: {before} -> {after} colours"))
    };
    for m in (4..=24).step_by(2) {
        for steps in circulant_step_sets(m) {
            let spec = CirculantSpec::new(m, steps)?;
            let (g, f) = circulant_labeling(&spec)?;
            check_complement(&g, &f, spec.to_string())?;
        }
    }
    for case in 1..=8u8 {
        for k in 2..=4 {
            let t = transform_cycle(case_order(case, k), &case_plan(CasePlanId::Case(case, k))?)?;
            check_complement(&t.graph, &t.labeling, format!("Case {case}, k = {k}"))?;
        }
    }
    for r in [5, 9] {
        let u = union_2labeling_family1(r)?;
        ensure(check_two_color_identity(&u.graph, &u.labeling)?, || format!("{}", u.spec))?;
    }
    Ok(format!("{regular} regular, {nonreg} non-regular complements"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_claims_pass() {
        let table = reproduce_all(&Options::default());
        assert!(table.passed(), "{table}");
        assert_eq!(table.rows.len(), 10);
    }

    #[test]
    fn tamper_fails_first_claim() {
        let table = reproduce_all(&Options {
            tamper: true,
            ..Options::default()
        });
        assert_eq!(table.first_failure().unwrap().id, 1);
    }

    #[test]
    fn tiny_budget_skips() {
        let table = reproduce_all(&Options {
            budget: SearchBudget::with_max_edges(4),
            ..Options::default()
        });
        assert!(matches!(table.rows[8].outcome, Outcome::Skipped(_)));
        assert!(table.passed());
    }
}
