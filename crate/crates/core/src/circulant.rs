//! C-labelings of cycles, translated labelings of the cycles `Γ_a`, the
//! combined labeling of a circulant, multiplier isomorphisms, spectra and
//! labeling-matrix views.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_circulant, build_cycle, gcd, CirculantSpec, Graph};
use crate::labeling::{color_count, vertex_sums, EdgeLabeling};

/// C-label of edge `j = v_j v_{j+1}` in `C_m`.
pub fn c_label(m: usize, j: usize) -> usize {
    if j.is_multiple_of(2) {
        (j + 2) / 2
    } else {
        m - (j - 1) / 2
    }
}

/// `C_m` with its C-labeling: sums `⌊m/2⌋+2` at `v_0`, `m+1` at odd and
/// `m+2` at even vertices.
pub fn c_labeling(m: usize) -> Result<(Graph, EdgeLabeling)> {
    let g = build_cycle(m)?;
    let f = EdgeLabeling::new((0..m).map(|j| c_label(m, j)).collect())?;
    Ok((g, f))
}

/// The three C-labeling sums `(v_0, odd, even)`.
pub fn c_labeling_sums(m: usize) -> (usize, usize, usize) {
    (m / 2 + 2, m + 1, m + 2)
}

/// The Hamiltonian cycle `Γ_a = (0, a, 2a, ...)` of `Z_m` carrying the
/// C-labeling shifted by `i·m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCycle {
    pub m: usize,
    pub a: usize,
    pub i: usize,
    /// Edge `j` joins `j·a` and `(j+1)·a`.
    pub edges: Vec<(usize, usize)>,
    /// Label of edge `j`, in `[i·m + 1, (i+1)·m]`.
    pub labels: Vec<usize>,
}

impl GammaCycle {
    /// Sums indexed by vertex of `Z_m`.
    pub fn sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.m];
        for (&(u, v), &l) in self.edges.iter().zip(&self.labels) {
            sums[u] += l;
            sums[v] += l;
        }
        sums
    }

    /// `(v_0, odd position, even position > 0)` sums.
    pub fn expected_sums(&self) -> (usize, usize, usize) {
        let (z, o, e) = c_labeling_sums(self.m);
        let shift = 2 * self.i * self.m;
        (z + shift, o + shift, e + shift)
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.m, self.edges.clone())
    }
}

/// `f_i` on `Γ_a`.
pub fn translated_labeling(m: usize, a: usize, i: usize) -> Result<GammaCycle> {
    if m < 3 {
        return Err(Error::InvalidOrder(m));
    }
    if a == 0 || gcd(a, m) != 1 {
        return Err(Error::UnsupportedStep { m, step: a });
    }
    let edges = (0..m).map(|j| (j * a % m, (j + 1) * a % m)).collect();
    let labels = (0..m).map(|j| c_label(m, j) + i * m).collect();
    Ok(GammaCycle {
        m,
        a,
        i,
        edges,
        labels,
    })
}

/// The combined labeling `g`: `Γ_{a_i}` gets `f_i`. Works for any order; it
/// need not be local antimagic when `m` is odd.
pub fn combined_labeling(spec: &CirculantSpec) -> Result<(Graph, EdgeLabeling)> {
    let g = build_circulant(spec)?;
    let m = spec.m();
    let labels = (0..spec.steps().len())
        .flat_map(|i| (0..m).map(move |j| c_label(m, j) + i * m))
        .collect();
    Ok((g, EdgeLabeling::new(labels)?))
}

/// `(g^+(v_0), odd, even > 0)` for `m = 2n` with `t + 1` steps.
pub fn circulant_closed_forms(spec: &CirculantSpec) -> (usize, usize, usize) {
    let n = spec.m() / 2;
    let t = spec.t();
    let k = t + 1;
    (
        k * (2 * n * t + n + 2),
        k * (2 * n * t + 2 * n + 1),
        k * (2 * n * t + 2 * n + 2),
    )
}

/// The 3-colour labeling of `C_{2n}(1, a_1, ..., a_t)`, checked against the
/// closed forms before it is returned.
pub fn circulant_labeling(spec: &CirculantSpec) -> Result<(Graph, EdgeLabeling)> {
    let m = spec.m();
    if m % 2 == 1 {
        return Err(Error::OddOrder(m));
    }
    if spec.steps()[0] != 1 {
        return Err(Error::InvalidCirculant(format!("{spec} must start with step 1")));
    }
    let (g, f) = combined_labeling(spec)?;
    let classes = color_count(&g, &f)?;
    let (z, o, e) = circulant_closed_forms(spec);
    let sums = vertex_sums(&g, &f)?;
    for (v, &s) in sums.iter().enumerate() {
        let want = match v {
            0 => z,
            _ if v % 2 == 1 => o,
            _ => e,
        };
        if s != want {
            return Err(Error::Certification(format!(
                "{spec}: vertex {v} has sum {s}, expected {want}"
            )));
        }
    }
    if classes.count() != 3 {
        return Err(Error::Certification(format!(
            "{spec}: {} colours",
            classes.count()
        )));
    }
    Ok((g, f))
}

/// Circulant from arbitrary steps: reduced mod `m`, folded to `min(a, m-a)`,
/// deduplicated.
pub fn circulant_from_steps(m: usize, steps: &[usize]) -> Result<CirculantSpec> {
    let set: BTreeSet<usize> = steps
        .iter()
        .map(|&a| {
            let a = a % m;
            a.min(m - a)
        })
        .collect();
    CirculantSpec::new(m, set.into_iter().collect())
}

/// A certified isomorphism `i ↦ b·i mod m` between two circulants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierMap {
    pub from: CirculantSpec,
    pub to: CirculantSpec,
    pub b: usize,
    pub map: Vec<usize>,
}

/// Applies `i ↦ b·i` to `from` and certifies edge by edge that the image is
/// the circulant on the multiplied steps.
pub fn certify_multiplier(from: &CirculantSpec, b: usize) -> Result<MultiplierMap> {
    let m = from.m();
    if gcd(b % m, m) != 1 {
        return Err(Error::NotApplicable(format!("{b} is not a unit mod {m}")));
    }
    let image: Vec<usize> = from.steps().iter().map(|&a| a * b).collect();
    let to = circulant_from_steps(m, &image)?;
    let map: Vec<usize> = (0..m).map(|i| i * b % m).collect();
    let g1 = build_circulant(from)?;
    let g2 = build_circulant(&to)?;
    let mut mapped: Vec<(usize, usize)> = g1
        .edges()
        .iter()
        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .collect();
    mapped.sort_unstable();
    if mapped != g2.edge_multiset() {
        return Err(Error::Certification(format!(
            "i -> {b}i does not carry {from} onto {to}"
        )));
    }
    Ok(MultiplierMap {
        from: from.clone(),
        to,
        b,
        map,
    })
}

/// `C_n(1, a) ≅ C_n(1, b)` via `i ↦ b·i`, valid when `ab ≡ ±1 (mod n)`.
pub fn multiplier_isomorphism(n: usize, a: usize, b: usize) -> Result<MultiplierMap> {
    if gcd(a % n, n) != 1 {
        return Err(Error::NotApplicable(format!("gcd({a}, {n}) != 1")));
    }
    let ab = a * b % n;
    if ab != 1 && ab != n - 1 {
        return Err(Error::NotApplicable(format!(
            "{a}*{b} = {ab} mod {n}, not ±1"
        )));
    }
    let from = circulant_from_steps(n, &[1, a])?;
    let cert = certify_multiplier(&from, b)?;
    let want = circulant_from_steps(n, &[1, b])?;
    if cert.to != want {
        return Err(Error::Certification(format!(
            "image is {}, expected {want}",
            cert.to
        )));
    }
    Ok(cert)
}

/// Eigenvalues `λ_j = Σ_a 2cos(2πaj/m)`, `j = 0..m`.
pub fn circulant_spectrum(spec: &CirculantSpec) -> Vec<f64> {
    let m = spec.m() as f64;
    (0..spec.m())
        .map(|j| {
            spec.steps()
                .iter()
                .map(|&a| 2.0 * (2.0 * std::f64::consts::PI * (a * j) as f64 / m).cos())
                .sum()
        })
        .collect()
}

/// Multiset equality within `tol`.
pub fn spectra_equal(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Symmetric label matrix with row sums; `None` marks a non-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingMatrixView {
    pub cells: Vec<Vec<Option<usize>>>,
    pub row_sums: Vec<usize>,
}

impl LabelingMatrixView {
    /// Takes raw label values so translated labelings like `f_1` on `Γ_3`
    /// can be shown too.
    pub fn from_labels(g: &Graph, labels: &[usize]) -> Result<Self> {
        if labels.len() != g.edge_count() {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for {} edges",
                labels.len(),
                g.edge_count()
            )));
        }
        let n = g.vertex_count();
        let mut cells = vec![vec![None; n]; n];
        let mut row_sums = vec![0; n];
        for (&(u, v), &l) in g.edges().iter().zip(labels) {
            if cells[u][v].is_some() {
                return Err(Error::ParallelEdges(u.min(v), u.max(v)));
            }
            cells[u][v] = Some(l);
            cells[v][u] = Some(l);
            row_sums[u] += l;
            row_sums[v] += l;
        }
        Ok(LabelingMatrixView { cells, row_sums })
    }

    pub fn order(&self) -> usize {
        self.cells.len()
    }

    /// Aligned text: header of column indices, `*` for empty cells, and a
    /// trailing `Sum` column.
    pub fn render(&self) -> String {
        let n = self.order();
        let digits = |x: usize| x.to_string().len();
        let max_label = self.cells.iter().flatten().flatten().copied().max().unwrap_or(0);
        let cell = digits(max_label).max(digits(n.saturating_sub(1))).max(3) + 1;
        let head = digits(n.saturating_sub(1)).max(2);
        let sum = self.row_sums.iter().copied().map(digits).max().unwrap_or(0).max(3);
        let mut out = String::new();
        let _ = write!(out, "{:head$} |", "");
        for c in 0..n {
            let _ = write!(out, "{c:>cell$}");
        }
        let _ = writeln!(out, " | Sum");
        for (r, row) in self.cells.iter().enumerate() {
            let _ = write!(out, "{r:>head$} |");
            for x in row {
                match x {
                    Some(l) => {
                        let _ = write!(out, "{l:>cell$}");
                    }
                    None => {
                        let _ = write!(out, "{:>cell$}", "*");
                    }
                }
            }
            let _ = writeln!(out, " | {:>sum$}", self.row_sums[r]);
        }
        out
    }
}

pub fn labeling_matrix_view(g: &Graph, f: &EdgeLabeling) -> Result<LabelingMatrixView> {
    LabelingMatrixView::from_labels(g, f.labels())
}
