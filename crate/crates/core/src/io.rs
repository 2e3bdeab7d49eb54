//! JSON documents passed between pipeline steps, their verification, and DOT
//! export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Graph};
use crate::labeling::{check_two_color_identity, induced_coloring, EdgeLabeling};

/// A graph, optionally labeled, with the recipe that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub graph: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<EdgeLabeling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRecord>,
}

impl Document {
    pub fn new(graph: Graph) -> Self {
        Document {
            graph,
            labeling: None,
            recipe: None,
            matrix: None,
        }
    }

    pub fn labeled(graph: Graph, labeling: EdgeLabeling) -> Self {
        Document {
            labeling: Some(labeling),
            ..Document::new(graph)
        }
    }

    pub fn with_recipe(mut self, recipe: Recipe) -> Self {
        self.recipe = Some(recipe);
        self
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(s).map_err(|e| Error::Io(e.to_string()))?;
        if let Some(f) = &doc.labeling {
            if f.q() != doc.graph.edge_count() {
                return Err(Error::InvalidLabeling(format!(
                    "{} labels for {} edges",
                    f.q(),
                    doc.graph.edge_count()
                )));
            }
        }
        Ok(doc)
    }

    pub fn read_from(mut r: impl Read) -> Result<Self> {
        let mut s = String::new();
        r.read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
        Self::from_json(&s)
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        writeln!(w, "{}", self.to_json()?).map_err(|e| Error::Io(e.to_string()))
    }
}

/// How a document was made and what must hold of it.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Recipe {
    pub command: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

impl Recipe {
    pub fn new(command: impl Into<String>) -> Self {
        Recipe {
            command: command.into(),
            ..Recipe::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn check(mut self, c: Check) -> Self {
        self.checks.push(c);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    ColorCount(usize),
    Colors(Vec<usize>),
    VertexSum { vertex: usize, sum: usize },
    RegularDegree(usize),
    /// `[degree, count]` pairs.
    DegreeProfile(Vec<[usize; 2]>),
    ChromaticNumber(usize),
    TwoColorIdentity,
}

/// A construction matrix as written by `transform matrix`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub arrays: ArraysRecord,
    pub m01: Vec<Vec<u8>>,
    pub mlab: Vec<Vec<Option<usize>>>,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    pub spec: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArraysRecord {
    pub s: u32,
    pub t: usize,
    pub n: usize,
    pub a: Vec<Vec<usize>>,
    pub b: Vec<Vec<usize>>,
}

impl MatrixRecord {
    pub fn from_matrix(m: &crate::cycle_transform::ConstructionMatrix) -> Result<Self> {
        let v = serde_json::to_value(m).map_err(|e| Error::Io(e.to_string()))?;
        serde_json::from_value(v).map_err(|e| Error::Io(e.to_string()))
    }

    /// Labels bijective on `1..=n`, occupancy equal to `M01`, stored sums
    /// equal to recomputed ones.
    pub fn check(&self) -> std::result::Result<(), String> {
        let n = self.arrays.n;
        let r = self.m01.len();
        let mut seen = vec![false; n + 1];
        for (x, row) in self.mlab.iter().enumerate() {
            for (y, cell) in row.iter().enumerate() {
                if cell.is_some() != (self.m01[x][y] == 1) {
                    return Err(format!("cell ({x}, {y}) occupancy differs from M01"));
                }
                if let Some(l) = *cell {
                    if l == 0 || l > n || std::mem::replace(&mut seen[l], true) {
                        return Err(format!("label {l} in cell ({x}, {y}) is not new in 1..={n}"));
                    }
                }
            }
        }
        if let Some(l) = (1..=n).find(|&l| !seen[l]) {
            return Err(format!("label {l} missing"));
        }
        let rows: Vec<usize> = self.mlab.iter().map(|row| row.iter().flatten().sum()).collect();
        let cols: Vec<usize> = (0..r)
            .map(|y| self.mlab.iter().filter_map(|row| row[y]).sum())
            .collect();
        if rows != self.row_sums {
            return Err("stored row sums differ from the labels".into());
        }
        if cols != self.col_sums {
            return Err("stored column sums differ from the labels".into());
        }
        Ok(())
    }
}

/// Outcome of [`verify_document`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub vertices: usize,
    pub edges: usize,
    pub sums: Vec<usize>,
    pub colors: Vec<usize>,
    pub conflicts: Vec<(usize, usize)>,
    pub local_antimagic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_sums: Option<(Vec<usize>, Vec<usize>)>,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices: {}, edges: {}", self.vertices, self.edges);
        let _ = writeln!(out, "local antimagic: {}", self.local_antimagic);
        let colors: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "colors ({}): {{{}}}", self.colors.len(), colors.join(","));
        if !self.conflicts.is_empty() {
            let _ = writeln!(out, "conflicts: {:?}", self.conflicts);
        }
        if let Some((rows, cols)) = &self.matrix_sums {
            let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("/");
            let _ = writeln!(out, "row sums: {}, column sums: {}", join(rows), join(cols));
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{mark} {}: {}", c.name, c.detail);
        }
        out
    }
}

fn distinct(v: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = v.to_vec();
    d.sort_unstable();
    d.dedup();
    d
}

/// Recomputes sums and colours, then runs the built-in checks (a labeling is
/// present and local antimagic) followed by the recipe's.
pub fn verify_document(doc: &Document) -> Result<Report> {
    let g = &doc.graph;
    let f = doc
        .labeling
        .as_ref()
        .ok_or_else(|| Error::InvalidLabeling("document has no labeling".into()))?;
    let ic = induced_coloring(g, f)?;
    let colors: Vec<usize> = ic.colors.iter().copied().collect();
    let mut checks = vec![CheckResult {
        name: "local antimagic".into(),
        passed: ic.conflicts.is_empty(),
        detail: match ic.conflicts.first() {
            Some((u, v)) => format!("adjacent {u} and {v} share sum {}", ic.sums[*u]),
            None => "no adjacent vertices share a sum".into(),
        },
    }];
    let mut matrix_sums = None;
    if let Some(m) = &doc.matrix {
        let res = m.check();
        checks.push(CheckResult {
            name: "matrix".into(),
            passed: res.is_ok(),
            detail: res.err().unwrap_or_else(|| format!("{} consistent", m.spec)),
        });
        matrix_sums = Some((distinct(&m.row_sums), distinct(&m.col_sums)));
    }
    for c in doc.recipe.iter().flat_map(|r| &r.checks) {
        checks.push(run_check(c, g, f, &ic.sums, &colors)?);
    }
    Ok(Report {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        local_antimagic: ic.conflicts.is_empty(),
        sums: ic.sums,
        colors,
        conflicts: ic.conflicts,
        matrix_sums,
        checks,
    })
}

fn run_check(
    c: &Check,
    g: &Graph,
    f: &EdgeLabeling,
    sums: &[usize],
    colors: &[usize],
) -> Result<CheckResult> {
    let (name, passed, detail) = match c {
        Check::ColorCount(k) => (
            format!("color count {k}"),
            colors.len() == *k,
            format!("found {}", colors.len()),
        ),
        Check::Colors(want) => {
            let want = distinct(want);
            (format!("colors {want:?}"), colors == want, format!("found {colors:?}"))
        }
        Check::VertexSum { vertex, sum } => {
            let got = sums.get(*vertex).copied();
            (
                format!("sum at {vertex} is {sum}"),
                got == Some(*sum),
                format!("found {got:?}"),
            )
        }
        Check::RegularDegree(d) => {
            let got = g.regular_degree();
            (format!("{d}-regular"), got == Some(*d), format!("found {got:?}"))
        }
        Check::DegreeProfile(want) => {
            let mut got: BTreeMap<usize, usize> = BTreeMap::new();
            for d in g.degrees() {
                *got.entry(d).or_default() += 1;
            }
            let got: Vec<[usize; 2]> = got.into_iter().map(|(d, c)| [d, c]).collect();
            (
                format!("degree profile {want:?}"),
                &got == want,
                format!("found {got:?}"),
            )
        }
        Check::ChromaticNumber(k) => {
            let got = chromatic_number(g);
            (format!("chromatic number {k}"), got == *k, format!("found {got}"))
        }
        Check::TwoColorIdentity => {
            let ok = check_two_color_identity(g, f)?;
            ("two-colour identity".to_string(), ok, format!("holds: {ok}"))
        }
    };
    Ok(CheckResult {
        name,
        passed,
        detail,
    })
}

/// Graphviz source; vertices are named by provenance and, when labeled, show
/// their sum on a second line. Edges carry their labels.
pub fn to_dot(g: &Graph, f: Option<&EdgeLabeling>) -> Result<String> {
    let sums = f.map(|f| crate::labeling::vertex_sums(g, f)).transpose()?;
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let name = g.vertex_name(v);
        let label = match &sums {
            Some(s) => format!("{name}\\n{}", s[v]),
            None => name,
        };
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match f {
            Some(f) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", f.label(e));
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::c_labeling;

    #[test]
    fn graph_json_shape() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [1, 2]]));
        let back: Graph = serde_json::from_value(serde_json::json!({"n": 3, "edges": [[0, 1], [1, 2]]})).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_value::<Graph>(serde_json::json!({"n": 2, "edges": [[0, 0]]})).is_err());
    }

    #[test]
    fn document_round_trip_and_verify() {
        let (g, f) = c_labeling(6).unwrap();
        let doc = Document::labeled(g, f).with_recipe(
            Recipe::new("label c")
                .param("m", 6)
                .check(Check::Colors(vec![5, 7, 8]))
                .check(Check::RegularDegree(2)),
        );
        let back = Document::from_json(&doc.to_json().unwrap()).unwrap();
        assert_eq!(back, doc);
        let report = verify_document(&back).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.colors, vec![5, 7, 8]);
    }

    #[test]
    fn failing_check_reported() {
        let (g, f) = c_labeling(6).unwrap();
        let doc = Document::labeled(g, f).with_recipe(Recipe::new("x").check(Check::ColorCount(2)));
        let report = verify_document(&doc).unwrap();
        assert_eq!(report.first_failure().unwrap().name, "color count 2");
    }

    #[test]
    fn label_count_mismatch() {
        let json = r#"{"graph": {"n": 3, "edges": [[0,1],[1,2]]}, "labeling": {"labels": [1]}}"#;
        assert!(Document::from_json(json).is_err());
    }

    #[test]
    fn dot_has_sums() {
        let (g, f) = c_labeling(4).unwrap();
        let dot = to_dot(&g, Some(&f)).unwrap();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("v0\\n"));
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
