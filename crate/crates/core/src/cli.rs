//! Command-line front end. Every command reads and writes JSON documents so
//! steps can be piped together; `run` takes its streams as arguments.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circulant::{
    c_labeling, circulant_closed_forms, circulant_from_steps, circulant_labeling,
    circulant_spectrum, labeling_matrix_view, spectra_equal,
};
use crate::cycle_transform::{
    build_construction_matrix, case_plan, transform_cycle, CasePlanId, Family,
};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, build_circulant, build_cycle, CirculantSpec};
use crate::io::{to_dot, verify_document, Check, Document, MatrixRecord, Recipe};
use crate::oracle::{exact_chi_la, feasible_with_colors, SearchBudget, BUDGET_ENV};
use crate::reproduce::{case_shape, reproduce_all, Options};
use crate::union::{
    build_union, case_directives, pairing_directives, smallest_step, transform_union,
    union_2labeling_family1, union_2labeling_family2, union_3labeling, Directive, LabeledUnion,
    UnionSpec,
};

#[derive(Debug, Parser)]
#[command(name = "antimagic", version, about = "Local antimagic labelings and their checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an unlabeled graph.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Build a graph with one of the explicit labelings.
    #[command(subcommand)]
    Label(LabelCmd),
    /// Merge vertices of labeled cycles.
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Check a labeled document and its recipe.
    Verify {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Circulant eigenvalues.
    Spectrum {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        steps: Vec<usize>,
        /// Second step set to compare against.
        #[arg(long, value_delimiter = ',')]
        compare: Option<Vec<usize>>,
    },
    /// Test two graph documents for isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Re-emit a document in another format.
    Export {
        format: ExportFormat,
        input: Option<PathBuf>,
    },
    /// Rebuild and check every headline result.
    Reproduce {
        /// Break the cycle labeling on purpose.
        #[arg(long)]
        tamper: bool,
        #[arg(long, env = BUDGET_ENV)]
        max_edges: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum BuildCmd {
    Cycle {
        #[arg(long)]
        m: usize,
    },
    Circulant {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        steps: Vec<usize>,
    },
    Union(ShapeArgs),
}

#[derive(Debug, Args)]
struct ShapeArgs {
    /// Cycle orders; `ORDERxCOPIES` repeats an order.
    #[arg(long, value_delimiter = ',', required = true)]
    orders: Vec<String>,
}

impl ShapeArgs {
    fn spec(&self) -> Result<UnionSpec> {
        let mut orders = Vec::new();
        for item in &self.orders {
            let (a, c) = item.split_once('x').unwrap_or((item, "1"));
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::OutOfRange(format!("bad order '{item}'")))
            };
            orders.extend(std::iter::repeat_n(parse(a)?, parse(c)?));
        }
        UnionSpec::new(orders)
    }
}

#[derive(Debug, Subcommand)]
enum LabelCmd {
    /// The C-labeling of `C_m`.
    C {
        #[arg(long)]
        m: usize,
    },
    Circulant {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        steps: Vec<usize>,
    },
    /// `U((4r-2)^{r-1}, 2r-2)`, two colours.
    Union2a {
        #[arg(long)]
        r: usize,
    },
    /// `U((2r)^{(r-1)/2}, (2r-2)^{(r+1)/2})`, `r` odd, two colours.
    Union2b {
        #[arg(long)]
        r: usize,
    },
    /// Three colours on any union with every order at least 16.
    Union3(ShapeArgs),
}

#[derive(Debug, Subcommand)]
enum TransformCmd {
    /// A case plan (`--case`, `--k`) or a family plan (`--family`, `--fm`).
    Case {
        #[arg(long, required_unless_present = "family")]
        case: Option<u8>,
        #[arg(long, requires = "case")]
        k: Option<usize>,
        #[arg(long, conflicts_with = "case", requires = "fm")]
        family: Option<FamilyArg>,
        #[arg(long)]
        fm: Option<usize>,
    },
    /// The even/odd array construction on `C_{2^{2s-1}(t+2)}`.
    Matrix {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: usize,
    },
    /// Per-cycle directives on a labeled union.
    Union {
        #[arg(long)]
        family: UnionFamily,
        #[arg(long, required_unless_present = "orders")]
        r: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        orders: Option<Vec<String>>,
        /// `auto`, or one of keep|case|matrix:S:T|rewire:ONTO:STEP per cycle.
        #[arg(long, value_delimiter = ',', default_value = "auto")]
        directives: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    G,
    G1,
    G2,
    G3,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum UnionFamily {
    #[value(name = "2a")]
    TwoA,
    #[value(name = "2b")]
    TwoB,
    #[value(name = "3")]
    Three,
}

#[derive(Debug, Subcommand)]
enum OracleCmd {
    /// Exact `χ_la`, or a `--colors k` feasibility test.
    ChiLa {
        input: Option<PathBuf>,
        #[arg(long, env = BUDGET_ENV)]
        max_edges: Option<usize>,
        #[arg(long)]
        colors: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
    Matrix,
}

/// Exit status: 0 success, 1 failed check or error, 2 usage.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, doc: &Document) -> Result<bool> {
    doc.write_to(out)?;
    Ok(true)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn read_doc(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Document> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            Document::from_json(&fs::read_to_string(p).map_err(io_err)?)
        }
        _ => Document::read_from(stdin),
    }
}

fn colors_check(v: impl IntoIterator<Item = usize>) -> Check {
    let mut c: Vec<usize> = v.into_iter().collect();
    c.sort_unstable();
    c.dedup();
    Check::Colors(c)
}

fn union_doc(u: &LabeledUnion, recipe: Recipe) -> Document {
    Document::labeled(u.graph.clone(), u.labeling.clone()).with_recipe(recipe)
}

fn execute(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Build(b) => {
            let (graph, recipe) = match b {
                BuildCmd::Cycle { m } => (build_cycle(m)?, Recipe::new("build cycle").param("m", m)),
                BuildCmd::Circulant { m, steps } => {
                    let spec = CirculantSpec::new(m, steps)?;
                    (build_circulant(&spec)?, Recipe::new("build circulant").param("spec", &spec))
                }
                BuildCmd::Union(shape) => {
                    let spec = shape.spec()?;
                    (build_union(&spec)?.0, Recipe::new("build union").param("spec", &spec))
                }
            };
            emit(out, &Document::new(graph).with_recipe(recipe))
        }
        Command::Label(l) => emit(out, &label(l)?),
        Command::Transform(t) => emit(out, &transform(t)?),
        Command::Verify { input, json } => {
            let doc = read_doc(input.as_ref(), stdin)?;
            let report = verify_document(&doc)?;
            if json {
                let s = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
                writeln!(out, "{s}").map_err(io_err)?;
            } else {
                write!(out, "{}", report.render()).map_err(io_err)?;
            }
            if let Some(f) = report.first_failure() {
                writeln!(out, "first failure: {}: {}", f.name, f.detail).map_err(io_err)?;
            }
            Ok(report.passed())
        }
        Command::Spectrum { m, steps, compare } => {
            let spec = circulant_from_steps(m, &steps)?;
            let s = circulant_spectrum(&spec);
            writeln!(out, "{spec}").map_err(io_err)?;
            for (j, x) in s.iter().enumerate() {
                writeln!(out, "λ_{j} = {x:.9}").map_err(io_err)?;
            }
            if let Some(other) = compare {
                let spec2 = circulant_from_steps(m, &other)?;
                let same = spectra_equal(&s, &circulant_spectrum(&spec2), 1e-9);
                let verdict = if same { "equal" } else { "different" };
                writeln!(out, "spectra of {spec} and {spec2}: {verdict}").map_err(io_err)?;
            }
            Ok(true)
        }
        Command::Iso { a, b } => {
            let ga = Document::from_json(&fs::read_to_string(&a).map_err(io_err)?)?.graph;
            let gb = Document::from_json(&fs::read_to_string(&b).map_err(io_err)?)?.graph;
            match are_isomorphic(&ga, &gb) {
                Some(map) => {
                    writeln!(out, "isomorphic: {map:?}").map_err(io_err)?;
                    Ok(true)
                }
                None => {
                    writeln!(out, "not isomorphic").map_err(io_err)?;
                    Ok(false)
                }
            }
        }
        Command::Oracle(OracleCmd::ChiLa {
            input,
            max_edges,
            colors,
        }) => {
            let doc = read_doc(input.as_ref(), stdin)?;
            let budget = max_edges.map(SearchBudget::with_max_edges).unwrap_or_default();
            oracle(&doc, budget, colors, out)
        }
        Command::Export { format, input } => {
            let doc = read_doc(input.as_ref(), stdin)?;
            let text = match format {
                ExportFormat::Json => doc.to_json()? + "\n",
                ExportFormat::Dot => to_dot(&doc.graph, doc.labeling.as_ref())?,
                ExportFormat::Matrix => match &doc.matrix {
                    Some(m) => build_construction_matrix(m.arrays.s, m.arrays.t)?.render(),
                    None => {
                        let f = doc.labeling.as_ref().ok_or_else(|| {
                            Error::InvalidLabeling("matrix export needs a labeling".into())
                        })?;
                        labeling_matrix_view(&doc.graph, f)?.render()
                    }
                },
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            Ok(true)
        }
        Command::Reproduce { tamper, max_edges } => {
            let budget = max_edges.map(SearchBudget::with_max_edges).unwrap_or_default();
            let table = reproduce_all(&Options { budget, tamper });
            write!(out, "{table}").map_err(io_err)?;
            Ok(table.passed())
        }
    }
}

fn label(cmd: LabelCmd) -> Result<Document> {
    Ok(match cmd {
        LabelCmd::C { m } => {
            let (g, f) = c_labeling(m)?;
            let recipe = Recipe::new("label c")
                .param("m", m)
                .check(colors_check([m / 2 + 2, m + 1, m + 2]));
            Document::labeled(g, f).with_recipe(recipe)
        }
        LabelCmd::Circulant { m, steps } => {
            let spec = CirculantSpec::new(m, steps)?;
            let (g, f) = circulant_labeling(&spec)?;
            let (a, b, c) = circulant_closed_forms(&spec);
            let recipe = Recipe::new("label circulant")
                .param("spec", &spec)
                .check(Check::ColorCount(3))
                .check(colors_check([a, b, c]));
            Document::labeled(g, f).with_recipe(recipe)
        }
        LabelCmd::Union2a { r } => {
            let u = union_2labeling_family1(r)?;
            union_doc(&u, two_colour_recipe("label union2a", r, &u, 4 * r * r - 2 * r))
        }
        LabelCmd::Union2b { r } => {
            let u = union_2labeling_family2(r)?;
            union_doc(&u, two_colour_recipe("label union2b", r, &u, 2 * r * r + r))
        }
        LabelCmd::Union3(shape) => {
            let spec = shape.spec()?;
            let u = union_3labeling(&spec)?;
            let recipe = Recipe::new("label union3")
                .param("spec", &spec)
                .check(Check::ColorCount(3));
            union_doc(&u, recipe)
        }
    })
}

fn two_colour_recipe(cmd: &str, r: usize, u: &LabeledUnion, center: usize) -> Recipe {
    Recipe::new(cmd)
        .param("r", r)
        .param("spec", &u.spec)
        .check(Check::ColorCount(2))
        .check(Check::VertexSum {
            vertex: 0,
            sum: center,
        })
        .check(Check::TwoColorIdentity)
}

fn transform(cmd: TransformCmd) -> Result<Document> {
    Ok(match cmd {
        TransformCmd::Case {
            case,
            k,
            family,
            fm,
        } => {
            let id = match (case, family) {
                (Some(c), _) => CasePlanId::Case(c, k.unwrap_or(2)),
                (None, Some(f)) => {
                    let fam = match f {
                        FamilyArg::G => Family::G,
                        FamilyArg::G1 => Family::G1,
                        FamilyArg::G2 => Family::G2,
                        FamilyArg::G3 => Family::G3,
                    };
                    CasePlanId::Family(fam, fm.unwrap_or(2))
                }
                (None, None) => unreachable!("clap requires case or family"),
            };
            let t = transform_cycle(id.order(), &case_plan(id)?)?;
            let mut recipe = Recipe::new("transform case")
                .param("plan", id)
                .check(colors_check(t.colors()));
            if let CasePlanId::Case(c, _) = id {
                recipe = recipe.check(Check::ChromaticNumber(case_shape(c).1));
            }
            Document::labeled(t.graph, t.labeling).with_recipe(recipe)
        }
        TransformCmd::Matrix { s, t } => {
            let m = build_construction_matrix(s, t)?;
            let recipe = Recipe::new("transform matrix")
                .param("s", s)
                .param("t", t)
                .param("spec", &m.spec)
                .check(Check::ColorCount(3))
                .check(colors_check(m.row_sums.iter().chain(&m.col_sums).copied()));
            let record = MatrixRecord::from_matrix(&m)?;
            let mut doc = Document::labeled(m.graph, m.labeling).with_recipe(recipe);
            doc.matrix = Some(record);
            doc
        }
        TransformCmd::Union {
            family,
            r,
            orders,
            directives,
        } => {
            let u = match family {
                UnionFamily::TwoA => union_2labeling_family1(need_r(r)?)?,
                UnionFamily::TwoB => union_2labeling_family2(need_r(r)?)?,
                UnionFamily::Three => {
                    let orders = orders.ok_or_else(|| {
                        Error::InvalidDirective("family 3 needs --orders".into())
                    })?;
                    union_3labeling(&ShapeArgs { orders }.spec()?)?
                }
            };
            let dirs = if directives.len() == 1 && directives[0] == "auto" {
                match family {
                    UnionFamily::Three => case_directives(&u.spec),
                    _ => pairing_directives(&u.spec, smallest_step)?,
                }
            } else {
                directives
                    .iter()
                    .map(|d| d.parse::<Directive>())
                    .collect::<Result<_>>()?
            };
            let (g, f) = transform_union(&u, &dirs)?;
            let names: Vec<String> = dirs.iter().map(|d| d.to_string()).collect();
            let count = match family {
                UnionFamily::Three => 3,
                _ => 2,
            };
            let recipe = Recipe::new("transform union")
                .param("spec", &u.spec)
                .param("directives", names.join(","))
                .check(Check::ColorCount(count));
            Document::labeled(g, f).with_recipe(recipe)
        }
    })
}

fn need_r(r: Option<usize>) -> Result<usize> {
    r.ok_or_else(|| Error::InvalidDirective("this family needs --r".into()))
}

fn oracle(
    doc: &Document,
    budget: SearchBudget,
    colors: Option<usize>,
    out: &mut dyn Write,
) -> Result<bool> {
    let g = &doc.graph;
    let result = match colors {
        Some(k) => feasible_with_colors(g, k, budget).map(|r| {
            let line = match &r.witness {
                Some(w) => format!("feasible with {k} colours: {:?}", w.labels()),
                None => format!("no labeling with at most {k} colours"),
            };
            (line, r.stats)
        }),
        None => exact_chi_la(g, budget).map(|r| {
            (
                format!("chi_la = {}\nwitness: {:?}", r.value, r.witness.labels()),
                r.stats,
            )
        }),
    };
    match result {
        Ok((line, stats)) => {
            writeln!(out, "{line}\nnodes: {}\ntime: {:.3?}", stats.nodes, stats.elapsed)
                .map_err(io_err)?;
            Ok(true)
        }
        Err(Error::BudgetExceeded(why)) => {
            writeln!(out, "skipped: {why}").map_err(io_err)?;
            Ok(true)
        }
        Err(e) => Err(e),
    }
}
