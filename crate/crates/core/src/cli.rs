//! The `spk` command line: argument parsing, report assembly and rendering.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! computation disagrees with the reference data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify, Classification, SearchConfig};
use crate::error::{LieError, Result};
use crate::golden::{check_table1, golden, Table1Check};
use crate::grading::{highest_root_grading, standard_module_of};
use crate::orbits::{irrep_report, is_lagrangian, OrbitReport};
use crate::realforms::{
    compact_stabilizer_filter, enumerate_real_forms, gradings_named, hermitian_signature, main_theorem_reports,
    FilterRow, FilterVerdict, MainCaseReport, RealFormGrading,
};
use crate::reptheory::{
    dual_highest_weight, form_type, freudenthal_multiplicities, is_self_dual, weyl_dimension, IrrepDescriptor,
    ModuleDescriptor, TensorProduct,
};
use crate::rootsys::{root_system, SimpleType, Weight};

pub const SCHEMA_VERSION: u32 = 1;

pub const CONVENTION_NOTE: &str = "Bourbaki numbering of simple roots and fundamental weights; \
     weights in fundamental-weight coordinates, roots in simple-root coordinates. \
     The 56-dimensional E7 module is pi_7.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "spk", version, about = "Exact root-system computations for symplectic highest weight modules")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AlgebraArg {
    /// Simple type, e.g. `E7`.
    #[arg(long)]
    algebra: SimpleType,
}

#[derive(Debug, Args)]
struct IrrepArgs {
    #[arg(long)]
    algebra: SimpleType,
    /// Comma-separated highest weight coordinates.
    #[arg(long, allow_hyphen_values = true)]
    weight: Weight,
    /// Also list weight multiplicities.
    #[arg(long)]
    multiplicities: bool,
}

#[derive(Debug, Args)]
struct OrbitArgs {
    #[arg(long, required_unless_present = "module", requires = "weight")]
    algebra: Option<SimpleType>,
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<Weight>,
    /// Module text such as `A1:1 * G2:1,0` or `A3:1,0,0 + A3:0,0,1`.
    #[arg(long, conflicts_with_all = ["algebra", "weight"])]
    module: Option<ModuleDescriptor>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long = "max-classical", default_value_t = 16)]
    max_classical: usize,
    /// Leave out the exceptional types.
    #[arg(long)]
    no_exceptional: bool,
}

#[derive(Debug, Args)]
struct RealFormsArgs {
    #[arg(long)]
    algebra: SimpleType,
    /// A dominant weight; adds the stabilizer test and signatures.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<Weight>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix, positive roots and highest root.
    Rootsys(AlgebraArg),
    /// Dimension, duality and invariant form of an irreducible module.
    Irrep(IrrepArgs),
    /// Highest weight orbit and Lagrangian verdict.
    Orbit(OrbitArgs),
    /// Lagrangian highest weight orbits within the dimension bound.
    Classify(ClassifyArgs),
    /// Standard symplectic modules checked against the reference table.
    Table1,
    /// Highest-root grading and its degree -1 module.
    Grading(AlgebraArg),
    /// Inner real forms, optionally with signatures for a weight.
    Realforms(RealFormsArgs),
    /// The twelve signature cases and the compact-stabilizer filter.
    VerifyMainTheorem,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub payload: Value,
    pub convention_note: String,
    pub schema_version: u32,
}

struct Outcome {
    report: Report,
    table: String,
    violation: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn sig(s: &[(u64, u64)]) -> String {
    s.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" or ")
}

fn types_text(ts: &[SimpleType]) -> String {
    if ts.is_empty() {
        "1".into()
    } else {
        ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ")
    }
}

fn rootsys(ty: SimpleType) -> Result<(Value, String)> {
    let doc = root_system(ty).to_document();
    let mut t = format!("{} rank {} dim {}\ncartan:\n", doc.simple_type, doc.rank, doc.dimension);
    for row in &doc.cartan_matrix {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(t, "{}", cells.join(""));
    }
    let _ = writeln!(t, "positive roots: {}", doc.positive_roots.len());
    let _ = writeln!(t, "highest root: {:?}", doc.highest_root);
    Ok((to_value(&doc), t))
}

fn irrep(a: &IrrepArgs) -> Result<(Value, String)> {
    let d = IrrepDescriptor::new(a.algebra, a.weight.clone())?;
    let dim = weyl_dimension(&d);
    let form = form_type(&d);
    let dual = dual_highest_weight(&d);
    let mut payload = json!({
        "irrep": d,
        "algebra": d.algebra,
        "weight": d.highest_weight.to_string(),
        "dim": dim.to_string(),
        "dual_weight": dual.to_string(),
        "self_dual": is_self_dual(&d),
        "form": form,
    });
    let mut t = format!(
        "{d}: dim {dim}, dual {dual}, self-dual {}, form {form}\n",
        is_self_dual(&d)
    );
    if a.multiplicities {
        let m = freudenthal_multiplicities(&d)?;
        let list: Vec<Value> = m.iter().map(|(w, k)| json!([w.to_string(), k])).collect();
        payload["multiplicities"] = Value::Array(list);
        for (w, k) in &m {
            let _ = writeln!(t, "  {w}: {k}");
        }
    }
    Ok((payload, t))
}

fn orbit_table(r: &OrbitReport) -> String {
    format!(
        "{}: orbit dim {}, module dim {}, levi {}, totally isotropic {}, lagrangian {}{}\n",
        r.module,
        r.orbit_dim,
        r.module_dim,
        types_text(&r.levi_types),
        r.totally_isotropic,
        r.lagrangian,
        if r.reasons.is_empty() { String::new() } else { format!(" ({})", r.reasons.join("; ")) }
    )
}

fn orbit(a: &OrbitArgs) -> Result<(Value, String)> {
    let r = match (&a.module, a.algebra, &a.weight) {
        (Some(m), ..) => is_lagrangian(m)?,
        (None, Some(ty), Some(w)) => {
            let d = IrrepDescriptor::new(ty, w.clone())?;
            irrep_report(&d)?
        }
        _ => return Err(LieError::Unsupported("give --module, or --algebra with --weight".into())),
    };
    Ok((to_value(&r), orbit_table(&r)))
}

fn classify_cmd(a: &ClassifyArgs) -> Result<(Value, String)> {
    let cfg = SearchConfig::new(!a.no_exceptional, a.max_classical)?;
    let c: Classification = classify(&cfg)?;
    let mut t = String::new();
    for e in c.entries() {
        let tag = match (&e.standard_for, &e.extension) {
            (Some(l), _) => format!("standard for {l}"),
            (None, Some(x)) => format!("extends to {} (standard for {})", x.module, x.standard_for),
            (None, None) => String::new(),
        };
        let _ = writeln!(t, "{:<40} dim {:>5}  orbit {:>4}  {tag}", e.module.to_string(), e.orbit.module_dim, e.orbit.orbit_dim);
    }
    for g in &c.whitelist_gaps {
        let _ = writeln!(t, "unresolved: {} ({})", g.module, g.reason);
    }
    Ok((to_value(&c), t))
}

fn table1_cmd() -> Result<(Value, String, bool)> {
    let checks: Vec<Table1Check> = check_table1()?;
    let mut t = String::from("id  n   N                          | encoding\n");
    for c in &checks {
        let n = c.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
        let mark = if c.matches { "" } else { "   MISMATCH, reference: " };
        let _ = writeln!(
            t,
            "{:<3} {:<3} {:<26} | {}{}{}",
            c.id,
            n,
            c.wolf,
            c.computed,
            mark,
            if c.matches { "" } else { &c.expected }
        );
    }
    let bad = checks.iter().any(|c| !c.matches);
    Ok((to_value(&checks), t, bad))
}

fn grading_cmd(ty: SimpleType) -> Result<(Value, String)> {
    let g = highest_root_grading(ty)?;
    let mut payload = to_value(&g);
    let mut t = format!("{ty}: ");
    for k in -2..=2 {
        let _ = write!(t, "l_{k} {}  ", g.piece(k).len() + if k == 0 { g.rank } else { 0 });
    }
    t.push('\n');
    match standard_module_of(ty) {
        Ok(s) => {
            let _ = writeln!(
                t,
                "G = {}, V = {} (dim {}), H' = {}, centre {}",
                types_text(&s.levi_types),
                s.module,
                s.dim,
                types_text(&s.h_prime),
                s.center_dim
            );
            payload["standard_module"] = to_value(&s);
        }
        Err(e) => {
            let _ = writeln!(t, "no standard module: {e}");
            payload["standard_module"] = Value::Null;
        }
    }
    Ok((payload, t))
}

fn realforms_cmd(a: &RealFormsArgs) -> Result<(Value, String)> {
    let forms = enumerate_real_forms(a.algebra)?;
    let module = match &a.weight {
        Some(w) => {
            let d = IrrepDescriptor::new(a.algebra, w.clone())?;
            if d.is_trivial() {
                return Err(LieError::ZeroWeight);
            }
            Some(TensorProduct(vec![d]))
        }
        None => None,
    };
    let mut rows = Vec::new();
    let mut t = String::new();
    for f in &forms {
        let mut row = json!({
            "epsilon": f.epsilon,
            "index": f.index,
            "names": f.names,
            "compact_types": f.compact_types,
            "center_dim": f.center_dim,
        });
        let _ = write!(
            t,
            "{:<12} index {:>5}  k = {} + {} centre",
            f.names.join("="),
            f.index,
            types_text(&f.compact_types),
            f.center_dim
        );
        if let Some(m) = &module {
            let mut compatible = Vec::new();
            let name = f.names.first().cloned().unwrap_or_default();
            for e in gradings_named(a.algebra, &name)? {
                let r = hermitian_signature(&RealFormGrading::simple(a.algebra, e)?, m)?;
                if r.h0_compact {
                    compatible.push(r);
                }
            }
            row["compatible_gradings"] = json!(compatible.len());
            row["signature"] = compatible.first().map(to_value).unwrap_or(Value::Null);
            match compatible.first() {
                Some(r) => {
                    let _ = write!(t, "  compact stabilizer, metric {}", sig(&r.metric_signatures));
                }
                None => t.push_str("  noncompact stabilizer"),
            }
        }
        t.push('\n');
        rows.push(row);
    }
    Ok((json!({ "algebra": a.algebra, "real_forms": rows }), t))
}

fn main_theorem_cmd() -> Result<(Value, String, bool)> {
    let cases: Vec<MainCaseReport> = main_theorem_reports()?;
    let filter: Vec<FilterRow> = compact_stabilizer_filter()?;
    let e7: Vec<i64> = enumerate_real_forms("E7".parse()?)?.iter().map(|l| l.index).collect();
    let mut t = String::new();
    for c in &cases {
        let n = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let _ = writeln!(
            t,
            "{:<5}{:<5} {:<28} {:<22} index {:>5}  metric {}  {}",
            c.id,
            n,
            c.module.to_string(),
            c.real_form.join(" + "),
            c.index,
            sig(&c.metric_signatures),
            if c.pass { "ok".to_string() } else { format!("FAIL: {}", c.reasons.join("; ")) }
        );
    }
    let _ = writeln!(t, "E7 real form indices: {e7:?}");
    for f in filter.iter().filter(|f| f.verdict == FilterVerdict::UnlistedCompact) {
        let _ = writeln!(t, "finding: {} under {} has compact stabilizer but is not a listed triple", f.module, f.real_form.join(" + "));
    }
    let violation = cases.iter().any(|c| !c.pass) || filter.iter().any(|f| f.verdict == FilterVerdict::ListedNoncompact);
    let payload = json!({
        "cases": cases,
        "compact_stabilizer_filter": filter,
        "e7_indices": e7,
        "convention": golden()?.convention,
    });
    Ok((payload, t, violation))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let mut inputs = BTreeMap::new();
    inputs.insert("format".to_string(), json!(if cli.format == Format::Json { "json" } else { "table" }));
    let mut violation = false;
    let (name, (payload, table)) = match &cli.command {
        Command::Rootsys(a) => {
            inputs.insert("algebra".into(), json!(a.algebra));
            ("rootsys", rootsys(a.algebra)?)
        }
        Command::Irrep(a) => {
            inputs.insert("algebra".into(), json!(a.algebra));
            inputs.insert("weight".into(), json!(a.weight.to_string()));
            inputs.insert("multiplicities".into(), json!(a.multiplicities));
            ("irrep", irrep(a)?)
        }
        Command::Orbit(a) => {
            if let Some(m) = &a.module {
                inputs.insert("module".into(), json!(m));
            }
            if let Some(t) = a.algebra {
                inputs.insert("algebra".into(), json!(t));
            }
            if let Some(w) = &a.weight {
                inputs.insert("weight".into(), json!(w.to_string()));
            }
            ("orbit", orbit(a)?)
        }
        Command::Classify(a) => {
            inputs.insert("max_classical".into(), json!(a.max_classical));
            inputs.insert("include_exceptional".into(), json!(!a.no_exceptional));
            ("classify", classify_cmd(a)?)
        }
        Command::Table1 => {
            let (p, t, bad) = table1_cmd()?;
            violation = bad;
            ("table1", (p, t))
        }
        Command::Grading(a) => {
            inputs.insert("algebra".into(), json!(a.algebra));
            ("grading", grading_cmd(a.algebra)?)
        }
        Command::Realforms(a) => {
            inputs.insert("algebra".into(), json!(a.algebra));
            if let Some(w) = &a.weight {
                inputs.insert("weight".into(), json!(w.to_string()));
            }
            ("realforms", realforms_cmd(a)?)
        }
        Command::VerifyMainTheorem => {
            let (p, t, bad) = main_theorem_cmd()?;
            violation = bad;
            ("verify-main-theorem", (p, t))
        }
    };
    Ok(Outcome {
        report: Report {
            command: name.to_string(),
            inputs,
            payload,
            convention_note: CONVENTION_NOTE.to_string(),
            schema_version: SCHEMA_VERSION,
        },
        table,
        violation,
    })
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status with the text to print.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let code = if o.violation { 2 } else { 0 };
            let text = match cli.format {
                Format::Json => {
                    let v = to_value(&o.report);
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
                Format::Table => o.table,
            };
            (code, text)
        }
        Err(e @ LieError::Violation(_)) => (2, format!("error: {e}\n")),
        Err(e) => (1, format!("error: {e}\n")),
    }
}
