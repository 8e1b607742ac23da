//! Read-only reference data: the table of standard modules, the bounded
//! enumeration list, the real-structure and compact-stabilizer lists and
//! the twelve signature cases. Entries carry a quote anchor and may be
//! parametric in `n`, written with `{expr}` templates such as `SL{n+2}`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::grading::table1_row;
use crate::groups::{canonical_types, compact_dimension, Group};
use crate::reptheory::{IrrepDescriptor, ModuleDescriptor, TensorProduct};
use crate::rootsys::SimpleType;

const DATA: &str = include_str!("../data/golden.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Golden {
    pub schema_version: u32,
    pub convention: String,
    pub table1: Vec<Table1Golden>,
    pub enumeration: Vec<EnumerationGolden>,
    pub real_structures: Vec<RealStructureGolden>,
    pub compact_stabilizer: Vec<TripleGolden>,
    pub main_theorem: Vec<MainCaseGolden>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Wolf {
    pub label: String,
    pub top: String,
    pub bottom: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table1Golden {
    pub id: String,
    pub quote: String,
    pub n_range: Option<[usize; 2]>,
    pub l: String,
    pub wolf: Wolf,
    pub g: Vec<String>,
    pub v: Vec<Vec<String>>,
    pub as_printed: String,
    pub dim: String,
    pub h_prime: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct EnumerationGolden {
    pub case: String,
    pub quote: String,
    pub n_range: Option<[usize; 2]>,
    pub module: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SplitForms {
    pub forms: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RealStructureGolden {
    pub case: String,
    pub quote: String,
    pub n_range: Option<[usize; 2]>,
    #[serde(default)]
    pub even_only: bool,
    pub v: Vec<Vec<String>>,
    pub forms: Vec<Vec<String>>,
    /// Forms parametrized by `k + l = n`, `k <= l`.
    pub split: Option<SplitForms>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TripleGolden {
    pub quote: String,
    pub n_range: Option<[usize; 2]>,
    pub v: Vec<Vec<String>>,
    pub forms: Vec<String>,
    pub h0: Vec<String>,
    pub h0_center: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Positive,
    Negative,
    Indefinite,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MainCaseGolden {
    pub id: String,
    pub quote: String,
    pub n_range: Option<[usize; 2]>,
    pub reducible: bool,
    pub v: Vec<Vec<String>>,
    pub forms: Vec<String>,
    pub h0: Vec<String>,
    pub h0_center: usize,
    pub metric: MetricKind,
    pub signature: Option<[String; 2]>,
}

/// The parsed reference data.
pub fn golden() -> Result<&'static Golden> {
    static CELL: OnceLock<std::result::Result<Golden, String>> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(DATA).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| LieError::Golden(e.clone()))
}

/// `n` values of a possibly parametric entry; `[None]` for a fixed one.
pub fn instances(range: Option<[usize; 2]>) -> Vec<Option<usize>> {
    match range {
        Some([lo, hi]) => (lo..=hi).map(Some).collect(),
        None => vec![None],
    }
}

/// Evaluates a linear expression such as `2n+1`, `n-2`, `k` or `14`.
pub fn eval_linear(expr: &str, vars: &[(char, i64)]) -> Result<i64> {
    let bad = |why: &str| LieError::Golden(format!("expression `{expr}`: {why}"));
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let mut total = 0i64;
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if rest.len() == s.len() => (1, rest),
            _ => return Err(bad("expected + or -")),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
        let coef: i64 = if digits == 0 { 1 } else { term[..digits].parse().map_err(|_| bad("number"))? };
        let value = match &term[digits..] {
            "" if digits > 0 => coef,
            v if v.chars().count() == 1 => {
                let c = v.chars().next().expect("one char");
                let (_, x) = vars.iter().find(|(n, _)| *n == c).ok_or_else(|| bad("unbound variable"))?;
                coef * x
            }
            _ => return Err(bad("malformed term")),
        };
        total += sign * value;
    }
    Ok(total)
}

/// Replaces every `{expr}` by its value.
pub fn instantiate(template: &str, vars: &[(char, i64)]) -> Result<String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| LieError::Golden(format!("unclosed template `{template}`")))?;
        out.push_str(&eval_linear(&rest[open + 1..open + close], vars)?.to_string());
        rest = &rest[open + close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

pub fn n_vars(n: Option<usize>) -> Vec<(char, i64)> {
    n.map(|n| vec![('n', n as i64)]).unwrap_or_default()
}

/// Resolves `GROUP:std`, `GROUP:dual` or `TYPE:w1,..` into tensor factors.
pub fn resolve_token(token: &str, vars: &[(char, i64)]) -> Result<TensorProduct> {
    let t = instantiate(token, vars)?;
    let (head, tail) = t
        .split_once(':')
        .ok_or_else(|| LieError::Golden(format!("module token `{t}` lacks `:`")))?;
    match tail {
        "std" => Group::parse(head)?.standard(),
        "dual" => Ok(Group::parse(head)?.standard()?.dual()),
        _ => Ok(TensorProduct(vec![t.parse::<IrrepDescriptor>()?])),
    }
}

/// A module written as a list of summands, each a list of tensor tokens.
/// Summand order is kept, so `U` comes first in `U + U*`.
pub fn resolve_module(v: &[Vec<String>], vars: &[(char, i64)]) -> Result<ModuleDescriptor> {
    let summands = v
        .iter()
        .map(|s| {
            let mut f = Vec::new();
            for tok in s {
                f.extend(resolve_token(tok, vars)?.0);
            }
            Ok(TensorProduct(f))
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleDescriptor::new(summands)
}

/// Canonical simple types of a list of group labels.
pub fn resolve_types(labels: &[String], vars: &[(char, i64)]) -> Result<Vec<SimpleType>> {
    let mut v = Vec::new();
    for l in labels {
        v.extend(Group::parse(&instantiate(l, vars)?)?.types());
    }
    Ok(canonical_types(&v))
}

fn types_text(ts: &[SimpleType]) -> String {
    if ts.is_empty() {
        "1".into()
    } else {
        ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ")
    }
}

/// The golden encoding of a row at `n`, matching `Table1Row::encode`.
pub fn table1_expected(row: &Table1Golden, n: Option<usize>) -> Result<String> {
    let vars = n_vars(n);
    let l = match resolve_types(std::slice::from_ref(&row.l), &vars)?.as_slice() {
        [t] => *t,
        other => return Err(LieError::Golden(format!("row {}: l resolves to {other:?}", row.id))),
    };
    let top = compact_dimension(&instantiate(&row.wolf.top, &vars)?)?;
    let mut bottom = 0;
    for b in &row.wolf.bottom {
        bottom += compact_dimension(&instantiate(b, &vars)?)?;
    }
    let module = resolve_module(&row.v, &vars)?.canonical();
    Ok(format!(
        "l={} | G={} | V={} | dim={} | H'={} | dimN={}",
        l,
        types_text(&resolve_types(&row.g, &vars)?),
        module,
        eval_linear(&row.dim, &vars)?,
        types_text(&resolve_types(&row.h_prime, &vars)?),
        top - bottom
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Check {
    pub id: String,
    pub n: Option<usize>,
    pub wolf: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

/// Re-derives every golden row and compares encodings byte for byte.
pub fn check_table1() -> Result<Vec<Table1Check>> {
    let g = golden()?;
    let mut out = Vec::new();
    for row in &g.table1 {
        for n in instances(row.n_range) {
            let expected = table1_expected(row, n)?;
            let mut computed = table1_row(&row.id, n)?;
            computed.h_prime = canonical_types(&computed.h_prime);
            let computed = computed.encode();
            out.push(Table1Check {
                id: row.id.clone(),
                n,
                wolf: instantiate(&row.wolf.label, &n_vars(n))?,
                matches: expected == computed,
                expected,
                computed,
            });
        }
    }
    Ok(out)
}

/// The enumeration list as written, without diagram-automorphism folding,
/// instantiated over each entry's range and restricted to rank `max_rank`.
pub fn enumeration_expected(max_rank: usize) -> Result<BTreeSet<IrrepDescriptor>> {
    let mut out = BTreeSet::new();
    for e in &golden()?.enumeration {
        for n in instances(e.n_range) {
            let t = resolve_token(&e.module, &n_vars(n))?;
            let [d] = t.0.as_slice() else {
                return Err(LieError::Golden(format!("{} is not irreducible", e.module)));
            };
            if d.algebra.rank() <= max_rank {
                out.insert(d.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_loads() {
        let g = golden().unwrap();
        assert_eq!(g.schema_version, 1);
        assert_eq!(g.table1.len(), 8);
        assert_eq!(g.main_theorem.len(), 12);
    }

    #[test]
    fn linear_expressions() {
        let v = [('n', 5), ('k', 2)];
        assert_eq!(eval_linear("2n", &v).unwrap(), 10);
        assert_eq!(eval_linear("n+2", &v).unwrap(), 7);
        assert_eq!(eval_linear("2n-k+1", &v).unwrap(), 9);
        assert_eq!(eval_linear("-3", &v).unwrap(), -3);
        assert!(eval_linear("m", &v).is_err());
        assert!(eval_linear("n*2", &v).is_err());
        assert_eq!(instantiate("so({k},{n-k})", &v).unwrap(), "so(2,3)");
    }

    #[test]
    fn tokens_resolve() {
        let m = resolve_module(&[vec!["SL2:std".into(), "SO7:std".into()]], &[]).unwrap();
        assert_eq!(m.to_string(), "A1:1 * B3:1,0,0");
        let m = resolve_module(&[vec!["SL{n}:std".into()], vec!["SL{n}:dual".into()]], &n_vars(Some(3))).unwrap();
        assert!(m.is_sum_with_dual());
    }

    #[test]
    fn e8_row_encodes() {
        let g = golden().unwrap();
        let row = g.table1.iter().find(|r| r.id == "E8").unwrap();
        assert_eq!(
            table1_expected(row, None).unwrap(),
            "l=E8 | G=E7 | V=E7:0,0,0,0,0,0,1 | dim=56 | H'=E6 | dimN=112"
        );
    }
}
