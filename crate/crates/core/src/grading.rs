//! The five-step grading of a simple Lie algebra by its highest root and the
//! symplectic module carried by the degree `-1` piece.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{LieError, Result};
use crate::groups::canonical_types;
use crate::orbits::tensor_levi;
use crate::reptheory::{IrrepDescriptor, ModuleDescriptor, TensorProduct};
use crate::rootsys::{root_system, Family, SimpleType, SubSystem, Weight};

#[derive(Debug, Clone, Serialize)]
pub struct HighestRootGrading {
    pub source: SimpleType,
    /// Roots `alpha` with `<alpha, mu^vee> = k`, for `k` in `-2..=2`. Piece 0
    /// also contains the Cartan subalgebra, counted in `rank`.
    pub pieces: BTreeMap<i32, Vec<Vec<i32>>>,
    pub rank: usize,
    /// Semisimple part `g` of the degree 0 piece, without the `sl2` of `mu`.
    pub levi_types: Vec<SimpleType>,
    #[serde(skip)]
    pub levi: SubSystem,
}

impl HighestRootGrading {
    pub fn piece(&self, k: i32) -> &[Vec<i32>] {
        self.pieces.get(&k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `rank + sum |pieces(k)|`.
    pub fn dimension(&self) -> usize {
        self.rank + self.pieces.values().map(|v| v.len()).sum::<usize>()
    }
}

/// Grades every root of `l` by its pairing with the highest coroot.
pub fn highest_root_grading(l: SimpleType) -> Result<HighestRootGrading> {
    let rs = root_system(l);
    let mu = rs.highest_root().to_vec();
    let mut pieces: BTreeMap<i32, Vec<Vec<i32>>> = (-2..=2).map(|k| (k, Vec::new())).collect();
    for r in rs.all_roots() {
        let k = rs.cartan_pairing(&r, &mu) as i32;
        pieces
            .get_mut(&k)
            .ok_or_else(|| LieError::Violation(format!("grading eigenvalue {k} outside -2..2")))?
            .push(r);
    }
    let levi = rs.sub_root_system(|r| rs.cartan_pairing(r, &mu) == 0)?;
    Ok(HighestRootGrading {
        source: l,
        pieces,
        rank: rs.rank(),
        levi_types: levi.types(),
        levi,
    })
}

/// The standard symplectic module `l_{-1}` over `g = [l_0, l_0]'`.
#[derive(Debug, Clone, Serialize)]
pub struct StandardModule {
    pub source: SimpleType,
    pub levi_types: Vec<SimpleType>,
    pub module: ModuleDescriptor,
    pub dim: usize,
    /// Semisimple part of the stabilizer of a highest weight vector.
    pub h_prime: Vec<SimpleType>,
    /// Dimension of the centre of the reductive part of `l_0` beyond `h_mu`.
    pub center_dim: usize,
}

/// Reads off `l_{-1}` as a `g`-module: its highest weight vectors are the
/// roots `beta` in degree `-1` with `beta + gamma` not a root for every simple
/// root `gamma` of `g`; each contributes `<beta, gamma_j^vee>` per component.
pub fn standard_module_of(l: SimpleType) -> Result<StandardModule> {
    let gr = highest_root_grading(l)?;
    let rs = root_system(l);
    let minus_one = gr.piece(-1);
    if minus_one.is_empty() {
        return Err(LieError::Unsupported(format!("{l} has an empty degree -1 piece")));
    }
    let mut summands = Vec::new();
    for beta in minus_one {
        let highest = gr.levi.components.iter().all(|c| {
            c.simple_roots.iter().all(|g| {
                let up: Vec<i32> = beta.iter().zip(g).map(|(a, b)| a + b).collect();
                !rs.is_root(&up)
            })
        });
        if !highest {
            continue;
        }
        let factors = gr
            .levi
            .components
            .iter()
            .map(|c| {
                let w = c.simple_roots.iter().map(|g| rs.cartan_pairing(beta, g)).collect();
                IrrepDescriptor::new(c.ty, Weight(w))
            })
            .collect::<Result<Vec<_>>>()?;
        summands.push(TensorProduct(factors));
    }
    let module = ModuleDescriptor::new(summands)?;
    let dim = module.dimension();
    if dim != minus_one.len().into() {
        return Err(LieError::Violation(format!(
            "{l}: highest weights of l_-1 account for dimension {dim}, expected {}",
            minus_one.len()
        )));
    }
    let h_prime = match module.summands.first() {
        Some(t) if !t.0.is_empty() => tensor_levi(t)?,
        _ => Vec::new(),
    };
    let g_rank: usize = gr.levi.rank();
    Ok(StandardModule {
        source: l,
        levi_types: canonical_types(&gr.levi_types),
        module: module.canonical(),
        dim: minus_one.len(),
        h_prime,
        center_dim: l.rank() - 1 - g_rank,
    })
}

/// One row of the table of standard modules, instantiated at `n` for the
/// parametric families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub id: String,
    pub n: Option<usize>,
    pub l: SimpleType,
    /// Real dimension of the Wolf space, `2 |l_{-1}|`.
    pub wolf_real_dim: usize,
    pub g: Vec<SimpleType>,
    pub module: ModuleDescriptor,
    pub dim: usize,
    pub h_prime: Vec<SimpleType>,
}

fn types_text(ts: &[SimpleType]) -> String {
    if ts.is_empty() {
        "1".into()
    } else {
        ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ")
    }
}

impl Table1Row {
    /// Canonical single-line encoding used for golden comparison.
    pub fn encode(&self) -> String {
        format!(
            "l={} | G={} | V={} | dim={} | H'={} | dimN={}",
            self.l,
            types_text(&self.g),
            self.module,
            self.dim,
            types_text(&self.h_prime),
            self.wolf_real_dim
        )
    }
}

/// Row identifiers in table order.
pub const TABLE1_IDS: [&str; 8] = ["A", "BD", "C", "G", "F", "E6", "E7", "E8"];

/// The algebra `l` of a row at parameter `n`: `sl_{n+2}`, `so_{n+4}`, `sp_{n+1}`.
pub fn table1_algebra(id: &str, n: usize) -> Result<SimpleType> {
    let bad = || LieError::Unsupported(format!("no table row `{id}` at n = {n}"));
    let ty = match id {
        "A" if n >= 2 => SimpleType::new(Family::A, n + 1)?,
        "BD" if n >= 3 => {
            let m = n + 4;
            if m % 2 == 1 {
                SimpleType::new(Family::B, (m - 1) / 2)?
            } else {
                SimpleType::new(Family::D, m / 2)?
            }
        }
        "C" if n >= 1 => SimpleType::new(Family::C, n + 1)?,
        "G" => SimpleType::of(Family::G, 2),
        "F" => SimpleType::of(Family::F, 4),
        "E6" | "E7" | "E8" => id.parse()?,
        _ => return Err(bad()),
    };
    Ok(ty)
}

pub fn is_parametric(id: &str) -> bool {
    matches!(id, "A" | "BD" | "C")
}

pub fn table1_row(id: &str, n: Option<usize>) -> Result<Table1Row> {
    let l = table1_algebra(id, n.unwrap_or(0))?;
    let s = standard_module_of(l)?;
    Ok(Table1Row {
        id: id.to_string(),
        n,
        l,
        wolf_real_dim: 2 * s.dim,
        g: s.levi_types,
        module: s.module,
        dim: s.dim,
        h_prime: s.h_prime,
    })
}

/// All rows, with the parametric families instantiated for `n` in `ns`
/// (values below a family's minimum are skipped).
pub fn table1(ns: std::ops::RangeInclusive<usize>) -> Result<Vec<Table1Row>> {
    let mut rows = Vec::new();
    for id in TABLE1_IDS {
        if is_parametric(id) {
            for n in ns.clone() {
                if table1_algebra(id, n).is_ok() {
                    rows.push(table1_row(id, Some(n))?);
                }
            }
        } else {
            rows.push(table1_row(id, None)?);
        }
    }
    Ok(rows)
}
