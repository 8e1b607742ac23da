//! Bounded search for symplectic modules with a Lagrangian highest weight
//! orbit, and their identification as standard modules or extensions.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{LieError, Result};
use crate::grading::standard_module_of;
use crate::groups::so_standard;
use crate::orbits::{is_lagrangian, tensor_orbit_dimension, OrbitReport};
use crate::reptheory::{
    for_each_dominant_weight_up_to, form_type, FormType, IrrepDescriptor, ModuleDescriptor, TensorProduct,
};
use crate::rootsys::{Family, SimpleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub include_exceptional: bool,
    pub max_classical_rank: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            include_exceptional: true,
            max_classical_rank: 16,
        }
    }
}

impl SearchConfig {
    pub fn new(include_exceptional: bool, max_classical_rank: usize) -> Result<Self> {
        if max_classical_rank < 2 {
            return Err(LieError::Unsupported("max_classical_rank must be at least 2".into()));
        }
        Ok(SearchConfig {
            include_exceptional,
            max_classical_rank,
        })
    }

    /// One representative per isomorphism class: `A1..`, `B3..`, `C2..`,
    /// `D4..` up to the cutoff, then the exceptional types.
    pub fn types(&self) -> Vec<SimpleType> {
        let r = self.max_classical_rank;
        let mut v: Vec<SimpleType> = (1..=r).map(|n| SimpleType::of(Family::A, n)).collect();
        v.extend((3..=r).map(|n| SimpleType::of(Family::B, n)));
        v.extend((2..=r).map(|n| SimpleType::of(Family::C, n)));
        v.extend((4..=r).map(|n| SimpleType::of(Family::D, n)));
        if self.include_exceptional {
            for s in ["E6", "E7", "E8", "F4", "G2"] {
                v.push(s.parse().expect("exceptional type"));
            }
        }
        v
    }
}

/// `dim g - rk g + 2`.
pub fn dimension_bound(ty: SimpleType) -> usize {
    ty.dimension() - ty.rank() + 2
}

/// All nonzero dominant weights whose module is symplectic of dimension at
/// most `dim g - rk g + 2`, by coordinate DFS pruned on the monotonicity of
/// the Weyl dimension.
pub fn enumerate_symplectic_bounded(ty: SimpleType) -> Vec<IrrepDescriptor> {
    let bound = BigUint::from(dimension_bound(ty));
    let mut out = Vec::new();
    for_each_dominant_weight_up_to(ty, &bound, |d, _| {
        if !d.is_trivial() && form_type(d) == FormType::Symplectic {
            out.push(d.clone());
        }
    });
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    pub module: ModuleDescriptor,
    pub orbit: OrbitReport,
    /// The simple algebra `l` whose grading produces this module.
    pub standard_for: Option<SimpleType>,
    /// The standard module this one extends to.
    pub extension: Option<Extension>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub algebra: Vec<SimpleType>,
    pub module: ModuleDescriptor,
    pub standard_for: SimpleType,
    pub orbit_dim: u64,
}

/// A Lagrangian candidate the whitelist rejects though the orbit count fits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WhitelistGap {
    pub module: ModuleDescriptor,
    pub orbit_dim: u64,
    pub module_dim: u64,
    pub reason: String,
}

fn standard_cache() -> &'static Mutex<BTreeMap<SimpleType, Option<ModuleDescriptor>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<SimpleType, Option<ModuleDescriptor>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn standard_module_key(l: SimpleType) -> Option<ModuleDescriptor> {
    if let Some(m) = standard_cache().lock().expect("standard cache").get(&l) {
        return m.clone();
    }
    let m = standard_module_of(l).ok().map(|s| s.module);
    standard_cache().lock().expect("standard cache").insert(l, m.clone());
    m
}

/// Candidate algebras `l` whose grading could produce a module over `g`:
/// rank one or two above the total rank of `g`, all families.
fn standard_candidates(g: &[SimpleType]) -> Vec<SimpleType> {
    let r: usize = g.iter().map(|t| t.rank()).sum();
    let mut v = Vec::new();
    for rank in [r + 1, r + 2] {
        for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = SimpleType::new(fam, rank) {
                v.push(t);
            }
        }
    }
    v
}

/// The simple algebra whose degree `-1` piece is `m`, if any.
pub fn standard_for(m: &ModuleDescriptor) -> Option<SimpleType> {
    let key = m.canonical();
    standard_candidates(&m.algebra())
        .into_iter()
        .find(|&l| standard_module_key(l).as_ref() == Some(&key))
}

fn fundamental(ty: SimpleType, i: usize) -> IrrepDescriptor {
    IrrepDescriptor::fundamental(ty, i)
}

/// The three embeddings `G in G~` under which a module extends to a standard
/// one: `C_n in A_{2n-1}`, `B5 in D6`, `A1 x G2 in A1 x B3`.
fn extension_candidate(m: &ModuleDescriptor) -> Option<ModuleDescriptor> {
    let key = m.canonical();
    let alg = m.algebra();
    match alg.as_slice() {
        [c] if c.family() == Family::C => {
            let u = TensorProduct(vec![fundamental(*c, 1)]);
            if ModuleDescriptor::with_dual(u).canonical() == key {
                let a = SimpleType::of(Family::A, 2 * c.rank() - 1);
                return Some(ModuleDescriptor::with_dual(TensorProduct(vec![fundamental(a, 1)])));
            }
            None
        }
        [b] if *b == SimpleType::of(Family::B, 5) => {
            if ModuleDescriptor::irreducible(fundamental(*b, 5)).canonical() == key {
                return Some(ModuleDescriptor::irreducible(fundamental(SimpleType::of(Family::D, 6), 5)));
            }
            None
        }
        [_, _] => {
            let a1 = SimpleType::of(Family::A, 1);
            let g2 = SimpleType::of(Family::G, 2);
            let src = ModuleDescriptor::tensor(vec![fundamental(a1, 1), fundamental(g2, 1)]);
            if src.canonical() == key {
                let b3 = SimpleType::of(Family::B, 3);
                return Some(ModuleDescriptor::tensor(vec![fundamental(a1, 1), fundamental(b3, 1)]));
            }
            None
        }
        _ => None,
    }
}

/// For a Lagrangian entry that is not standard, the extension to a standard
/// module of a larger group, validated by equality of the two orbit
/// dimensions and of the module dimensions.
pub fn detect_standard_extension(e: &ClassificationEntry) -> Result<Option<Extension>> {
    if !e.orbit.lagrangian {
        return Err(LieError::Unsupported("extension detection needs a Lagrangian entry".into()));
    }
    if standard_for(&e.module).is_some() {
        return Ok(None);
    }
    let Some(target) = extension_candidate(&e.module) else {
        return Err(LieError::Violation(format!(
            "{} is Lagrangian but neither standard nor one of the three extensions",
            e.module
        )));
    };
    let l = standard_for(&target).ok_or_else(|| {
        LieError::Violation(format!("extension target {target} is not a standard module"))
    })?;
    let orbit_dim = tensor_orbit_dimension(&target.summands[0])?;
    if orbit_dim != e.orbit.orbit_dim || target.dimension() != e.module.dimension() {
        return Err(LieError::Violation(format!(
            "{} -> {target}: orbit dimensions {} and {orbit_dim} differ",
            e.module, e.orbit.orbit_dim
        )));
    }
    Ok(Some(Extension {
        algebra: target.algebra(),
        module: target,
        standard_for: l,
        orbit_dim,
    }))
}

fn entry(module: ModuleDescriptor, orbit: OrbitReport) -> Result<ClassificationEntry> {
    let mut e = ClassificationEntry {
        module,
        orbit,
        standard_for: None,
        extension: None,
    };
    e.standard_for = standard_for(&e.module);
    if e.standard_for.is_none() {
        e.extension = detect_standard_extension(&e)?;
    }
    Ok(e)
}

fn dedup_sorted(mut v: Vec<ClassificationEntry>) -> Vec<ClassificationEntry> {
    let mut seen = BTreeSet::new();
    v.retain(|e| seen.insert(e.module.canonical()));
    v.sort_by_key(|a| a.module.canonical());
    v
}

/// Lagrangian irreducible modules of simple algebras within the bound.
pub fn classify_simple(cfg: &SearchConfig) -> Result<Vec<ClassificationEntry>> {
    let mut out = Vec::new();
    for ty in cfg.types() {
        for d in enumerate_symplectic_bounded(ty) {
            let m = ModuleDescriptor::irreducible(d.canonical());
            let r = is_lagrangian(&m)?;
            if r.lagrangian {
                out.push(entry(m, r)?);
            }
        }
    }
    Ok(dedup_sorted(out))
}

#[derive(Debug, Clone, Serialize)]
pub struct SemisimpleClassification {
    pub entries: Vec<ClassificationEntry>,
    pub whitelist_gaps: Vec<WhitelistGap>,
}

/// Orthogonal modules `V'` of simple algebras (plus `SO4 = A1 x A1`) whose
/// highest weight orbit fills the null cone, `dim C' = dim V' - 1`, within
/// `dim V' <= |R+| + 2` so that `C^2 (x) V'` meets the dimension bound.
fn null_cone_candidates(cfg: &SearchConfig) -> Result<Vec<TensorProduct>> {
    let mut out = Vec::new();
    for ty in cfg.types() {
        let bound = BigUint::from(ty.positive_root_count() + 2);
        let mut found = Vec::new();
        for_each_dominant_weight_up_to(ty, &bound, |d, _| {
            if !d.is_trivial() && form_type(d) == FormType::Orthogonal {
                found.push((d.canonical(), crate::reptheory::weyl_dimension(d)));
            }
        });
        for (d, dim) in found {
            let t = TensorProduct(vec![d]);
            if BigUint::from(tensor_orbit_dimension(&t)? + 1) == dim {
                out.push(t);
            }
        }
    }
    out.push(so_standard(4).expect("SO4"));
    out.sort();
    out.dedup();
    Ok(out)
}

/// Reducible `U + U*` over simple algebras and tensor products
/// `C^2 (x) V'` over `A1 x G'`.
pub fn classify_semisimple(cfg: &SearchConfig) -> Result<SemisimpleClassification> {
    let mut entries = Vec::new();
    let mut gaps = Vec::new();
    for ty in cfg.types() {
        let bound = BigUint::from(ty.positive_root_count() + 1);
        let mut us = Vec::new();
        for_each_dominant_weight_up_to(ty, &bound, |d, _| {
            if !d.is_trivial() {
                us.push(d.clone());
            }
        });
        for u in us {
            let m = ModuleDescriptor::with_dual(TensorProduct(vec![u])).canonical();
            let r = is_lagrangian(&m)?;
            if r.lagrangian {
                entries.push(entry(m, r)?);
            }
        }
    }
    let a1 = SimpleType::of(Family::A, 1);
    for v in null_cone_candidates(cfg)? {
        let mut factors = vec![fundamental(a1, 1)];
        factors.extend(v.0.iter().cloned());
        let m = ModuleDescriptor::tensor(factors).canonical();
        let r = is_lagrangian(&m)?;
        if r.lagrangian {
            entries.push(entry(m, r)?);
        } else if let Some(reason) = r.reasons.iter().find(|s| s.starts_with("whitelist gap")) {
            gaps.push(WhitelistGap {
                module: m.clone(),
                orbit_dim: r.orbit_dim,
                module_dim: r.module_dim,
                reason: reason.clone(),
            });
        }
    }
    gaps.sort_by(|a, b| a.module.cmp(&b.module));
    Ok(SemisimpleClassification {
        entries: dedup_sorted(entries),
        whitelist_gaps: gaps,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub config: SearchConfig,
    pub simple: Vec<ClassificationEntry>,
    pub semisimple: Vec<ClassificationEntry>,
    pub whitelist_gaps: Vec<WhitelistGap>,
}

impl Classification {
    pub fn entries(&self) -> impl Iterator<Item = &ClassificationEntry> {
        self.simple.iter().chain(&self.semisimple)
    }
}

/// Full classification; `Err(Violation)` if some Lagrangian entry is
/// neither standard nor an extension.
pub fn classify(cfg: &SearchConfig) -> Result<Classification> {
    let simple = classify_simple(cfg)?;
    let ss = classify_semisimple(cfg)?;
    Ok(Classification {
        config: *cfg,
        simple,
        semisimple: ss.entries,
        whitelist_gaps: ss.whitelist_gaps,
    })
}
