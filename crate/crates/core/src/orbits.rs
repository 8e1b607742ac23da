//! The orbit of a highest weight vector: Levi type of its stabilizer, its
//! dimension (two independent counts) and the Lagrangian verdict.

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::groups::{canonical_types, so_standard};
use crate::reptheory::{
    module_form_type, weyl_dimension_u64, FormType, IrrepDescriptor, ModuleDescriptor, TensorProduct,
};
use crate::rootsys::{root_system, Family, SimpleType};

/// Largest `SO_n` checked against the null-cone whitelist.
const SO_WHITELIST_MAX: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub module: ModuleDescriptor,
    /// Simple factors of the acting algebra, e.g. `A1 x G2`.
    pub algebra: String,
    /// Weight coordinates for an irreducible module over a simple algebra,
    /// otherwise the module text.
    pub weight: String,
    #[serde(rename = "levi")]
    pub levi_types: Vec<SimpleType>,
    pub orbit_dim: u64,
    pub module_dim: u64,
    pub totally_isotropic: bool,
    pub lagrangian: bool,
    pub reasons: Vec<String>,
}

fn nonzero(d: &IrrepDescriptor) -> Result<()> {
    if d.is_trivial() {
        Err(LieError::ZeroWeight)
    } else {
        Ok(())
    }
}

/// Simple types of the semisimple part of the stabilizer, from the roots
/// orthogonal to the highest weight.
pub fn levi_of_stabilizer(d: &IrrepDescriptor) -> Result<Vec<SimpleType>> {
    nonzero(d)?;
    let rs = root_system(d.algebra);
    let w = &d.highest_weight;
    rs.sub_root_system_type(|r| rs.pairing(w, r).map(|p| p == 0).unwrap_or(false))
}

/// `(dim G - rk G - dim H' + rk H') / 2 + 1` with closed-form dimensions.
pub fn orbit_dimension_levi(d: &IrrepDescriptor) -> Result<u64> {
    let levi = levi_of_stabilizer(d)?;
    let (dim_h, rk_h) = levi
        .iter()
        .fold((0, 0), |(a, b), t| (a + t.dimension(), b + t.rank()));
    let g = d.algebra;
    Ok(((g.dimension() - g.rank() - dim_h + rk_h) / 2 + 1) as u64)
}

/// `#{alpha > 0 : <lambda, alpha^vee> != 0} + 1`.
pub fn orbit_dimension_roots(d: &IrrepDescriptor) -> Result<u64> {
    nonzero(d)?;
    let rs = root_system(d.algebra);
    let n = (0..rs.positive_roots().len())
        .filter(|&k| rs.pairing_positive(&d.highest_weight, k) != 0)
        .count();
    Ok(n as u64 + 1)
}

/// Orbit of `v_1 (x) ... (x) v_k`: the projective orbit is a product of flag
/// manifolds, so `dim = 1 + sum (dim C_i - 1)`.
pub fn tensor_orbit_dimension(t: &TensorProduct) -> Result<u64> {
    let mut total = 1;
    for f in &t.0 {
        total += orbit_dimension_roots(f)? - 1;
    }
    Ok(total)
}

pub fn tensor_levi(t: &TensorProduct) -> Result<Vec<SimpleType>> {
    let mut v = Vec::new();
    for f in &t.0 {
        v.extend(levi_of_stabilizer(f)?);
    }
    Ok(canonical_types(&v))
}

fn module_dim(m: &ModuleDescriptor) -> Result<u64> {
    let mut total: u64 = 0;
    for s in &m.summands {
        let mut d: u64 = 1;
        for f in &s.0 {
            d = d
                .checked_mul(weyl_dimension_u64(f)?)
                .ok_or_else(|| LieError::Overflow(m.to_string()))?;
        }
        total = total.checked_add(d).ok_or_else(|| LieError::Overflow(m.to_string()))?;
    }
    Ok(total)
}

/// Standard module of `Sp_n` (including `SL_2 = Sp_1`).
pub fn is_sp_standard(d: &IrrepDescriptor) -> bool {
    let t = d.algebra;
    let w = &d.highest_weight.0;
    let pi1 = w[0] == 1 && w[1..].iter().all(|&x| x == 0);
    match t.family() {
        Family::C => pi1,
        Family::A => t.rank() == 1 && pi1,
        Family::B => t.rank() == 2 && w == &[0, 1],
        _ => false,
    }
}

/// Standard module of `SL_n` or `Sp_n`, up to diagram automorphism.
fn is_projectively_transitive(d: &IrrepDescriptor) -> bool {
    let c = d.canonical();
    is_sp_standard(&c)
        || (c.algebra.family() == Family::A && {
            let w = &c.highest_weight.0;
            w[0] == 1 && w[1..].iter().all(|&x| x == 0)
        })
}

/// Whether the factors (as a whole) are the standard module of `SO_n` or
/// the 7-dimensional module of `G2`.
fn null_cone_whitelisted(factors: &[IrrepDescriptor]) -> Option<String> {
    let key = ModuleDescriptor::tensor(factors.to_vec()).canonical();
    let g2 = SimpleType::of(Family::G, 2);
    if factors.len() == 1 && factors[0].algebra == g2 && factors[0].highest_weight.0 == [1, 0] {
        return Some("G2 on C^7".into());
    }
    let dim: u64 = factors.iter().filter_map(|f| weyl_dimension_u64(f).ok()).product();
    if (3..=SO_WHITELIST_MAX as u64).contains(&dim) {
        let n = dim as usize;
        if let Some(std) = so_standard(n) {
            if ModuleDescriptor::tensor(std.0).canonical() == key {
                return Some(format!("SO{n} on C^{n}"));
            }
        }
    }
    None
}

fn describe_algebra(m: &ModuleDescriptor) -> String {
    m.algebra().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ")
}

fn describe_weight(m: &ModuleDescriptor) -> String {
    match m.summands.as_slice() {
        [t] if t.0.len() == 1 => t.0[0].highest_weight.to_string(),
        _ => m.to_string(),
    }
}

/// Lagrangian verdict for a module, decided structurally:
///
/// - `U + U*`: the cone is `U - {0}` when `U` is a standard module of `SL_n` or
///   `Sp_n`; the open-orbit count `orbit_dim(U) = dim U` is cross-checked.
/// - irreducible over a simple algebra: totally isotropic unless it is the
///   standard module of `Sp_n`, Lagrangian iff additionally `2 dim C = dim V`.
/// - irreducible over a non-simple algebra: Lagrangian iff it is
///   `C^2 (x) V'` with `V'` orthogonal, the dimension identity holds and `V'`
///   is on the null-cone whitelist (`SO_n` standard, `G2` on `C^7`).
pub fn is_lagrangian(m: &ModuleDescriptor) -> Result<OrbitReport> {
    if m.summands.is_empty() {
        return Err(LieError::EmptyModule);
    }
    for s in &m.summands {
        if s.0.is_empty() || s.0.iter().any(|f| f.is_trivial()) {
            return Err(LieError::Unsupported(format!(
                "{m}: every tensor factor must have a nonzero highest weight"
            )));
        }
    }
    let module_dim = module_dim(m)?;
    let mut reasons = Vec::new();
    let first = &m.summands[0];
    let mut report = OrbitReport {
        module: m.clone(),
        algebra: describe_algebra(m),
        weight: describe_weight(m),
        levi_types: tensor_levi(first)?,
        orbit_dim: tensor_orbit_dimension(first)?,
        module_dim,
        totally_isotropic: false,
        lagrangian: false,
        reasons: Vec::new(),
    };

    if module_form_type(m)? != FormType::Symplectic {
        reasons.push("not symplectic".to_string());
        report.reasons = reasons;
        return Ok(report);
    }

    if m.summands.len() == 2 {
        // U + U*: U is isotropic and the cone lies in U.
        report.totally_isotropic = true;
        let open = report.orbit_dim * 2 == module_dim;
        let standard = first.0.len() == 1 && is_projectively_transitive(&first.0[0]);
        if open != standard {
            return Err(LieError::Violation(format!(
                "{m}: open-orbit count ({open}) disagrees with the SL/Sp standard-module test ({standard})"
            )));
        }
        report.lagrangian = standard;
        reasons.push(if standard {
            "U + U*: U is the standard module of SL_n or Sp_n, cone = U - {0}".into()
        } else {
            "U + U*: highest weight orbit is not open in U".into()
        });
        report.reasons = reasons;
        return Ok(report);
    }
    if m.summands.len() > 2 {
        reasons.push("reducible with more than two summands".into());
        report.reasons = reasons;
        return Ok(report);
    }

    let factors = &first.0;
    if factors.len() == 1 {
        let d = &factors[0];
        report.totally_isotropic = !is_sp_standard(d);
        if !report.totally_isotropic {
            reasons.push("standard module of Sp_n: the orbit is open, not isotropic".into());
        }
        report.lagrangian = report.totally_isotropic && 2 * report.orbit_dim == module_dim;
        if report.totally_isotropic && !report.lagrangian {
            reasons.push(format!(
                "2 * orbit_dim = {} differs from dim V = {module_dim}",
                2 * report.orbit_dim
            ));
        }
        report.reasons = reasons;
        return Ok(report);
    }

    // Non-simple: faithfulness rules out the open Sp case.
    report.totally_isotropic = true;
    let sl2_std = |f: &IrrepDescriptor| f.algebra == SimpleType::of(Family::A, 1) && f.highest_weight.0 == [1];
    let dims_ok = 2 * report.orbit_dim == module_dim;
    let mut verdict = false;
    for (k, f) in factors.iter().enumerate() {
        if !sl2_std(f) {
            continue;
        }
        let rest: Vec<IrrepDescriptor> =
            factors.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, x)| x.clone()).collect();
        let rest_module = ModuleDescriptor::tensor(rest.clone());
        if module_form_type(&rest_module)? != FormType::Orthogonal {
            continue;
        }
        // With dim V_1 = 2 the identity 2 (dim V_1 + dim V' - 2) = dim V_1 dim V'
        // reduces to the orbit count below.
        if !dims_ok {
            continue;
        }
        match null_cone_whitelisted(&rest) {
            Some(name) => {
                verdict = true;
                reasons.push(format!("C^2 (x) V' with V' = {name}"));
                break;
            }
            None => reasons.push(format!(
                "whitelist gap: C^2 (x) ({rest_module}) satisfies 2 * orbit_dim = dim V but V' is \
                 neither an SO_n standard module nor G2 on C^7"
            )),
        }
    }
    if !verdict && reasons.is_empty() {
        reasons.push(if dims_ok {
            "not of the shape C^2 (x) orthogonal V'".into()
        } else {
            format!("2 * orbit_dim = {} differs from dim V = {module_dim}", 2 * report.orbit_dim)
        });
    }
    report.lagrangian = verdict;
    report.reasons = reasons;
    Ok(report)
}

/// Single irreducible module over a simple algebra.
pub fn irrep_report(d: &IrrepDescriptor) -> Result<OrbitReport> {
    is_lagrangian(&ModuleDescriptor::irreducible(d.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(s: &str) -> IrrepDescriptor {
        s.parse().unwrap()
    }

    fn module(s: &str) -> ModuleDescriptor {
        s.parse().unwrap()
    }

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn levi_examples() {
        assert_eq!(levi_of_stabilizer(&irrep("E7:0,0,0,0,0,0,1")).unwrap(), vec![t("E6")]);
        assert_eq!(levi_of_stabilizer(&irrep("C3:0,0,1")).unwrap(), vec![t("A2")]);
        assert_eq!(levi_of_stabilizer(&irrep("B6:0,0,0,0,0,1")).unwrap(), vec![t("A5")]);
        assert!(matches!(
            levi_of_stabilizer(&irrep("B6:0,0,0,0,0,0")),
            Err(LieError::ZeroWeight)
        ));
    }

    #[test]
    fn orbit_dimension_examples() {
        let d = irrep("B6:0,0,0,0,0,1");
        assert_eq!(orbit_dimension_levi(&d).unwrap(), 22);
        assert_eq!(orbit_dimension_roots(&d).unwrap(), 22);
        let d = irrep("E7:0,0,0,0,0,0,1");
        assert_eq!(orbit_dimension_levi(&d).unwrap(), 28);
        assert_eq!(orbit_dimension_roots(&d).unwrap(), 28);
        assert_eq!(orbit_dimension_levi(&irrep("A1:3")).unwrap(), 2);
        assert_eq!(orbit_dimension_roots(&irrep("C3:0,0,1")).unwrap(), 7);
        assert_eq!(orbit_dimension_roots(&irrep("A5:0,0,1,0,0")).unwrap(), 10);
    }

    #[test]
    fn lagrangian_examples() {
        let r = irrep_report(&irrep("D6:0,0,0,0,1,0")).unwrap();
        assert!(r.lagrangian);
        assert_eq!((r.orbit_dim, r.module_dim), (16, 32));
        let r = irrep_report(&irrep("B6:0,0,0,0,0,1")).unwrap();
        assert!(!r.lagrangian && r.totally_isotropic);
        assert_eq!((r.orbit_dim, r.module_dim), (22, 64));
        for n in 2..=6 {
            let mut w = vec![0; n];
            w[0] = 1;
            let d = IrrepDescriptor::with_weight(SimpleType::of(Family::C, n), &w).unwrap();
            let r = irrep_report(&d).unwrap();
            assert!(!r.lagrangian && !r.totally_isotropic);
            assert_eq!(r.orbit_dim, r.module_dim);
        }
        let r = is_lagrangian(&module("A1:1 * B3:1,0,0")).unwrap();
        assert!(r.lagrangian, "{r:?}");
        assert_eq!(r.orbit_dim, 7);
        let r = is_lagrangian(&module("A1:1 * G2:1,0")).unwrap();
        assert!(r.lagrangian);
        assert_eq!(r.levi_types, vec![t("A1")]);
        let r = is_lagrangian(&module("A1:1 * A1:1 * A1:1")).unwrap();
        assert!(r.lagrangian && r.totally_isotropic);
    }

    #[test]
    fn reducible_examples() {
        let r = is_lagrangian(&module("A3:1,0,0 + A3:0,0,1")).unwrap();
        assert!(r.lagrangian);
        assert_eq!(r.orbit_dim, 4);
        let r = is_lagrangian(&module("C3:1,0,0 + C3:1,0,0")).unwrap();
        assert!(r.lagrangian);
        let r = is_lagrangian(&module("A3:0,1,0 + A3:0,1,0")).unwrap();
        assert!(!r.lagrangian);
    }

    #[test]
    fn spin7_is_a_whitelist_gap() {
        let r = is_lagrangian(&module("A1:1 * B3:0,0,1")).unwrap();
        assert!(!r.lagrangian);
        assert_eq!(2 * r.orbit_dim, r.module_dim);
        assert!(r.reasons[0].starts_with("whitelist gap"));
    }

    #[test]
    fn non_symplectic_modules_are_flagged() {
        let r = irrep_report(&irrep("B3:1,0,0")).unwrap();
        assert!(!r.lagrangian);
        assert_eq!(r.reasons, vec!["not symplectic".to_string()]);
        assert!(matches!(is_lagrangian(&ModuleDescriptor { summands: vec![] }), Err(LieError::EmptyModule)));
    }

    #[test]
    fn report_json_has_the_documented_keys() {
        let r = irrep_report(&irrep("E7:0,0,0,0,0,0,1")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for k in ["algebra", "weight", "levi", "orbit_dim", "module_dim", "totally_isotropic", "lagrangian", "reasons"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        let back: OrbitReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
