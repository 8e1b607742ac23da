//! Inner real forms with a compact Cartan subalgebra, encoded as `Z/2`
//! gradings `epsilon` of the root lattice (`1` = noncompact), and the
//! signature count for open orbits on the projectivized cone.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::golden::{
    golden, instances, instantiate, n_vars, resolve_module, resolve_types, eval_linear, MainCaseGolden, MetricKind,
};
use crate::groups::{canonical_types, so_types, sp_types};
use crate::orbits::tensor_levi;
use crate::reptheory::{ModuleDescriptor, TensorProduct};
use crate::rootsys::{root_system, Family, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealFormGrading {
    pub factors: Vec<SimpleType>,
    /// One `0/1` vector per factor, indexed by simple roots.
    pub epsilon: Vec<Vec<u8>>,
}

impl RealFormGrading {
    pub fn new(factors: Vec<SimpleType>, epsilon: Vec<Vec<u8>>) -> Result<Self> {
        if factors.len() != epsilon.len()
            || factors.iter().zip(&epsilon).any(|(t, e)| t.rank() != e.len() || e.iter().any(|&x| x > 1))
        {
            return Err(LieError::MismatchedAlgebra(
                "epsilon must hold one 0/1 entry per simple root of each factor".into(),
            ));
        }
        Ok(RealFormGrading { factors, epsilon })
    }

    pub fn compact(factors: Vec<SimpleType>) -> Self {
        let epsilon = factors.iter().map(|t| vec![0; t.rank()]).collect();
        RealFormGrading { factors, epsilon }
    }

    pub fn simple(ty: SimpleType, epsilon: Vec<u8>) -> Result<Self> {
        Self::new(vec![ty], vec![epsilon])
    }

    /// Whether the root (simple-root coordinates of factor `k`) is noncompact.
    pub fn is_noncompact(&self, k: usize, root: &[i32]) -> bool {
        root.iter()
            .zip(&self.epsilon[k])
            .map(|(&c, &e)| c.rem_euclid(2) as u8 * e)
            .sum::<u8>()
            % 2
            == 1
    }

    /// `(#compact, #noncompact)` positive roots of factor `k`.
    fn counts(&self, k: usize) -> (usize, usize) {
        let rs = root_system(self.factors[k]);
        let nc = rs.positive_roots().iter().filter(|r| self.is_noncompact(k, r)).count();
        (rs.positive_roots().len() - nc, nc)
    }
}

/// `dim p - dim k` with `dim k = rank + 2 #compact+` and `dim p = 2 #noncompact+`.
pub fn index(g: &RealFormGrading) -> i64 {
    (0..g.factors.len())
        .map(|k| {
            let (c, nc) = g.counts(k);
            2 * nc as i64 - (g.factors[k].rank() + 2 * c) as i64
        })
        .sum()
}

/// Simple types of the maximal compact subalgebra of factor `k` and the
/// dimension of its centre.
pub fn compact_subalgebra(g: &RealFormGrading, k: usize) -> Result<(Vec<SimpleType>, usize)> {
    let rs = root_system(g.factors[k]);
    let sub = rs.sub_root_system(|r| !g.is_noncompact(k, r))?;
    Ok((canonical_types(&sub.types()), rs.rank() - sub.rank()))
}

/// `s_i` acting on gradings: `(s_i eps)(alpha_j) = eps(s_i alpha_j)`.
pub fn weyl_act(ty: SimpleType, eps: &[u8], i: usize) -> Vec<u8> {
    let c = ty.cartan_matrix();
    (0..eps.len())
        .map(|j| ((eps[j] as i32 - c[i][j] * eps[i] as i32).rem_euclid(2)) as u8)
        .collect()
}

/// The Weyl orbit of a grading of a simple algebra.
pub fn weyl_orbit(ty: SimpleType, eps: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut queue = VecDeque::from([eps.to_vec()]);
    seen.insert(eps.to_vec());
    while let Some(e) = queue.pop_front() {
        for i in 0..ty.rank() {
            let f = weyl_act(ty, &e, i);
            if seen.insert(f.clone()) {
                queue.push_back(f);
            }
        }
    }
    seen
}

/// A named inner real form with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealFormLabel {
    pub epsilon: Vec<u8>,
    pub index: i64,
    pub compact_types: Vec<SimpleType>,
    pub center_dim: usize,
    pub names: Vec<String>,
}

/// `(name, compact types, centre, index)` for every inner real form of `ty`,
/// with classical aliases for low-rank coincidences.
pub fn catalog(ty: SimpleType) -> Vec<(String, Vec<SimpleType>, usize, i64)> {
    let n = ty.rank();
    let mut out: Vec<(String, Vec<SimpleType>, usize, i64)> = Vec::new();
    let so = |out: &mut Vec<_>, total: usize| {
        for p in 0..=total / 2 {
            let q = total - p;
            if (p * q) % 2 == 1 {
                continue;
            }
            let mut k = so_types(p);
            k.extend(so_types(q));
            let center = (p == 2) as usize + (q == 2) as usize;
            let idx = (p * q) as i64 - (p * p.saturating_sub(1) / 2 + q * q.saturating_sub(1) / 2) as i64;
            let name = if p == 0 { format!("so({q})") } else { format!("so({p},{q})") };
            out.push((name, canonical_types(&k), center, idx));
        }
    };
    let su = |out: &mut Vec<_>, total: usize| {
        for p in 0..=total / 2 {
            let q = total - p;
            let mut k = Vec::new();
            if p >= 2 {
                k.push(SimpleType::of(Family::A, p - 1));
            }
            if q >= 2 {
                k.push(SimpleType::of(Family::A, q - 1));
            }
            let idx = 2 * (p * q) as i64 - (p * p + q * q) as i64 + 1;
            let name = if p == 0 { format!("su({q})") } else { format!("su({p},{q})") };
            out.push((name, canonical_types(&k), (p >= 1) as usize, idx));
        }
    };
    let sp = |out: &mut Vec<(String, Vec<SimpleType>, usize, i64)>, total: usize| {
        for p in 0..=total / 2 {
            let q = total - p;
            let mut k = sp_types(p);
            k.extend(sp_types(q));
            let idx = 4 * (p * q) as i64 - (p * (2 * p + 1) + q * (2 * q + 1)) as i64;
            let name = if p == 0 { format!("sp({q})") } else { format!("sp({p},{q})") };
            out.push((name, canonical_types(&k), 0, idx));
        }
        let k = if total >= 2 { vec![SimpleType::of(Family::A, total - 1)] } else { vec![] };
        out.push((format!("sp({total},R)"), k, 1, total as i64));
    };
    match ty.family() {
        Family::A => {
            su(&mut out, n + 1);
            match n {
                1 => {
                    out.push(("sl2(R)".into(), vec![], 1, 1));
                    so(&mut out, 3);
                }
                3 => {
                    so(&mut out, 6);
                    out.push(("so*(6)".into(), vec![SimpleType::of(Family::A, 2)], 1, -3));
                }
                _ => {}
            }
        }
        Family::B => {
            so(&mut out, 2 * n + 1);
            if n == 2 {
                sp(&mut out, 2);
            }
        }
        Family::C => {
            sp(&mut out, n);
            if n == 2 {
                so(&mut out, 5);
            }
        }
        Family::D => {
            so(&mut out, 2 * n);
            let k = vec![SimpleType::of(Family::A, n - 1)];
            out.push((format!("so*({})", 2 * n), canonical_types(&k), 1, -(n as i64)));
        }
        Family::E | Family::F | Family::G => {
            let name = ty.to_string().to_lowercase();
            let t = |s: &str| s.parse::<SimpleType>().expect("type");
            let forms: Vec<(Vec<SimpleType>, usize)> = match (ty.family(), n) {
                (Family::E, 6) => vec![(vec![t("E6")], 0), (vec![t("A1"), t("A5")], 0), (vec![t("D5")], 1)],
                (Family::E, 7) => vec![
                    (vec![t("E7")], 0),
                    (vec![t("E6")], 1),
                    (vec![t("A1"), t("D6")], 0),
                    (vec![t("A7")], 0),
                ],
                (Family::E, _) => vec![(vec![t("E8")], 0), (vec![t("A1"), t("E7")], 0), (vec![t("D8")], 0)],
                (Family::F, _) => vec![(vec![t("F4")], 0), (vec![t("B4")], 0), (vec![t("A1"), t("C3")], 0)],
                _ => vec![(vec![t("G2")], 0), (vec![t("A1"), t("A1")], 0)],
            };
            for (k, center) in forms {
                let dim_k: usize = k.iter().map(|x| x.dimension()).sum::<usize>() + center;
                let idx = ty.dimension() as i64 - 2 * dim_k as i64;
                out.push((format!("{name}({idx})"), canonical_types(&k), center, idx));
            }
        }
    }
    out
}

/// Names of the real form carried by a grading of a simple algebra.
pub fn real_form_names(ty: SimpleType, eps: &[u8]) -> Result<Vec<String>> {
    let g = RealFormGrading::simple(ty, eps.to_vec())?;
    let idx = index(&g);
    let (k, center) = compact_subalgebra(&g, 0)?;
    let mut names: Vec<String> = catalog(ty)
        .into_iter()
        .filter(|(_, kk, cc, ii)| *ii == idx && *kk == k && *cc == center)
        .map(|(n, ..)| n)
        .collect();
    // Triality: on D4 the two forms share all invariants; relative to the
    // vector module so(2,6) is the orbit of the first node.
    if ty == SimpleType::of(Family::D, 4) && names.len() > 1 {
        let vector = weyl_orbit(ty, &[1, 0, 0, 0]).contains(eps);
        names.retain(|n| (n == "so(2,6)") == vector);
    }
    Ok(names)
}

fn all_gradings(rank: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << rank).map(move |m| (0..rank).map(|i| ((m >> i) & 1) as u8).collect())
}

/// Representatives of the Weyl orbits on all `2^rank` gradings, each with
/// its index, compact subalgebra and catalog names.
pub fn enumerate_real_forms(ty: SimpleType) -> Result<Vec<RealFormLabel>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for e in all_gradings(ty.rank()) {
        if seen.contains(&e) {
            continue;
        }
        let orbit = weyl_orbit(ty, &e);
        let rep = orbit.iter().next().expect("nonempty orbit").clone();
        seen.extend(orbit);
        let g = RealFormGrading::simple(ty, rep.clone())?;
        let (compact_types, center_dim) = compact_subalgebra(&g, 0)?;
        out.push(RealFormLabel {
            index: index(&g),
            names: real_form_names(ty, &rep)?,
            epsilon: rep,
            compact_types,
            center_dim,
        });
    }
    out.sort_by_key(|l| l.index);
    Ok(out)
}

/// Every grading of `ty` whose real form carries the given name.
pub fn gradings_named(ty: SimpleType, name: &str) -> Result<Vec<Vec<u8>>> {
    let name = normalize_name(name);
    let mut out = Vec::new();
    for e in all_gradings(ty.rank()) {
        if real_form_names(ty, &e)?.contains(&name) {
            out.push(e);
        }
    }
    Ok(out)
}

fn check_weights(g: &RealFormGrading, lambda: &[Weight]) -> Result<()> {
    if lambda.len() != g.factors.len() {
        return Err(LieError::MismatchedAlgebra(format!(
            "{} weights for {} factors",
            lambda.len(),
            g.factors.len()
        )));
    }
    for (t, w) in g.factors.iter().zip(lambda) {
        root_system(*t).check_weight(w)?;
    }
    Ok(())
}

/// Every root orthogonal to `lambda` is compact.
pub fn stabilizer_compactness(g: &RealFormGrading, lambda: &[Weight]) -> Result<bool> {
    check_weights(g, lambda)?;
    Ok(g.factors.iter().enumerate().all(|(k, &t)| {
        let rs = root_system(t);
        (0..rs.positive_roots().len())
            .filter(|&j| rs.pairing_positive(&lambda[k], j) == 0)
            .all(|j| !g.is_noncompact(k, &rs.positive_roots()[j]))
    }))
}

/// `(#compact, #noncompact)` among the roots `alpha` with
/// `<lambda, alpha^vee> > 0`. For dominant `lambda` these are `R+ - R0+`;
/// the count is meaningful for any weight, which makes Weyl invariance
/// testable.
pub fn tangent_counts(g: &RealFormGrading, lambda: &[Weight]) -> Result<(u64, u64)> {
    check_weights(g, lambda)?;
    let (mut c, mut n) = (0, 0);
    for (k, &t) in g.factors.iter().enumerate() {
        let rs = root_system(t);
        for r in rs.all_roots() {
            if rs.pairing(&lambda[k], &r)? > 0 {
                if g.is_noncompact(k, &r) {
                    n += 1;
                } else {
                    c += 1;
                }
            }
        }
    }
    Ok((c, n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureReport {
    pub grading: RealFormGrading,
    pub module: TensorProduct,
    pub index: i64,
    pub h0_compact: bool,
    pub h0_types: Vec<SimpleType>,
    pub h0_center: usize,
    pub compact_roots: u64,
    pub noncompact_roots: u64,
    /// Signature of the Hermitian form on the tangent space of the cone,
    /// the radial direction included.
    pub gamma_signature: (u64, u64),
    /// Metric signature on the open orbit for `gamma(v, v) > 0` and `< 0`.
    pub metric_signatures: Vec<(u64, u64)>,
}

/// Signature count on the open orbit through the highest weight line.
///
/// With `c` compact and `n` noncompact roots in `R+ - R0+`, the tangent space
/// of the cone has the orthogonal basis `v, e_{-alpha} v`; `gamma` is definite
/// of one sign on `v` and the compact directions and of the other sign on
/// the noncompact ones, so it has signature `(c + 1, n)` up to an overall
/// sign. Quotienting the radial direction gives `(c, n)` when
/// `gamma(v, v) > 0` and `(n - 1, c + 1)` when `gamma(v, v) < 0`; the latter
/// needs `n >= 1`.
pub fn hermitian_signature(g: &RealFormGrading, module: &TensorProduct) -> Result<SignatureReport> {
    if module.algebra() != g.factors {
        return Err(LieError::MismatchedAlgebra(format!(
            "module {module} does not live over the grading's factors"
        )));
    }
    let lambda: Vec<Weight> = module.0.iter().map(|f| f.highest_weight.clone()).collect();
    if lambda.iter().any(|w| w.is_zero()) {
        return Err(LieError::ZeroWeight);
    }
    let h0_compact = stabilizer_compactness(g, &lambda)?;
    let (c, n) = tangent_counts(g, &lambda)?;
    let mut metric = vec![(c, n)];
    if n >= 1 {
        metric.push((n - 1, c + 1));
    }
    metric.sort();
    metric.dedup();
    let h0_types = tensor_levi(module)?;
    let ss_rank: usize = h0_types.iter().map(|t| t.rank()).sum();
    let rank: usize = g.factors.iter().map(|t| t.rank()).sum();
    Ok(SignatureReport {
        grading: g.clone(),
        module: module.clone(),
        index: index(g),
        h0_compact,
        h0_types,
        h0_center: rank - ss_rank,
        compact_roots: c,
        noncompact_roots: n,
        gamma_signature: (c + 1, n),
        metric_signatures: metric,
    })
}

/// All gradings over a product whose factor `k` carries the name `names[k]`.
pub fn product_gradings_named(factors: &[SimpleType], names: &[String]) -> Result<Vec<RealFormGrading>> {
    if factors.len() != names.len() {
        return Err(LieError::MismatchedAlgebra("one real-form name per factor".into()));
    }
    let mut acc: Vec<Vec<Vec<u8>>> = vec![vec![]];
    for (t, n) in factors.iter().zip(names) {
        let opts = gradings_named(*t, n)?;
        if opts.is_empty() {
            return Ok(Vec::new());
        }
        acc = acc
            .into_iter()
            .flat_map(|pre| {
                opts.iter().map(move |o| {
                    let mut v = pre.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|eps| RealFormGrading::new(factors.to_vec(), eps))
        .collect()
}

/// Signature reports for every grading of the named real form whose
/// stabilizer of the highest weight line is compact.
pub fn compatible_signatures(module: &TensorProduct, names: &[String]) -> Result<Vec<SignatureReport>> {
    let mut out = Vec::new();
    for g in product_gradings_named(&module.algebra(), names)? {
        let r = hermitian_signature(&g, module)?;
        if r.h0_compact {
            out.push(r);
        }
    }
    Ok(out)
}

/// `su(0,n)` and friends collapse to the compact names.
pub fn normalize_name(name: &str) -> String {
    for fam in ["su", "so", "sp"] {
        if let Some(r) = name.strip_prefix(&format!("{fam}(0,")) {
            return format!("{fam}({r}");
        }
    }
    name.to_string()
}

/// `gamma|L` on the invariant Lagrangian subspace `L = U` of `U + U*` under
/// `su(k,l)` or `sp(k,l)`: signature `(k,l)`, respectively `(2k,2l)`.
pub fn reducible_gamma(name: &str) -> Option<(u64, u64)> {
    let name = normalize_name(name);
    let (scale, inner) = if let Some(r) = name.strip_prefix("su(") {
        (1, r)
    } else {
        let r = name.strip_prefix("sp(")?;
        (2, r)
    };
    let inner = inner.strip_suffix(')')?;
    let (k, l) = match inner.split_once(',') {
        Some((k, l)) => (k.parse::<u64>().ok()?, l.parse::<u64>().ok()?),
        None => (inner.parse::<u64>().ok()?, 0),
    };
    Some((scale * k, scale * l))
}

/// Metric signatures `(k-1, l)` and `(l-1, k)` from a `gamma` signature.
pub fn metric_options((k, l): (u64, u64)) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    if k >= 1 {
        v.push((k - 1, l));
    }
    if l >= 1 {
        v.push((l - 1, k));
    }
    v.sort();
    v.dedup();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainCaseReport {
    pub id: String,
    pub n: Option<usize>,
    pub module: ModuleDescriptor,
    pub real_form: Vec<String>,
    pub index: i64,
    pub gradings: usize,
    pub h0_types: Vec<SimpleType>,
    pub h0_center: usize,
    pub gamma_signature: (u64, u64),
    pub metric_signatures: Vec<(u64, u64)>,
    /// Signatures from the reducible-module rule, when it applies.
    pub reducible_rule: Option<Vec<(u64, u64)>>,
    pub expected: (u64, u64),
    pub pass: bool,
    pub reasons: Vec<String>,
}

fn main_case(case: &MainCaseGolden, n: Option<usize>) -> Result<MainCaseReport> {
    let vars = n_vars(n);
    let module = resolve_module(&case.v, &vars)?;
    let forms: Vec<String> = case
        .forms
        .iter()
        .map(|f| instantiate(f, &vars).map(|s| normalize_name(&s)))
        .collect::<Result<_>>()?;
    let u = &module.summands[0];
    let reports = compatible_signatures(u, &forms)?;
    let mut reasons = Vec::new();
    let Some(first) = reports.first() else {
        return Err(LieError::Violation(format!(
            "case {}: no grading of {forms:?} has compact stabilizer on {module}",
            case.id
        )));
    };
    if reports.iter().any(|r| r.metric_signatures != first.metric_signatures || r.index != first.index) {
        reasons.push("compatible gradings disagree on the signature".to_string());
    }
    let dim_m = first.compact_roots + first.noncompact_roots;
    let expected = match (case.metric, &case.signature) {
        (MetricKind::Positive, _) => (dim_m, 0),
        (MetricKind::Negative, _) => (0, dim_m),
        (MetricKind::Indefinite, Some([a, b])) => (eval_linear(a, &vars)? as u64, eval_linear(b, &vars)? as u64),
        (MetricKind::Indefinite, None) => {
            return Err(LieError::Golden(format!("case {} lacks a signature", case.id)));
        }
    };
    if !first.metric_signatures.contains(&expected) {
        reasons.push(format!("expected {expected:?}, computed {:?}", first.metric_signatures));
    }
    let reducible_rule = if case.reducible {
        if !module.is_sum_with_dual() {
            return Err(LieError::Golden(format!("case {} is not of the form U + U*", case.id)));
        }
        let gamma = reducible_gamma(&forms[0])
            .ok_or_else(|| LieError::Golden(format!("case {}: no reducible rule for {}", case.id, forms[0])))?;
        let rule = metric_options(gamma);
        if rule != first.metric_signatures {
            reasons.push(format!("reducible rule gives {rule:?}, root count gives {:?}", first.metric_signatures));
        }
        Some(rule)
    } else {
        None
    };
    let h0 = resolve_types(&case.h0, &vars)?;
    if h0 != first.h0_types || case.h0_center != first.h0_center {
        reasons.push(format!(
            "stabilizer {:?} + {} centre, expected {h0:?} + {}",
            first.h0_types, first.h0_center, case.h0_center
        ));
    }
    Ok(MainCaseReport {
        id: case.id.clone(),
        n,
        module: module.canonical(),
        real_form: forms,
        index: first.index,
        gradings: reports.len(),
        h0_types: first.h0_types.clone(),
        h0_center: first.h0_center,
        gamma_signature: first.gamma_signature,
        metric_signatures: first.metric_signatures.clone(),
        reducible_rule,
        expected,
        pass: reasons.is_empty(),
        reasons,
    })
}

/// One report per case and parameter value; failures are flagged, not raised.
pub fn main_theorem_reports() -> Result<Vec<MainCaseReport>> {
    let mut out = Vec::new();
    for case in &golden()?.main_theorem {
        for n in instances(case.n_range) {
            out.push(main_case(case, n)?);
        }
    }
    Ok(out)
}

/// All case reports, or a violation naming the first failing case.
pub fn verify_main_theorem() -> Result<Vec<MainCaseReport>> {
    let reports = main_theorem_reports()?;
    if let Some(r) = reports.iter().find(|r| !r.pass) {
        return Err(LieError::Violation(format!(
            "case {} (n = {:?}): {}",
            r.id,
            r.n,
            r.reasons.join("; ")
        )));
    }
    Ok(reports)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterVerdict {
    /// Compact stabilizer, listed among the triples.
    Kept,
    /// No compatible grading, not listed.
    Dropped,
    /// Computed compact, yet not listed.
    UnlistedCompact,
    /// Listed, yet no compatible grading.
    ListedNoncompact,
    /// Outer form: no grading, reference data only.
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterRow {
    pub case: String,
    pub n: Option<usize>,
    pub module: ModuleDescriptor,
    pub real_form: Vec<String>,
    pub compact_stabilizer: Option<bool>,
    pub listed: bool,
    pub verdict: FilterVerdict,
}

/// The first catalog name of the real form called `name`, so that aliases
/// such as `sl2(R)` and `su(1,1)` compare equal.
pub fn canonical_form_name(ty: SimpleType, name: &str) -> String {
    let name = normalize_name(name);
    if ty == SimpleType::of(Family::D, 4) {
        return name;
    }
    let cat = catalog(ty);
    match cat.iter().find(|(n, ..)| *n == name) {
        Some((_, k, c, i)) => cat
            .iter()
            .find(|(_, k2, c2, i2)| k2 == k && c2 == c && i2 == i)
            .map(|(n, ..)| n.clone())
            .unwrap_or(name),
        None => name,
    }
}

fn forms_key(m: &ModuleDescriptor, forms: &[String]) -> (ModuleDescriptor, Vec<String>) {
    let alg = m.algebra();
    let names = forms
        .iter()
        .enumerate()
        .map(|(i, f)| alg.get(i).map_or_else(|| normalize_name(f), |t| canonical_form_name(*t, f)))
        .collect();
    (m.canonical(), names)
}

/// Is some factor name missing from the inner-form catalog?
fn is_outer(module: &TensorProduct, forms: &[String]) -> bool {
    module
        .algebra()
        .iter()
        .zip(forms)
        .any(|(t, f)| !catalog(*t).iter().any(|(n, ..)| *n == normalize_name(f)))
}

/// Filters the real-structure list through the compact-stabilizer test and
/// compares with the list of triples.
pub fn compact_stabilizer_filter() -> Result<Vec<FilterRow>> {
    let g = golden()?;
    let mut listed = BTreeSet::new();
    for t in &g.compact_stabilizer {
        for n in instances(t.n_range) {
            let vars = n_vars(n);
            let forms: Vec<String> = t.forms.iter().map(|f| instantiate(f, &vars)).collect::<Result<_>>()?;
            listed.insert(forms_key(&resolve_module(&t.v, &vars)?, &forms));
        }
    }
    let mut out = Vec::new();
    for e in &g.real_structures {
        for n in instances(e.n_range) {
            if e.even_only && n.is_some_and(|n| n % 2 == 1) {
                continue;
            }
            let vars = n_vars(n);
            let module = resolve_module(&e.v, &vars)?;
            let mut all_forms: Vec<Vec<String>> = e
                .forms
                .iter()
                .map(|fs| fs.iter().map(|f| instantiate(f, &vars)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            if let (Some(split), Some(n)) = (&e.split, n) {
                for k in 0..=n / 2 {
                    let kv = [('n', n as i64), ('k', k as i64), ('l', (n - k) as i64)];
                    for fs in &split.forms {
                        all_forms.push(fs.iter().map(|f| instantiate(f, &kv)).collect::<Result<_>>()?);
                    }
                }
            }
            for forms in all_forms {
                let key = forms_key(&module, &forms);
                let is_listed = listed.contains(&key);
                let u = &module.summands[0];
                let compact = if is_outer(u, &forms) {
                    None
                } else {
                    let names: Vec<String> = forms.iter().map(|f| normalize_name(f)).collect();
                    Some(!compatible_signatures(u, &names)?.is_empty())
                };
                let verdict = match (compact, is_listed) {
                    (None, _) => FilterVerdict::Outer,
                    (Some(true), true) => FilterVerdict::Kept,
                    (Some(false), false) => FilterVerdict::Dropped,
                    (Some(true), false) => FilterVerdict::UnlistedCompact,
                    (Some(false), true) => FilterVerdict::ListedNoncompact,
                };
                out.push(FilterRow {
                    case: e.case.clone(),
                    n,
                    module: key.0,
                    real_form: key.1,
                    compact_stabilizer: compact,
                    listed: is_listed,
                    verdict,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn indices(ty: &str) -> Vec<i64> {
        enumerate_real_forms(t(ty)).unwrap().iter().map(|l| l.index).collect()
    }

    #[test]
    fn compact_form_index() {
        for ty in ["A3", "B4", "C3", "D5", "E6", "G2"] {
            assert_eq!(index(&RealFormGrading::compact(vec![t(ty)])), -(t(ty).dimension() as i64));
        }
    }

    #[test]
    fn real_form_indices() {
        assert_eq!(indices("A1"), vec![-3, 1]);
        assert_eq!(indices("E7"), vec![-133, -25, -5, 7]);
        let g = RealFormGrading::simple(t("E7"), vec![0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(index(&g), -25);
        assert_eq!(compact_subalgebra(&g, 0).unwrap(), (vec![t("E6")], 1));
        let g = RealFormGrading::simple(t("D6"), vec![0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(index(&g), -6);
        assert_eq!(real_form_names(t("D6"), &[0, 0, 0, 0, 0, 1]).unwrap(), vec!["so*(12)".to_string()]);
    }

    #[test]
    fn every_grading_has_a_catalog_name() {
        for ty in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "D6", "G2", "F4", "E6", "E7"] {
            for l in enumerate_real_forms(t(ty)).unwrap() {
                assert!(!l.names.is_empty(), "{ty} {:?}", l);
            }
        }
    }

    #[test]
    fn catalog_index_matches_dimension_count() {
        for ty in ["A4", "B5", "C4", "D6", "E6", "E7", "E8", "F4", "G2"] {
            for (name, k, center, idx) in catalog(t(ty)) {
                let dim_k: usize = k.iter().map(|x| x.dimension()).sum::<usize>() + center;
                assert_eq!(idx, t(ty).dimension() as i64 - 2 * dim_k as i64, "{ty} {name}");
            }
        }
    }

    #[test]
    fn compactness_examples() {
        let e7 = t("E7");
        let pi7 = vec![Weight::fundamental(7, 7)];
        let g = RealFormGrading::simple(e7, vec![0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(stabilizer_compactness(&g, &pi7).unwrap());
        for e in gradings_named(e7, "e7(7)").unwrap() {
            let g = RealFormGrading::simple(e7, e).unwrap();
            assert!(!stabilizer_compactness(&g, &pi7).unwrap());
        }
        assert!(stabilizer_compactness(&RealFormGrading::compact(vec![e7]), &pi7).unwrap());
        assert!(stabilizer_compactness(&g, &[Weight::fundamental(6, 1)]).is_err());
    }

    #[test]
    fn signature_examples() {
        let m: crate::ModuleDescriptor = "B5:0,0,0,0,1".parse().unwrap();
        let r = compatible_signatures(&m.summands[0], &["so(1,10)".to_string()]).unwrap();
        assert!(!r.is_empty());
        assert!(r.iter().all(|x| x.metric_signatures.contains(&(10, 5))));
        let m: crate::ModuleDescriptor = "A1:1 * G2:1,0".parse().unwrap();
        let r = compatible_signatures(&m.summands[0], &["sl2(R)".into(), "g2(2)".into()]).unwrap();
        assert!(!r.is_empty());
        assert!(r.iter().all(|x| x.metric_signatures.contains(&(1, 5))));
        let m: crate::ModuleDescriptor = "E7:0,0,0,0,0,0,1".parse().unwrap();
        let r = compatible_signatures(&m.summands[0], &["e7(-25)".into()]).unwrap();
        assert!(r.iter().all(|x| x.metric_signatures.contains(&(0, 27))));
    }

    #[test]
    fn main_theorem_cases_pass() {
        let reports = main_theorem_reports().unwrap();
        for r in &reports {
            assert!(r.pass, "{} {:?}: {:?}", r.id, r.n, r.reasons);
        }
        let ids: BTreeSet<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids.len(), 12);
        let viii = reports.iter().find(|r| r.id == "viii").unwrap();
        assert_eq!(viii.index, -25);
        assert!(viii.metric_signatures.contains(&(0, 27)));
    }

    #[test]
    fn reducible_rule() {
        assert_eq!(reducible_gamma("su(1,4)"), Some((1, 4)));
        assert_eq!(reducible_gamma("sp(1,3)"), Some((2, 6)));
        assert_eq!(reducible_gamma("su(0,5)"), Some((5, 0)));
        assert_eq!(reducible_gamma("so(2,3)"), None);
        assert_eq!(metric_options((5, 0)), vec![(4, 0)]);
    }

    #[test]
    fn filter_reproduces_triples() {
        let rows = compact_stabilizer_filter().unwrap();
        for r in &rows {
            match r.verdict {
                FilterVerdict::ListedNoncompact => panic!("{r:?}"),
                FilterVerdict::UnlistedCompact => {
                    // sl2(R) + so(n): compact second factor.
                    assert_eq!(r.real_form.len(), 2, "{r:?}");
                    let t = r.module.algebra()[1];
                    let idx = catalog(t).into_iter().find(|c| c.0 == r.real_form[1]).unwrap().3;
                    assert_eq!(idx, -(t.dimension() as i64), "{r:?}");
                }
                _ => {}
            }
        }
        let find = |f: &str| rows.iter().find(|r| r.real_form.last().unwrap() == f).unwrap().verdict;
        assert_eq!(find("su(3,3)"), FilterVerdict::Kept);
        assert_eq!(find("su(1,5)"), FilterVerdict::Dropped);
        assert_eq!(find("so(2,9)"), FilterVerdict::Dropped);
        assert_eq!(find("sl6(R)"), FilterVerdict::Outer);
        assert_eq!(find("e7(-5)"), FilterVerdict::Dropped);
    }
}
