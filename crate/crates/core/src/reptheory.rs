//! Irreducible highest-weight modules and tensor products over semisimple
//! algebras: dimensions, duals, invariant form types, weight multiplicities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::rootsys::{canonical_weight, root_system, Family, SimpleType, Weight};

/// Default size guard for [`freudenthal_multiplicities`].
pub const FREUDENTHAL_LIMIT: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepDescriptor {
    pub algebra: SimpleType,
    pub highest_weight: Weight,
}

impl IrrepDescriptor {
    pub fn new(algebra: SimpleType, highest_weight: Weight) -> Result<Self> {
        if highest_weight.rank() != algebra.rank() {
            return Err(LieError::WeightLength {
                algebra: algebra.to_string(),
                expected: algebra.rank(),
                got: highest_weight.rank(),
            });
        }
        if !highest_weight.is_dominant() {
            return Err(LieError::NonDominant(highest_weight.to_string()));
        }
        Ok(IrrepDescriptor {
            algebra,
            highest_weight,
        })
    }

    /// `V(pi_i)` with 1-based Bourbaki label. Panics on a bad label.
    pub fn fundamental(algebra: SimpleType, i: usize) -> Self {
        Self::new(algebra, Weight::fundamental(algebra.rank(), i)).expect("fundamental weight")
    }

    pub fn with_weight(algebra: SimpleType, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, Weight(coords.to_vec()))
    }

    pub fn is_trivial(&self) -> bool {
        self.highest_weight.is_zero()
    }

    /// Isomorphism-class representative: `B2` data are rewritten over `C2`
    /// and the weight is moved to its largest diagram-automorphism image.
    pub fn canonical(&self) -> Self {
        let f = fold_b2(self);
        IrrepDescriptor {
            algebra: f.algebra,
            highest_weight: canonical_weight(f.algebra, &f.highest_weight),
        }
    }
}

/// Rewrites a `B2` module over `C2` (the simple roots swap roles).
fn fold_b2(d: &IrrepDescriptor) -> IrrepDescriptor {
    if d.algebra.family() == Family::B && d.algebra.rank() == 2 {
        let c = &d.highest_weight.0;
        IrrepDescriptor {
            algebra: d.algebra.canonical(),
            highest_weight: Weight(vec![c[1], c[0]]),
        }
    } else {
        d.clone()
    }
}

impl fmt::Display for IrrepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algebra, self.highest_weight)
    }
}

impl FromStr for IrrepDescriptor {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let (ty, w) = s
            .split_once(':')
            .ok_or_else(|| LieError::ParseModule(s.to_string(), "expected `TYPE:weight`".into()))?;
        IrrepDescriptor::new(ty.parse()?, w.parse()?)
    }
}

/// A tensor product of irreducibles, one per simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorProduct(pub Vec<IrrepDescriptor>);

impl TensorProduct {
    pub fn factors(&self) -> &[IrrepDescriptor] {
        &self.0
    }

    pub fn algebra(&self) -> Vec<SimpleType> {
        self.0.iter().map(|f| f.algebra).collect()
    }

    pub fn dual(&self) -> TensorProduct {
        TensorProduct(
            self.0
                .iter()
                .map(|f| IrrepDescriptor {
                    algebra: f.algebra,
                    highest_weight: dual_highest_weight(f),
                })
                .collect(),
        )
    }

    pub fn dimension(&self) -> BigUint {
        self.0.iter().map(weyl_dimension).product()
    }
}

impl fmt::Display for TensorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Direct sum of tensor products over one semisimple algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleDescriptor {
    pub summands: Vec<TensorProduct>,
}

impl ModuleDescriptor {
    pub fn new(summands: Vec<TensorProduct>) -> Result<Self> {
        if let Some(first) = summands.first() {
            let alg = first.algebra();
            if summands.iter().any(|s| s.algebra() != alg) {
                return Err(LieError::MismatchedAlgebra(
                    "all summands must be modules of the same factor list".into(),
                ));
            }
        }
        Ok(ModuleDescriptor { summands })
    }

    pub fn irreducible(irrep: IrrepDescriptor) -> Self {
        ModuleDescriptor {
            summands: vec![TensorProduct(vec![irrep])],
        }
    }

    pub fn tensor(factors: Vec<IrrepDescriptor>) -> Self {
        ModuleDescriptor {
            summands: vec![TensorProduct(factors)],
        }
    }

    /// `U + U*`.
    pub fn with_dual(u: TensorProduct) -> Self {
        let d = u.dual();
        ModuleDescriptor { summands: vec![u, d] }
    }

    pub fn algebra(&self) -> Vec<SimpleType> {
        self.summands.first().map(|s| s.algebra()).unwrap_or_default()
    }

    pub fn dimension(&self) -> BigUint {
        self.summands.iter().map(|s| s.dimension()).sum()
    }

    /// Isomorphism-class key. `B2` factors are rewritten over `C2`, then one
    /// diagram automorphism per factor position is applied to all summands at
    /// once and the lexicographically largest sorted result is kept. Joint
    /// application keeps `U + U*` distinct from `U + U`.
    pub fn canonical(&self) -> ModuleDescriptor {
        let folded: Vec<Vec<IrrepDescriptor>> = self
            .summands
            .iter()
            .map(|s| s.0.iter().map(fold_b2).collect())
            .collect();
        let Some(first) = folded.first() else {
            return self.clone();
        };
        let autos: Vec<Vec<Vec<usize>>> = first.iter().map(|f| f.algebra.diagram_automorphisms()).collect();
        let single = folded.len() == 1;
        let mut best: Option<Vec<TensorProduct>> = None;
        let mut choice = vec![0usize; autos.len()];
        loop {
            let mut summands: Vec<TensorProduct> = folded
                .iter()
                .map(|fs| {
                    let mut f: Vec<IrrepDescriptor> = fs
                        .iter()
                        .zip(&choice)
                        .enumerate()
                        .map(|(pos, (x, &c))| {
                            let p = &autos[pos][c];
                            IrrepDescriptor {
                                algebra: x.algebra,
                                highest_weight: Weight(p.iter().map(|&src| x.highest_weight.0[src]).collect()),
                            }
                        })
                        .collect();
                    if single {
                        f.sort();
                    }
                    TensorProduct(f)
                })
                .collect();
            summands.sort();
            if best.as_ref().is_none_or(|b| summands > *b) {
                best = Some(summands);
            }
            // advance the mixed-radix counter
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < autos[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        ModuleDescriptor {
            summands: best.unwrap_or_default(),
        }
    }

    /// Whether `self` is `U + U*` for its first summand.
    pub fn is_sum_with_dual(&self) -> bool {
        self.summands.len() == 2 && {
            let a = ModuleDescriptor::tensor(self.summands[1].0.clone()).canonical();
            let b = ModuleDescriptor::tensor(self.summands[0].dual().0).canonical();
            a == b
        }
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Text form: factors joined by `*`, summands by `+`, e.g.
/// `A1:1 * G2:1,0` or `A3:1,0,0 + A3:0,0,1`.
impl FromStr for ModuleDescriptor {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(LieError::EmptyModule);
        }
        let summands = s
            .split('+')
            .map(|t| {
                t.split('*')
                    .map(|f| f.trim().parse::<IrrepDescriptor>())
                    .collect::<Result<Vec<_>>>()
                    .map(TensorProduct)
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleDescriptor::new(summands)
    }
}

impl Serialize for ModuleDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ModuleDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for TensorProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for IrrepDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IrrepDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormType {
    Orthogonal,
    Symplectic,
    None,
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Orthogonal => "orthogonal",
            FormType::Symplectic => "symplectic",
            FormType::None => "none",
        })
    }
}

/// Weyl's product `prod <lambda + rho, a^vee> / <rho, a^vee>`, with numerator
/// and denominator accumulated separately and divided exactly at the end.
pub fn weyl_dimension(d: &IrrepDescriptor) -> BigUint {
    let rs = root_system(d.algebra);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for c in rs.positive_coroots() {
        let rho: i64 = c.iter().map(|&x| x as i64).sum();
        let shifted: i64 = rho + d
            .highest_weight
            .0
            .iter()
            .zip(c)
            .map(|(l, &x)| l * x as i64)
            .sum::<i64>();
        num *= shifted as u64;
        den *= rho as u64;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// [`weyl_dimension`] as `u64`.
pub fn weyl_dimension_u64(d: &IrrepDescriptor) -> Result<u64> {
    let big = weyl_dimension(d);
    big.to_u64().ok_or_else(|| LieError::Overflow(big.to_string()))
}

/// `-w0 lambda`: drive `-lambda` into the dominant chamber by simple reflections.
pub fn dual_highest_weight(d: &IrrepDescriptor) -> Weight {
    root_system(d.algebra).dominant_conjugate(&d.highest_weight.scale(-1))
}

pub fn is_self_dual(d: &IrrepDescriptor) -> bool {
    dual_highest_weight(d) == d.highest_weight
}

/// Self-dual modules are symplectic iff `<lambda, 2 rho^vee>` is odd.
pub fn form_type(d: &IrrepDescriptor) -> FormType {
    if !is_self_dual(d) {
        return FormType::None;
    }
    let rs = root_system(d.algebra);
    let s: i64 = d
        .highest_weight
        .0
        .iter()
        .zip(rs.sum_positive_coroots())
        .map(|(a, b)| a * b)
        .sum();
    if s.rem_euclid(2) == 1 {
        FormType::Symplectic
    } else {
        FormType::Orthogonal
    }
}

/// Form type of a tensor product: symplectic iff every factor is self-dual
/// and an odd number of them is symplectic.
pub fn tensor_form_type(t: &TensorProduct) -> FormType {
    let mut symplectic = 0usize;
    for f in &t.0 {
        match form_type(f) {
            FormType::None => return FormType::None,
            FormType::Symplectic => symplectic += 1,
            FormType::Orthogonal => {}
        }
    }
    if symplectic % 2 == 1 {
        FormType::Symplectic
    } else {
        FormType::Orthogonal
    }
}

/// Form type of a single-summand module.
pub fn semisimple_form_type(m: &ModuleDescriptor) -> Result<FormType> {
    match m.summands.as_slice() {
        [] => Err(LieError::EmptyModule),
        [t] => Ok(tensor_form_type(t)),
        _ => Err(LieError::Unsupported(
            "semisimple_form_type expects a single tensor-product summand".into(),
        )),
    }
}

/// Invariant form carried by a module: a single summand via the parity law,
/// `U + U*` always by the canonical pairing, anything else is reported as
/// carrying no form this engine recognises.
pub fn module_form_type(m: &ModuleDescriptor) -> Result<FormType> {
    match m.summands.len() {
        0 => Err(LieError::EmptyModule),
        1 => semisimple_form_type(m),
        _ if m.is_sum_with_dual() => Ok(FormType::Symplectic),
        _ => Ok(FormType::None),
    }
}

/// Full weight-multiplicity table by Freudenthal's recursion, refusing
/// modules of dimension above `limit`.
pub fn freudenthal_multiplicities_with_limit(
    d: &IrrepDescriptor,
    limit: u64,
) -> Result<BTreeMap<Weight, u64>> {
    let dim = weyl_dimension(d);
    if dim > BigUint::from(limit) {
        return Err(LieError::SizeGuard {
            dim: dim.to_string(),
            limit,
        });
    }
    let rs = root_system(d.algebra);
    let n = rs.rank();

    // Integer form S (x, y) on weights with S = 6 * lcm(denominators).
    let gram = rs.weight_gram();
    let scale = gram
        .iter()
        .flatten()
        .fold(1i64, |acc, r| acc.lcm(r.denom()));
    let q: Vec<Vec<i64>> = gram
        .iter()
        .map(|row| row.iter().map(|r| (r * scale).to_integer()).collect())
        .collect();
    let form = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * q[i][j] * b[j];
            }
        }
        s
    };
    let rho = vec![1i64; n];
    let shift = |w: &[i64]| -> Vec<i64> { w.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let lambda = d.highest_weight.0.clone();
    let top = {
        let lr = shift(&lambda);
        form(&lr, &lr)
    };
    let roots = rs.positive_root_weights();

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    let mut frontier = vec![lambda.clone()];
    while !frontier.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for nu in &frontier {
            for i in 0..n {
                let alpha = rs.simple_root_weight(i);
                let mu: Vec<i64> = nu.iter().zip(&alpha.0).map(|(a, b)| a - b).collect();
                if mult.contains_key(&mu) || next.contains(&mu) {
                    continue;
                }
                let denom = {
                    let mr = shift(&mu);
                    top - form(&mr, &mr)
                };
                if denom <= 0 {
                    continue;
                }
                // 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha)
                let mut rhs: i64 = 0;
                for a in roots {
                    let mut k = 1;
                    loop {
                        let w: Vec<i64> = mu.iter().zip(&a.0).map(|(x, y)| x + k * y).collect();
                        let Some(&m) = mult.get(&w) else { break };
                        rhs += m as i64 * form(&w, &a.0);
                        k += 1;
                    }
                }
                let rhs = 2 * rhs;
                if rhs % denom != 0 {
                    return Err(LieError::Unsupported(format!(
                        "non-integral multiplicity at {mu:?}: {rhs}/{denom}"
                    )));
                }
                let m = rhs / denom;
                if m > 0 {
                    mult.insert(mu.clone(), m as u64);
                    next.push(mu);
                }
            }
        }
        frontier = next;
    }
    Ok(mult.into_iter().map(|(k, v)| (Weight(k), v)).collect())
}

pub fn freudenthal_multiplicities(d: &IrrepDescriptor) -> Result<BTreeMap<Weight, u64>> {
    freudenthal_multiplicities_with_limit(d, FREUDENTHAL_LIMIT)
}

/// Visits every dominant weight of `ty` with Weyl dimension at most `bound`,
/// pruning on monotonicity of the dimension in each coordinate.
pub fn for_each_dominant_weight_up_to<F>(ty: SimpleType, bound: &BigUint, mut visit: F)
where
    F: FnMut(&IrrepDescriptor, &BigUint),
{
    fn go<F: FnMut(&IrrepDescriptor, &BigUint)>(
        ty: SimpleType,
        coords: &mut Vec<i64>,
        pos: usize,
        bound: &BigUint,
        visit: &mut F,
    ) {
        if pos == coords.len() {
            let d = IrrepDescriptor {
                algebra: ty,
                highest_weight: Weight(coords.clone()),
            };
            let dim = weyl_dimension(&d);
            visit(&d, &dim);
            return;
        }
        loop {
            let d = IrrepDescriptor {
                algebra: ty,
                highest_weight: Weight(coords.clone()),
            };
            if weyl_dimension(&d) > *bound {
                break;
            }
            go(ty, coords, pos + 1, bound, visit);
            coords[pos] += 1;
        }
        coords[pos] = 0;
    }
    let mut coords = vec![0i64; ty.rank()];
    go(ty, &mut coords, 0, bound, &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(s: &str) -> IrrepDescriptor {
        s.parse().unwrap()
    }

    fn dim(s: &str) -> u64 {
        weyl_dimension_u64(&irrep(s)).unwrap()
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(dim("C3:0,0,1"), 14);
        assert_eq!(dim("A1:3"), 4);
        assert_eq!(dim("E7:0,0,0,0,0,0,1"), 56);
        assert_eq!(dim("E7:1,0,0,0,0,0,0"), 133);
        assert_eq!(dim("E8:0,0,0,0,0,0,0,1"), 248);
        assert_eq!(dim("E6:0,0,0,0,0,0"), 1);
        assert_eq!(dim("G2:0,0"), 1);
        assert_eq!(dim("A5:0,0,1,0,0"), 20);
        assert_eq!(dim("D6:0,0,0,0,1,0"), 32);
        assert_eq!(dim("B6:0,0,0,0,0,1"), 64);
        assert_eq!(dim("F4:0,0,0,1"), 26);
        assert_eq!(dim("G2:1,0"), 7);
    }

    #[test]
    fn non_dominant_and_malformed_weights_are_rejected() {
        assert!(matches!(
            IrrepDescriptor::with_weight(SimpleType::of(Family::A, 2), &[1, -1]),
            Err(LieError::NonDominant(_))
        ));
        assert!(matches!(
            IrrepDescriptor::with_weight(SimpleType::of(Family::A, 2), &[1]),
            Err(LieError::WeightLength { .. })
        ));
        assert!("E7".parse::<IrrepDescriptor>().is_err());
        assert!("E7:1,x".parse::<IrrepDescriptor>().is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_highest_weight(&irrep("A2:1,0")), Weight(vec![0, 1]));
        assert_eq!(dual_highest_weight(&irrep("D6:0,0,0,0,1,0")), Weight(vec![0, 0, 0, 0, 1, 0]));
        assert_eq!(dual_highest_weight(&irrep("B6:0,0,0,0,0,1")), Weight(vec![0, 0, 0, 0, 0, 1]));
        // D5 half-spin modules are dual to each other.
        assert_eq!(dual_highest_weight(&irrep("D5:0,0,0,1,0")), Weight(vec![0, 0, 0, 0, 1]));
        assert_eq!(dual_highest_weight(&irrep("E6:1,0,0,0,0,0")), Weight(vec![0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn self_duality_examples() {
        assert!(is_self_dual(&irrep("A5:0,0,1,0,0")));
        assert!(!is_self_dual(&irrep("A2:1,0")));
        assert!(is_self_dual(&irrep("B6:0,0,0,0,0,1")));
    }

    /// Explicit invariant form on the 7-dim standard module of so(7): the
    /// Gram matrix `J` pairing e_i with e_{-i} (antidiagonal of ones) is
    /// symmetric, hence orthogonal.
    #[test]
    fn form_type_examples() {
        assert_eq!(form_type(&irrep("A1:3")), FormType::Symplectic);
        assert_eq!(form_type(&irrep("E7:0,0,0,0,0,0,1")), FormType::Symplectic);
        let j: Vec<Vec<i32>> = (0..7).map(|i| (0..7).map(|k| (i + k == 6) as i32).collect()).collect();
        let symmetric = (0..7).all(|i| (0..7).all(|k| j[i][k] == j[k][i]));
        assert!(symmetric);
        assert_eq!(form_type(&irrep("B3:1,0,0")), FormType::Orthogonal);
        assert_eq!(form_type(&irrep("A2:1,0")), FormType::None);
        assert_eq!(form_type(&irrep("A1:0")), FormType::Orthogonal);
    }

    #[test]
    fn tensor_parity_examples() {
        let m: ModuleDescriptor = "A1:1 * B3:1,0,0".parse().unwrap();
        assert_eq!(semisimple_form_type(&m).unwrap(), FormType::Symplectic);
        let m: ModuleDescriptor = "A1:1 * A1:1".parse().unwrap();
        assert_eq!(semisimple_form_type(&m).unwrap(), FormType::Orthogonal);
        let m: ModuleDescriptor = "A1:1 * A1:1 * A1:1".parse().unwrap();
        assert_eq!(semisimple_form_type(&m).unwrap(), FormType::Symplectic);
        let m: ModuleDescriptor = "A1:1 * A2:1,0".parse().unwrap();
        assert_eq!(semisimple_form_type(&m).unwrap(), FormType::None);
    }

    #[test]
    fn freudenthal_examples() {
        let m = freudenthal_multiplicities(&irrep("A1:3")).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.values().all(|&x| x == 1));
        let m = freudenthal_multiplicities(&irrep("G2:1,0")).unwrap();
        assert_eq!(m.values().sum::<u64>(), 7);
        // the zero weight of the 7-dim G2 module has multiplicity one
        assert_eq!(m.get(&Weight(vec![0, 0])), Some(&1));
        let m = freudenthal_multiplicities(&irrep("C3:0,0,1")).unwrap();
        assert_eq!(m.values().sum::<u64>(), 14);
        let adj = freudenthal_multiplicities(&irrep("G2:0,1")).unwrap();
        assert_eq!(adj.get(&Weight(vec![0, 0])), Some(&2));
    }

    #[test]
    fn freudenthal_guard_is_resumable() {
        let d = irrep("E8:0,1,0,0,0,0,0,0");
        let err = freudenthal_multiplicities(&d).unwrap_err();
        assert!(matches!(err, LieError::SizeGuard { .. }));
        assert!(err.to_string().contains("rerun with a larger limit"));
        let d = irrep("A2:2,1");
        assert!(freudenthal_multiplicities_with_limit(&d, 10).is_err());
        assert_eq!(freudenthal_multiplicities_with_limit(&d, 15).unwrap().values().sum::<u64>(), 15);
    }

    #[test]
    fn module_text_form() {
        let m: ModuleDescriptor = "A3:1,0,0 + A3:0,0,1".parse().unwrap();
        assert!(m.is_sum_with_dual());
        assert_eq!(m.to_string(), "A3:1,0,0 + A3:0,0,1");
        assert_eq!(module_form_type(&m).unwrap(), FormType::Symplectic);
        assert!("A1:1 + A2:1,0".parse::<ModuleDescriptor>().is_err());
        assert!(matches!("".parse::<ModuleDescriptor>(), Err(LieError::EmptyModule)));
    }

    #[test]
    fn canonical_form_identifies_isomorphic_modules() {
        let a: ModuleDescriptor = "B2:1,0".parse().unwrap();
        let b: ModuleDescriptor = "C2:0,1".parse().unwrap();
        assert_eq!(a.canonical(), b.canonical());
        let a: ModuleDescriptor = "D6:0,0,0,0,0,1".parse().unwrap();
        let b: ModuleDescriptor = "D6:0,0,0,0,1,0".parse().unwrap();
        assert_eq!(a.canonical(), b.canonical());
        let a: ModuleDescriptor = "A1:1 * G2:1,0".parse().unwrap();
        let b: ModuleDescriptor = "G2:1,0 * A1:1".parse().unwrap();
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn bounded_dominant_search_is_ordered_by_bound() {
        let mut seen = Vec::new();
        for_each_dominant_weight_up_to(SimpleType::of(Family::A, 2), &BigUint::from(8u32), |d, dim| {
            seen.push((d.highest_weight.clone(), dim.clone()));
        });
        let mut ws: Vec<Weight> = seen.iter().map(|(w, _)| w.clone()).collect();
        ws.sort();
        assert_eq!(
            ws,
            vec![
                Weight(vec![0, 0]),
                Weight(vec![0, 1]),
                Weight(vec![0, 2]),
                Weight(vec![1, 0]),
                Weight(vec![1, 1]),
                Weight(vec![2, 0]),
            ]
        );
    }
}
