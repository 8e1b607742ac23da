//! Simple root systems in Bourbaki numbering.
//!
//! Roots are integer vectors in simple-root coordinates, weights are integer
//! vectors in fundamental-weight coordinates. Squared lengths are carried
//! scaled by 6 so that every inner product is an integer (long roots have
//! squared length 2, so their scaled norm is 12).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};

/// Scaled squared length of a long root.
pub const LONG_NORM: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Cartan--Killing type such as `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            let expected = match family {
                Family::A => "n >= 1",
                Family::B | Family::C => "n >= 2",
                Family::D => "n >= 3",
                Family::E => "n in {6, 7, 8}",
                Family::F => "n = 4",
                Family::G => "n = 2",
            };
            return Err(LieError::InadmissibleRank {
                family: family.letter(),
                rank,
                expected,
            });
        }
        Ok(SimpleType { family, rank })
    }

    /// Shorthand for types known to be admissible. Panics otherwise.
    pub fn of(family: Family, rank: usize) -> Self {
        Self::new(family, rank).expect("admissible simple type")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Dimension of the simple Lie algebra from the closed-form formulas,
    /// independent of any root enumeration.
    pub fn dimension(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    pub fn positive_root_count(self) -> usize {
        (self.dimension() - self.rank) / 2
    }

    /// Representative of the isomorphism class: `B2` is reported as `C2`.
    pub fn canonical(self) -> Self {
        if self.family == Family::B && self.rank == 2 {
            SimpleType::of(Family::C, 2)
        } else {
            self
        }
    }

    /// Dynkin edges (0-based node indices, Bourbaki numbering).
    fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let path = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => path(n),
            Family::D => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Scaled squared lengths of the simple roots.
    fn simple_norms(self) -> Vec<i64> {
        let n = self.rank;
        let mut norms = vec![LONG_NORM; n];
        match self.family {
            Family::B => norms[n - 1] = 6,
            Family::C => norms[..n - 1].iter_mut().for_each(|x| *x = 6),
            Family::F => {
                norms[2] = 6;
                norms[3] = 6;
            }
            Family::G => norms[0] = 4,
            _ => {}
        }
        norms
    }

    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let norms = self.simple_norms();
        let mut c = vec![vec![0i32; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Adjacent simple roots meet with inner product -max(|a_i|^2, |a_j|^2) / 2.
        for (i, j) in self.edges() {
            let m = norms[i].max(norms[j]);
            c[i][j] = (-m / norms[i]) as i32;
            c[j][i] = (-m / norms[j]) as i32;
        }
        c
    }

    /// Diagram automorphisms as node permutations `p` with
    /// `cartan[p[a]][p[b]] == cartan[a][b]`.
    pub fn diagram_automorphisms(self) -> Vec<Vec<usize>> {
        let c = self.cartan_matrix();
        cartan_isomorphisms(&c, &c, usize::MAX)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| LieError::ParseType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| LieError::ParseType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight in fundamental-weight coordinates `<lambda, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight with 1-based Bourbaki label `i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| LieError::ParseWeight(s.to_string()))
    }
}

/// Immutable exact model of a simple root system.
#[derive(Debug)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i32>>,
    simple_norms: Vec<i64>,
    /// Scaled inner products of simple roots.
    gram: Vec<Vec<i64>>,
    positive: Vec<Vec<i32>>,
    positive_coroots: Vec<Vec<i32>>,
    positive_norms: Vec<i64>,
    /// Positive roots in fundamental-weight coordinates.
    positive_weights: Vec<Weight>,
    index: HashMap<Vec<i32>, usize>,
    two_rho_check: Vec<i64>,
}

impl RootSystem {
    /// Generates the positive roots by closure: `beta + alpha_i` is a root iff
    /// the `alpha_i`-string through `beta` extends upward.
    pub fn build(ty: SimpleType) -> Self {
        let n = ty.rank;
        let cartan = ty.cartan_matrix();
        let simple_norms = ty.simple_norms();
        let gram: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| simple_norms[i] * cartan[i][j] as i64 / 2).collect())
            .collect();

        let mut positive: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut index: HashMap<Vec<i32>, usize> =
            positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let mut cursor = 0;
        while cursor < positive.len() {
            let beta = positive[cursor].clone();
            for i in 0..n {
                let mut down = beta.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if index.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !index.contains_key(&up) {
                        index.insert(up.clone(), positive.len());
                        positive.push(up);
                    }
                }
            }
            cursor += 1;
        }

        let norm_of = |r: &[i32]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += r[i] as i64 * r[j] as i64 * gram[i][j];
                }
            }
            s
        };
        let positive_norms: Vec<i64> = positive.iter().map(|r| norm_of(r)).collect();
        let positive_coroots: Vec<Vec<i32>> = positive
            .iter()
            .zip(&positive_norms)
            .map(|(r, &nr)| {
                (0..n)
                    .map(|i| {
                        let v = r[i] as i64 * simple_norms[i];
                        debug_assert_eq!(v % nr, 0);
                        (v / nr) as i32
                    })
                    .collect()
            })
            .collect();
        let positive_weights = positive
            .iter()
            .map(|r| Weight((0..n).map(|i| (0..n).map(|j| (r[j] * cartan[i][j]) as i64).sum()).collect()))
            .collect();
        let mut two_rho_check = vec![0i64; n];
        for c in &positive_coroots {
            for i in 0..n {
                two_rho_check[i] += c[i] as i64;
            }
        }

        RootSystem {
            ty,
            cartan,
            simple_norms,
            gram,
            positive,
            positive_coroots,
            positive_norms,
            positive_weights,
            index,
            two_rho_check,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn dimension(&self) -> usize {
        2 * self.positive.len() + self.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive
    }

    /// Positive coroots in simple-coroot coordinates, aligned with
    /// [`RootSystem::positive_roots`].
    pub fn positive_coroots(&self) -> &[Vec<i32>] {
        &self.positive_coroots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_weights
    }

    /// `2 rho^vee` in simple-coroot coordinates.
    pub fn sum_positive_coroots(&self) -> &[i64] {
        &self.two_rho_check
    }

    pub fn highest_root(&self) -> &[i32] {
        self.positive.last().expect("root systems are nonempty")
    }

    pub fn height(root: &[i32]) -> i32 {
        root.iter().sum()
    }

    /// Position of a positive root.
    pub fn positive_index(&self, root: &[i32]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i32]) -> bool {
        if v.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i32> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// All roots, positive roots first, then their negatives in the same order.
    pub fn all_roots(&self) -> Vec<Vec<i32>> {
        let mut v = self.positive.clone();
        v.extend(self.positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        v
    }

    /// Scaled inner product `6 (a, b)` of vectors in simple-root coordinates.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] as i64 * b[j] as i64 * self.gram[i][j];
            }
        }
        s
    }

    /// Squared length of a root with long roots normalized to 2.
    pub fn squared_length(&self, root: &[i32]) -> Result<Ratio<i64>> {
        self.check_root(root)?;
        Ok(Ratio::new(self.inner(root, root), 6))
    }

    pub fn is_long(&self, root: &[i32]) -> bool {
        self.inner(root, root) == LONG_NORM
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn cartan_pairing(&self, beta: &[i32], alpha: &[i32]) -> i64 {
        2 * self.inner(beta, alpha) / self.inner(alpha, alpha)
    }

    fn check_root(&self, root: &[i32]) -> Result<()> {
        if root.len() != self.rank() {
            return Err(LieError::RootLength {
                expected: self.rank(),
                got: root.len(),
            });
        }
        if !self.is_root(root) {
            return Err(LieError::NotARoot(root.to_vec()));
        }
        Ok(())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(LieError::WeightLength {
                algebra: self.ty.to_string(),
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Coroot of an arbitrary root in simple-coroot coordinates.
    pub fn coroot(&self, root: &[i32]) -> Result<Vec<i32>> {
        self.check_root(root)?;
        if let Some(k) = self.positive_index(root) {
            return Ok(self.positive_coroots[k].clone());
        }
        let neg: Vec<i32> = root.iter().map(|x| -x).collect();
        let k = self.positive_index(&neg).expect("checked root");
        Ok(self.positive_coroots[k].iter().map(|x| -x).collect())
    }

    /// `<lambda, alpha^vee>` for a root given in simple-root coordinates.
    pub fn pairing(&self, lambda: &Weight, alpha: &[i32]) -> Result<i64> {
        self.check_weight(lambda)?;
        let c = self.coroot(alpha)?;
        Ok(lambda.0.iter().zip(&c).map(|(l, &x)| l * x as i64).sum())
    }

    /// Pairing with the `k`-th positive coroot, without validation.
    pub fn pairing_positive(&self, lambda: &Weight, k: usize) -> i64 {
        lambda
            .0
            .iter()
            .zip(&self.positive_coroots[k])
            .map(|(l, &x)| l * x as i64)
            .sum()
    }

    /// The simple root `alpha_i` (0-based) in weight coordinates.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.cartan[k][i] as i64).collect())
    }

    /// Simple reflection `s_i` (0-based) on a weight.
    pub fn reflect_weight(&self, i: usize, w: &Weight) -> Weight {
        let m = w.0[i];
        Weight(
            w.0.iter()
                .enumerate()
                .map(|(k, &x)| x - m * self.cartan[k][i] as i64)
                .collect(),
        )
    }

    /// Reflection `s_alpha(beta)` on vectors in simple-root coordinates.
    pub fn reflect_root(&self, alpha: &[i32], beta: &[i32]) -> Vec<i32> {
        let c = self.cartan_pairing(beta, alpha) as i32;
        beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect()
    }

    /// The dominant element of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            w = self.reflect_weight(i, &w);
        }
        w
    }

    /// Fundamental weights in simple-root coordinates: row `i` is `pi_{i+1}`.
    pub fn fundamental_weights(&self) -> Vec<Vec<Ratio<i64>>> {
        // alpha_j = sum_i cartan[i][j] pi_i, so pi = M^{-1} with M[i][j] = cartan[i][j].
        let n = self.rank();
        let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| (0..n).map(|j| Ratio::from_integer(self.cartan[i][j] as i64)).collect())
            .collect();
        let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrices are invertible");
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col];
            for j in 0..n {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for j in 0..n {
                        let (x, y) = (a[col][j], inv[col][j]);
                        a[r][j] -= f * x;
                        inv[r][j] -= f * y;
                    }
                }
            }
        }
        // Column i of M^{-1} is pi_i in root coordinates.
        (0..n).map(|i| (0..n).map(|k| inv[k][i]).collect()).collect()
    }

    /// Scaled inner products of fundamental weights: `6 (pi_i, pi_j)`.
    pub fn weight_gram(&self) -> Vec<Vec<Ratio<i64>>> {
        // (pi_i, pi_j) = (pi_i in root coords)_j * (alpha_j, alpha_j) / 2
        let pis = self.fundamental_weights();
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| pis[i][j] * Ratio::from_integer(self.simple_norms[j]) / Ratio::from_integer(2))
                    .collect()
            })
            .collect()
    }

    /// Base of the root subsystem cut out by `keep`, split into simple
    /// components with their simple roots in Bourbaki order.
    pub fn sub_root_system<F>(&self, keep: F) -> Result<SubSystem>
    where
        F: Fn(&[i32]) -> bool,
    {
        let kept_pos: Vec<&Vec<i32>> = self.positive.iter().filter(|r| keep(r)).collect();
        for r in &kept_pos {
            let neg: Vec<i32> = r.iter().map(|x| -x).collect();
            if !keep(&neg) {
                return Err(LieError::NotClosed(format!("{r:?} kept but its negative is not")));
            }
        }
        if self.positive.iter().any(|r| {
            let neg: Vec<i32> = r.iter().map(|x| -x).collect();
            keep(&neg) && !keep(r)
        }) {
            return Err(LieError::NotClosed("a negative root is kept without its positive".into()));
        }
        let n = self.rank();
        let kept_set: HashSet<&[i32]> = kept_pos.iter().map(|r| r.as_slice()).collect();
        let mut buf = vec![0i32; n];
        for a in &kept_pos {
            // Row of <alpha_j, a^vee>, so each reflection costs O(rank).
            let aa = self.inner(a, a);
            let row: Vec<i64> = (0..n)
                .map(|j| 2 * (0..n).map(|k| a[k] as i64 * self.gram[j][k]).sum::<i64>() / aa)
                .collect();
            for b in &kept_pos {
                let c: i64 = b.iter().zip(&row).map(|(&x, &y)| x as i64 * y).sum();
                for k in 0..n {
                    buf[k] = b[k] - c as i32 * a[k];
                }
                if !kept_set.contains(buf.as_slice()) {
                    buf.iter_mut().for_each(|x| *x = -*x);
                    if !kept_set.contains(buf.as_slice()) {
                        return Err(LieError::NotClosed(format!("s_{a:?}({b:?}) is not kept")));
                    }
                }
            }
        }

        let base: Vec<Vec<i32>> = kept_pos
            .iter()
            .filter(|g| {
                !kept_pos.iter().any(|a| {
                    for k in 0..n {
                        buf[k] = g[k] - a[k];
                    }
                    kept_set.contains(buf.as_slice())
                })
            })
            .map(|g| (*g).clone())
            .collect();
        self.identify_base(base)
    }

    fn identify_base(&self, base: Vec<Vec<i32>>) -> Result<SubSystem> {
        let m = base.len();
        let cart: Vec<Vec<i32>> = (0..m)
            .map(|i| (0..m).map(|j| self.cartan_pairing(&base[j], &base[i]) as i32).collect())
            .collect();
        let mut seen = vec![false; m];
        let mut components = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                for v in 0..m {
                    if !seen[v] && cart[u][v] != 0 {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            let sub: Vec<Vec<i32>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| cart[i][j]).collect())
                .collect();
            let (ty, perm) = identify_cartan(&sub)?;
            let simple_roots = perm.iter().map(|&p| base[comp[p]].clone()).collect();
            components.push(Component { ty, simple_roots });
        }
        components.sort_by_key(|a| a.ty);
        Ok(SubSystem { components })
    }

    /// Simple types of the subsystem cut out by `keep`.
    pub fn sub_root_system_type<F>(&self, keep: F) -> Result<Vec<SimpleType>>
    where
        F: Fn(&[i32]) -> bool,
    {
        Ok(self.sub_root_system(keep)?.types())
    }

    /// JSON document with type, rank, Cartan matrix and positive roots.
    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            simple_type: self.ty,
            rank: self.rank(),
            dimension: self.dimension(),
            cartan_matrix: self.cartan.clone(),
            positive_roots: self.positive.clone(),
            highest_root: self.highest_root().to_vec(),
            sum_positive_coroots: self.two_rho_check.clone(),
            simple_root_squared_lengths: self
                .simple_norms
                .iter()
                .map(|&x| format!("{}", Ratio::new(x, 6)))
                .collect(),
        }
    }

    /// Scaled squared lengths of the positive roots.
    pub fn positive_norms(&self) -> &[i64] {
        &self.positive_norms
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDocument {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub rank: usize,
    pub dimension: usize,
    pub cartan_matrix: Vec<Vec<i32>>,
    pub positive_roots: Vec<Vec<i32>>,
    pub highest_root: Vec<i32>,
    pub sum_positive_coroots: Vec<i64>,
    pub simple_root_squared_lengths: Vec<String>,
}

/// One simple component of a root subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: SimpleType,
    /// Simple roots of the component in the ambient simple-root coordinates,
    /// ordered so that they realize the Bourbaki Cartan matrix of `ty`.
    pub simple_roots: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SubSystem {
    pub components: Vec<Component>,
}

impl SubSystem {
    pub fn types(&self) -> Vec<SimpleType> {
        self.components.iter().map(|c| c.ty).collect()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.ty.rank()).sum()
    }

    pub fn dimension(&self) -> usize {
        self.components.iter().map(|c| c.ty.dimension()).sum()
    }
}

/// All node maps `p` (target node -> source node) with
/// `source[p[a]][p[b]] == target[a][b]`, up to `limit` solutions.
fn cartan_isomorphisms(target: &[Vec<i32>], source: &[Vec<i32>], limit: usize) -> Vec<Vec<usize>> {
    fn go(
        t: &[Vec<i32>],
        s: &[Vec<i32>],
        assigned: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let a = assigned.len();
        if a == t.len() {
            out.push(assigned.clone());
            return;
        }
        for cand in 0..s.len() {
            if used[cand] {
                continue;
            }
            let ok = assigned
                .iter()
                .enumerate()
                .all(|(b, &pb)| s[cand][pb] == t[a][b] && s[pb][cand] == t[b][a]);
            if ok {
                used[cand] = true;
                assigned.push(cand);
                go(t, s, assigned, used, out, limit);
                assigned.pop();
                used[cand] = false;
            }
        }
    }
    if target.len() != source.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(target, source, &mut Vec::new(), &mut vec![false; source.len()], &mut out, limit);
    out
}

/// Matches a connected Cartan matrix against the classification. Candidates
/// are tried in the order A, C, B, D, E, F, G, so `C2` wins over `B2` and
/// `A3` over `D3`.
pub fn identify_cartan(c: &[Vec<i32>]) -> Result<(SimpleType, Vec<usize>)> {
    let r = c.len();
    for fam in [Family::A, Family::C, Family::B, Family::D, Family::E, Family::F, Family::G] {
        let Ok(ty) = SimpleType::new(fam, r) else { continue };
        if let Some(p) = cartan_isomorphisms(&ty.cartan_matrix(), c, 1).pop() {
            return Ok((ty, p));
        }
    }
    Err(LieError::Unidentified(r))
}

/// Lexicographically largest image of a weight under diagram automorphisms.
pub fn canonical_weight(ty: SimpleType, w: &Weight) -> Weight {
    ty.diagram_automorphisms()
        .iter()
        .map(|p| Weight(p.iter().map(|&src| w.0[src]).collect()))
        .max()
        .unwrap_or_else(|| w.clone())
}

/// Shared cache of root systems. Entries are immutable, so a racing double
/// build is harmless.
pub fn root_system(ty: SimpleType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rs) = cache.lock().expect("root system cache").get(&ty) {
        return rs.clone();
    }
    let rs = Arc::new(RootSystem::build(ty));
    cache
        .lock()
        .expect("root system cache")
        .entry(ty)
        .or_insert(rs)
        .clone()
}

/// Convenience: parse and build.
pub fn build_root_system(ty: &str) -> Result<Arc<RootSystem>> {
    Ok(root_system(ty.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    /// Reflection-closure oracle: orbit of the simple roots under all root
    /// reflections, computed without the string criterion.
    fn reflection_closure(ty: SimpleType) -> usize {
        let rs = RootSystem::build(ty);
        let n = ty.rank();
        let mut roots: HashSet<Vec<i32>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        loop {
            let cur: Vec<Vec<i32>> = roots.iter().cloned().collect();
            let mut grew = false;
            for a in &cur {
                for b in &cur {
                    let s = rs.reflect_root(a, b);
                    grew |= roots.insert(s);
                }
            }
            if !grew {
                break;
            }
        }
        roots.len() / 2
    }

    #[test]
    fn inadmissible_ranks_are_rejected() {
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!("A0".parse::<SimpleType>().is_err());
        assert!("Q3".parse::<SimpleType>().is_err());
        let msg = SimpleType::new(Family::F, 3).unwrap_err().to_string();
        assert!(msg.contains("F"), "{msg}");
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(RootSystem::build(t("A1")).positive_roots().len(), 1);
        assert_eq!(RootSystem::build(t("A1")).dimension(), 3);
        assert_eq!(reflection_closure(t("G2")), 6);
        assert_eq!(RootSystem::build(t("G2")).dimension(), 14);
        assert_eq!(reflection_closure(t("E7")), 63);
        assert_eq!(RootSystem::build(t("E7")).dimension(), 133);
        for ty in ["A5", "B4", "C5", "D6", "E6", "E8", "F4"] {
            let ty = t(ty);
            assert_eq!(RootSystem::build(ty).positive_roots().len(), reflection_closure(ty), "{ty}");
            assert_eq!(RootSystem::build(ty).dimension(), ty.dimension(), "{ty}");
        }
    }

    #[test]
    fn gram_matrix_is_symmetric() {
        for ty in ["B3", "C4", "F4", "G2", "E6"] {
            let rs = RootSystem::build(t(ty));
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(rs.gram[i][j], rs.gram[j][i], "{ty}");
                }
            }
        }
    }

    #[test]
    fn highest_roots_in_bourbaki_coordinates() {
        assert_eq!(RootSystem::build(t("E8")).highest_root(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(RootSystem::build(t("E7")).highest_root(), &[2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(RootSystem::build(t("F4")).highest_root(), &[2, 3, 4, 2]);
        assert_eq!(RootSystem::build(t("G2")).highest_root(), &[3, 2]);
        assert_eq!(RootSystem::build(t("B4")).highest_root(), &[1, 2, 2, 2]);
        assert_eq!(RootSystem::build(t("C4")).highest_root(), &[2, 2, 2, 1]);
    }

    #[test]
    fn highest_root_is_unique_maximal() {
        for ty in ["A4", "B5", "C3", "D5", "E6", "F4", "G2"] {
            let rs = RootSystem::build(t(ty));
            let maximal: Vec<&Vec<i32>> = rs
                .positive_roots()
                .iter()
                .filter(|r| {
                    (0..rs.rank()).all(|i| {
                        let mut up = (*r).clone();
                        up[i] += 1;
                        !rs.is_root(&up)
                    })
                })
                .collect();
            assert_eq!(maximal, vec![&rs.highest_root().to_vec()], "{ty}");
        }
    }

    #[test]
    fn pairing_examples() {
        let a1 = RootSystem::build(t("A1"));
        assert_eq!(a1.pairing(&Weight(vec![1]), &[1]).unwrap(), 1);
        assert_eq!(a1.pairing(&Weight(vec![3]), &[1]).unwrap(), 3);
        let e7 = RootSystem::build(t("E7"));
        let theta = e7.highest_root().to_vec();
        // The 56-dimensional node is pi_7 in Bourbaki numbering.
        assert_eq!(e7.pairing(&Weight::fundamental(7, 7), &theta).unwrap(), 1);
        assert_eq!(e7.pairing(&Weight::fundamental(7, 1), &theta).unwrap(), 2);
        assert!(e7.pairing(&Weight(vec![1, 0]), &theta).is_err());
        assert!(e7.pairing(&Weight::zero(7), &[1, 1, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn cartan_pairing_matches_matrix() {
        for ty in ["B3", "C3", "F4", "G2", "E7"] {
            let rs = RootSystem::build(t(ty));
            let n = rs.rank();
            let e = |i: usize| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            };
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(rs.cartan_pairing(&e(j), &e(i)), rs.cartan[i][j] as i64);
                }
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for ty in ["A3", "B3", "C3", "G2", "F4", "E6"] {
            let rs = RootSystem::build(t(ty));
            let pis = rs.fundamental_weights();
            let n = rs.rank();
            for (i, pi) in pis.iter().enumerate() {
                for j in 0..n {
                    // <pi_i, alpha_j^vee> = 2 (pi_i, alpha_j) / (alpha_j, alpha_j)
                    let mut s = Ratio::zero();
                    for k in 0..n {
                        s += pi[k] * Ratio::from_integer(rs.gram[k][j]);
                    }
                    let pair = s * Ratio::from_integer(2) / Ratio::from_integer(rs.simple_norms[j]);
                    let expect = if i == j { Ratio::one() } else { Ratio::zero() };
                    assert_eq!(pair, expect, "{ty} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn sub_root_system_examples() {
        let orth = |ty: &str, i: usize| {
            let rs = RootSystem::build(t(ty));
            let w = Weight::fundamental(rs.rank(), i);
            rs.sub_root_system_type(|r| rs.pairing(&w, r).unwrap() == 0).unwrap()
        };
        assert_eq!(orth("E7", 7), vec![t("E6")]);
        assert_eq!(orth("E7", 1), vec![t("D6")]);
        assert_eq!(orth("C3", 3), vec![t("A2")]);
        assert_eq!(orth("B6", 6), vec![t("A5")]);
        assert_eq!(orth("E6", 4), vec![t("A1"), t("A2"), t("A2")]);
    }

    #[test]
    fn long_roots_of_b2_form_two_a1() {
        let rs = RootSystem::build(t("B2"));
        let ty = rs.sub_root_system_type(|r| rs.inner(r, r) == LONG_NORM).unwrap();
        assert_eq!(ty, vec![t("A1"), t("A1")]);
        let long_g2 = RootSystem::build(t("G2"));
        let ty = long_g2.sub_root_system_type(|r| long_g2.is_long(r)).unwrap();
        assert_eq!(ty, vec![t("A2")]);
        let ty = RootSystem::build(t("F4"));
        assert_eq!(ty.sub_root_system_type(|r| ty.is_long(r)).unwrap(), vec![t("D4")]);
    }

    #[test]
    fn non_closed_subsets_are_rejected() {
        let rs = RootSystem::build(t("A2"));
        // Keep alpha_1 and alpha_2 but drop alpha_1 + alpha_2.
        let err = rs.sub_root_system(|r| r.iter().map(|x| x.abs()).sum::<i32>() == 1);
        assert!(matches!(err, Err(LieError::NotClosed(_))));
        let err = rs.sub_root_system(|r| r == [1, 0]);
        assert!(matches!(err, Err(LieError::NotClosed(_))));
    }

    #[test]
    fn component_simple_roots_realize_bourbaki_matrix() {
        let rs = RootSystem::build(t("F4"));
        let w = Weight::fundamental(4, 1);
        let sub = rs.sub_root_system(|r| rs.pairing(&w, r).unwrap() == 0).unwrap();
        assert_eq!(sub.types(), vec![t("C3")]);
        let c = &sub.components[0];
        let target = c.ty.cartan_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    rs.cartan_pairing(&c.simple_roots[j], &c.simple_roots[i]) as i32,
                    target[i][j]
                );
            }
        }
    }

    #[test]
    fn diagram_automorphism_counts() {
        assert_eq!(t("A4").diagram_automorphisms().len(), 2);
        assert_eq!(t("D4").diagram_automorphisms().len(), 6);
        assert_eq!(t("D6").diagram_automorphisms().len(), 2);
        assert_eq!(t("E6").diagram_automorphisms().len(), 2);
        assert_eq!(t("E7").diagram_automorphisms().len(), 1);
        assert_eq!(t("B3").diagram_automorphisms().len(), 1);
        assert_eq!(canonical_weight(t("D4"), &Weight(vec![0, 0, 1, 0])), Weight(vec![1, 0, 0, 0]));
        assert_eq!(canonical_weight(t("D6"), &Weight(vec![0, 0, 0, 0, 0, 1])), Weight(vec![0, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn document_round_trips_through_json() {
        let doc = RootSystem::build(t("G2")).to_document();
        let json = serde_json::to_string(&doc).unwrap();
        let back: RootSystemDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.positive_roots.len(), 6);
    }
}
