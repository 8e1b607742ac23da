//! Classical group labels (`SL6`, `SO12`, `SP3`, `E7`, ...) resolved into
//! simple types and their standard modules, including the low-rank
//! coincidences `SO3 = A1`, `SO4 = A1 x A1`, `SO5 = C2`, `SO6 = A3`.

use crate::error::{LieError, Result};
use crate::reptheory::{IrrepDescriptor, TensorProduct};
use crate::rootsys::{Family, SimpleType, Weight};

fn irrep(ty: SimpleType, coords: Vec<i64>) -> IrrepDescriptor {
    IrrepDescriptor::new(ty, Weight(coords)).expect("dominant")
}

fn fundamental(ty: SimpleType, i: usize) -> IrrepDescriptor {
    IrrepDescriptor::fundamental(ty, i)
}

/// Simple factors of `SO_k`. `SO_1` and `SO_2` have trivial semisimple part.
pub fn so_types(k: usize) -> Vec<SimpleType> {
    match k {
        0..=2 => vec![],
        3 => vec![SimpleType::of(Family::A, 1)],
        4 => vec![SimpleType::of(Family::A, 1); 2],
        5 => vec![SimpleType::of(Family::C, 2)],
        6 => vec![SimpleType::of(Family::A, 3)],
        _ if k % 2 == 1 => vec![SimpleType::of(Family::B, (k - 1) / 2)],
        _ => vec![SimpleType::of(Family::D, k / 2)],
    }
}

/// The defining `k`-dimensional module of `SO_k`, `k >= 3`.
pub fn so_standard(k: usize) -> Option<TensorProduct> {
    let a1 = SimpleType::of(Family::A, 1);
    let f = match k {
        0..=2 => return None,
        3 => vec![irrep(a1, vec![2])],
        4 => vec![fundamental(a1, 1), fundamental(a1, 1)],
        5 => vec![fundamental(SimpleType::of(Family::C, 2), 2)],
        6 => vec![fundamental(SimpleType::of(Family::A, 3), 2)],
        _ => vec![fundamental(so_types(k)[0], 1)],
    };
    Some(TensorProduct(f))
}

/// Simple factors of `Sp_k` (rank `k`, acting on `C^{2k}`).
pub fn sp_types(k: usize) -> Vec<SimpleType> {
    match k {
        0 => vec![],
        1 => vec![SimpleType::of(Family::A, 1)],
        _ => vec![SimpleType::of(Family::C, k)],
    }
}

pub fn sp_standard(k: usize) -> Option<TensorProduct> {
    sp_types(k).first().map(|&t| TensorProduct(vec![fundamental(t, 1)]))
}

pub fn sl_types(k: usize) -> Vec<SimpleType> {
    if k < 2 {
        vec![]
    } else {
        vec![SimpleType::of(Family::A, k - 1)]
    }
}

/// `C^k` for `SL_k`. For `k = 1` this is the trivial one-dimensional module.
pub fn sl_standard(k: usize) -> TensorProduct {
    match sl_types(k).first() {
        Some(&t) => TensorProduct(vec![fundamental(t, 1)]),
        None => TensorProduct(vec![]),
    }
}

/// A parsed group label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Sl(usize),
    So(usize),
    Sp(usize),
    Exceptional(SimpleType),
    Trivial,
}

impl Group {
    /// Accepts `SL6`, `SO12`, `SP3`, `E7`, `G2`, `1`.
    pub fn parse(s: &str) -> Result<Group> {
        let s = s.trim();
        let bad = || LieError::ParseModule(s.to_string(), "unknown group label".into());
        if s == "1" {
            return Ok(Group::Trivial);
        }
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        if let Some(r) = s.strip_prefix("SL") {
            return Ok(Group::Sl(num(r)?));
        }
        if let Some(r) = s.strip_prefix("SO") {
            return Ok(Group::So(num(r)?));
        }
        if let Some(r) = s.strip_prefix("SP") {
            return Ok(Group::Sp(num(r)?));
        }
        let ty: SimpleType = s.parse().map_err(|_| bad())?;
        match ty.family() {
            Family::E | Family::F | Family::G => Ok(Group::Exceptional(ty)),
            _ => Err(bad()),
        }
    }

    pub fn types(self) -> Vec<SimpleType> {
        match self {
            Group::Sl(k) => sl_types(k),
            Group::So(k) => so_types(k),
            Group::Sp(k) => sp_types(k),
            Group::Exceptional(t) => vec![t],
            Group::Trivial => vec![],
        }
    }

    pub fn standard(self) -> Result<TensorProduct> {
        let none = || LieError::Unsupported(format!("{self:?} has no standard module here"));
        match self {
            Group::Sl(k) => Ok(sl_standard(k)),
            Group::So(k) => so_standard(k).ok_or_else(none),
            Group::Sp(k) => sp_standard(k).ok_or_else(none),
            Group::Exceptional(t) if t == SimpleType::of(Family::G, 2) => {
                Ok(TensorProduct(vec![fundamental(t, 1)]))
            }
            _ => Err(none()),
        }
    }
}

/// Dimension of the compact group named `SU_k`, `U_k`, `SO_k`, `Sp_k`, `Spin_k`
/// or an exceptional letter, as used in coset labels.
pub fn compact_dimension(label: &str) -> Result<usize> {
    let bad = || LieError::ParseModule(label.to_string(), "unknown compact group".into());
    let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
    if let Some(r) = label.strip_prefix("SU") {
        let k = num(r)?;
        return Ok(k * k - 1);
    }
    if let Some(r) = label.strip_prefix("U") {
        let k = num(r)?;
        return Ok(k * k);
    }
    if let Some(r) = label.strip_prefix("Spin").or_else(|| label.strip_prefix("SO")) {
        let k = num(r)?;
        return Ok(k * k.saturating_sub(1) / 2);
    }
    if let Some(r) = label.strip_prefix("Sp") {
        let k = num(r)?;
        return Ok(k * (2 * k + 1));
    }
    let ty: SimpleType = label.parse().map_err(|_| bad())?;
    Ok(ty.dimension())
}

/// Canonically sorted type list, with `B2` folded into `C2`.
pub fn canonical_types(types: &[SimpleType]) -> Vec<SimpleType> {
    let mut v: Vec<SimpleType> = types.iter().map(|t| t.canonical()).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reptheory::weyl_dimension_u64;

    #[test]
    fn standard_modules_have_the_right_dimension() {
        for k in 3..=14 {
            let m = so_standard(k).unwrap();
            let d: u64 = m.0.iter().map(|f| weyl_dimension_u64(f).unwrap()).product();
            assert_eq!(d, k as u64, "SO{k}");
        }
        for k in 1..=6 {
            let m = sp_standard(k).unwrap();
            assert_eq!(weyl_dimension_u64(&m.0[0]).unwrap(), 2 * k as u64);
        }
    }

    #[test]
    fn compact_dimensions() {
        assert_eq!(compact_dimension("SU6").unwrap(), 35);
        assert_eq!(compact_dimension("U1").unwrap(), 1);
        assert_eq!(compact_dimension("Spin12").unwrap(), 66);
        assert_eq!(compact_dimension("Sp3").unwrap(), 21);
        assert_eq!(compact_dimension("E7").unwrap(), 133);
    }

    #[test]
    fn labels_parse() {
        assert_eq!(Group::parse("SO5").unwrap().types(), vec![SimpleType::of(Family::C, 2)]);
        assert_eq!(Group::parse("SL1").unwrap().types(), vec![]);
        assert!(Group::parse("XY3").is_err());
        assert!(Group::parse("SO4").unwrap().standard().is_ok());
        assert!(Group::parse("SO2").unwrap().standard().is_err());
    }
}
