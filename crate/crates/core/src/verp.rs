//! The fusion ring of `Ver_p`, symmetric and exterior powers, and the
//! invariants `m(X)`, `n(X)`, `N(X)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::principal::{verp_image, weyl_strings, SL2Char};
use crate::{is_prime, Error, Result};

/// A semisimple object `⊕ mult[c] · L_c` of `Ver_p`, `0 <= c <= p - 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerpObject {
    p: u64,
    mult: Vec<u64>,
}

pub(crate) fn check_p(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::ParameterRange(alloc::format!("Ver_p needs p >= 5, got {p}")));
    }
    Ok(())
}

impl VerpObject {
    pub fn zero(p: u64) -> Result<Self> {
        check_p(p)?;
        Ok(VerpObject { p, mult: vec![0; (p - 1) as usize] })
    }

    pub fn simple(c: u64, p: u64) -> Result<Self> {
        let mut x = VerpObject::zero(p)?;
        if c > p - 2 {
            return Err(Error::IndexOutOfRange { index: c, max: p - 2 });
        }
        x.mult[c as usize] = 1;
        Ok(x)
    }

    pub fn from_multiplicities(p: u64, mult: Vec<u64>) -> Result<Self> {
        check_p(p)?;
        if mult.len() != (p - 1) as usize {
            return Err(Error::DimensionMismatch { expected: (p - 1) as usize, got: mult.len() });
        }
        Ok(VerpObject { p, mult })
    }

    /// Build from `(index, multiplicity)` pairs.
    pub fn from_pairs(p: u64, pairs: &[(u64, u64)]) -> Result<Self> {
        let mut x = VerpObject::zero(p)?;
        for &(c, m) in pairs {
            if c > p - 2 {
                return Err(Error::IndexOutOfRange { index: c, max: p - 2 });
            }
            x.mult[c as usize] += m;
        }
        Ok(x)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn multiplicity(&self, c: u64) -> u64 {
        self.mult.get(c as usize).copied().unwrap_or(0)
    }

    pub(crate) fn add_simple(&mut self, c: u64, m: u64) {
        self.mult[c as usize] += m;
    }

    /// Non-zero `(index, multiplicity)` pairs in increasing index order.
    pub fn support(&self) -> Vec<(u64, u64)> {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(c, &m)| (c as u64, m))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// `Σ mult[c] · (c + 1)`, the integer lift of the dimension.
    pub fn lifted_dimension(&self) -> u64 {
        self.mult.iter().enumerate().map(|(c, &m)| m * (c as u64 + 1)).sum()
    }

    pub fn dim_mod_p(&self) -> u64 {
        dim_mod_p(self)
    }

    /// Whether this is `L_0` or `L_{p-2}`.
    pub fn is_invertible(&self) -> bool {
        let s = self.support();
        s.len() == 1 && s[0].1 == 1 && (s[0].0 == 0 || s[0].0 == self.p - 2)
    }

    pub fn direct_sum(&self, other: &VerpObject) -> Result<VerpObject> {
        self.same_p(other)?;
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        Ok(VerpObject { p: self.p, mult })
    }

    pub fn tensor(&self, other: &VerpObject) -> Result<VerpObject> {
        self.same_p(other)?;
        let mut out = VerpObject::zero(self.p)?;
        for (a, ma) in self.support() {
            for (b, mb) in other.support() {
                for (c, _) in fuse(a, b, self.p)?.support() {
                    out.mult[c as usize] += ma * mb;
                }
            }
        }
        Ok(out)
    }

    fn same_p(&self, other: &VerpObject) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ParameterRange(alloc::format!(
                "objects live in Ver_{} and Ver_{}",
                self.p,
                other.p
            )));
        }
        Ok(())
    }
}

impl fmt::Display for VerpObject {
    /// `0`, `L_9`, `L_2 ⊕ L_10`, `2·L_3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.support();
        if s.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, m)) in s.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            if m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "L_{c}")?;
        }
        Ok(())
    }
}

/// `L_a ⊗ L_b` in `Ver_p`.
pub fn fuse(a: u64, b: u64, p: u64) -> Result<VerpObject> {
    check_p(p)?;
    for x in [a, b] {
        if x > p - 2 {
            return Err(Error::IndexOutOfRange { index: x, max: p - 2 });
        }
    }
    let mut out = VerpObject::zero(p)?;
    let hi = (a + b).min(2 * p - 4 - a - b);
    let mut c = a.abs_diff(b);
    while c <= hi {
        out.mult[c as usize] = 1;
        c += 2;
    }
    Ok(out)
}

/// `Σ mult[c] · (c + 1) mod p`.
pub fn dim_mod_p(x: &VerpObject) -> u64 {
    x.mult
        .iter()
        .enumerate()
        .fold(0, |acc, (c, &m)| (acc + (m % x.p) * ((c as u64 + 1) % x.p)) % x.p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PowerKind {
    Sym,
    Ext,
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PowerKind::Sym => "Sym",
            PowerKind::Ext => "Λ",
        })
    }
}

/// `Sym^d X` or `Λ^d X` for `1 <= d <= p - 1`.
pub fn sym_ext_power(x: &VerpObject, d: u64, kind: PowerKind) -> Result<VerpObject> {
    let p = x.p;
    if d == 0 || d >= p {
        return Err(Error::DegreeOutOfRange { degree: d, max: p - 1 });
    }
    let lifted = lifted_power_character(x, d, kind)?;
    verp_image(&weyl_strings(&lifted)?, p)
}

/// The degree-`d` complete (or elementary) symmetric polynomial in the
/// monomials `x^w`, one per weight of the lift of `x` to `SL2` Weyl strings.
pub fn lifted_power_character(x: &VerpObject, d: u64, kind: PowerKind) -> Result<SL2Char> {
    let d = d as usize;
    let top = x.support().last().map(|&(c, _)| c as i64).unwrap_or(0);
    let offset = d as i64 * top;
    let width = (2 * offset + 1) as usize;

    let mut weights = Vec::new();
    for (c, m) in x.support() {
        for _ in 0..m {
            let c = c as i64;
            weights.extend((0..=c).map(|k| c - 2 * k));
        }
    }

    // poly[k][offset + w] = coefficient of x^w in degree k.
    let mut poly: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); width]; d + 1];
    poly[0][offset as usize] = BigUint::from(1u32);
    for &w in &weights {
        let update = |poly: &mut Vec<Vec<BigUint>>, k: usize| {
            let (lo, hi) = poly.split_at_mut(k);
            let src = &lo[k - 1];
            let dst = &mut hi[0];
            for (idx, coeff) in src.iter().enumerate() {
                if !coeff.is_zero() {
                    let target = idx as i64 + w;
                    if (0..width as i64).contains(&target) {
                        dst[target as usize] += coeff;
                    }
                }
            }
        };
        match kind {
            PowerKind::Ext => {
                for k in (1..=d).rev() {
                    update(&mut poly, k);
                }
            }
            PowerKind::Sym => {
                for k in 1..=d {
                    update(&mut poly, k);
                }
            }
        }
    }

    let mut coeffs = BTreeMap::new();
    for (idx, c) in poly[d].iter().enumerate() {
        if !c.is_zero() {
            let m = c.to_u64().ok_or(Error::Overflow("plethysm coefficient"))?;
            coeffs.insert(idx as i64 - offset, m);
        }
    }
    Ok(SL2Char::from_map(coeffs))
}

/// A top degree that is either known or beyond the computable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopDegree {
    Exact(u64),
    /// Non-zero up to and including this degree (`p - 1`); higher degrees
    /// are outside the range where the plethysm is valid.
    Undetermined(u64),
}

impl TopDegree {
    pub fn exact(self) -> Option<u64> {
        match self {
            TopDegree::Exact(d) => Some(d),
            TopDegree::Undetermined(_) => None,
        }
    }
}

impl fmt::Display for TopDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopDegree::Exact(d) => write!(f, "{d}"),
            TopDegree::Undetermined(d) => write!(f, "undetermined (>= {d})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `m(X)`, `n(X)`, `N(X)` and the parity of `Λ^n X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerProfile {
    pub m: TopDegree,
    pub n: TopDegree,
    pub total: Option<u64>,
    pub top_ext_parity: Option<Parity>,
    /// `Sym^m X`, when `m` is determined.
    pub top_sym: Option<VerpObject>,
    /// `Λ^n X`, when `n` is determined.
    pub top_ext: Option<VerpObject>,
    /// `Sym^d X` for `d = 1..=p-1`.
    pub sym_powers: Vec<VerpObject>,
    /// `Λ^d X` for `d = 1..=p-1`.
    pub ext_powers: Vec<VerpObject>,
}

pub fn invariants_profile(x: &VerpObject) -> Result<PowerProfile> {
    if x.is_zero() {
        return Err(Error::ZeroObject);
    }
    let p = x.p;
    let powers = |kind| -> Result<Vec<VerpObject>> { (1..p).map(|d| sym_ext_power(x, d, kind)).collect() };
    let sym_powers = powers(PowerKind::Sym)?;
    let ext_powers = powers(PowerKind::Ext)?;

    let top = |ps: &[VerpObject]| -> (TopDegree, Option<VerpObject>) {
        match ps.iter().position(|o| o.is_zero()) {
            Some(0) => (TopDegree::Exact(0), None),
            Some(i) => (TopDegree::Exact(i as u64), Some(ps[i - 1].clone())),
            None => (TopDegree::Undetermined(p - 1), None),
        }
    };
    let (m, top_sym) = top(&sym_powers);
    let (n, top_ext) = top(&ext_powers);
    let total = match (m, n) {
        (TopDegree::Exact(a), TopDegree::Exact(b)) => Some(a + b),
        _ => None,
    };
    let top_ext_parity = match (&top_ext, total) {
        (Some(obj), Some(_)) if obj.is_invertible() => match obj.dim_mod_p() {
            1 => Some(Parity::Even),
            d if d == p - 1 => Some(Parity::Odd),
            _ => None,
        },
        _ => None,
    };
    Ok(PowerProfile { m, n, total, top_ext_parity, top_sym, top_ext, sym_powers, ext_powers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(c: u64, p: u64) -> VerpObject {
        VerpObject::simple(c, p).unwrap()
    }

    #[test]
    fn fusion_examples() {
        for p in [5, 7, 11] {
            for a in 0..=p - 2 {
                assert_eq!(fuse(a, 0, p).unwrap(), l(a, p));
            }
            assert_eq!(fuse(p - 2, p - 2, p).unwrap(), l(0, p));
        }
        assert_eq!(fuse(2, 2, 7).unwrap(), VerpObject::from_pairs(7, &[(0, 1), (2, 1), (4, 1)]).unwrap());
        assert_eq!(dim_mod_p(&fuse(2, 2, 7).unwrap()), 2);
        assert!(matches!(fuse(6, 0, 7), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(VerpObject::zero(3), Err(Error::ParameterRange(_))));
    }

    #[test]
    fn fusion_ring_laws() {
        for p in [5u64, 7, 11, 13] {
            for a in 0..=p - 2 {
                for b in 0..=p - 2 {
                    let ab = fuse(a, b, p).unwrap();
                    assert_eq!(ab, fuse(b, a, p).unwrap());
                    assert_eq!(dim_mod_p(&ab), (a + 1) * (b + 1) % p);
                    for c in 0..=p - 2 {
                        let left = ab.tensor(&l(c, p)).unwrap();
                        let right = l(a, p).tensor(&fuse(b, c, p).unwrap()).unwrap();
                        assert_eq!(left, right, "({a},{b},{c}) in Ver_{p}");
                    }
                }
            }
        }
    }

    #[test]
    fn power_examples() {
        assert_eq!(sym_ext_power(&l(2, 7), 3, PowerKind::Ext).unwrap(), l(0, 7));
        assert!(sym_ext_power(&l(2, 7), 5, PowerKind::Sym).unwrap().is_zero());
        for c in 0..=5 {
            assert_eq!(sym_ext_power(&l(c, 7), 1, PowerKind::Ext).unwrap(), l(c, 7));
            assert_eq!(sym_ext_power(&l(c, 7), 1, PowerKind::Sym).unwrap(), l(c, 7));
        }
        assert_eq!(
            sym_ext_power(&l(2, 7), 7, PowerKind::Sym),
            Err(Error::DegreeOutOfRange { degree: 7, max: 6 })
        );
        assert!(sym_ext_power(&l(2, 7), 0, PowerKind::Sym).is_err());
    }

    #[test]
    fn brute_force_plethysm_oracle() {
        // Sym^d and Λ^d weights by enumerating multisets / subsets of the
        // lifted weight list directly.
        fn multisets(items: &[i64], d: usize, start: usize, acc: i64, out: &mut BTreeMap<i64, u64>, strict: bool) {
            if d == 0 {
                *out.entry(acc).or_insert(0) += 1;
                return;
            }
            for i in start..items.len() {
                let next = if strict { i + 1 } else { i };
                multisets(items, d - 1, next, acc + items[i], out, strict);
            }
        }
        let p = 7;
        for c in 0..=5u64 {
            let x = l(c, p);
            let items: Vec<i64> = (0..=c as i64).map(|k| c as i64 - 2 * k).collect();
            for d in 1..p {
                for (kind, strict) in [(PowerKind::Sym, false), (PowerKind::Ext, true)] {
                    let mut want = BTreeMap::new();
                    multisets(&items, d as usize, 0, 0, &mut want, strict);
                    let got = lifted_power_character(&x, d, kind).unwrap();
                    assert_eq!(got.coeffs(), &want, "{kind}^{d} L_{c}");
                }
            }
        }
    }

    #[test]
    fn profile_examples() {
        let p = 7;
        let prof = invariants_profile(&l(1, p)).unwrap();
        assert_eq!((prof.m, prof.n, prof.total), (TopDegree::Exact(5), TopDegree::Exact(2), Some(7)));
        assert_eq!(prof.top_ext_parity, Some(Parity::Even));

        let unit = invariants_profile(&l(0, p)).unwrap();
        assert_eq!(unit.m, TopDegree::Undetermined(6));
        assert_eq!(unit.n, TopDegree::Exact(1));
        assert_eq!(unit.total, None);
        assert_eq!(unit.top_ext_parity, None);

        for p in [5u64, 7, 11, 13] {
            for n in (3..=p - 2).step_by(2) {
                let prof = invariants_profile(&l(n - 1, p)).unwrap();
                assert_eq!(prof.m, TopDegree::Exact(p - n));
                assert_eq!(prof.n, TopDegree::Exact(n));
                assert_eq!(prof.total, Some(p));
                assert_eq!(prof.top_ext_parity, Some(Parity::Even));
            }
        }
        assert_eq!(invariants_profile(&VerpObject::zero(7).unwrap()), Err(Error::ZeroObject));
    }

    #[test]
    fn display() {
        let x = VerpObject::from_pairs(13, &[(2, 1), (10, 1), (3, 2)]).unwrap();
        assert_eq!(alloc::format!("{x}"), "L_2 ⊕ 2·L_3 ⊕ L_10");
        assert_eq!(alloc::format!("{}", VerpObject::zero(5).unwrap()), "0");
    }
}
