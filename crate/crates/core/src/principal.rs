//! Restriction along a principal `SL2`, Weyl-string extraction and the
//! resulting image in `Ver_p`, with an independent cyclotomic evaluation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::charmod::{dominant_character_cached, CharacterCache, DominantCharacter};
use crate::rootsys::{dot, RootDatum, Weight};
use crate::verp::{check_p, VerpObject};
use crate::{is_prime, Error, Result};

/// A character of `SL2`: weight `↦` multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SL2Char {
    coeffs: BTreeMap<i64, u64>,
}

impl SL2Char {
    pub fn from_map(mut coeffs: BTreeMap<i64, u64>) -> Self {
        coeffs.retain(|_, m| *m > 0);
        SL2Char { coeffs }
    }

    /// The character of `⊕ Δ_m` over a Weyl-string multiset.
    pub fn from_strings(strings: &WeylString) -> Self {
        let mut coeffs = BTreeMap::new();
        for (&m, &k) in &strings.factors {
            let m = m as i64;
            for w in (-m..=m).step_by(2) {
                *coeffs.entry(w).or_insert(0) += k;
            }
        }
        SL2Char { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, u64> {
        &self.coeffs
    }

    pub fn dimension(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(w, m)| self.coeffs.get(&-w) == Some(m))
    }

    /// The common parity of all weights, or `None` for the zero character.
    pub fn parity(&self) -> Result<Option<u64>> {
        let mut parities = self.coeffs.keys().map(|w| w.rem_euclid(2) as u64);
        let first = match parities.next() {
            Some(p) => p,
            None => return Ok(None),
        };
        if parities.any(|q| q != first) {
            return Err(Error::MixedParity);
        }
        Ok(Some(first))
    }
}

/// A multiset of Weyl factors `Δ_m`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeylString {
    factors: BTreeMap<u64, u64>,
}

impl WeylString {
    pub fn from_indices(indices: &[u64]) -> Self {
        let mut factors = BTreeMap::new();
        for &m in indices {
            *factors.entry(m).or_insert(0) += 1;
        }
        WeylString { factors }
    }

    pub fn factors(&self) -> &BTreeMap<u64, u64> {
        &self.factors
    }

    /// Indices with repetition, ascending.
    pub fn to_sorted_vec(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|(&m, &k)| core::iter::repeat_n(m, k as usize))
            .collect()
    }
}

/// Map every weight `x` of `χ` to `Σ_{α>0} ⟨x, α^∨⟩`.
pub fn restrict_principal(datum: &RootDatum, chi: &DominantCharacter) -> SL2Char {
    let coweight = datum.principal_coweight();
    let mut coeffs = BTreeMap::new();
    for (mu, &m) in chi.entries() {
        for w in datum.orbit(mu) {
            *coeffs.entry(dot(w.coords(), coweight)).or_insert(0) += m;
        }
    }
    SL2Char { coeffs }
}

/// Peel off Weyl strings from the top.
pub fn weyl_strings(chi: &SL2Char) -> Result<WeylString> {
    let mut residual: BTreeMap<i64, i64> = chi.coeffs.iter().map(|(&w, &m)| (w, m as i64)).collect();
    let mut factors = BTreeMap::new();
    loop {
        let top = residual.iter().rev().find(|(_, &m)| m != 0).map(|(&w, &m)| (w, m));
        let (top, m) = match top {
            None => break,
            Some(t) => t,
        };
        if m < 0 || top < 0 {
            return Err(Error::NotWeylDecomposable { weight: top });
        }
        for w in (-top..=top).step_by(2) {
            let slot = residual.entry(w).or_insert(0);
            *slot -= m;
            if *slot < 0 {
                return Err(Error::NotWeylDecomposable { weight: w });
            }
        }
        factors.insert(top as u64, m as u64);
    }
    Ok(WeylString { factors })
}

/// Drop every `Δ_{ap-1}` and cancel pairs `Δ_{ap+b-1}`, `Δ_{ap-b-1}` from
/// the top; the surviving factors are the simples of `Ver_p`.
pub fn verp_image(strings: &WeylString, p: u64) -> Result<VerpObject> {
    check_p(p)?;
    let mut counts: BTreeMap<u64, u64> =
        strings.factors.iter().filter(|(&m, _)| (m + 1) % p != 0).map(|(&m, &k)| (m, k)).collect();
    while let Some((&m, &k)) = counts.iter().next_back() {
        if m <= p - 2 {
            break;
        }
        let a = (m + 1) / p;
        let b = (m + 1) % p;
        let partner = a * p - b - 1;
        let available = counts.get(&partner).copied().unwrap_or(0);
        if available < k {
            return Err(Error::NotRealizable { index: m, p });
        }
        counts.remove(&m);
        if available == k {
            counts.remove(&partner);
        } else {
            counts.insert(partner, available - k);
        }
    }
    let mut out = VerpObject::zero(p)?;
    for (c, k) in counts {
        out.add_simple(c, k);
    }
    Ok(out)
}

/// Element of `Z[ω]`, `ω` a primitive `p`-th root of unity, in the basis
/// `1, ω, …, ω^{p-2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    p: u64,
    coeffs: Vec<i128>,
}

impl CyclotomicInt {
    pub fn zero(p: u64) -> Self {
        CyclotomicInt { p, coeffs: vec![0; (p - 1) as usize] }
    }

    /// `ω^k` for any integer `k`.
    pub fn monomial(p: u64, k: i64) -> Self {
        let mut full = vec![0i128; p as usize];
        full[k.rem_euclid(p as i64) as usize] = 1;
        Self::reduce(p, full)
    }

    /// Reduce a length-`p` coefficient vector using `1 + ω + … + ω^{p-1} = 0`.
    fn reduce(p: u64, mut full: Vec<i128>) -> Self {
        let top = full.pop().unwrap();
        for c in full.iter_mut() {
            *c -= top;
        }
        CyclotomicInt { p, coeffs: full }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInt { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicInt { p: self.p, coeffs }
    }

    pub fn scale(&self, k: i128) -> Self {
        CyclotomicInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.p as usize;
        let mut full = vec![0i128; p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                full[(i + j) % p] += a * b;
            }
        }
        Self::reduce(self.p, full)
    }

    /// `ch(ω) = Σ m(w) ω^w`.
    pub fn evaluate(chi: &SL2Char, p: u64) -> Self {
        let mut full = vec![0i128; p as usize];
        for (&w, &m) in chi.coeffs() {
            full[w.rem_euclid(p as i64) as usize] += m as i128;
        }
        Self::reduce(p, full)
    }
}

/// `ω^{c+1} - ω^{-c-1}`, the numerator of the character of `L_c` at `ω`.
fn simple_numerator(c: u64, p: u64) -> CyclotomicInt {
    let e = c as i64 + 1;
    CyclotomicInt::monomial(p, e).sub(&CyclotomicInt::monomial(p, -e))
}

/// Image of a tilting character in `Ver_p`, recovered from
/// `(ω - ω^{-1}) ch(ω)` alone.
///
/// That value determines `[L_c] - [L_{p-2-c}]` for each `c`; the two indices
/// have opposite parity, so the common weight parity of `chi` picks the one
/// that actually occurs.
pub fn cyclotomic_image(chi: &SL2Char, p: u64) -> Result<VerpObject> {
    check_p(p)?;
    let mut out = VerpObject::zero(p)?;
    let parity = match chi.parity()? {
        None => return Ok(out),
        Some(par) => par,
    };
    let value = CyclotomicInt::evaluate(chi, p).mul(&simple_numerator(0, p));

    // No simple contributes to ω^0, so relative to the constant term the
    // coefficient of ω^a, 1 <= a <= (p-1)/2, is [L_{a-1}] - [L_{p-1-a}].
    let coeffs = value.coeffs();
    for a in 1..=(p - 1) / 2 {
        let d = coeffs[a as usize] - coeffs[0];
        let (c, signed) = if (a - 1) % 2 == parity { (a - 1, d) } else { (p - 1 - a, -d) };
        if signed < 0 {
            return Err(Error::CyclotomicMismatch);
        }
        if signed > 0 {
            out.add_simple(c, u64::try_from(signed).map_err(|_| Error::Overflow("cyclotomic solve"))?);
        }
    }

    let mut rebuilt = CyclotomicInt::zero(p);
    for (c, m) in out.support() {
        rebuilt = rebuilt.add(&simple_numerator(c, p).scale(m as i128));
    }
    if rebuilt != value {
        return Err(Error::CyclotomicMismatch);
    }
    Ok(out)
}

/// Weyl factors and `Ver_p` image of a simple `L(λ)`, `λ` in the alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub strings: WeylString,
    pub image: VerpObject,
}

pub fn image_of_simple(datum: &RootDatum, lambda: &Weight, p: u64, cache: &dyn CharacterCache) -> Result<Image> {
    datum.check_prime(p)?;
    if !datum.in_alcove(lambda, p) {
        return Err(Error::NotInAlcove(format!("{lambda} (p = {p}, {})", datum.name())));
    }
    let chi = dominant_character_cached(datum, lambda, cache)?;
    let restricted = restrict_principal(datum, &chi);
    let strings = weyl_strings(&restricted)?;
    let image = verp_image(&strings, p)?;
    Ok(Image { strings, image })
}

/// Weyl factors of `L(λ)` restricted to the principal `SL2`, with no
/// alcove or prime condition.
pub fn principal_strings(datum: &RootDatum, lambda: &Weight, cache: &dyn CharacterCache) -> Result<WeylString> {
    let chi = dominant_character_cached(datum, lambda, cache)?;
    weyl_strings(&restrict_principal(datum, &chi))
}

/// Both routes to the image; errors if they disagree.
pub fn cross_checked_image(strings: &WeylString, p: u64) -> Result<VerpObject> {
    let paired = verp_image(strings, p)?;
    let cyclo = cyclotomic_image(&SL2Char::from_strings(strings), p)?;
    if paired != cyclo {
        return Err(Error::OracleDisagreement);
    }
    Ok(paired)
}

/// The index of the image of the half-spin representation `L(ϖ_r)` of
/// `D_r` in `Ver_{2r+1}`.
pub fn halfspin_image(r: usize, cache: &dyn CharacterCache) -> Result<u64> {
    let p = 2 * r as u64 + 1;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 7 {
        return Err(Error::ParameterRange(format!("half-spin image needs 2r+1 >= 7, got {p}")));
    }
    let datum = RootDatum::d_series(r)?;
    let img = image_of_simple(&datum, &Weight::fundamental(r, r), p, cache)?;
    match img.image.support().as_slice() {
        [(c, 1)] => Ok(*c),
        _ => Err(Error::ParameterRange(format!("half-spin image {} is not simple", img.image))),
    }
}
