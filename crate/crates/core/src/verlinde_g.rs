//! Fusion in `Ver_p(G)` through the affine-Weyl alternating sum, invertible
//! objects, and alcove symmetries attached to minuscule weights.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::charmod::{dominant_character_cached, weyl_dimension, CharacterCache, DominantCharacter};
use crate::rootsys::{RootDatum, Weight};
use crate::{Error, Result};

/// Outcome of moving `ξ + ρ` into the closure of the fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StraightenResult {
    /// `w·ξ` lies in the alcove; `sign = ε(w)`.
    Interior { target: Weight, sign: i8 },
    /// `ξ + ρ` lies on a wall of the affine Weyl group.
    Wall,
}

const REFLECTION_CAP: usize = 1_000_000;

/// Find `w` in the affine Weyl group with `w·ξ` in the alcove, or detect a wall.
pub fn straighten_dot(datum: &RootDatum, xi: &Weight, p: u64) -> Result<StraightenResult> {
    datum.check_prime(p)?;
    if xi.rank() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: xi.rank() });
    }
    straighten_unchecked(datum, xi, p as i64)
}

fn straighten_unchecked(datum: &RootDatum, xi: &Weight, p: i64) -> Result<StraightenResult> {
    let theta = datum.highest_short_root().coords();
    let mut v: Vec<i64> = xi.coords().iter().map(|c| c + 1).collect();
    let mut reflections = 0usize;
    loop {
        if reflections > REFLECTION_CAP {
            return Err(Error::NonTermination(REFLECTION_CAP));
        }
        if let Some(i) = v.iter().position(|&c| c < 0) {
            datum.reflect_in_place(&mut v, i);
            reflections += 1;
            continue;
        }
        if v.contains(&0) {
            return Ok(StraightenResult::Wall);
        }
        let q = datum.pair_theta_s(&Weight::new(v.clone()));
        if q > p {
            let shift = q - p;
            for (x, t) in v.iter_mut().zip(theta) {
                *x -= shift * t;
            }
            reflections += 1;
            continue;
        }
        if q == p {
            return Ok(StraightenResult::Wall);
        }
        let target = Weight::new(v.iter().map(|c| c - 1).collect());
        let sign = if reflections.is_multiple_of(2) { 1 } else { -1 };
        return Ok(StraightenResult::Interior { target, sign });
    }
}

fn require_alcove(datum: &RootDatum, w: &Weight, p: u64) -> Result<()> {
    if w.rank() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: w.rank() });
    }
    if !datum.in_alcove(w, p) {
        return Err(Error::NotInAlcove(format!("{w} (p = {p}, {})", datum.name())));
    }
    Ok(())
}

/// `[T ⊗ L(μ)]` in `Ver_p(G)` for a tilting module `T` whose character is
/// the Weyl character `chi`.
pub fn tensor_decompose_character(
    datum: &RootDatum,
    chi: &DominantCharacter,
    mu: &Weight,
    p: u64,
) -> Result<BTreeMap<Weight, u64>> {
    datum.check_prime(p)?;
    require_alcove(datum, mu, p)?;
    let mut buckets: BTreeMap<Weight, i128> = BTreeMap::new();
    for (mu_dom, &m) in chi.entries() {
        for eta in datum.orbit(mu_dom) {
            if let StraightenResult::Interior { target, sign } = straighten_unchecked(datum, &mu.add(&eta), p as i64)? {
                *buckets.entry(target).or_insert(0) += sign as i128 * m as i128;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (w, v) in buckets {
        if v < 0 {
            return Err(Error::NegativeMultiplicity { weight: format!("{w}"), value: v as i64 });
        }
        if v > 0 {
            out.insert(w, u64::try_from(v).map_err(|_| Error::Overflow("fusion multiplicity"))?);
        }
    }
    Ok(out)
}

/// `L(λ) ⊗ L(μ) = ⊕ M^ν_{λ,μ} L(ν)` in `Ver_p(G)`.
pub fn tensor_decompose(
    datum: &RootDatum,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    cache: &dyn CharacterCache,
) -> Result<BTreeMap<Weight, u64>> {
    datum.check_prime(p)?;
    require_alcove(datum, lambda, p)?;
    let chi = dominant_character_cached(datum, lambda, cache)?;
    tensor_decompose_character(datum, &chi, mu, p)
}

/// `M^ν_{λ,μ}`.
pub fn tensor_multiplicity(
    datum: &RootDatum,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    p: u64,
    cache: &dyn CharacterCache,
) -> Result<u64> {
    require_alcove(datum, nu, p)?;
    Ok(tensor_decompose(datum, lambda, mu, p, cache)?.get(nu).copied().unwrap_or(0))
}

/// `λ* = -w_0 λ`.
pub fn dual_weight(datum: &RootDatum, lambda: &Weight) -> Weight {
    datum.dominant_representative(&lambda.neg()).0
}

/// Alcove weights `μ` with `L(μ)` invertible: those for which `L(μ)` is not
/// a summand of `g ⊗ L(μ)`, `g` the adjoint module. For `p = h + 1` the
/// adjoint image vanishes and every simple is invertible.
pub fn invertibles(datum: &RootDatum, p: u64, cache: &dyn CharacterCache) -> Result<Vec<Weight>> {
    let alcove = datum.alcove_weights(p)?;
    if p == datum.coxeter_number() + 1 {
        return Ok(alcove);
    }
    let adjoint = dominant_character_cached(datum, datum.highest_long_root(), cache)?;
    let mut out = Vec::new();
    for mu in alcove {
        let dec = tensor_decompose_character(datum, &adjoint, &mu, p)?;
        if !dec.contains_key(&mu) {
            out.push(mu);
        }
    }
    Ok(out)
}

/// `{(p - h) ϖ : ϖ minuscule}`, sorted.
pub fn expected_invertibles(datum: &RootDatum, p: u64) -> Vec<Weight> {
    let k = p as i64 - datum.coxeter_number() as i64;
    let mut out: Vec<Weight> = datum.minuscule_weights().iter().map(|w| w.scaled(k)).collect();
    out.sort();
    out
}

/// `σ·λ = w(λ + ρ) + pϖ - ρ` for `σ = t_{pϖ} w`, `w` a word of simple
/// reflections applied rightmost first.
pub fn sigma_dot(datum: &RootDatum, p: u64, varpi: &Weight, word: &[usize], lambda: &Weight) -> Result<Weight> {
    let shifted = datum.apply_word(&lambda.add(datum.rho()), word)?;
    Ok(shifted.add(&varpi.scaled(p as i64)).sub(datum.rho()))
}

/// Result of checking one alcove symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    /// `σ·A = A`.
    pub preserves_alcove: bool,
    /// `σ·0 = (p - h)ϖ`.
    pub zero_maps_to_invertible: bool,
    /// Weights `λ` for which `L(σ·0) ⊗ L(λ) = L(σ·λ)` was checked.
    pub fusion_checked: Vec<Weight>,
    /// Weights where that fusion identity failed.
    pub fusion_failures: Vec<Weight>,
}

impl SymmetryCheck {
    pub fn passed(&self) -> bool {
        self.preserves_alcove && self.zero_maps_to_invertible && self.fusion_failures.is_empty()
    }
}

/// Verify that `σ = t_{pϖ} w` permutes the alcove and sends `0` to
/// `(p - h)ϖ`, and spot-check `L(σ·λ) ≅ L(σ·0) ⊗ L(λ)` for alcove weights
/// `λ` with `dim L(λ) <= spot_dim_limit`.
pub fn verify_minuscule_symmetry(
    datum: &RootDatum,
    p: u64,
    varpi: &Weight,
    word: &[usize],
    spot_dim_limit: u64,
    cache: &dyn CharacterCache,
) -> Result<SymmetryCheck> {
    let alcove = datum.alcove_weights(p)?;
    if varpi.rank() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: varpi.rank() });
    }
    let members: BTreeSet<&Weight> = alcove.iter().collect();
    let mut images = BTreeSet::new();
    let mut preserves_alcove = true;
    for lambda in &alcove {
        let img = sigma_dot(datum, p, varpi, word, lambda)?;
        if !members.contains(&img) {
            preserves_alcove = false;
        }
        images.insert(img);
    }
    preserves_alcove &= images.len() == alcove.len();

    let zero = Weight::zero(datum.rank());
    let sigma_zero = sigma_dot(datum, p, varpi, word, &zero)?;
    let expected = varpi.scaled(p as i64 - datum.coxeter_number() as i64);
    let zero_maps_to_invertible = sigma_zero == expected;

    let mut fusion_checked = Vec::new();
    let mut fusion_failures = Vec::new();
    if preserves_alcove && zero_maps_to_invertible {
        let limit = BigUint::from(spot_dim_limit);
        for lambda in &alcove {
            if weyl_dimension(datum, lambda) > limit {
                continue;
            }
            // Loop over the weights of the small factor L(λ).
            let got = tensor_decompose(datum, lambda, &sigma_zero, p, cache)?;
            let want = BTreeMap::from([(sigma_dot(datum, p, varpi, word, lambda)?, 1u64)]);
            if got != want {
                fusion_failures.push(lambda.clone());
            }
            fusion_checked.push(lambda.clone());
        }
    }
    Ok(SymmetryCheck { preserves_alcove, zero_maps_to_invertible, fusion_checked, fusion_failures })
}

/// Weyl dimension of `λ` reduced mod `p`.
pub fn dim_mod_p(datum: &RootDatum, lambda: &Weight, p: u64) -> u64 {
    (weyl_dimension(datum, lambda) % BigUint::from(p)).to_u64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmod::NoCache;
    use crate::rootsys::{build_root_datum, CartanType};
    use crate::verp::fuse;
    use alloc::vec;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn straighten_rank_one() {
        let a1 = build_root_datum(CartanType::A, 1).unwrap();
        assert_eq!(straighten_dot(&a1, &w(&[4]), 5).unwrap(), StraightenResult::Wall);
        assert_eq!(
            straighten_dot(&a1, &w(&[6]), 5).unwrap(),
            StraightenResult::Interior { target: w(&[2]), sign: -1 }
        );
        assert_eq!(
            straighten_dot(&a1, &w(&[1]), 5).unwrap(),
            StraightenResult::Interior { target: w(&[1]), sign: 1 }
        );
        assert_eq!(straighten_dot(&a1, &w(&[-1]), 5).unwrap(), StraightenResult::Wall);
    }

    #[test]
    fn type_a1_matches_verp_fusion() {
        let a1 = build_root_datum(CartanType::A, 1).unwrap();
        for p in [5u64, 7, 11, 13] {
            for a in 0..=p - 2 {
                for b in 0..=p - 2 {
                    let got = tensor_decompose(&a1, &w(&[a as i64]), &w(&[b as i64]), p, &NoCache).unwrap();
                    let want: BTreeMap<Weight, u64> = fuse(a, b, p)
                        .unwrap()
                        .support()
                        .into_iter()
                        .map(|(c, m)| (w(&[c as i64]), m))
                        .collect();
                    assert_eq!(got, want, "L_{a} ⊗ L_{b} in Ver_{p}");
                }
            }
        }
    }

    #[test]
    fn a2_invertibles() {
        let a2 = build_root_datum(CartanType::A, 2).unwrap();
        let inv = invertibles(&a2, 5, &NoCache).unwrap();
        assert_eq!(inv, vec![w(&[0, 0]), w(&[0, 2]), w(&[2, 0])]);
        assert_eq!(inv, expected_invertibles(&a2, 5));
        for mu in a2.alcove_weights(5).unwrap() {
            let m = tensor_multiplicity(&a2, a2.highest_long_root(), &mu, &mu, 5, &NoCache).unwrap();
            assert_eq!(m == 0, inv.contains(&mu));
        }
    }

    #[test]
    fn g2_and_boundary_prime() {
        let g2 = build_root_datum(CartanType::G2, 2).unwrap();
        assert_eq!(invertibles(&g2, 13, &NoCache).unwrap(), vec![w(&[0, 0])]);
        let a3 = build_root_datum(CartanType::A, 3).unwrap();
        assert_eq!(invertibles(&a3, 5, &NoCache).unwrap(), a3.alcove_weights(5).unwrap());
    }

    #[test]
    fn unit_and_commutativity() {
        let b2 = build_root_datum(CartanType::B, 2).unwrap();
        let p = 7;
        let alcove = b2.alcove_weights(p).unwrap();
        for l in &alcove {
            let unit = tensor_decompose(&b2, &w(&[0, 0]), l, p, &NoCache).unwrap();
            assert_eq!(unit, BTreeMap::from([(l.clone(), 1)]));
            for m in &alcove {
                let lm = tensor_decompose(&b2, l, m, p, &NoCache).unwrap();
                assert_eq!(lm, tensor_decompose(&b2, m, l, p, &NoCache).unwrap());
                let lhs: u64 = lm.iter().map(|(n, k)| k * dim_mod_p(&b2, n, p)).sum::<u64>() % p;
                assert_eq!(lhs, dim_mod_p(&b2, l, p) * dim_mod_p(&b2, m, p) % p);
            }
        }
    }

    #[test]
    fn minuscule_symmetry_small() {
        let a1 = build_root_datum(CartanType::A, 1).unwrap();
        let check = verify_minuscule_symmetry(&a1, 5, &w(&[1]), &[1], 100, &NoCache).unwrap();
        assert!(check.passed());
        assert_eq!(sigma_dot(&a1, 5, &w(&[1]), &[1], &w(&[0])).unwrap(), w(&[3]));

        let a2 = build_root_datum(CartanType::A, 2).unwrap();
        let check = verify_minuscule_symmetry(&a2, 5, &w(&[0, 1]), &[1, 2, 1, 2], 100, &NoCache).unwrap();
        assert!(check.passed());
        assert!(matches!(
            verify_minuscule_symmetry(&a2, 5, &w(&[0, 1]), &[3], 100, &NoCache),
            Err(Error::MalformedWord { index: 3, rank: 2 })
        ));
    }

    #[test]
    fn rejects_weights_outside_alcove() {
        let a2 = build_root_datum(CartanType::A, 2).unwrap();
        assert!(matches!(
            tensor_decompose(&a2, &w(&[3, 0]), &w(&[0, 0]), 5, &NoCache),
            Err(Error::NotInAlcove(_))
        ));
    }

    #[test]
    fn dual_weights() {
        let a3 = build_root_datum(CartanType::A, 3).unwrap();
        assert_eq!(dual_weight(&a3, &w(&[1, 0, 2])), w(&[2, 0, 1]));
        let e6 = build_root_datum(CartanType::E6, 6).unwrap();
        assert_eq!(dual_weight(&e6, &Weight::fundamental(6, 1)), Weight::fundamental(6, 6));
    }
}
