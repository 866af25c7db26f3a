//! Dominant characters of simple modules `L(λ)` via Freudenthal's recursion.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::rootsys::{CartanType, RootDatum, Weight};
use crate::{Error, Result};

/// Multiplicities of the dominant weights of `L(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantCharacter {
    highest_weight: Weight,
    entries: BTreeMap<Weight, u64>,
}

impl DominantCharacter {
    /// Assemble a character from stored entries, e.g. when reading a cache.
    pub fn from_entries(highest_weight: Weight, entries: BTreeMap<Weight, u64>) -> Result<Self> {
        if entries.get(&highest_weight) != Some(&1) {
            return Err(Error::InvalidRootDatum(format!(
                "highest weight {highest_weight} must have multiplicity 1"
            )));
        }
        Ok(DominantCharacter { highest_weight, entries })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    /// Multiplicity of a dominant weight; 0 if absent.
    pub fn dominant_multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// Multiplicity of an arbitrary weight.
    pub fn multiplicity(&self, datum: &RootDatum, x: &Weight) -> u64 {
        let (dom, _) = datum.dominant_representative(x);
        self.dominant_multiplicity(&dom)
    }

    /// Every weight of `L(λ)` with its multiplicity, sorted by weight.
    pub fn all_weights(&self, datum: &RootDatum) -> Vec<(Weight, u64)> {
        let mut out: Vec<(Weight, u64)> = self
            .entries
            .iter()
            .flat_map(|(mu, &m)| datum.orbit(mu).into_iter().map(move |w| (w, m)))
            .collect();
        out.sort();
        out
    }

    /// `Σ |W μ| · m(μ)`, counted by expanding orbits.
    pub fn dimension(&self, datum: &RootDatum) -> BigUint {
        self.entries
            .iter()
            .map(|(mu, &m)| BigUint::from(datum.orbit(mu).len()) * BigUint::from(m))
            .sum()
    }
}

/// Key under which characters are memoised.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CacheKey {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub highest_weight: Weight,
}

impl CacheKey {
    pub fn new(datum: &RootDatum, highest_weight: &Weight) -> Self {
        CacheKey {
            cartan_type: datum.cartan_type(),
            rank: datum.rank(),
            highest_weight: highest_weight.clone(),
        }
    }
}

/// Shared memo for dominant characters. Implementations must be safe to use
/// from several threads and behave as insert-if-absent.
pub trait CharacterCache: Sync {
    fn lookup(&self, key: &CacheKey) -> Option<Arc<DominantCharacter>>;

    /// Store `value` unless an entry already exists; returns the stored entry.
    fn store(&self, key: CacheKey, value: Arc<DominantCharacter>) -> Arc<DominantCharacter>;
}

/// A cache that never remembers anything.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoCache;

impl CharacterCache for NoCache {
    fn lookup(&self, _key: &CacheKey) -> Option<Arc<DominantCharacter>> {
        None
    }

    fn store(&self, _key: CacheKey, value: Arc<DominantCharacter>) -> Arc<DominantCharacter> {
        value
    }
}

/// The dominant character of `L(λ)`.
pub fn dominant_character(datum: &RootDatum, lambda: &Weight) -> Result<DominantCharacter> {
    if lambda.rank() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(format!("{lambda}")));
    }
    let rank = datum.rank();
    let roots = datum.positive_roots();

    // Dominant weights below λ, with λ - μ in simple-root coordinates. Every
    // dominant μ <= λ is reachable by subtracting positive roots while staying
    // dominant, so a search from λ finds them all.
    let mut depth: BTreeMap<Weight, Vec<i64>> = BTreeMap::new();
    depth.insert(lambda.clone(), vec![0; rank]);
    let mut frontier = vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        let diff = depth[&mu].clone();
        for r in roots {
            let next = mu.sub(&r.weight);
            if next.is_dominant() && !depth.contains_key(&next) {
                let d: Vec<i64> = diff.iter().zip(&r.root).map(|(a, b)| a + b).collect();
                depth.insert(next.clone(), d);
                frontier.push(next);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = depth.iter().map(|(w, d)| (d.iter().sum(), w.clone())).collect();
    order.sort();

    let two_rho = datum.rho().scaled(2);
    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    entries.insert(lambda.clone(), 1);
    for (_, mu) in order.iter().skip(1) {
        // (λ - μ, λ + μ + 2ρ)
        let sum = lambda.add(mu).add(&two_rho);
        let denom = datum.inner_with_root(sum.coords(), &depth[mu]) as i128;
        let mut numer: i128 = 0;
        for r in roots {
            let mut shifted = mu.add(&r.weight);
            loop {
                let (dom, _) = datum.dominant_representative(&shifted);
                let m = match entries.get(&dom) {
                    Some(&m) => m,
                    None => break,
                };
                let ip = datum.inner_with_root(shifted.coords(), &r.root) as i128;
                numer = ip
                    .checked_mul(m as i128)
                    .and_then(|t| numer.checked_add(t))
                    .ok_or(Error::Overflow("Freudenthal recursion"))?;
                shifted = shifted.add(&r.weight);
            }
        }
        numer *= 2;
        if denom <= 0 || numer % denom != 0 {
            return Err(Error::InvalidRootDatum(format!(
                "Freudenthal recursion produced a non-integer multiplicity at {mu}"
            )));
        }
        let m = u64::try_from(numer / denom).map_err(|_| Error::Overflow("weight multiplicity"))?;
        if m > 0 {
            entries.insert(mu.clone(), m);
        }
    }
    Ok(DominantCharacter { highest_weight: lambda.clone(), entries })
}

/// Like [`dominant_character`] but consults and fills `cache`.
pub fn dominant_character_cached(
    datum: &RootDatum,
    lambda: &Weight,
    cache: &dyn CharacterCache,
) -> Result<Arc<DominantCharacter>> {
    let key = CacheKey::new(datum, lambda);
    if let Some(hit) = cache.lookup(&key) {
        return Ok(hit);
    }
    let computed = Arc::new(dominant_character(datum, lambda)?);
    Ok(cache.store(key, computed))
}

/// Multiplicity of `x` in `L(λ)`.
pub fn weight_multiplicity(datum: &RootDatum, lambda: &Weight, x: &Weight) -> Result<u64> {
    let chi = dominant_character(datum, lambda)?;
    if x.rank() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: x.rank() });
    }
    Ok(chi.multiplicity(datum, x))
}

/// Weyl's dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Weight) -> BigUint {
    let shifted = lambda.add(datum.rho());
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in datum.positive_roots() {
        let a = datum.inner_with_root(shifted.coords(), &r.root);
        let b = datum.inner_with_root(datum.rho().coords(), &r.root);
        if a <= 0 {
            return BigUint::zero();
        }
        num *= a as u64;
        den *= b as u64;
    }
    num / den
}

/// All distinct weights `η` with `m_λ(η) > 0`, as a set.
pub fn support(datum: &RootDatum, chi: &DominantCharacter) -> BTreeSet<Weight> {
    chi.all_weights(datum).into_iter().map(|(w, _)| w).collect()
}
