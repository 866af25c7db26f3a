//! Root data for the simple types `A`–`G` in Bourbaki numbering.
//!
//! Weights are integer vectors in fundamental-weight coordinates, roots are
//! stored in simple-root coordinates and coroots in simple-coroot
//! coordinates. All inner products are taken in the normalisation where short
//! roots have squared length 2, which keeps every quantity integral.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{is_prime, Error, Result};

/// The nine simple Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl CartanType {
    pub const ALL: [CartanType; 9] = [
        CartanType::A,
        CartanType::B,
        CartanType::C,
        CartanType::D,
        CartanType::E6,
        CartanType::E7,
        CartanType::E8,
        CartanType::F4,
        CartanType::G2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E6 => "E6",
            CartanType::E7 => "E7",
            CartanType::E8 => "E8",
            CartanType::F4 => "F4",
            CartanType::G2 => "G2",
        }
    }

    /// The rank of an exceptional type; `None` for the classical series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            CartanType::E6 => Some(6),
            CartanType::E7 => Some(7),
            CartanType::E8 => Some(8),
            CartanType::F4 => Some(4),
            CartanType::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            CartanType::A => 1,
            CartanType::B | CartanType::C => 2,
            CartanType::D => 4,
            other => other.fixed_rank().unwrap(),
        }
    }

    /// Stable one-byte tag, used by the on-disk character cache.
    pub fn tag(self) -> u8 {
        match self {
            CartanType::A => b'A',
            CartanType::B => b'B',
            CartanType::C => b'C',
            CartanType::D => b'D',
            CartanType::E6 => b'6',
            CartanType::E7 => b'7',
            CartanType::E8 => b'8',
            CartanType::F4 => b'F',
            CartanType::G2 => b'G',
        }
    }

    pub fn from_tag(tag: u8) -> Option<CartanType> {
        CartanType::ALL.into_iter().find(|t| t.tag() == tag)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        CartanType::ALL
            .into_iter()
            .find(|t| t.label() == upper)
            .ok_or_else(|| Error::InvalidRootDatum(format!("unknown Cartan type `{s}`")))
    }
}

/// A weight `λ = Σ coords[i] ϖ_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_i`, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "fundamental weight index {i} out of 1..={rank}");
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    /// `0`, `w1`, `2w1+w3`, `w2-w4`, with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "w{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// A positive root with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Simple-root coordinates.
    pub root: Vec<i64>,
    /// Simple-coroot coordinates of the coroot.
    pub coroot: Vec<i64>,
    /// The root in fundamental-weight coordinates.
    pub weight: Weight,
    /// Half the squared length; 1 for short roots.
    pub half_norm: i64,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root.iter().sum()
    }
}

/// Immutable tables for one simple type and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    cartan_type: CartanType,
    rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<PositiveRoot>,
    rho: Weight,
    highest_long_root: Weight,
    highest_short_root: Weight,
    highest_short_coroot: Vec<i64>,
    coxeter_number: u64,
    fundamental_group_order: u64,
    minuscule: Vec<Weight>,
    /// `Σ_{α>0} α^∨` in simple-coroot coordinates.
    principal_coweight: Vec<i64>,
}

/// Build the root datum for `(cartan_type, rank)`.
pub fn build_root_datum(cartan_type: CartanType, rank: usize) -> Result<RootDatum> {
    RootDatum::new(cartan_type, rank)
}

impl RootDatum {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let valid = match cartan_type.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= cartan_type.min_rank(),
        };
        if !valid {
            return Err(Error::InvalidRootDatum(format!(
                "{cartan_type}{rank} is not a valid type/rank pair (need rank {})",
                match cartan_type.fixed_rank() {
                    Some(r) => format!("= {r}"),
                    None => format!(">= {}", cartan_type.min_rank()),
                }
            )));
        }
        Self::build(cartan_type, rank)
    }

    /// `D_r` for any `r >= 3`. `D_3` is `A_3` with the middle node first; the
    /// half-spin computations at `p = 7` need it in `D` numbering.
    pub fn d_series(rank: usize) -> Result<Self> {
        if rank < 3 {
            return Err(Error::InvalidRootDatum(format!("D{rank} needs rank >= 3")));
        }
        Self::build(CartanType::D, rank)
    }

    fn build(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let (symmetrizer, edges) = dynkin_data(cartan_type, rank);
        let mut form = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            form[i][i] = 2 * symmetrizer[i];
        }
        for &(a, b) in &edges {
            let v = -symmetrizer[a].max(symmetrizer[b]);
            form[a][b] = v;
            form[b][a] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| form[i][j] / symmetrizer[i]).collect())
            .collect();

        let roots = generate_positive_roots(&cartan, rank);
        let positive_roots: Vec<PositiveRoot> = roots
            .into_iter()
            .map(|root| {
                let mut norm2 = 0;
                for i in 0..rank {
                    for j in 0..rank {
                        norm2 += root[i] * root[j] * form[i][j];
                    }
                }
                let half_norm = norm2 / 2;
                let coroot = (0..rank).map(|j| root[j] * symmetrizer[j] / half_norm).collect();
                let weight = Weight::new(
                    (0..rank)
                        .map(|k| (0..rank).map(|j| cartan[k][j] * root[j]).sum())
                        .collect(),
                );
                PositiveRoot { root, coroot, weight, half_norm }
            })
            .collect();

        let highest_long = positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("at least one positive root");
        let min_norm = positive_roots.iter().map(|r| r.half_norm).min().unwrap();
        let highest_short = positive_roots
            .iter()
            .filter(|r| r.half_norm == min_norm)
            .max_by_key(|r| r.height())
            .unwrap();
        let highest_short_coroot = highest_short.coroot.clone();
        let highest_short_root = highest_short.weight.clone();
        let highest_long_root = highest_long.weight.clone();
        let coxeter_number = 1 + highest_short_coroot.iter().sum::<i64>() as u64;

        let mut principal_coweight = vec![0i64; rank];
        for r in &positive_roots {
            for (acc, c) in principal_coweight.iter_mut().zip(&r.coroot) {
                *acc += c;
            }
        }

        let fundamental_group_order = determinant(&cartan) as u64;
        let mut minuscule = vec![Weight::zero(rank)];
        for (i, &k) in highest_short_coroot.iter().enumerate() {
            if k == 1 {
                minuscule.push(Weight::fundamental(rank, i + 1));
            }
        }

        let datum = RootDatum {
            cartan_type,
            rank,
            cartan,
            symmetrizer,
            highest_long_root,
            positive_roots,
            rho: Weight::new(vec![1; rank]),
            highest_short_root,
            highest_short_coroot,
            coxeter_number,
            fundamental_group_order,
            minuscule,
            principal_coweight,
        };
        datum.check_invariants()?;
        Ok(datum)
    }

    fn check_invariants(&self) -> Result<()> {
        let fail = |what: String| Err(Error::InvalidRootDatum(format!("{}{}: {what}", self.cartan_type, self.rank)));
        for i in 0..self.rank {
            if self.cartan[i][i] != 2 {
                return fail(format!("diagonal entry {i} is not 2"));
            }
            for j in 0..self.rank {
                if i != j && self.cartan[i][j] > 0 {
                    return fail(format!("positive off-diagonal entry ({i},{j})"));
                }
            }
        }
        let height = self.positive_roots.iter().map(|r| r.height()).max().unwrap() as u64;
        if height + 1 != self.coxeter_number {
            return fail(format!("height of θ_l is {height} but h = {}", self.coxeter_number));
        }
        if 2 * self.positive_roots.len() != self.rank * self.coxeter_number as usize {
            return fail(format!("{} positive roots but r·h/2 = {}", self.positive_roots.len(), self.rank as u64 * self.coxeter_number / 2));
        }
        if self.minuscule.len() as u64 != self.fundamental_group_order {
            return fail(format!(
                "{} minuscule weights but |X/ZΦ| = {}",
                self.minuscule.len(),
                self.fundamental_group_order
            ));
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        match self.cartan_type.fixed_rank() {
            Some(_) => String::from(self.cartan_type.label()),
            None => format!("{}{}", self.cartan_type, self.rank),
        }
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `θ_l`, the highest root, as a weight.
    pub fn highest_long_root(&self) -> &Weight {
        &self.highest_long_root
    }

    /// `θ_s`, the highest short root, as a weight.
    pub fn highest_short_root(&self) -> &Weight {
        &self.highest_short_root
    }

    /// `θ_s^∨` in simple-coroot coordinates.
    pub fn highest_short_coroot(&self) -> &[i64] {
        &self.highest_short_coroot
    }

    pub fn coxeter_number(&self) -> u64 {
        self.coxeter_number
    }

    pub fn fundamental_group_order(&self) -> u64 {
        self.fundamental_group_order
    }

    pub fn principal_coweight(&self) -> &[i64] {
        &self.principal_coweight
    }

    pub fn minuscule_weights(&self) -> &[Weight] {
        &self.minuscule
    }

    /// The simple root `α_i` (1-based) as a weight: column `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|k| self.cartan[k][i - 1]).collect())
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: len });
        }
        Ok(())
    }

    /// `⟨λ, Σ c_i α_i^∨⟩ = Σ c_i λ_i`.
    pub fn pair(&self, weight: &Weight, coroot: &[i64]) -> Result<i64> {
        self.check_rank(weight.rank())?;
        self.check_rank(coroot.len())?;
        Ok(dot(weight.coords(), coroot))
    }

    pub fn pair_theta_s(&self, weight: &Weight) -> i64 {
        dot(weight.coords(), &self.highest_short_coroot)
    }

    /// `(λ, α)` for a root given in simple-root coordinates.
    pub fn inner_with_root(&self, weight: &[i64], root: &[i64]) -> i64 {
        weight
            .iter()
            .zip(root)
            .zip(&self.symmetrizer)
            .map(|((w, c), d)| w * c * d)
            .sum()
    }

    /// Apply the simple reflection `s_i` (0-based) in place.
    pub(crate) fn reflect_in_place(&self, coords: &mut [i64], i: usize) {
        let c = coords[i];
        if c != 0 {
            for (k, x) in coords.iter_mut().enumerate() {
                *x -= c * self.cartan[k][i];
            }
        }
    }

    /// Apply a word of simple reflections (1-based indices), rightmost first.
    pub fn apply_word(&self, weight: &Weight, word: &[usize]) -> Result<Weight> {
        self.check_rank(weight.rank())?;
        let mut coords = weight.coords().to_vec();
        for &s in word.iter().rev() {
            if s == 0 || s > self.rank {
                return Err(Error::MalformedWord { index: s, rank: self.rank });
            }
            self.reflect_in_place(&mut coords, s - 1);
        }
        Ok(Weight::new(coords))
    }

    /// The dominant weight in the `W`-orbit of `weight` and the number of
    /// simple reflections used to reach it.
    pub fn dominant_representative(&self, weight: &Weight) -> (Weight, usize) {
        let mut coords = weight.coords().to_vec();
        let mut steps = 0;
        while let Some(i) = coords.iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut coords, i);
            steps += 1;
        }
        (Weight::new(coords), steps)
    }

    /// The full `W`-orbit of a dominant weight, sorted.
    pub fn orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut stack = vec![dominant.coords().to_vec()];
        seen.insert(dominant.coords().to_vec());
        while let Some(x) = stack.pop() {
            for i in 0..self.rank {
                if x[i] > 0 {
                    let mut y = x.clone();
                    self.reflect_in_place(&mut y, i);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().map(Weight::new).collect()
    }

    /// Whether `weight` lies in the root lattice `ZΦ`.
    pub fn in_root_lattice(&self, weight: &Weight) -> bool {
        // Solve cartan · c = λ over Q and test integrality.
        let n = self.rank;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|j| BigRational::from_integer(BigInt::from(self.cartan[i][j]))).collect();
                row.push(BigRational::from_integer(BigInt::from(weight.coords()[i])));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, pivot);
            let inv = BigRational::one() / m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, v) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x = x.clone() - v.clone() * f.clone();
                    }
                }
            }
        }
        m.iter().all(|row| row[n].is_integer())
    }

    /// The fundamental alcove `{λ dominant : ⟨λ, θ_s^∨⟩ <= p - h}`, sorted
    /// lexicographically.
    pub fn alcove_weights(&self, p: u64) -> Result<Vec<Weight>> {
        self.check_prime(p)?;
        let budget = (p - self.coxeter_number) as i64;
        let mut out = Vec::new();
        let mut current = vec![0i64; self.rank];
        self.enumerate_alcove(0, budget, &mut current, &mut out);
        out.sort();
        Ok(out)
    }

    fn enumerate_alcove(&self, idx: usize, budget: i64, current: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if idx == self.rank {
            out.push(Weight::new(current.clone()));
            return;
        }
        let k = self.highest_short_coroot[idx];
        let mut c = 0;
        while c * k <= budget {
            current[idx] = c;
            self.enumerate_alcove(idx + 1, budget - c * k, current, out);
            c += 1;
        }
        current[idx] = 0;
    }

    pub fn in_alcove(&self, weight: &Weight, p: u64) -> bool {
        weight.rank() == self.rank
            && weight.is_dominant()
            && p > self.coxeter_number
            && self.pair_theta_s(weight) <= (p - self.coxeter_number) as i64
    }

    pub(crate) fn check_prime(&self, p: u64) -> Result<()> {
        if p <= self.coxeter_number {
            return Err(Error::PrimeTooSmall { p, h: self.coxeter_number });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(())
    }
}

/// `{0} ∪ {ϖ_i : ⟨ϖ_i, θ_s^∨⟩ = 1}`.
pub fn minuscule_weights(datum: &RootDatum) -> Vec<Weight> {
    datum.minuscule_weights().to_vec()
}

pub fn alcove_weights(datum: &RootDatum, p: u64) -> Result<Vec<Weight>> {
    datum.alcove_weights(p)
}

pub fn pair(datum: &RootDatum, weight: &Weight, coroot: &[i64]) -> Result<i64> {
    datum.pair(weight, coroot)
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Symmetrizer `d_i = (α_i, α_i)/2` and the (0-based) Dynkin edges.
fn dynkin_data(t: CartanType, r: usize) -> (Vec<i64>, Vec<(usize, usize)>) {
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t {
        CartanType::A => (vec![1; r], chain(r)),
        CartanType::B => {
            let mut d = vec![2; r];
            d[r - 1] = 1;
            (d, chain(r))
        }
        CartanType::C => {
            let mut d = vec![1; r];
            d[r - 1] = 2;
            (d, chain(r))
        }
        CartanType::D => {
            let mut edges = chain(r - 1);
            edges.push((r - 3, r - 1));
            (vec![1; r], edges)
        }
        CartanType::E6 | CartanType::E7 | CartanType::E8 => {
            let mut edges = vec![(0, 2), (1, 3)];
            for i in 2..r - 1 {
                edges.push((i, i + 1));
            }
            (vec![1; r], edges)
        }
        CartanType::F4 => (vec![2, 2, 1, 1], chain(4)),
        CartanType::G2 => (vec![1, 3], chain(2)),
    }
}

/// Closure of the simple roots under adding simple roots, height by height,
/// using root strings: `β + α_i` is a root iff `q = p - ⟨β, α_i^∨⟩ > 0`
/// where `p` is the length of the string below `β`.
fn generate_positive_roots(cartan: &[Vec<i64>], rank: usize) -> Vec<Vec<i64>> {
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut ordered = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            all.insert(r.clone());
        }
        let mut next: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        for beta in &layer {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                let mut below = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !all.contains(&probe) {
                        break;
                    }
                    below += 1;
                }
                if below - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up, ());
                }
            }
        }
        ordered.append(&mut layer);
        layer = next.into_keys().collect();
    }
    ordered
}

/// Exact determinant via fraction-free (Bareiss) elimination.
fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn datum(t: CartanType, r: usize) -> RootDatum {
        build_root_datum(t, r).unwrap()
    }

    #[test]
    fn coxeter_numbers_match_group_table() {
        for r in 1..=9 {
            assert_eq!(datum(CartanType::A, r).coxeter_number(), r as u64 + 1);
        }
        for r in 2..=9 {
            assert_eq!(datum(CartanType::B, r).coxeter_number(), 2 * r as u64);
            assert_eq!(datum(CartanType::C, r).coxeter_number(), 2 * r as u64);
        }
        for r in 4..=9 {
            assert_eq!(datum(CartanType::D, r).coxeter_number(), 2 * r as u64 - 2);
        }
        let exceptional = [
            (CartanType::E6, 12),
            (CartanType::E7, 18),
            (CartanType::E8, 30),
            (CartanType::F4, 12),
            (CartanType::G2, 6),
        ];
        for (t, h) in exceptional {
            assert_eq!(datum(t, t.fixed_rank().unwrap()).coxeter_number(), h, "{t}");
        }
    }

    #[test]
    fn g2_and_e7_examples() {
        let g2 = datum(CartanType::G2, 2);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.minuscule_weights(), &[Weight::zero(2)]);
        assert_eq!(g2.highest_long_root(), &Weight::fundamental(2, 2));

        let e7 = datum(CartanType::E7, 7);
        assert_eq!(e7.coxeter_number(), 18);
        assert_eq!(e7.positive_roots().len(), 63);
        assert_eq!(e7.fundamental_group_order(), 2);
    }

    #[test]
    fn a1_basics() {
        let a1 = datum(CartanType::A, 1);
        assert_eq!(a1.coxeter_number(), 2);
        assert_eq!(a1.highest_short_coroot(), &[1]);
        assert_eq!(a1.rho(), &Weight::fundamental(1, 1));
    }

    #[test]
    fn pairing_examples() {
        let a2 = datum(CartanType::A, 2);
        let w = Weight::new(vec![1, 1]);
        assert_eq!(a2.pair(&w, a2.highest_short_coroot()).unwrap(), 2);
        for i in 1..=2 {
            for j in 1..=2 {
                let mut e = vec![0; 2];
                e[j - 1] = 1;
                assert_eq!(a2.pair(&Weight::fundamental(2, i), &e).unwrap(), (i == j) as i64);
            }
        }
        assert_eq!(
            a2.pair(&Weight::zero(3), &[1, 1]),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn minuscule_examples() {
        let a4 = datum(CartanType::A, 4);
        let mut expected = vec![Weight::zero(4)];
        expected.extend((1..=4).map(|i| Weight::fundamental(4, i)));
        assert_eq!(a4.minuscule_weights(), expected.as_slice());
        assert_eq!(datum(CartanType::E8, 8).minuscule_weights(), &[Weight::zero(8)]);
        assert_eq!(
            datum(CartanType::C, 5).minuscule_weights(),
            &[Weight::zero(5), Weight::fundamental(5, 1)]
        );
        assert_eq!(
            datum(CartanType::B, 5).minuscule_weights(),
            &[Weight::zero(5), Weight::fundamental(5, 5)]
        );
        assert_eq!(datum(CartanType::D, 6).minuscule_weights().len(), 4);
        assert_eq!(datum(CartanType::E6, 6).minuscule_weights().len(), 3);
        assert_eq!(datum(CartanType::F4, 4).minuscule_weights().len(), 1);
    }

    #[test]
    fn alcove_examples() {
        let a1 = datum(CartanType::A, 1);
        let got = a1.alcove_weights(5).unwrap();
        let want: Vec<Weight> = (0..4).map(|k| Weight::new(vec![k])).collect();
        assert_eq!(got, want);

        // Brute-force oracle: every coordinate vector with entries <= p - h.
        let a2 = datum(CartanType::A, 2);
        let mut brute = Vec::new();
        for a in 0..=2 {
            for b in 0..=2 {
                let w = Weight::new(vec![a, b]);
                if a2.pair_theta_s(&w) <= 2 {
                    brute.push(w);
                }
            }
        }
        brute.sort();
        assert_eq!(a2.alcove_weights(5).unwrap(), brute);
        assert_eq!(brute.len(), 6);

        assert_eq!(a2.alcove_weights(3), Err(Error::PrimeTooSmall { p: 3, h: 3 }));
        assert!(matches!(a2.alcove_weights(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(build_root_datum(CartanType::D, 3).is_err());
        assert!(build_root_datum(CartanType::B, 1).is_err());
        assert!(build_root_datum(CartanType::E6, 7).is_err());
        assert!(build_root_datum(CartanType::A, 0).is_err());
        assert!(RootDatum::d_series(3).is_ok());
    }

    #[test]
    fn root_lattice_membership() {
        let a2 = datum(CartanType::A, 2);
        assert!(a2.in_root_lattice(&Weight::new(vec![1, 1])));
        assert!(!a2.in_root_lattice(&Weight::new(vec![1, 0])));
        assert!(a2.in_root_lattice(&Weight::new(vec![3, 0])));
        let g2 = datum(CartanType::G2, 2);
        assert!(g2.in_root_lattice(&Weight::new(vec![1, 0])));
    }

    #[test]
    fn weight_display() {
        assert_eq!(Weight::new(vec![2, 0, 1]).to_string(), "2w1+w3");
        assert_eq!(Weight::new(vec![0, -1, 0]).to_string(), "-w2");
        assert_eq!(Weight::zero(3).to_string(), "0");
    }
}
