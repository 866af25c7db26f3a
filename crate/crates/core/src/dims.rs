//! Mod-`p` dimension series of symmetric and exterior powers and the
//! divisibility constraints they impose on `N(X) = m + n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{is_prime, Error, Result};

/// A polynomial over `F_p`, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPSeries {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPSeries {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPSeries { p, coeffs }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `(1 + s t)^e mod p` truncated to degree `max_degree`, by repeated
/// multiplication; `s` is `1` or `p - 1`.
fn binomial_power(e: u64, s: u64, p: u64, max_degree: usize) -> Vec<u64> {
    let mut row = vec![0u64; max_degree + 1];
    row[0] = 1;
    for step in 0..e {
        let top = (step as usize + 1).min(max_degree);
        for d in (1..=top).rev() {
            row[d] = (row[d] + s * row[d - 1]) % p;
        }
    }
    row
}

/// `((1-t)^m, (1+t)^n, (1+t)^{m+n})` over `F_p`.
pub fn power_series(m: u64, n: u64, p: u64) -> Result<(ModPSeries, ModPSeries, ModPSeries)> {
    check_prime(p)?;
    let sym = ModPSeries::new(p, binomial_power(m, p - 1, p, m as usize));
    let ext = ModPSeries::new(p, binomial_power(n, 1, p, n as usize));
    let total = ModPSeries::new(p, binomial_power(m + n, 1, p, (m + n) as usize));
    Ok((sym, ext, total))
}

/// Whether the coefficient of `t^d` in `(1+t)^{m+n}` vanishes mod `p` for
/// every `0 < d <= p^r`.
pub fn divisibility_check(m: u64, n: u64, p: u64, r: u32) -> Result<bool> {
    check_prime(p)?;
    let bound = p.checked_pow(r).ok_or(Error::Overflow("p^r"))? as usize;
    let row = binomial_power(m + n, 1, p, bound);
    Ok(row[1..].iter().all(|&c| c == 0))
}

/// `p^{r+1} | m + n`.
pub fn p_adic_divisible(m: u64, n: u64, p: u64, r: u32) -> bool {
    match p.checked_pow(r + 1) {
        Some(q) => (m + n).is_multiple_of(q),
        None => m + n == 0,
    }
}

/// `C(a, b) mod p` via Lucas' theorem.
pub fn lucas_binomial(mut a: u64, mut b: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while a > 0 || b > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return 0;
        }
        let mut c = 1u64;
        for t in 0..bd {
            c = c * ((ad - t) % p) % p;
        }
        let mut den = 1u64;
        for t in 1..=bd {
            den = den * t % p;
        }
        acc = acc * c % p * inverse_mod(den, p) % p;
        a /= p;
        b /= p;
    }
    acc
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// `Σ_j (-1)^j s_{d-j} a_j mod p`, the dimension Euler characteristic of the
/// degree-`d` Koszul complex.
pub fn koszul_euler_characteristic(m: u64, n: u64, p: u64, d: usize) -> Result<u64> {
    let (sym, ext, _) = power_series(m, n, p)?;
    let mut acc = 0u64;
    for j in 0..=d {
        let term = sym.coeff(d - j) * ext.coeff(j) % p;
        acc = if j % 2 == 0 { (acc + term) % p } else { (acc + p - term) % p };
    }
    Ok(acc)
}

/// Successive rows `(1+t)^N mod p`, `N = 0, 1, 2, …`, truncated to a fixed
/// degree. Used by exhaustive sweeps over `m + n`.
#[derive(Debug, Clone)]
pub struct PowerRows {
    p: u64,
    row: Vec<u64>,
    exponent: u64,
}

impl PowerRows {
    pub fn new(p: u64, max_degree: usize) -> Result<Self> {
        check_prime(p)?;
        let mut row = vec![0u64; max_degree + 1];
        row[0] = 1;
        Ok(PowerRows { p, row, exponent: 0 })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn row(&self) -> &[u64] {
        &self.row
    }

    /// Multiply by `1 + t`.
    pub fn advance(&mut self) {
        for d in (1..self.row.len()).rev() {
            self.row[d] = (self.row[d] + self.row[d - 1]) % self.p;
        }
        self.exponent += 1;
    }
}

/// A published `(m, n)` pair for a simple object of `Ver_{p^k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularDatum {
    pub p: u64,
    pub k: u32,
    pub simple: u64,
    pub m: u64,
    pub n: u64,
}

/// `m(L)` and `n(L)` for non-invertible simples of `Ver_4`, `Ver_8`, `Ver_9`.
/// These come from computations in the non-semisimple categories and are
/// recorded here as test vectors only.
pub const VER_PN_DATA: [ModularDatum; 7] = [
    ModularDatum { p: 2, k: 2, simple: 1, m: 2, n: 2 },
    ModularDatum { p: 2, k: 3, simple: 1, m: 6, n: 2 },
    ModularDatum { p: 2, k: 3, simple: 3, m: 4, n: 4 },
    ModularDatum { p: 3, k: 2, simple: 1, m: 7, n: 2 },
    ModularDatum { p: 3, k: 2, simple: 2, m: 6, n: 3 },
    ModularDatum { p: 3, k: 2, simple: 4, m: 2, n: 7 },
    ModularDatum { p: 3, k: 2, simple: 5, m: 3, n: 6 },
];
