use serde_json::{json, Value};
use verlinde_core::dims::{
    divisibility_check, koszul_euler_characteristic, lucas_binomial, p_adic_divisible, PowerRows, VER_PN_DATA,
};

use super::SuiteParams;
use crate::report::Check;

const ANCHOR: &str = "divisibility of N(X) from the dimension series";
const PRIMES: [u64; 4] = [2, 3, 5, 7];
const MAX_R: u32 = 3;
const MAX_TOTAL: u64 = 2000;

pub(super) fn run(_params: &SuiteParams) -> (Value, Vec<Check>) {
    let max_total = MAX_TOTAL;
    let mut checks = Vec::new();
    for p in PRIMES {
        checks.extend(coefficient_sweep(p, max_total));
    }
    for d in VER_PN_DATA {
        let ok = (d.m + d.n) % (d.p * d.p) == 0 && divisibility_check(d.m, d.n, d.p, 1).unwrap_or(false);
        checks.push(Check::new(
            format!("Ver_{}^{} L_{}: (m, n) = ({}, {})", d.p, d.k, d.simple, d.m, d.n),
            "N(X) is a multiple of p^2 for p in {2, 3}",
            ok,
            json!({ "N": d.m + d.n, "p_squared": d.p * d.p }),
        ));
    }
    checks.push(koszul_degree_three());
    (json!({ "max_total": max_total, "primes": PRIMES, "max_r": MAX_R }), checks)
}

/// Coefficients of `(1+t)^N` for `0 < d <= p^r` vanish exactly when
/// `p^{r+1} | N`; the row recursion is checked against Lucas' theorem
/// along the way.
fn coefficient_sweep(p: u64, max_total: u64) -> Vec<Check> {
    let width = p.pow(MAX_R) as usize;
    let mut rows = PowerRows::new(p, width).expect("p is prime");
    let mut mismatches: Vec<Vec<u64>> = vec![Vec::new(); MAX_R as usize + 1];
    let mut divisible_counts = vec![0u64; MAX_R as usize + 1];
    let mut lucas_mismatch = None;
    while rows.exponent() <= max_total {
        let total = rows.exponent();
        let row = rows.row();
        for r in 0..=MAX_R {
            let bound = p.pow(r) as usize;
            let vanish = row[1..=bound].iter().all(|&c| c == 0);
            let divisible = p_adic_divisible(total, 0, p, r);
            divisible_counts[r as usize] += divisible as u64;
            if vanish != divisible {
                mismatches[r as usize].push(total);
            }
        }
        if lucas_mismatch.is_none() {
            let step = (width / 16).max(1);
            if let Some(d) = (0..=width).step_by(step).find(|&d| row[d] != lucas_binomial(total, d as u64, p)) {
                lucas_mismatch = Some((total, d));
            }
        }
        rows.advance();
    }
    let mut out: Vec<Check> = (0..=MAX_R)
        .map(|r| {
            Check::new(
                format!("p={p} r={r} coefficients vs p^(r+1) | m+n"),
                ANCHOR,
                mismatches[r as usize].is_empty(),
                json!({
                    "checked_totals": max_total + 1,
                    "divisible_totals": divisible_counts[r as usize],
                    "mismatches": mismatches[r as usize],
                }),
            )
        })
        .collect();
    out.push(Check::new(
        format!("p={p} row recursion vs Lucas"),
        "binomial coefficients mod p",
        lucas_mismatch.is_none(),
        json!({ "first_mismatch": lucas_mismatch }),
    ));
    // The packaged per-(m, n) entry point on a few splits per total.
    let mut bad = Vec::new();
    for total in (0..=max_total.min(400)).step_by(7) {
        for r in 0..=2 {
            for m in [0, total / 3, total] {
                if divisibility_check(m, total - m, p, r).ok() != Some(p_adic_divisible(m, total - m, p, r)) {
                    bad.push((m, total - m, r));
                }
            }
        }
    }
    out.push(Check::new(
        format!("p={p} divisibility_check(m, n) samples"),
        ANCHOR,
        bad.is_empty(),
        json!({ "mismatches": bad }),
    ));
    out
}

/// The degree-3 Koszul Euler characteristic vanishes when `p | m + n`,
/// `p > 3`.
fn koszul_degree_three() -> Check {
    let mut bad = Vec::new();
    let mut checked = 0;
    for p in [5u64, 7, 11, 13] {
        for m in 0..60 {
            for n in 0..60 {
                if (m + n) % p != 0 {
                    continue;
                }
                checked += 1;
                if koszul_euler_characteristic(m, n, p, 3).ok() != Some(0) {
                    bad.push((p, m, n));
                }
            }
        }
    }
    Check::new(
        "degree-3 Koszul Euler characteristic",
        "Euler characteristic of the Koszul complex in degree 3",
        bad.is_empty(),
        json!({ "checked": checked, "failures": bad }),
    )
}
