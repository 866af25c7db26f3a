use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::dims::lucas_binomial;
use verlinde_core::verp::{invariants_profile, Parity, PowerProfile, TopDegree, VerpObject};

use super::SuiteParams;
use crate::error::CliResult;
use crate::report::Check;

const PRIMES: [u64; 4] = [5, 7, 11, 13];

pub(super) fn run(_params: &SuiteParams) -> (Value, Vec<Check>) {
    let cells: Vec<(u64, u64)> = PRIMES.iter().flat_map(|&p| (0..=p - 2).map(move |c| (p, c))).collect();
    let checks = cells
        .par_iter()
        .flat_map(|&(p, c)| match simple_checks(p, c) {
            Ok(v) => v,
            Err(e) => vec![Check::error(format!("L_{c} p={p}"), "invariants profile", e)],
        })
        .collect();
    (json!({ "primes": PRIMES }), checks)
}

fn simple_checks(p: u64, c: u64) -> CliResult<Vec<Check>> {
    let x = VerpObject::simple(c, p)?;
    let prof = invariants_profile(&x)?;
    let mut out = vec![dimension_check(p, c, &prof)];
    let invertible = c == 0 || c == p - 2;
    if invertible {
        let m1 = prof.m == TopDegree::Exact(1);
        let n1 = prof.n == TopDegree::Exact(1);
        out.push(Check::new(
            format!("L_{c} p={p} invertible"),
            "X invertible iff min(m, n) = 1",
            m1 || n1,
            json!({ "m": prof.m.to_string(), "n": prof.n.to_string() }),
        ));
        return Ok(out);
    }
    out.push(profile_check(p, c, &prof));
    let n = c + 1;
    if n >= 2 && n <= p - 2 {
        out.push(generator_check(p, c, &prof));
    }
    Ok(out)
}

/// `dim Sym^d X ≡ C(dim X + d - 1, d)` and `dim Λ^d X ≡ C(dim X, d)` for
/// `d < p`, with `dim L_c = c + 1`.
fn dimension_check(p: u64, c: u64, prof: &PowerProfile) -> Check {
    let dim = c + 1;
    let mut bad = Vec::new();
    for d in 1..p {
        let sym = prof.sym_powers[(d - 1) as usize].dim_mod_p();
        let ext = prof.ext_powers[(d - 1) as usize].dim_mod_p();
        if sym != lucas_binomial(dim + d - 1, d, p) || ext != lucas_binomial(dim, d, p) {
            bad.push(d);
        }
    }
    Check::new(
        format!("L_{c} p={p} power dimensions"),
        "dimensions of symmetric and exterior powers",
        bad.is_empty(),
        json!({ "failing_degrees": bad }),
    )
}

/// `N = p`, top powers invertible, `Λ^n` even, and a unique invertible
/// power of each kind sitting at the top degree.
fn profile_check(p: u64, c: u64, prof: &PowerProfile) -> Check {
    let unique_at = |powers: &[VerpObject], top: TopDegree| {
        let inv: Vec<u64> =
            powers.iter().enumerate().filter(|(_, x)| x.is_invertible()).map(|(i, _)| i as u64 + 1).collect();
        inv.len() == 1 && Some(inv[0]) == top.exact()
    };
    let top_sym_inv = prof.top_sym.as_ref().is_some_and(VerpObject::is_invertible);
    let top_ext_inv = prof.top_ext.as_ref().is_some_and(VerpObject::is_invertible);
    let ok = prof.total == Some(p)
        && top_sym_inv
        && top_ext_inv
        && prof.top_ext_parity == Some(Parity::Even)
        && unique_at(&prof.sym_powers, prof.m)
        && unique_at(&prof.ext_powers, prof.n);
    Check::new(
        format!("L_{c} p={p} profile"),
        "N(X) = p with invertible, even top exterior power",
        ok,
        json!({
            "m": prof.m.to_string(),
            "n": prof.n.to_string(),
            "N": prof.total,
            "top_ext_parity": format!("{:?}", prof.top_ext_parity),
        }),
    )
}

/// For `X = L_{n-1}`: `Λ^n X ≅ 1 ≅ Sym^{p-n} X` holds exactly when `n` is
/// odd; for even `n` the top symmetric power is the odd invertible.
fn generator_check(p: u64, c: u64, prof: &PowerProfile) -> Check {
    let n = c + 1;
    let unit = VerpObject::simple(0, p).ok();
    let odd_unit = VerpObject::simple(p - 2, p).ok();
    let ext_n = prof.ext_powers.get((n - 1) as usize).cloned();
    let sym_pn = prof.sym_powers.get((p - n - 1) as usize).cloned();
    let conditions = ext_n == unit && sym_pn == unit;
    let ok = if n % 2 == 1 {
        conditions && prof.m == TopDegree::Exact(p - n) && prof.n == TopDegree::Exact(n)
    } else {
        !conditions && ext_n == unit && sym_pn == odd_unit
    };
    Check::new(
        format!("L_{c} p={p} generator conditions"),
        "Λ^n X ≅ 1 ≅ Sym^(p-n) X forces n odd",
        ok,
        json!({
            "n": n,
            "ext_n": ext_n.map(|x| x.to_string()),
            "sym_p_minus_n": sym_pn.map(|x| x.to_string()),
        }),
    )
}
