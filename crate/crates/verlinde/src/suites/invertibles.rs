use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::rootsys::{CartanType, RootDatum};
use verlinde_core::verlinde_g::{dim_mod_p, expected_invertibles, invertibles};

use super::{datum, group_name, primes_in, weight_json, SuiteParams};
use crate::cache::SharedCache;
use crate::error::CliResult;
use crate::report::Check;

const ANCHOR: &str = "invertible objects are (p-h) times minuscule weights";

fn groups() -> Vec<(CartanType, usize)> {
    use CartanType::*;
    let mut out: Vec<(CartanType, usize)> = (1..=4).map(|r| (A, r)).collect();
    out.extend((2..=4).map(|r| (B, r)));
    out.extend((2..=4).map(|r| (C, r)));
    out.extend([(D, 4), (F4, 4), (G2, 2)]);
    out
}

pub(super) fn run(params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let p_max = params.p_max.unwrap_or(13);
    let mut cells = Vec::new();
    for (ty, r) in groups() {
        let h = match datum(ty, r) {
            Ok(d) => d.coxeter_number(),
            Err(_) => continue,
        };
        for p in primes_in(h + 1, p_max) {
            cells.push((ty, r, p));
        }
    }
    for spot in [(CartanType::D, 4, 11), (CartanType::G2, 2, 13)] {
        if !cells.contains(&spot) {
            cells.push(spot);
        }
    }
    let checks = cells
        .par_iter()
        .map(|&(ty, r, p)| {
            let id = format!("{} p={p}", group_name(ty, r));
            datum(ty, r).and_then(|d| check(&d, p, cache, &id)).unwrap_or_else(|e| Check::error(id, ANCHOR, e))
        })
        .collect();
    (json!({ "max_rank": 4, "p_max": p_max, "spot_checks": ["D4 p=11", "G2 p=13"] }), checks)
}

fn check(d: &RootDatum, p: u64, cache: &SharedCache, id: &str) -> CliResult<Check> {
    let found = invertibles(d, p, cache)?;
    let want = expected_invertibles(d, p);
    let count_ok = found.len() as u64 == d.fundamental_group_order();
    // Invertibles have dimension ±1 mod p.
    let dims: Vec<u64> = found.iter().map(|w| dim_mod_p(d, w, p)).collect();
    let dims_ok = dims.iter().all(|&x| x == 1 || x == p - 1);
    Ok(Check::new(
        id.to_string(),
        ANCHOR,
        found == want && count_ok && dims_ok,
        json!({
            "found": found.iter().map(weight_json).collect::<Vec<_>>(),
            "expected": want.iter().map(weight_json).collect::<Vec<_>>(),
            "centre_order": d.fundamental_group_order(),
            "dims_mod_p": dims,
        }),
    ))
}
