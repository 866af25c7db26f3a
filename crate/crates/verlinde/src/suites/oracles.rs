use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::rootsys::{build_root_datum, CartanType, Weight};
use verlinde_core::verlinde_g::tensor_decompose;
use verlinde_core::verp::{fuse, VerpObject};

use super::{primes_in, SuiteParams};
use crate::cache::SharedCache;
use crate::error::CliResult;
use crate::report::Check;

const ANCHOR: &str = "affine Weyl fusion agrees with the Ver_p fusion rule";

pub(super) fn run(params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let p_max = params.p_max.unwrap_or(13);
    let checks = primes_in(5, p_max)
        .par_iter()
        .map(|&p| {
            let id = format!("A1 fusion p={p}");
            a1_fusion(p, cache).unwrap_or_else(|e| Check::error(id, ANCHOR, e))
        })
        .collect();
    (json!({ "p_max": p_max }), checks)
}

fn a1_fusion(p: u64, cache: &SharedCache) -> CliResult<Check> {
    let a1 = build_root_datum(CartanType::A, 1)?;
    let mut bad = Vec::new();
    let mut pairs = 0;
    for a in 0..=p - 2 {
        for b in 0..=p - 2 {
            pairs += 1;
            let dec = tensor_decompose(&a1, &Weight::new(vec![a as i64]), &Weight::new(vec![b as i64]), p, cache)?;
            let mut mult = vec![0u64; (p - 1) as usize];
            for (w, m) in dec {
                mult[w.coords()[0] as usize] = m;
            }
            if VerpObject::from_multiplicities(p, mult)? != fuse(a, b, p)? {
                bad.push((a, b));
            }
        }
    }
    Ok(Check::new(format!("A1 fusion p={p}"), ANCHOR, bad.is_empty(), json!({ "pairs": pairs, "mismatches": bad })))
}
