use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::rootsys::{CartanType, RootDatum, Weight};
use verlinde_core::verlinde_g::verify_minuscule_symmetry;

use super::{alcove_symmetries, datum, group_name, primes_in, weight_json, SuiteParams};
use crate::cache::SharedCache;
use crate::error::CliResult;
use crate::labels::LabelTable;
use crate::report::Check;

const ANCHOR: &str = "alcove symmetries of the minuscule table";
/// Fusion spot checks use alcove weights up to this dimension.
const SPOT_DIM_LIMIT: u64 = 100;

fn groups() -> Vec<(CartanType, usize)> {
    use CartanType::*;
    let mut out: Vec<(CartanType, usize)> = (1..=4).map(|r| (A, r)).collect();
    out.extend((2..=4).map(|r| (B, r)));
    out.extend((2..=4).map(|r| (C, r)));
    out.extend((4..=6).map(|r| (D, r)));
    out.extend([(E6, 6), (E7, 7)]);
    out
}

pub(super) fn run(_params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let primes_per_row = 2;
    let checks = groups()
        .par_iter()
        .flat_map(|&(ty, r)| {
            let id = group_name(ty, r);
            match group_checks(ty, r, primes_per_row, cache) {
                Ok(c) => c,
                Err(e) => vec![Check::error(id, ANCHOR, e)],
            }
        })
        .collect();
    (json!({ "primes_per_row": primes_per_row, "spot_dim_limit": SPOT_DIM_LIMIT }), checks)
}

fn group_checks(ty: CartanType, r: usize, primes_per_row: usize, cache: &SharedCache) -> CliResult<Vec<Check>> {
    let d = datum(ty, r)?;
    let symmetries = alcove_symmetries(&d)?;
    let mut checks = vec![coverage_check(&d, &symmetries)];
    let h = d.coxeter_number();
    let primes: Vec<u64> = primes_in(h + 1, 10 * h + 10).into_iter().take(primes_per_row).collect();
    let labels = LabelTable::builtin();
    for (varpi, word) in &symmetries {
        let paper = labels.weight_to_paper(&d, varpi)?;
        let paper_idx = paper.iter().position(|&c| c == 1).map_or(0, |i| i + 1);
        for &p in &primes {
            let id = format!("{} paper w{paper_idx} p={p}", group_name(ty, r));
            let res = verify_minuscule_symmetry(&d, p, varpi, word, SPOT_DIM_LIMIT, cache)?;
            checks.push(Check::new(
                id,
                ANCHOR,
                res.passed(),
                json!({
                    "word_length": word.len(),
                    "preserves_alcove": res.preserves_alcove,
                    "sigma_0": res.zero_maps_to_invertible,
                    "fusion_checked": res.fusion_checked.len(),
                    "fusion_failures": res.fusion_failures.iter().map(weight_json).collect::<Vec<_>>(),
                }),
            ));
        }
    }
    Ok(checks)
}

/// The table lists every non-zero minuscule weight exactly once.
fn coverage_check(d: &RootDatum, symmetries: &[(Weight, Vec<usize>)]) -> Check {
    let listed: BTreeSet<&Weight> = symmetries.iter().map(|(w, _)| w).collect();
    let actual: BTreeSet<&Weight> = d.minuscule_weights().iter().filter(|w| !w.is_zero()).collect();
    Check::new(
        format!("{} minuscule list", d.name()),
        ANCHOR,
        listed == actual && listed.len() == symmetries.len(),
        json!({
            "listed": listed.iter().map(|w| weight_json(w)).collect::<Vec<_>>(),
            "minuscule": actual.iter().map(|w| weight_json(w)).collect::<Vec<_>>(),
        }),
    )
}
