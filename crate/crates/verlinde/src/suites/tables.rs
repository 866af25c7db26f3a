use rayon::prelude::*;
use serde_json::{json, Value};

use verlinde_core::principal::principal_strings;

use super::{datum, group_name, image, paper_weight, primes_in, weight_json, SuiteParams};
use crate::cache::SharedCache;
use crate::data::{image_table, ImageRow};
use crate::error::CliResult;
use crate::report::Check;

const ANCHOR: &str = "table of small and adjoint representations";
const ORACLE_ANCHOR: &str = "pair cancellation agrees with cyclotomic solve";

pub(super) fn run(params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let max_rank = params.max_rank.unwrap_or(8);
    let rows = image_table(max_rank);
    let checks = rows.par_iter().map(|row| check_row(row, cache)).flatten().collect();
    (json!({ "max_classical_rank": max_rank }), checks)
}

fn check_row(row: &ImageRow, cache: &SharedCache) -> Vec<Check> {
    let id = format!("{} {}", group_name(row.cartan_type, row.rank), row.column);
    match compute(row, cache, &id) {
        Ok(checks) => checks,
        Err(e) => vec![Check::error(id, ANCHOR, e)],
    }
}

fn compute(row: &ImageRow, cache: &SharedCache, id: &str) -> CliResult<Vec<Check>> {
    let d = datum(row.cartan_type, row.rank)?;
    let lambda = paper_weight(&d, &row.weight)?;
    let factors = principal_strings(&d, &lambda, cache)?.to_sorted_vec();
    let mut ok = factors == row.weyl_factors;
    if row.column == "adjoint" {
        ok &= &lambda == d.highest_long_root();
    }
    let mut checks = vec![Check::new(
        id.to_string(),
        ANCHOR,
        ok,
        json!({
            "weight": weight_json(&lambda),
            "computed": factors,
            "expected": row.weyl_factors,
        }),
    )];
    // Both image routes at the smallest prime where λ lies in the alcove.
    let h = d.coxeter_number();
    let p = primes_in(h.max(4) + 1, 40 * h).into_iter().find(|&p| d.in_alcove(&lambda, p));
    let image_id = format!("{id} image");
    checks.push(match p.map(|p| image(&d, &lambda, p, cache).map(|r| (p, r))) {
        Some(Ok((p, (_, img)))) => Check::new(image_id, ORACLE_ANCHOR, true, json!({ "p": p, "image": img.to_string() })),
        Some(Err(e)) => Check::error(image_id, ORACLE_ANCHOR, e),
        None => Check::skipped(image_id, ORACLE_ANCHOR, json!("no admissible prime in range")),
    });
    Ok(checks)
}
