use serde_json::{json, Value};
use verlinde_core::liealg::{six_j_cross_check, verify_p_identities, SixJOutcome};
use verlinde_core::Error as CoreError;

use super::{primes_in, SuiteParams};
use crate::report::Check;

const ANCHOR: &str = "polynomial identities for P(n,i,j,k)";
const SIX_J_ANCHOR: &str = "6j form of the bracket coefficient";
const GRID_SIDE: u64 = 10;

pub(super) fn run(params: &SuiteParams) -> (Value, Vec<Check>) {
    let mut checks = match verify_p_identities(GRID_SIDE) {
        Ok(list) => list
            .into_iter()
            .map(|c| Check::new(c.name.clone(), ANCHOR, true, json!({ "points": c.points })))
            .collect(),
        Err(CoreError::IdentityFailed { identity, point }) => {
            vec![Check::new(identity, ANCHOR, false, json!({ "point": point }))]
        }
        Err(e) => vec![Check::error("P identities", ANCHOR, e)],
    };
    let cells: Vec<(u64, u64)> = if params.deep {
        primes_in(7, params.p_max.unwrap_or(31)).into_iter().flat_map(|p| (2..=(p - 1) / 2).map(move |n| (n, p))).collect()
    } else {
        vec![(5, 11), (7, 17), (10, 23)]
    };
    for (n, p) in cells {
        checks.push(six_j_cell(n, p));
    }
    (json!({ "grid_side": GRID_SIDE, "six_j_deep": params.deep }), checks)
}

/// Every triple passing fusion and parity at `(n, p)`.
fn six_j_cell(n: u64, p: u64) -> Check {
    let (mut agree, mut disagree, mut inconclusive) = (0u64, Vec::new(), 0u64);
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                let fusion = i.abs_diff(j) <= k && k <= i + j && i + j + k <= p - 2;
                if !fusion || (i + j + k) % 2 == 0 {
                    continue;
                }
                match six_j_cross_check(n, i, j, k, p) {
                    Ok(SixJOutcome::Agree { .. }) => agree += 1,
                    Ok(SixJOutcome::Inconclusive) => inconclusive += 1,
                    Ok(SixJOutcome::Disagree) | Err(_) => disagree.push((i, j, k)),
                }
            }
        }
    }
    let witness = json!({ "agree": agree, "inconclusive": inconclusive, "disagree": disagree });
    let id = format!("6j vs S at n={n} p={p}");
    if agree == 0 && disagree.is_empty() {
        Check::skipped(id, SIX_J_ANCHOR, witness)
    } else {
        Check::new(id, SIX_J_ANCHOR, disagree.is_empty(), witness)
    }
}
