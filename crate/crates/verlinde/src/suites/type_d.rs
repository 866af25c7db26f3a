use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::principal::halfspin_image;
use verlinde_core::rootsys::{CartanType, Weight};

use super::{datum, image, object_json, primes_in, verp_sum, SuiteParams};
use crate::cache::SharedCache;
use crate::error::CliResult;
use crate::report::Check;

const ANCHOR: &str = "half-spin images in characteristic 2r+1";

/// `L_{r-1}` for `r ≡ 1, 2 (mod 4)`, `L_r` otherwise.
pub fn expected_halfspin(r: u64) -> u64 {
    if matches!(r % 4, 1 | 2) {
        r - 1
    } else {
        r
    }
}

pub(super) fn run(params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let p_max = params.p_max.unwrap_or(31);
    let checks = primes_in(7, p_max)
        .par_iter()
        .flat_map(|&p| {
            let r = (p - 1) / 2;
            let mut out = Vec::new();
            for node in [r, r - 1] {
                let id = format!("D{r} w{node} p={p}");
                out.push(check(r, node, cache).unwrap_or_else(|e| Check::error(id, ANCHOR, e)));
            }
            let id = format!("D{r} half-spin index p={p}");
            out.push(match halfspin_image(r as usize, cache) {
                Ok(c) => Check::new(id, ANCHOR, c == expected_halfspin(r), json!({ "index": c })),
                Err(e) => Check::error(id, ANCHOR, e),
            });
            out
        })
        .collect();
    (json!({ "p_min": 7, "p_max": p_max }), checks)
}

fn check(r: u64, node: u64, cache: &SharedCache) -> CliResult<Check> {
    let p = 2 * r + 1;
    let d = datum(CartanType::D, r as usize)?;
    let lambda = Weight::fundamental(r as usize, node as usize);
    let (factors, img) = image(&d, &lambda, p, cache)?;
    let want = verp_sum(p, &[expected_halfspin(r)])?;
    Ok(Check::new(
        format!("D{r} w{node} p={p}"),
        ANCHOR,
        img == want,
        json!({ "weyl": factors, "image": object_json(&img), "expected": object_json(&want) }),
    ))
}

#[cfg(test)]
mod tests {
    use super::expected_halfspin;

    #[test]
    fn rule() {
        assert_eq!(expected_halfspin(5), 4);
        assert_eq!(expected_halfspin(3), 3);
        assert_eq!(expected_halfspin(6), 5);
        assert_eq!(expected_halfspin(8), 8);
    }
}
