use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::rootsys::{CartanType, Weight};

use super::{datum, image, object_json, paper_weight, primes_in, verp_sum, SuiteParams};
use crate::cache::SharedCache;
use crate::data::PaperWeight;
use crate::error::CliResult;
use crate::report::Check;

const ANCHOR: &str = "images of adjoint and small representations";

struct Case {
    id: String,
    ty: CartanType,
    rank: usize,
    /// `None` selects the adjoint representation.
    weight: Option<PaperWeight>,
    p: u64,
    expected: Vec<u64>,
}

fn cases(p_max: u64) -> Vec<Case> {
    let mut out = Vec::new();
    let adj = |id: String, ty, rank, p, expected| Case { id, ty, rank, weight: None, p, expected };
    for r in 1..=8u64 {
        for p in primes_in((r + 2).max(5), p_max) {
            let s = r.min(p - 2 - r);
            out.push(adj(format!("A{r} adjoint p={p}"), CartanType::A, r as usize, p, (1..=s).map(|k| 2 * k).collect()));
        }
    }
    for ty in [CartanType::B, CartanType::C] {
        for r in 2..=6u64 {
            for p in primes_in(2 * r + 1, p_max) {
                let s = r.min((p - 1) / 2 - r);
                let expected = (1..=s).map(|k| 4 * k - 2).collect();
                out.push(adj(format!("{ty}{r} adjoint p={p}"), ty, r as usize, p, expected));
            }
        }
    }
    for r in 4..=(p_max - 1) / 2 {
        let p = 2 * r + 1;
        if verlinde_core::is_prime(p) {
            out.push(adj(format!("D{r} adjoint p={p}"), CartanType::D, r as usize, p, vec![2, 2 * r - 2]));
        }
    }
    out.push(adj("E7 adjoint p=23".into(), CartanType::E7, 7, 23, vec![2, 14]));
    out.push(Case {
        id: "E7 paper w1 p=23".into(),
        ty: CartanType::E7,
        rank: 7,
        weight: Some(PaperWeight::fundamental(1)),
        p: 23,
        expected: vec![9],
    });
    for p in primes_in(13, p_max.max(19)) {
        out.push(adj(format!("G2 adjoint p={p}"), CartanType::G2, 2, p, vec![2, 10]));
    }
    out
}

pub(super) fn run(params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let p_max = params.p_max.unwrap_or(31);
    let checks = cases(p_max)
        .par_iter()
        .map(|c| match check(c, cache) {
            Ok(ch) => ch,
            Err(e) => Check::error(c.id.clone(), ANCHOR, e),
        })
        .collect();
    (json!({ "p_max": p_max, "classical_ranks": "A1-A8, B2-B6, C2-C6, D at p=2r+1" }), checks)
}

fn check(c: &Case, cache: &SharedCache) -> CliResult<Check> {
    let d = datum(c.ty, c.rank)?;
    let lambda: Weight = match &c.weight {
        Some(w) => paper_weight(&d, w)?,
        None => d.highest_long_root().clone(),
    };
    let (factors, img) = image(&d, &lambda, c.p, cache)?;
    let want = verp_sum(c.p, &c.expected)?;
    Ok(Check::new(
        c.id.clone(),
        ANCHOR,
        img == want,
        json!({ "weyl": factors, "image": object_json(&img), "expected": object_json(&want) }),
    ))
}
