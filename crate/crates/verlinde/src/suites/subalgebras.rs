use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::liealg::{
    bracket_nonzero, classify_mask, predicted_subalgebras, BinomialTable, BracketSupport, ModBinomials,
    SubalgebraMask,
};
use verlinde_core::Result as CoreResult;

use super::{primes_in, SuiteParams};
use crate::report::Check;

const ANCHOR: &str = "classification of subalgebras of sl(L_{n-1})";
/// Largest `n` for which the exhaustive subset scan runs.
pub const EXHAUSTIVE_MAX_N: u64 = 16;
/// Largest `p` for which the bracket support is also rebuilt from the
/// exact integer sum.
const EXACT_MAX_P: u64 = 31;

/// Everything computed for one `(p, n)` cell of the sweep.
#[derive(Debug, Clone)]
pub struct CellOutcome {
    pub p: u64,
    pub n: u64,
    pub found: Vec<SubalgebraMask>,
    pub labels: Vec<String>,
    pub conforms: bool,
    /// `None` when the exhaustive oracle was not run.
    pub oracle_agrees: Option<bool>,
    pub unions_closed: bool,
    pub odd_closed: bool,
    pub pair_12_generates: bool,
    /// `None` above the exact-sum threshold.
    pub exact_support_agrees: Option<bool>,
    pub error: Option<String>,
}

impl CellOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.conforms
            && self.oracle_agrees != Some(false)
            && self.unions_closed
            && self.odd_closed
            && self.pair_12_generates
            && self.exact_support_agrees != Some(false)
    }
}

/// Run every `(p, n)` cell with `5 <= p <= p_max`, `2 <= n < p/2`.
pub fn sweep_cells(p_min: u64, p_max: u64) -> Vec<CellOutcome> {
    let primes = primes_in(p_min.max(5), p_max);
    let max_n = (p_max.saturating_sub(1) / 2) as usize;
    let table = BinomialTable::new(3 * max_n + 2);
    let reduced: Vec<ModBinomials> = primes.par_iter().map(|&p| table.reduce(p)).collect();
    let cells: Vec<(usize, u64)> =
        primes.iter().enumerate().flat_map(|(k, &p)| (2..=(p - 1) / 2).map(move |n| (k, n))).collect();
    cells.par_iter().map(|&(k, n)| cell(&reduced[k], n)).collect()
}

fn cell(binomials: &ModBinomials, n: u64) -> CellOutcome {
    let p = binomials.p();
    let mut out = CellOutcome {
        p,
        n,
        found: Vec::new(),
        labels: Vec::new(),
        conforms: false,
        oracle_agrees: None,
        unions_closed: false,
        odd_closed: false,
        pair_12_generates: false,
        exact_support_agrees: None,
        error: None,
    };
    if let Err(e) = fill(&mut out, binomials) {
        out.error = Some(e.to_string());
    }
    out
}

fn fill(out: &mut CellOutcome, binomials: &ModBinomials) -> CoreResult<()> {
    let (p, n) = (out.p, out.n);
    let support = BracketSupport::with_binomials(n, binomials)?;
    let found = support.enumerate();
    out.conforms = found == predicted_subalgebras(n, p)?;
    out.labels = found
        .iter()
        .map(|m| classify_mask(m).map(|ls| format!("{m}:{}", ls.iter().map(|f| f.label()).collect::<String>())))
        .collect::<CoreResult<_>>()?;
    if n <= EXHAUSTIVE_MAX_N {
        out.oracle_agrees = Some(support.enumerate_exhaustive() == found);
    }
    let bits: BTreeSet<u64> = found.iter().map(|m| m.bits()).collect();
    out.unions_closed =
        bits.iter().all(|&a| bits.iter().all(|&b| bits.contains(&support.closure_bits(a | b))));
    let odd: u64 = (1..n).step_by(2).fold(0, |acc, i| acc | 1 << i);
    out.odd_closed = support.is_closed_bits(odd);
    // L_2 and L_4 generate everything; at n = 3 they already are everything.
    let full: u64 = (1..n).fold(0, |acc, i| acc | 1 << i);
    out.pair_12_generates = n < 3 || support.closure_bits(0b110) == full;
    if p <= EXACT_MAX_P {
        let mut agree = true;
        for i in 1..n {
            for j in 1..n {
                for k in 1..n {
                    agree &= bracket_nonzero(n, i, j, k, p)? == support.contains(i, j, k);
                }
            }
        }
        out.exact_support_agrees = Some(agree);
    }
    out.found = found;
    Ok(())
}

pub(super) fn run(params: &SuiteParams) -> (Value, Vec<Check>) {
    let p_max = params.p_max.unwrap_or(101);
    let cells = sweep_cells(5, p_max);
    let checks = cells
        .iter()
        .map(|c| {
            Check::new(
                format!("p={} n={}", c.p, c.n),
                ANCHOR,
                c.passed(),
                json!({
                    "subalgebras": c.labels,
                    "conforms": c.conforms,
                    "exhaustive_oracle": c.oracle_agrees,
                    "unions_closed": c.unions_closed,
                    "odd_indices_closed": c.odd_closed,
                    "pair_1_2_generates": c.pair_12_generates,
                    "exact_sum_support": c.exact_support_agrees,
                    "error": c.error,
                }),
            )
        })
        .collect();
    (json!({ "p_min": 5, "p_max": p_max, "exhaustive_max_n": EXHAUSTIVE_MAX_N }), checks)
}
