//! Verification suites. Each returns a list of checks; `run` wraps them in a
//! report with timing.

mod dims;
mod equivalences;
mod identities;
mod images;
mod invertibles;
mod minuscule;
mod oracles;
mod subalgebras;
mod tables;
mod thm_main;
mod type_d;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};
use verlinde_core::principal::{cross_checked_image, principal_strings};
use verlinde_core::rootsys::{build_root_datum, CartanType, RootDatum, Weight};
use verlinde_core::verp::VerpObject;

use crate::cache::SharedCache;
use crate::data::{minuscule_rows, PaperWeight};
use crate::error::{CliError, CliResult};
use crate::labels::LabelTable;
use crate::report::VerificationReport;

pub use subalgebras::{sweep_cells, CellOutcome, EXHAUSTIVE_MAX_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Images,
    TypeD,
    Invertibles,
    Minuscule,
    ThmMain,
    Equivalences,
    Dims,
    Subalgebras,
    Identities,
    CrossOracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Tables,
        Suite::Images,
        Suite::TypeD,
        Suite::Invertibles,
        Suite::Minuscule,
        Suite::ThmMain,
        Suite::Equivalences,
        Suite::Dims,
        Suite::Subalgebras,
        Suite::Identities,
        Suite::CrossOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Images => "images",
            Suite::TypeD => "typeD",
            Suite::Invertibles => "invertibles",
            Suite::Minuscule => "minuscule",
            Suite::ThmMain => "thm-main",
            Suite::Equivalences => "equivalences",
            Suite::Dims => "dims",
            Suite::Subalgebras => "subalgebras",
            Suite::Identities => "identities",
            Suite::CrossOracle => "cross-oracle",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CliError::Usage(format!("unknown suite `{s}`")))
    }
}

/// Knobs shared by the suites; `None` means the suite's own default.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteParams {
    pub p_max: Option<u64>,
    pub max_rank: Option<usize>,
    /// Also run the slower optional oracles (6j cross-check).
    pub deep: bool,
}

pub fn run(suite: Suite, params: &SuiteParams, cache: &SharedCache) -> VerificationReport {
    if suite == Suite::All {
        let reports = Suite::EACH.iter().map(|&s| run(s, params, cache)).collect();
        return VerificationReport::merge("all", reports);
    }
    let start = Instant::now();
    let (params_json, checks) = match suite {
        Suite::Tables => tables::run(params, cache),
        Suite::Images => images::run(params, cache),
        Suite::TypeD => type_d::run(params, cache),
        Suite::Invertibles => invertibles::run(params, cache),
        Suite::Minuscule => minuscule::run(params, cache),
        Suite::ThmMain => thm_main::run(params),
        Suite::Equivalences => equivalences::run(params, cache),
        Suite::Dims => dims::run(params),
        Suite::Subalgebras => subalgebras::run(params),
        Suite::Identities => identities::run(params),
        Suite::CrossOracle => oracles::run(params, cache),
        Suite::All => unreachable!(),
    };
    VerificationReport::new(suite.name(), params_json, checks, start.elapsed().as_millis() as u64)
}

/// Build a root datum, including `D_3` (isomorphic to `A_3`) for the
/// half-spin sweep.
pub fn datum(ty: CartanType, rank: usize) -> CliResult<RootDatum> {
    if ty == CartanType::D && rank == 3 {
        return Ok(RootDatum::d_series(3)?);
    }
    Ok(build_root_datum(ty, rank)?)
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| verlinde_core::is_prime(p)).collect()
}

pub fn paper_weight(datum: &RootDatum, w: &PaperWeight) -> CliResult<Weight> {
    LabelTable::builtin().weight_from_paper(datum, &w.coords(datum.rank()))
}

/// Weyl factors and cross-checked image of `L(λ)` in `Ver_p`.
pub fn image(datum: &RootDatum, lambda: &Weight, p: u64, cache: &SharedCache) -> CliResult<(Vec<u64>, VerpObject)> {
    let strings = principal_strings(datum, lambda, cache)?;
    let img = cross_checked_image(&strings, p)?;
    Ok((strings.to_sorted_vec(), img))
}

/// `L_{c_1} ⊕ L_{c_2} ⊕ …` with multiplicity one each.
pub fn verp_sum(p: u64, indices: &[u64]) -> CliResult<VerpObject> {
    let pairs: Vec<(u64, u64)> = indices.iter().map(|&c| (c, 1)).collect();
    Ok(VerpObject::from_pairs(p, &pairs)?)
}

/// The alcove symmetries `σ = t_{pϖ} w` of the minuscule table, translated
/// to Bourbaki labels, as `(ϖ, word)`.
pub fn alcove_symmetries(datum: &RootDatum) -> CliResult<Vec<(Weight, Vec<usize>)>> {
    let labels = LabelTable::builtin();
    let (ty, r) = (datum.cartan_type(), datum.rank());
    minuscule_rows(ty, r)
        .into_iter()
        .map(|row| {
            let varpi = Weight::fundamental(r, labels.to_bourbaki(ty, r, row.varpi)?);
            let word = labels.translate_word(ty, r, &row.word)?;
            Ok((varpi, word))
        })
        .collect()
}

/// `λ` together with its images under every alcove symmetry.
pub fn symmetry_orbit(datum: &RootDatum, lambda: &Weight, p: u64) -> CliResult<Vec<Weight>> {
    let mut out = vec![lambda.clone()];
    for (varpi, word) in alcove_symmetries(datum)? {
        out.push(verlinde_core::verlinde_g::sigma_dot(datum, p, &varpi, &word, lambda)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn weight_json(w: &Weight) -> Value {
    json!(w.to_string())
}

pub fn object_json(x: &VerpObject) -> Value {
    json!(x.to_string())
}

/// `A3`, `G2`: the rank is omitted for the exceptional types.
pub fn group_name(ty: CartanType, rank: usize) -> String {
    match ty.fixed_rank() {
        Some(_) => ty.label().to_string(),
        None => format!("{ty}{rank}"),
    }
}
