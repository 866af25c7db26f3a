//! The ad-hoc queries behind the `image`, `subalgebras` and `datum`
//! subcommands.

use std::collections::BTreeMap;

use serde::Serialize;
use verlinde_core::liealg::{classify_mask, enumerate_subalgebras, normalize_rank};
use verlinde_core::principal::{cross_checked_image, principal_strings};
use verlinde_core::rootsys::{CartanType, RootDatum};

use crate::cache::SharedCache;
use crate::error::{CliError, CliResult};
use crate::labels::LabelConvention;
use crate::suites::{self, sweep_cells, CellOutcome};
use crate::weights::parse_weight;

/// Resolve `(type, rank)`; exceptional types may omit the rank.
pub fn resolve_datum(ty: CartanType, rank: Option<usize>) -> CliResult<RootDatum> {
    let rank = match (ty.fixed_rank(), rank) {
        (Some(fixed), None) => fixed,
        (Some(fixed), Some(r)) if r == fixed => fixed,
        (Some(fixed), Some(r)) => {
            return Err(CliError::Usage(format!("type {ty} has rank {fixed}, not {r}")));
        }
        (None, Some(r)) => r,
        (None, None) => return Err(CliError::Usage(format!("type {ty} needs --rank"))),
    };
    suites::datum(ty, rank)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageOutput {
    pub group: String,
    pub weight: String,
    pub p: u64,
    pub weyl: Vec<u64>,
    /// Multiplicity of each `L_c` present.
    pub image: BTreeMap<u64, u64>,
    pub image_text: String,
}

pub fn image_query(
    datum: &RootDatum,
    weight: &str,
    p: u64,
    labels: LabelConvention,
    cache: &SharedCache,
) -> CliResult<ImageOutput> {
    let lambda = parse_weight(datum, weight, labels)?;
    if !lambda.is_dominant() {
        return Err(CliError::Usage(format!("{lambda} is not dominant")));
    }
    if !verlinde_core::is_prime(p) || p <= datum.coxeter_number() || p < 5 {
        return Err(CliError::Usage(format!(
            "p = {p} must be a prime >= 5 above the Coxeter number {}",
            datum.coxeter_number()
        )));
    }
    if !datum.in_alcove(&lambda, p) {
        return Err(CliError::Usage(format!("{lambda} is not in the fundamental alcove for p = {p}")));
    }
    let strings = principal_strings(datum, &lambda, cache)?;
    let img = cross_checked_image(&strings, p)?;
    Ok(ImageOutput {
        group: datum.name(),
        weight: lambda.to_string(),
        p,
        weyl: strings.to_sorted_vec(),
        image: img.support().into_iter().collect(),
        image_text: img.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubalgebraLine {
    pub mask: String,
    pub families: String,
}

pub fn subalgebras_query(n: u64, p: u64) -> CliResult<Vec<SubalgebraLine>> {
    let n = normalize_rank(n, p)?;
    enumerate_subalgebras(n, p)?
        .into_iter()
        .map(|m| {
            let families = classify_mask(&m)?.iter().map(|f| f.label()).collect();
            Ok(SubalgebraLine { mask: m.to_string(), families })
        })
        .collect()
}

pub fn subalgebra_sweep(p_min: u64, p_max: u64) -> CliResult<Vec<CellOutcome>> {
    if p_min > p_max || p_max < 5 {
        return Err(CliError::Usage(format!("empty prime range {p_min}..={p_max}")));
    }
    if p_max > 127 {
        return Err(CliError::Usage("--p-max above 127 exceeds the 63-summand mask width".into()));
    }
    Ok(sweep_cells(p_min, p_max))
}

/// Canonical dump of a root datum, fields in a fixed order.
#[derive(Debug, Serialize)]
pub struct DatumDump {
    pub type_label: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<RootDump>,
    pub rho: Vec<i64>,
    pub highest_long_root: Vec<i64>,
    pub highest_short_coroot: Vec<i64>,
    pub coxeter_number: u64,
    pub fundamental_group_order: u64,
    pub minuscule_list: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct RootDump {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
}

pub fn datum_dump(d: &RootDatum) -> DatumDump {
    DatumDump {
        type_label: d.cartan_type().label().to_string(),
        rank: d.rank(),
        cartan_matrix: d.cartan_matrix().to_vec(),
        positive_roots: d
            .positive_roots()
            .iter()
            .map(|r| RootDump { root: r.root.clone(), coroot: r.coroot.clone() })
            .collect(),
        rho: d.rho().coords().to_vec(),
        highest_long_root: d.highest_long_root().coords().to_vec(),
        highest_short_coroot: d.highest_short_coroot().to_vec(),
        coxeter_number: d.coxeter_number(),
        fundamental_group_order: d.fundamental_group_order(),
        minuscule_list: d.minuscule_weights().iter().map(|w| w.coords().to_vec()).collect(),
    }
}
