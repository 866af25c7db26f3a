//! Parsing of weights given on the command line.

use verlinde_core::rootsys::{RootDatum, Weight};

use crate::error::{CliError, CliResult};
use crate::labels::{LabelConvention, LabelTable};

/// Parse a weight written as `adjoint`, `0`, a sum of fundamental weights
/// such as `2w1+w3`, or a coordinate list `[1,0,2]`. A `paper:` or
/// `bourbaki:` prefix overrides `convention` for the node labels.
pub fn parse_weight(datum: &RootDatum, spec: &str, convention: LabelConvention) -> CliResult<Weight> {
    let (convention, body) = match spec.split_once(':') {
        Some(("paper", rest)) => (LabelConvention::Paper, rest),
        Some(("bourbaki", rest)) => (LabelConvention::Bourbaki, rest),
        Some((other, _)) => return Err(CliError::Usage(format!("unknown label prefix `{other}`"))),
        None => (convention, spec),
    };
    let body = body.trim();
    let r = datum.rank();
    if body == "adjoint" {
        return Ok(datum.highest_long_root().clone());
    }
    let coords = if body.starts_with('[') {
        parse_coords(body, r)?
    } else {
        parse_sum(body, r)?
    };
    match convention {
        LabelConvention::Bourbaki => Ok(Weight::new(coords)),
        LabelConvention::Paper => LabelTable::builtin().weight_from_paper(datum, &coords),
    }
}

fn parse_coords(body: &str, r: usize) -> CliResult<Vec<i64>> {
    let inner = body
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError::Usage(format!("malformed coordinate list `{body}`")))?;
    let coords = inner
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad coordinate `{t}`"))))
        .collect::<CliResult<Vec<_>>>()?;
    if coords.len() != r {
        return Err(CliError::Usage(format!("expected {r} coordinates, got {}", coords.len())));
    }
    Ok(coords)
}

fn parse_sum(body: &str, r: usize) -> CliResult<Vec<i64>> {
    let mut coords = vec![0i64; r];
    if body == "0" {
        return Ok(coords);
    }
    for term in body.split('+') {
        let term = term.trim();
        let (coef, idx) = term
            .split_once('w')
            .ok_or_else(|| CliError::Usage(format!("bad term `{term}` (expected e.g. 2w1)")))?;
        let coef = match coef.trim_end_matches('*') {
            "" => 1,
            c => c.parse::<i64>().map_err(|_| CliError::Usage(format!("bad coefficient in `{term}`")))?,
        };
        let idx: usize = idx.parse().map_err(|_| CliError::Usage(format!("bad index in `{term}`")))?;
        if idx == 0 || idx > r {
            return Err(CliError::Usage(format!("fundamental weight w{idx} out of range for rank {r}")));
        }
        coords[idx - 1] += coef;
    }
    Ok(coords)
}
