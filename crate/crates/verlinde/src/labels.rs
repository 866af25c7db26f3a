//! Translation between the paper-style diagram labels used in reports and
//! the Bourbaki numbering used everywhere else.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;
use verlinde_core::rootsys::{CartanType, RootDatum, Weight};

use crate::error::{CliError, CliResult};

const LABELS_JSON: &str = include_str!("../data/labels.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelConvention {
    #[default]
    Bourbaki,
    Paper,
}

impl FromStr for LabelConvention {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "bourbaki" => Ok(LabelConvention::Bourbaki),
            "paper" => Ok(LabelConvention::Paper),
            _ => Err(CliError::Usage(format!("unknown label convention `{s}` (expected paper or bourbaki)"))),
        }
    }
}

#[derive(Deserialize)]
struct LabelFile {
    permutations: BTreeMap<String, Vec<usize>>,
}

/// Paper label -> Bourbaki index permutations, keyed by type.
#[derive(Debug, Clone)]
pub struct LabelTable {
    permutations: BTreeMap<CartanType, Vec<usize>>,
}

impl LabelTable {
    pub fn parse(json: &str) -> CliResult<Self> {
        let file: LabelFile = serde_json::from_str(json)?;
        let mut permutations = BTreeMap::new();
        for (name, perm) in file.permutations {
            let ty = CartanType::from_str(&name)?;
            let rank = ty.fixed_rank().ok_or_else(|| CliError::Labels(format!("{name} has no fixed rank")))?;
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            if sorted != (1..=rank).collect::<Vec<_>>() {
                return Err(CliError::Labels(format!("{name}: {perm:?} is not a permutation of 1..={rank}")));
            }
            permutations.insert(ty, perm);
        }
        Ok(LabelTable { permutations })
    }

    /// The table shipped with the binary.
    pub fn builtin() -> &'static LabelTable {
        static TABLE: OnceLock<LabelTable> = OnceLock::new();
        TABLE.get_or_init(|| LabelTable::parse(LABELS_JSON).expect("bundled label table is valid"))
    }

    /// Bourbaki index (1-based) of paper label `i` (1-based).
    pub fn to_bourbaki(&self, ty: CartanType, rank: usize, i: usize) -> CliResult<usize> {
        if i == 0 || i > rank {
            return Err(CliError::Usage(format!("label {i} out of range for rank {rank}")));
        }
        Ok(match self.permutations.get(&ty) {
            Some(perm) => perm[i - 1],
            None => i,
        })
    }

    /// Paper label (1-based) of Bourbaki index `i` (1-based).
    pub fn to_paper(&self, ty: CartanType, rank: usize, i: usize) -> CliResult<usize> {
        if i == 0 || i > rank {
            return Err(CliError::Usage(format!("label {i} out of range for rank {rank}")));
        }
        Ok(match self.permutations.get(&ty) {
            Some(perm) => perm.iter().position(|&b| b == i).map(|k| k + 1).unwrap_or(i),
            None => i,
        })
    }

    pub fn translate_word(&self, ty: CartanType, rank: usize, word: &[usize]) -> CliResult<Vec<usize>> {
        word.iter().map(|&i| self.to_bourbaki(ty, rank, i)).collect()
    }

    /// Re-express paper-labelled coordinates in Bourbaki order.
    pub fn weight_from_paper(&self, datum: &RootDatum, paper_coords: &[i64]) -> CliResult<Weight> {
        let r = datum.rank();
        if paper_coords.len() != r {
            return Err(CliError::Usage(format!("expected {r} coordinates, got {}", paper_coords.len())));
        }
        let mut coords = vec![0; r];
        for (i, &c) in paper_coords.iter().enumerate() {
            coords[self.to_bourbaki(datum.cartan_type(), r, i + 1)? - 1] = c;
        }
        Ok(Weight::new(coords))
    }

    pub fn weight_to_paper(&self, datum: &RootDatum, weight: &Weight) -> CliResult<Vec<i64>> {
        let r = datum.rank();
        let mut coords = vec![0; r];
        for (i, &c) in weight.coords().iter().enumerate() {
            coords[self.to_paper(datum.cartan_type(), r, i + 1)? - 1] = c;
        }
        Ok(coords)
    }
}
