use std::fs;
use std::path::Path;

use vfilt_core::filtration::PiSets;
use vfilt_core::ratpoly::{parse_rational, Rational};
use vfilt_core::spaces::SpaceFamily;

use crate::error::{CliError, Result};
use crate::json::{FamilyJson, PiSetsJson};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn parse_family(doc: &str) -> Result<SpaceFamily> {
    let raw: FamilyJson = serde_json::from_str(doc)?;
    Ok(SpaceFamily::from_affine(raw.into_family()?)?)
}

pub fn load_family(path: &Path) -> Result<SpaceFamily> {
    parse_family(&read(path)?)
}

pub fn parse_pi_sets(doc: &str) -> Result<PiSets> {
    serde_json::from_str::<PiSetsJson>(doc)?.into_pi_sets()
}

pub fn load_pi_sets(path: &Path) -> Result<PiSets> {
    parse_pi_sets(&read(path)?)
}

/// Comma-separated integers, e.g. `3,1,-2`.
pub fn parse_weight(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad weight entry {x:?} in {s:?}"))))
        .collect()
}

pub fn parse_alpha(s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
}
