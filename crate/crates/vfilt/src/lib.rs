//! File formats, enumeration drivers and the self-check suite behind the
//! `vfilt` command-line tool.

pub mod check;
pub mod error;
pub mod input;
pub mod json;

use rayon::prelude::*;

use vfilt_core::ratpoly::Rational;
use vfilt_core::spaces::{
    character_contains, ideal_weight_membership, weight_set, CharacterMode, Route, Scope, SpaceFamily, TaggedWeight,
    WeightSet,
};

pub use error::{CliError, Result};

/// [`vfilt_core::spaces::ideal_weight_set`] with the membership tests
/// spread over threads. The output is sorted.
pub fn ideal_weight_set_par(fam: &SpaceFamily, k: i64, alpha: &Rational, bound: i64, route: Route) -> Result<WeightSet> {
    let candidates = fam.enumerate(bound, Scope::StructureSheaf);
    let flags = candidates
        .par_iter()
        .map(|w| ideal_weight_membership(fam, k, alpha, w, route))
        .collect::<vfilt_core::Result<Vec<bool>>>()?;
    let weights = candidates.into_iter().zip(flags).filter_map(|(w, keep)| keep.then_some(w)).collect();
    Ok(weight_set(fam, k, alpha, weights))
}

/// Parallel [`vfilt_core::spaces::graded_character`].
pub fn graded_character_par(
    fam: &SpaceFamily,
    alpha: &Rational,
    ell: i64,
    bound: i64,
    mode: CharacterMode,
) -> Result<Vec<TaggedWeight>> {
    let candidates = fam.enumerate(bound, Scope::Module);
    let flags = candidates
        .par_iter()
        .map(|w| character_contains(fam, alpha, ell, w, mode))
        .collect::<vfilt_core::Result<Vec<bool>>>()?;
    let mut out: Vec<TaggedWeight> = candidates
        .into_iter()
        .zip(flags)
        .filter_map(|(w, keep)| keep.then(|| TaggedWeight { weight: w, alpha: alpha.clone() }))
        .collect();
    out.sort();
    Ok(out)
}
