//! Built-in multiplicity-free spaces, weight enumeration, and the weight
//! sets of Hodge ideals and of the weight filtration.

mod family;

pub use family::{Scope, SpaceFamily};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::filtration::{grw_grv_membership, hodge_level, nu, GrVReport};
use crate::ratpoly::{ceil_i64, int, rat, Rational};

/// How ideal membership is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `deg p_{λ,α+k} ≤ k`.
    Degree,
    /// The family's closed inequalities, available for `α ∈ (0, 1]`.
    Inequality,
    /// Both, failing with [`Error::Mismatch`] if they disagree.
    Both,
}

/// Exponent table for the symmetric determinant.
///
/// `Printed` follows the published statement: for `m = n - t` even the
/// exponent is `⌈m(2k - m/2)/2⌉` on `(0, 1/2]` and `⌈m(2k - m/2 + 1)/2⌉` on
/// `(1/2, 1]`, with `+1/4` and `+3/4` inside the ceiling for `m` odd.
/// `Derived` is what `deg p_{λ,α+k} ≤ k` actually reduces to: the first
/// formula applies on `(1/2, 1]`, and on `(0, 1/2]` the exponent is
/// `⌈m(2k - m/2 - 1)/2⌉`, with `-1/4` inside the ceiling for `m` odd.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SymDetTable {
    Printed,
    #[default]
    Derived,
}

impl SymDetTable {
    /// The exponent of the rank `< t` stratum, where `m = n - t`.
    pub fn exponent(self, m: i64, k: i64, alpha: &Rational) -> i64 {
        let upper = *alpha > rat(1, 2);
        let odd = m % 2 == 1;
        let (shift, odd_term) = match (self, upper) {
            (SymDetTable::Printed, false) | (SymDetTable::Derived, true) => (0, rat(1, 4)),
            (SymDetTable::Printed, true) => (1, rat(3, 4)),
            (SymDetTable::Derived, false) => (-1, rat(-1, 4)),
        };
        let base = rat(m, 2) * (int(2 * k + shift) - rat(m, 2));
        let value = if odd { base + odd_term } else { base };
        ceil_i64(&value)
    }
}

fn in_unit_interval(alpha: &Rational) -> bool {
    *alpha > int(0) && *alpha <= int(1)
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

impl SpaceFamily {
    /// Lower bounds `(t, bound)` on the partial sums used by the inequality
    /// route, or `None` when the family has no closed form at this `α`.
    fn partial_sum_bounds(&self, k: i64, alpha: &Rational, table: SymDetTable) -> Option<Vec<(usize, i64)>> {
        if !in_unit_interval(alpha) {
            return None;
        }
        let n = self.n() as i64;
        match self.builtin_kind()? {
            "det" => {
                Some((1..=n).map(|t| (t as usize, (n - t) * (k - 1) - binom2(n - t))).collect())
            }
            "symdet" => {
                Some((1..=n).map(|t| (t as usize, 2 * table.exponent(n - t, k, alpha).max(0))).collect())
            }
            "pfaffian" => {
                let h = n / 2;
                Some((1..=h).map(|t| (t as usize, (h - t) * (k - 1) - (h - t) * (h - t))).collect())
            }
            _ => None,
        }
    }

    /// Closed-form membership for `α ∈ (0, 1]`, `None` elsewhere or for
    /// user-defined families.
    pub fn inequality_membership(&self, k: i64, alpha: &Rational, w: &[i64]) -> Option<bool> {
        self.inequality_membership_with(k, alpha, w, SymDetTable::default())
    }

    pub fn inequality_membership_with(
        &self,
        k: i64,
        alpha: &Rational,
        w: &[i64],
        table: SymDetTable,
    ) -> Option<bool> {
        if self.builtin_kind() == Some("e6") {
            if !in_unit_interval(alpha) {
                return None;
            }
            let (b1, b2, b3) = (w[0] + w[1] + w[2], w[1] + w[2], w[2]);
            return Some(b3 >= 0 && b2 + b3 >= k - 4 && b1 + b2 + b3 >= 2 * k - 12);
        }
        let bounds = self.partial_sum_bounds(k, alpha, table)?;
        let entries: Vec<i64> = if self.builtin_kind() == Some("pfaffian") {
            w.iter().skip(1).step_by(2).copied().collect()
        } else {
            w.to_vec()
        };
        Some(bounds.iter().all(|&(t, lb)| entries[t - 1..].iter().sum::<i64>() >= lb))
    }

    /// Exponents `(t, e)` of the symbolic powers in the primary
    /// decomposition, with `e` clamped at zero.
    pub fn primary_decomposition(&self, k: i64, alpha: &Rational) -> Option<Vec<(usize, i64)>> {
        self.primary_decomposition_with(k, alpha, SymDetTable::default())
    }

    pub fn primary_decomposition_with(
        &self,
        k: i64,
        alpha: &Rational,
        table: SymDetTable,
    ) -> Option<Vec<(usize, i64)>> {
        if !in_unit_interval(alpha) {
            return None;
        }
        let n = self.n() as i64;
        let raw: Vec<(usize, i64)> = match self.builtin_kind()? {
            "det" => (1..n).map(|t| (t as usize, (n - t) * (k - 1) - binom2(n - t))).collect(),
            "symdet" => (1..n).map(|t| (t as usize, table.exponent(n - t, k, alpha))).collect(),
            "pfaffian" => {
                let h = n / 2;
                (1..h).map(|t| (t as usize, (h - t) * (k - 1) - (h - t) * (h - t))).collect()
            }
            "e6" => alloc::vec![(1, 2 * k - 12), (2, k - 4)],
            _ => return None,
        };
        Some(raw.into_iter().map(|(t, e)| (t, e.max(0))).collect())
    }

    /// Inequalities of the closed form, for display.
    pub fn inequality_constraints(&self, k: i64, alpha: &Rational) -> Vec<String> {
        if self.builtin_kind() == Some("e6") && in_unit_interval(alpha) {
            return alloc::vec![
                format!("a2 + 2*a3 >= {}", k - 4),
                format!("a1 + 2*a2 + 3*a3 >= {}", 2 * k - 12),
            ];
        }
        let Some(bounds) = self.partial_sum_bounds(k, alpha, SymDetTable::default()) else {
            return Vec::new();
        };
        let n = self.n();
        let pf = self.builtin_kind() == Some("pfaffian");
        bounds
            .into_iter()
            .map(|(t, lb)| {
                let terms: Vec<String> = if pf {
                    (t..=n / 2).map(|i| format!("p{}", 2 * i)).collect()
                } else {
                    (t..=n).map(|i| format!("p{i}")).collect()
                };
                format!("{} >= {lb}", terms.join(" + "))
            })
            .collect()
    }
}

/// Whether the component of weight `w` lies in `Ĩ_k(αD) = I_k(αD)`.
pub fn ideal_weight_membership(
    fam: &SpaceFamily,
    k: i64,
    alpha: &Rational,
    w: &[i64],
    route: Route,
) -> Result<bool> {
    if *alpha <= int(0) {
        return Err(Error::Precondition(format!("α = {alpha} must be positive")));
    }
    fam.check_weight(w, Scope::StructureSheaf)?;
    let degree = || -> Result<bool> {
        let b = fam.b_of_weight(w)?;
        Ok(hodge_level(&b, &(alpha + int(k))) as i64 <= k)
    };
    let closed = || {
        fam.inequality_membership(k, alpha, w).ok_or_else(|| {
            Error::Precondition(format!("no closed inequalities for {} at α = {alpha}", fam.name()))
        })
    };
    match route {
        Route::Degree => degree(),
        Route::Inequality => closed(),
        Route::Both => {
            let d = degree()?;
            match fam.inequality_membership(k, alpha, w) {
                Some(i) if i != d => Err(Error::Mismatch(format!(
                    "{} weight {w:?}, k = {k}, α = {alpha}: degree route {d}, inequalities {i}",
                    fam.name()
                ))),
                _ => Ok(d),
            }
        }
    }
}

/// Weights of an ideal inside a box together with its description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    pub constraints: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    pub primary_decomposition: Option<Vec<(usize, i64)>>,
}

/// The members of `Ĩ_k(αD)` among `candidates`, sorted.
pub fn filter_ideal_weights(
    fam: &SpaceFamily,
    k: i64,
    alpha: &Rational,
    candidates: &[Vec<i64>],
    route: Route,
) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for w in candidates {
        if ideal_weight_membership(fam, k, alpha, w, route)? {
            out.push(w.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// Assembles a [`WeightSet`] from already filtered weights.
pub fn weight_set(fam: &SpaceFamily, k: i64, alpha: &Rational, mut weights: Vec<Vec<i64>>) -> WeightSet {
    weights.sort();
    let mut constraints = fam.constraints(Scope::StructureSheaf);
    constraints.extend(fam.inequality_constraints(k, alpha));
    WeightSet { constraints, weights, primary_decomposition: fam.primary_decomposition(k, alpha) }
}

/// `Ĩ_k(αD)` restricted to weights with coordinates in `[-bound, bound]`.
pub fn ideal_weight_set(fam: &SpaceFamily, k: i64, alpha: &Rational, bound: i64, route: Route) -> Result<WeightSet> {
    let candidates = fam.enumerate(bound, Scope::StructureSheaf);
    let weights = filter_ideal_weights(fam, k, alpha, &candidates, route)?;
    Ok(weight_set(fam, k, alpha, weights))
}

/// Filter applied by [`graded_character`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharacterMode {
    /// `ν ≤ ℓ`: the weights of `W_{q+ℓ}`.
    Weight,
    /// `ν = ℓ`: the weights of `gr^W_{q+ℓ}`.
    GrW,
    /// Weights appearing in `gr^W_ℓ gr_V^α`.
    GrWGrV,
}

/// The weight `λ - α·σ`, kept as the integer part and the `α` tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedWeight {
    pub weight: Vec<i64>,
    pub alpha: Rational,
}

/// Whether weight `w` passes the `mode` filter at `(α, ℓ)`.
pub fn character_contains(fam: &SpaceFamily, alpha: &Rational, ell: i64, w: &[i64], mode: CharacterMode) -> Result<bool> {
    let v = nu(&fam.b_of_weight(w)?, alpha) as i64;
    Ok(match mode {
        CharacterMode::Weight => v <= ell,
        CharacterMode::GrW => v == ell,
        CharacterMode::GrWGrV => grw_grv_membership(v as usize, ell),
    })
}

/// Weights of the module within the box selected by `mode`, sorted.
pub fn graded_character(
    fam: &SpaceFamily,
    alpha: &Rational,
    ell: i64,
    bound: i64,
    mode: CharacterMode,
) -> Result<Vec<TaggedWeight>> {
    let mut out = Vec::new();
    for w in fam.enumerate(bound, Scope::Module) {
        if character_contains(fam, alpha, ell, &w, mode)? {
            out.push(TaggedWeight { weight: w, alpha: alpha.clone() });
        }
    }
    out.sort();
    Ok(out)
}

/// [`GrVReport`] over the module weights in the box.
pub fn grv_report(fam: &SpaceFamily, alpha: &Rational, level: i64, bound: i64) -> Result<GrVReport> {
    let weights = fam.enumerate(bound, Scope::Module);
    let bs = weights.iter().map(|w| fam.b_of_weight(w)).collect::<Result<Vec<_>>>()?;
    Ok(GrVReport::build(alpha, level, weights.into_iter().zip(bs.iter())))
}
