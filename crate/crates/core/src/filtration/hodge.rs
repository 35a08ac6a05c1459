use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bfun::BFunction;
use crate::error::{Error, Result};
use crate::ratpoly::{int, pochhammer, solve_linear, Matrix, Rational};

use super::{p_function, r_lambda};

/// The sets `Π_k ⊂ {ℓ > r_λ}` recording which shifted components of the
/// Hodge filtration of the source module are nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PiSets {
    pub r_lambda: i64,
    pub pi: BTreeMap<i64, BTreeSet<i64>>,
}

impl PiSets {
    /// The sets for the structure sheaf: `Π_k = {r_λ+1, …, k}` for each `k`
    /// in `ks`.
    pub fn structure_sheaf(r_lambda: i64, ks: impl IntoIterator<Item = i64>) -> Self {
        let pi = ks.into_iter().map(|k| (k, (r_lambda + 1..=k).collect())).collect();
        PiSets { r_lambda, pi }
    }

    pub fn get(&self, k: i64) -> Option<&BTreeSet<i64>> {
        self.pi.get(&k)
    }

    /// Checks the structural properties of the sets against each other,
    /// wherever both keys involved are present:
    ///
    /// - every element exceeds `r_λ`;
    /// - `Π_k ⊆ Π_{k+1}` and `Π_k + 1 ⊆ Π_{k+1}`;
    /// - `Π_k - 1 ⊆ Π_{k+d-1} ∪ {r_λ}`.
    pub fn validate(&self, d: usize) -> Result<()> {
        let bad = |m: alloc::string::String| Err(Error::Precondition(m));
        for (k, set) in &self.pi {
            if let Some(x) = set.iter().find(|&&x| x <= self.r_lambda) {
                return bad(format!("Π_{k} contains {x} ≤ r_λ = {}", self.r_lambda));
            }
            if let Some(next) = self.pi.get(&(k + 1)) {
                if let Some(x) = set.iter().find(|x| !next.contains(x)) {
                    return bad(format!("{x} ∈ Π_{k} but not in Π_{}", k + 1));
                }
                if let Some(x) = set.iter().find(|&&x| !next.contains(&(x + 1))) {
                    return bad(format!("{x} ∈ Π_{k} but {} ∉ Π_{}", x + 1, k + 1));
                }
            }
            let far = k + d as i64 - 1;
            if let Some(target) = self.pi.get(&far) {
                let miss = set.iter().find(|&&x| x - 1 != self.r_lambda && !target.contains(&(x - 1)));
                if let Some(x) = miss {
                    return bad(format!("{x} ∈ Π_{k} but {} ∉ Π_{far} ∪ {{r_λ}}", x - 1));
                }
            }
        }
        Ok(())
    }
}

fn lookup<'a>(b: &BFunction, alpha: &Rational, pi: &'a PiSets, k: i64) -> Result<&'a BTreeSet<i64>> {
    if *alpha <= int(0) {
        return Err(Error::Precondition(format!("α = {alpha} must be positive")));
    }
    let r = r_lambda(b);
    if pi.r_lambda != r {
        return Err(Error::Precondition(format!("Π sets are for r_λ = {}, b gives {r}", pi.r_lambda)));
    }
    pi.get(k).ok_or_else(|| Error::Precondition(format!("Π_{k} not supplied")))
}

/// The two cases decided without linear algebra: `max Π_k < deg p` gives
/// `false`, and `{r_λ+1, …, deg p} ⊆ Π_k` gives `true`.
pub fn fs_hodge_shortcut(b: &BFunction, alpha: &Rational, pi: &PiSets, k: i64) -> Result<Option<bool>> {
    let set = lookup(b, alpha, pi, k)?;
    let deg = p_function(b, alpha).poly.degree() as i64;
    if set.last().is_none_or(|&top| top < deg) {
        return Ok(Some(false));
    }
    if (pi.r_lambda + 1..=deg).all(|l| set.contains(&l)) {
        return Ok(Some(true));
    }
    Ok(None)
}

/// Whether some `h` with `h(-α) ≠ 0` puts `h·p_{λ,α}` into the span of
/// `[s-ℓ+1]_ℓ` for `ℓ ∈ Π_k`, decided by solving for `h` and the span
/// coefficients together.
pub fn fs_hodge_test_linear(b: &BFunction, alpha: &Rational, pi: &PiSets, k: i64) -> Result<bool> {
    let set = lookup(b, alpha, pi, k)?;
    let p = p_function(b, alpha).poly.to_dense();
    let deg = p.degree().unwrap_or(0) as i64;
    let Some(&top) = set.last() else {
        return Ok(false);
    };
    if top < deg {
        return Ok(false);
    }
    let hdim = (top - deg + 1) as usize;
    let spans: Vec<_> = set.iter().map(|&l| pochhammer(&int(1 - l), l).to_dense()).collect();

    // Unknowns: h_0..h_{hdim-1}, then one coefficient per span element.
    let rows = top as usize + 1;
    let mut m = Matrix::zeros(rows, hdim + spans.len());
    for i in 0..hdim {
        for (j, pc) in p.coeffs().iter().enumerate() {
            m.set(i + j, i, pc.clone());
        }
    }
    for (col, q) in spans.iter().enumerate() {
        for (e, qc) in q.coeffs().iter().enumerate() {
            m.set(e, hdim + col, -qc.clone());
        }
    }
    let sol = solve_linear(&m, &alloc::vec![Rational::zero(); rows])?;
    let x = -alpha.clone();
    let powers: Vec<Rational> = core::iter::successors(Some(Rational::one()), |acc| Some(acc * &x))
        .take(hdim)
        .collect();
    Ok(sol
        .null_basis
        .iter()
        .any(|v| !v[..hdim].iter().zip(&powers).fold(Rational::zero(), |acc, (h, pw)| acc + h * pw).is_zero()))
}

/// [`fs_hodge_test_linear`], answering from [`fs_hodge_shortcut`] when a
/// shortcut applies and confirming that both routes agree.
pub fn fs_hodge_test(b: &BFunction, alpha: &Rational, pi: &PiSets, k: i64) -> Result<bool> {
    let linear = fs_hodge_test_linear(b, alpha, pi, k)?;
    match fs_hodge_shortcut(b, alpha, pi, k)? {
        Some(s) if s != linear => {
            Err(Error::Mismatch(format!("Π_k test for {b} at {alpha}: shortcut {s}, linear solve {linear}")))
        }
        _ => Ok(linear),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::hodge_level;
    use crate::ratpoly::rat;

    fn b(ls: &[i64]) -> BFunction {
        BFunction::new(ls.iter().map(|x| int(*x)).collect())
    }

    #[test]
    fn structure_sheaf_matches_degree() {
        for lams in [[1, 2], [-1, 2], [-3, 0], [2, 2]] {
            let bf = b(&lams);
            let pi = PiSets::structure_sheaf(r_lambda(&bf), 0..8);
            pi.validate(2).unwrap();
            for alpha in [rat(1, 2), int(1), rat(7, 3), int(3)] {
                for k in 0..8 {
                    let want = hodge_level(&bf, &alpha) as i64 <= k;
                    assert_eq!(fs_hodge_test(&bf, &alpha, &pi, k), Ok(want), "{bf} {alpha} {k}");
                }
            }
        }
    }

    #[test]
    fn shortcuts() {
        let bf = b(&[1, 2]);
        let pi = PiSets::structure_sheaf(-1, 0..5);
        assert_eq!(fs_hodge_shortcut(&bf, &int(3), &pi, 2), Ok(Some(false)));
        assert_eq!(fs_hodge_shortcut(&bf, &int(3), &pi, 4), Ok(Some(true)));
    }

    #[test]
    fn rejects_bad_input() {
        let bf = b(&[1, 2]);
        let pi = PiSets::structure_sheaf(-1, 0..3);
        assert!(fs_hodge_test(&bf, &int(0), &pi, 1).is_err());
        assert!(fs_hodge_test(&bf, &int(1), &pi, 9).is_err());
        let wrong = PiSets::structure_sheaf(0, 0..3);
        assert!(fs_hodge_test(&bf, &int(1), &wrong, 1).is_err());
    }

    #[test]
    fn validation() {
        let mut pi = PiSets::structure_sheaf(-1, 0..4);
        pi.validate(2).unwrap();
        pi.pi.get_mut(&2).unwrap().remove(&1);
        assert!(pi.validate(2).is_err());
        let low = PiSets { r_lambda: 2, pi: [(0, [2].into_iter().collect())].into_iter().collect() };
        assert!(low.validate(1).is_err());
    }
}
