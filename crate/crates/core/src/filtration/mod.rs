//! V-filtration, weight and Hodge data of a single isotypic component,
//! read off from the b-function roots.

mod grv;
mod hodge;

pub use grv::{
    fdf_matrices, grv_exponent, grw_grv_membership, nilpotency_order, FdfMatrices, GrVEntry, GrVReport,
};
pub use hodge::{fs_hodge_shortcut, fs_hodge_test, fs_hodge_test_linear, PiSets};

use alloc::format;
use alloc::vec::Vec;

use crate::bfun::{transport, BFunction};
use crate::error::{Error, Result};
use crate::ratpoly::{as_i64, ceil_i64, int, is_integer, lcm, pochhammer, DensePoly, Rational, RootPoly};

/// `p_{λ,α}` together with the data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFunction {
    pub poly: RootPoly,
    pub b: BFunction,
    pub alpha: Rational,
}

/// `p_{λ,α}(s) = ∏ [s + λ_i]_{⌈α - λ_i⌉}`.
pub fn p_function(b: &BFunction, alpha: &Rational) -> PFunction {
    let poly = b
        .lambdas()
        .iter()
        .fold(RootPoly::one(), |acc, l| acc.mul(&pochhammer(l, ceil_i64(&(alpha - l)))));
    PFunction { poly, b: b.clone(), alpha: alpha.clone() }
}

/// `ν_{λ,α} = #{i : α - λ_i ∈ ℤ_{≥0}}`.
pub fn nu(b: &BFunction, alpha: &Rational) -> usize {
    b.lambdas()
        .iter()
        .filter(|l| {
            let d = alpha - *l;
            is_integer(&d) && d >= int(0)
        })
        .count()
}

/// `ν_{λ,α}` as the multiplicity of `s = -α` in the b-function of
/// `p_{λ,α}(s)·m`.
pub fn nu_by_transport(b: &BFunction, alpha: &Rational) -> usize {
    transport(b, &p_function(b, alpha).poly).mult_at(alpha)
}

/// Smallest `ℓ` such that `m·f^{-α}` lies in `W_{q+ℓ}`; equal to `ν_{λ,α}`.
pub fn weight_level(b: &BFunction, alpha: &Rational) -> usize {
    nu(b, alpha)
}

/// Smallest `k` with `m·f^{-α} ∈ F_k`, namely `deg p_{λ,α}`.
pub fn hodge_level(b: &BFunction, alpha: &Rational) -> usize {
    p_function(b, alpha).poly.degree() as usize
}

/// The values `β < α` where `ν_{λ,β}` can be nonzero: `{λ_i + j : j ≥ 0}`.
pub fn jump_values_below(b: &BFunction, alpha: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    for l in b.lambdas() {
        let mut beta = l.clone();
        while &beta < alpha {
            out.push(beta.clone());
            beta += int(1);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `Σ_{β<α} ν_{λ,β}` over the jump values.
pub fn hodge_level_by_jumps(b: &BFunction, alpha: &Rational) -> usize {
    jump_values_below(b, alpha).iter().map(|beta| nu(b, beta)).sum()
}

/// [`hodge_level`] after confirming it against [`hodge_level_by_jumps`].
pub fn hodge_level_checked(b: &BFunction, alpha: &Rational) -> Result<usize> {
    let (a, j) = (hodge_level(b, alpha), hodge_level_by_jumps(b, alpha));
    if a != j {
        return Err(Error::Mismatch(format!("Hodge level of {b} at {alpha}: degree {a}, jump sum {j}")));
    }
    Ok(a)
}

/// Largest integer root of `(s+1)·b(s)`.
pub fn r_lambda(b: &BFunction) -> i64 {
    b.lambdas().iter().filter_map(|l| as_i64(&-l)).fold(-1, i64::max)
}

/// Generator `lcm{[s - r_λ]_{r_λ+1}, p_{λ,α}}` of `(V^α ι₊S)_λ`.
pub fn v_ideal_structure(b: &BFunction, alpha: &Rational) -> RootPoly {
    let r = r_lambda(b);
    lcm(&pochhammer(&int(-r), r + 1), &p_function(b, alpha).poly)
}

/// `ℓ_k`: the least `ℓ ∈ [0, k]` with `deg p_{λ,-ℓ} ≤ k - ℓ`.
pub fn ell_k(b: &BFunction, k: i64) -> Option<i64> {
    (0..=k).find(|&l| (p_function(b, &int(-l)).poly.degree() as i64) <= k - l)
}

/// A basis of the `λ`-component of `V^α ∩ F_{k+1}` on `ι₊(O_X)_f`, as the
/// degree `≤ k` part of a principal ideal of `ℚ[s]`.
pub fn v_cap_f_basis(b: &BFunction, alpha: &Rational, k: i64) -> Vec<DensePoly> {
    let p = p_function(b, alpha).poly;
    let generator = if *alpha > int(0) {
        p
    } else {
        match ell_k(b, k) {
            Some(l) => lcm(&pochhammer(&int(1 - l), l), &p),
            None => return Vec::new(),
        }
    };
    let g = generator.to_dense();
    let top = k - generator.degree() as i64;
    (0..=top).map(|j| g.mul(&DensePoly::monomial(j as usize))).collect()
}

/// Image of `t`: `p_{λ+σ,α+1}(s) = p_{λ,α}(s+1)`.
pub fn t_action(p: &PFunction) -> PFunction {
    let one = int(1);
    PFunction { poly: p.poly.shift(&one), b: p.b.shift(&one), alpha: &p.alpha + &one }
}

/// Image of `∂_t`: `s · p_{λ-σ,α-1}(s)`. The flag records that the factor
/// `s` sits outside the returned p-function; it is always set.
pub fn dt_action(p: &PFunction) -> (bool, PFunction) {
    let m = int(-1);
    (true, PFunction { poly: p.poly.shift(&m), b: p.b.shift(&m), alpha: &p.alpha + &m })
}

/// `None` when `b(-α) ≠ 0`; otherwise the weight offset `ν_{λ,α}` of the
/// simple quotient of `D·m f^{-α}`.
pub fn composition_factor_test(b: &BFunction, alpha: &Rational) -> Option<usize> {
    (b.mult_at(alpha) > 0).then(|| nu(b, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;
    use alloc::vec;

    fn b(ls: &[i64]) -> BFunction {
        BFunction::new(ls.iter().map(|x| int(*x)).collect())
    }

    fn rp(ls: &[i64]) -> RootPoly {
        b(ls).as_poly()
    }

    #[test]
    fn p_function_examples() {
        let det = b(&[1, 2]);
        assert_eq!(p_function(&det, &rat(1, 2)).poly, RootPoly::one());
        assert_eq!(p_function(&det, &int(2)).poly, rp(&[1]));
        assert_eq!(p_function(&det, &int(3)).poly, rp(&[1, 2, 2]));
    }

    #[test]
    fn nu_examples() {
        let det = b(&[1, 2]);
        assert_eq!(nu(&det, &int(1)), 1);
        assert_eq!(nu(&det, &rat(1, 2)), 0);
        assert_eq!(nu(&det, &int(2)), 2);
        assert_eq!(nu_by_transport(&det, &int(2)), 2);
        assert_eq!(weight_level(&b(&[1, 1, 1]), &int(1)), 3);
    }

    #[test]
    fn hodge_examples() {
        let det = b(&[1, 2]);
        assert_eq!(hodge_level_checked(&det, &int(1)), Ok(0));
        assert_eq!(hodge_level_checked(&det, &int(3)), Ok(3));
        assert_eq!(hodge_level_checked(&det, &rat(-7, 3)), Ok(0));
        assert_eq!(hodge_level_checked(&b(&[-2, 4]), &rat(9, 2)), Ok(7 + 1));
    }

    #[test]
    fn v_ideal_examples() {
        let det = b(&[1, 2]);
        assert_eq!(r_lambda(&det), -1);
        assert_eq!(v_ideal_structure(&det, &int(3)), rp(&[1, 2, 2]));
        let other = b(&[-1, 2]);
        assert_eq!(r_lambda(&other), 1);
        assert_eq!(v_ideal_structure(&other, &rat(1, 2)), rp(&[-1, 0]));
    }

    #[test]
    fn v_cap_f_examples() {
        let det = b(&[1, 2]);
        let one = RootPoly::one().to_dense();
        assert_eq!(v_cap_f_basis(&det, &int(0), 1), vec![one.clone(), DensePoly::monomial(1)]);
        let p = rp(&[1]).to_dense();
        assert_eq!(v_cap_f_basis(&det, &int(2), 2), vec![p.clone(), p.mul(&DensePoly::monomial(1))]);
        assert!(v_cap_f_basis(&det, &int(3), 2).is_empty());
    }

    #[test]
    fn t_and_dt() {
        let det = b(&[1, 2]);
        let p = p_function(&det, &int(2));
        let t = t_action(&p);
        assert_eq!(t.poly, rp(&[2]));
        assert_eq!(t, p_function(&det.shift(&int(1)), &int(3)));
        let (flag, back) = dt_action(&t);
        assert!(flag);
        assert_eq!(back, p);
    }

    #[test]
    fn composition_factors() {
        let det = b(&[1, 2]);
        assert_eq!(composition_factor_test(&det, &rat(1, 2)), None);
        assert_eq!(composition_factor_test(&det, &int(1)), Some(1));
        assert_eq!(composition_factor_test(&det, &int(2)), Some(2));
    }
}
