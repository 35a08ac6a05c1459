use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bfun::{root_class_count, AffineBFamily, BFunction};
use crate::error::{Error, Result};
use crate::ratpoly::{expand_at, int, Matrix, Rational, RootPoly};

use super::nu;

/// Length of `(W_ℓ gr_V^α)_λ ≅ ℚ[s]/(s+α)^e`: zero when `ν ≤ -ℓ`, else
/// `min{⌊(ν+ℓ+1)/2⌋, ν}`.
pub fn grv_exponent(nu: usize, ell: i64) -> usize {
    let n = nu as i64;
    if n + ell <= 0 {
        return 0;
    }
    ((n + ell + 1).div_euclid(2)).min(n) as usize
}

/// Whether the component appears in `gr^W_ℓ gr_V^α`: `ν + ℓ` odd and `ν > |ℓ|`.
pub fn grw_grv_membership(nu: usize, ell: i64) -> bool {
    let n = nu as i64;
    (n + ell).rem_euclid(2) == 1 && n > ell.abs()
}

/// One weight's row in a [`GrVReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrVEntry {
    pub weight: Vec<i64>,
    pub nu: usize,
    pub exponent: usize,
}

/// Jordan exponents of `W_ℓ gr_V^α` across a list of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrVReport {
    pub alpha: Rational,
    pub level: i64,
    pub entries: Vec<GrVEntry>,
}

impl GrVReport {
    pub fn build<'a, I>(alpha: &Rational, level: i64, weights: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, &'a BFunction)>,
    {
        let entries = weights
            .into_iter()
            .map(|(weight, b)| {
                let n = nu(b, alpha);
                GrVEntry { weight, nu: n, exponent: grv_exponent(n, level) }
            })
            .collect();
        GrVReport { alpha: alpha.clone(), level, entries }
    }
}

/// Nilpotency order of `s + α` on `gr_V^α`: the number of `λ_i ∈ α + ℤ`,
/// confirmed constant over `samples`.
pub fn nilpotency_order(fam: &AffineBFamily, alpha: &Rational, samples: &[Vec<i64>]) -> Result<usize> {
    root_class_count(fam, alpha, samples)
}

/// Matrices of `f` and `∂f` on `W_ℓ gr_V^α` in the basis `(s+α)^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdfMatrices {
    /// `#{i : λ_i = α}`.
    pub rho: usize,
    /// Size at `λ`.
    pub nu: usize,
    /// Size at `λ + σ`.
    pub mu: usize,
    /// Coefficients of `b/(s+α)^ρ` in powers of `s + α`.
    pub c: Vec<Rational>,
    /// `[Id_ν 0]`, from the `λ - σ` component to the `λ` component.
    pub f: Matrix,
    /// `[0 C]ᵀ`, from the `λ + σ` component to the `λ` component.
    pub df: Matrix,
}

impl FdfMatrices {
    /// The `μ × (ν - ρ)` upper triangular Toeplitz block `C`.
    pub fn c_block(&self) -> Matrix {
        let cols = self.nu.saturating_sub(self.rho);
        let mut m = Matrix::zeros(self.mu, cols);
        for i in 0..self.mu {
            for j in i..cols {
                m.set(i, j, self.c.get(j - i).cloned().unwrap_or_else(Rational::zero));
            }
        }
        m
    }
}

pub fn fdf_matrices(b: &BFunction, alpha: &Rational, ell: i64) -> Result<FdfMatrices> {
    let nu_full = nu(b, alpha);
    if nu_full as i64 <= -ell {
        return Err(Error::Precondition(format!("ν = {nu_full} must exceed -ℓ = {}", -ell)));
    }
    let rho = b.mult_at(alpha);
    let size = grv_exponent(nu_full, ell);
    let mu = grv_exponent(nu_full - rho, ell);
    let below = grv_exponent(nu(&b.shift(&int(-1)), alpha), ell);

    let factor = RootPoly::from_roots([(-alpha.clone(), rho as u32)]);
    let rest = b.as_poly().checked_div(&factor).expect("(s+α)^ρ divides b");
    let c = expand_at(&rest, alpha).into_coeffs();

    let mut f = Matrix::zeros(size, below);
    for i in 0..size {
        f.set(i, i, Rational::one());
    }
    let mut out = FdfMatrices { rho, nu: size, mu, c, f, df: Matrix::zeros(size, mu) };
    let block = out.c_block();
    for i in rho..size {
        for j in 0..mu {
            out.df.set(i, j, block.get(j, i - rho).clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    fn b(ls: &[i64]) -> BFunction {
        BFunction::new(ls.iter().map(|x| int(*x)).collect())
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(grv_exponent(2, 0), 1);
        assert_eq!(grv_exponent(1, -1), 0);
        assert_eq!(grv_exponent(3, 10), 3);
        assert_eq!(grv_exponent(0, 5), 0);
    }

    #[test]
    fn membership_examples() {
        assert!(grw_grv_membership(1, 0));
        assert!(!grw_grv_membership(2, 0));
        assert!(grw_grv_membership(3, 2));
        assert!(grw_grv_membership(3, -2));
        assert_eq!((-5..=5).filter(|&l| grw_grv_membership(3, l)).count(), 3);
    }

    #[test]
    fn fdf_example_is_empty_when_mu_vanishes() {
        // ν = 1, ρ = 1, so the λ+σ side is zero and C has no rows.
        let m = fdf_matrices(&b(&[1, 2]), &int(1), 5).unwrap();
        assert_eq!((m.rho, m.nu, m.mu), (1, 1, 0));
        assert_eq!(m.c, [int(1), int(1)]);
        assert_eq!(m.c_block().rows(), 0);
        assert_eq!(m.f, Matrix::from_rows(alloc::vec![alloc::vec![int(1), int(0)]]));
    }

    #[test]
    fn fdf_toeplitz_block() {
        // b = (s+1)(s+2)^2(s+3), α = 3: ν = 4, ρ = 1.
        let m = fdf_matrices(&b(&[1, 2, 2, 3]), &int(3), 3).unwrap();
        assert_eq!((m.rho, m.nu, m.mu), (1, 4, 3));
        let c = m.c_block();
        assert_eq!((c.rows(), c.cols()), (3, 3));
        assert_eq!(c.rank(), 3);
        assert_eq!(c.get(0, 0), &m.c[0]);
        assert_eq!(c.get(0, 2), &m.c[2]);
        assert!(c.get(2, 0).is_zero());
        assert!(m.df.row(0).iter().all(Zero::is_zero));
    }

    #[test]
    fn fdf_precondition() {
        assert!(fdf_matrices(&b(&[1, 2]), &rat(1, 2), 0).is_err());
        assert!(fdf_matrices(&b(&[1, 2]), &rat(1, 2), 1).is_ok());
    }
}
