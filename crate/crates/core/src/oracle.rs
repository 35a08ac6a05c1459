//! Deliberately naive reference implementations used to cross-check the
//! closed forms elsewhere in the crate.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bfun::{transport_from_c, BFunction};
use crate::ratpoly::{gcd, int, is_integer, solve_linear, Matrix, Rational, RootPoly};

/// Number of terms after which the partial gcds of `c_{p,q}` are stable:
/// `deg p + G + 2`, where `G` is the largest integer distance between a
/// root of `p` and a root of `p` or `q`.
pub fn stabilization_bound(p: &RootPoly, q: &RootPoly) -> usize {
    let mut g = 0i64;
    for (x, _) in p.roots() {
        for (y, _) in p.roots().iter().chain(q.roots()) {
            let diff = x - y;
            if is_integer(&diff) {
                let d = crate::ratpoly::as_i64(&diff).unwrap().abs();
                g = g.max(d);
            }
        }
    }
    p.degree() as usize + g as usize + 2
}

/// `gcd_{i=0..=n} p(s+i)·∏_{j<i} q(s+j)`.
pub fn c_poly_partial(p: &RootPoly, q: &RootPoly, n: usize) -> RootPoly {
    let mut g = p.clone();
    let mut prefix = RootPoly::one();
    for i in 1..=n {
        prefix = prefix.mul(&q.shift(&int(i as i64 - 1)));
        let term = p.shift(&int(i as i64)).mul(&prefix);
        g = gcd(&g, &term);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `c_{p,q}` from partial gcds up to [`stabilization_bound`].
pub fn c_poly_bruteforce(p: &RootPoly, q: &RootPoly) -> RootPoly {
    c_poly_partial(p, q, stabilization_bound(p, q))
}

/// `b(s)·c(s+1)/c(s)` with `c` from [`c_poly_bruteforce`].
pub fn transport_bruteforce(b: &BFunction, p: &RootPoly) -> BFunction {
    let c = c_poly_bruteforce(p, &b.as_poly());
    transport_from_c(b, &c).expect("partial gcd divides b(s)c(s+1)")
}

/// Builds `p_{λ,α}` one linear factor at a time: while the transported
/// b-function has some `λ' < α`, multiply by `(s + λ')` for a `λ'`
/// selected by `pick` among the distinct offenders (sorted ascending).
pub fn p_function_greedy_with(
    b: &BFunction,
    alpha: &Rational,
    mut pick: impl FnMut(&[Rational]) -> usize,
) -> RootPoly {
    let mut p = RootPoly::one();
    loop {
        let moved = transport_bruteforce(b, &p);
        let mut offenders: Vec<Rational> = moved.lambdas().iter().filter(|l| *l < alpha).cloned().collect();
        offenders.dedup();
        if offenders.is_empty() {
            return p;
        }
        let i = pick(&offenders);
        p = p.mul(&RootPoly::linear(&offenders[i]));
    }
}

/// [`p_function_greedy_with`] taking the largest offending root each time.
pub fn p_function_greedy(b: &BFunction, alpha: &Rational) -> RootPoly {
    p_function_greedy_with(b, alpha, |_| 0)
}

/// A subspace of `ℚ^n` given by spanning rows.
#[derive(Clone, Debug)]
struct Subspace {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl Subspace {
    fn zero(n: usize) -> Self {
        Subspace { n, rows: Vec::new() }
    }

    fn dim(&self) -> usize {
        if self.rows.is_empty() {
            0
        } else {
            Matrix::from_rows(self.rows.clone()).rank()
        }
    }

    fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace { n: self.n, rows }
    }

    fn intersect(&self, other: &Subspace) -> Subspace {
        if self.rows.is_empty() || other.rows.is_empty() {
            return Subspace::zero(self.n);
        }
        // x·U = y·W  ⇔  [Uᵀ | -Wᵀ] (x, y) = 0
        let (a, b) = (self.rows.len(), other.rows.len());
        let mut m = Matrix::zeros(self.n, a + b);
        for (j, u) in self.rows.iter().enumerate() {
            for i in 0..self.n {
                m.set(i, j, u[i].clone());
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for i in 0..self.n {
                m.set(i, a + j, -w[i].clone());
            }
        }
        let sol = solve_linear(&m, &vec![Rational::zero(); self.n]).expect("homogeneous");
        let rows = sol
            .null_basis
            .iter()
            .map(|x| {
                (0..self.n)
                    .map(|i| (0..a).fold(Rational::zero(), |acc, j| acc + &x[j] * &self.rows[j][i]))
                    .collect()
            })
            .collect();
        Subspace { n: self.n, rows }
    }
}

fn mat_pow(m: &Matrix, e: usize) -> Matrix {
    let n = m.rows();
    let mut out = Matrix::identity(n);
    for _ in 0..e {
        let mut next = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = (0..n).fold(Rational::zero(), |acc, k| acc + out.get(i, k) * m.get(k, j));
                next.set(i, j, v);
            }
        }
        out = next;
    }
    out
}

fn kernel(m: &Matrix) -> Subspace {
    let sol = solve_linear(m, &vec![Rational::zero(); m.rows()]).expect("homogeneous");
    Subspace { n: m.cols(), rows: sol.null_basis }
}

fn image(m: &Matrix) -> Subspace {
    Subspace { n: m.rows(), rows: m.transpose().to_rows() }
}

/// `dim W(N)_ℓ` on `ℚ[s]/(s+α)^ν` with `N = s + α`, from the convolution
/// `W_ℓ = Σ_{i+j=ℓ} ker N^{i+1} ∩ Im N^{-j}`.
///
/// Uses `ker N^a = 0` for `a ≤ 0` and `Im N^b = V` for `b ≤ 0`. The value of
/// `α` only fixes the basis and does not affect the result.
pub fn jordan_weight_dim(nu: usize, alpha: &Rational, ell: i64) -> usize {
    let _ = alpha;
    if nu == 0 {
        return 0;
    }
    // N in the basis (s+α)^0, …, (s+α)^{ν-1} shifts e_i to e_{i+1}.
    let mut n_mat = Matrix::zeros(nu, nu);
    for i in 0..nu - 1 {
        n_mat.set(i + 1, i, Rational::one());
    }
    let full = Subspace { n: nu, rows: Matrix::identity(nu).to_rows() };
    let ker = |a: i64| if a <= 0 { Subspace::zero(nu) } else { kernel(&mat_pow(&n_mat, a as usize)) };
    let im = |b: i64| if b <= 0 { full.clone() } else { image(&mat_pow(&n_mat, b as usize)) };

    let mut w = Subspace::zero(nu);
    let reach = nu as i64 + ell.abs() + 1;
    for i in -1..=reach {
        let j = ell - i;
        w = w.sum(&ker(i + 1).intersect(&im(-j)));
    }
    w.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    fn rp(ls: &[i64]) -> RootPoly {
        let v: Vec<Rational> = ls.iter().map(|x| int(*x)).collect();
        RootPoly::from_shifts(&v)
    }

    #[test]
    fn partial_gcd_examples() {
        assert_eq!(c_poly_bruteforce(&RootPoly::one(), &rp(&[1])), RootPoly::one());
        assert_eq!(c_poly_partial(&RootPoly::one(), &rp(&[1]), 0), RootPoly::one());
        assert_eq!(c_poly_bruteforce(&rp(&[1]), &rp(&[1, 2])), rp(&[1]));
        assert_eq!(c_poly_bruteforce(&rp(&[3]), &rp(&[1])), RootPoly::one());
        assert_eq!(c_poly_partial(&rp(&[3]), &rp(&[1]), 1), RootPoly::one());
    }

    #[test]
    fn greedy_p_function() {
        let b = BFunction::new(vec![int(1), int(2)]);
        assert_eq!(p_function_greedy(&b, &int(1)), RootPoly::one());
        assert_eq!(p_function_greedy(&b, &int(2)), rp(&[1]));
        assert_eq!(p_function_greedy(&b, &int(3)), rp(&[1, 2, 2]));
        assert_eq!(p_function_greedy(&b, &rat(1, 2)), RootPoly::one());
    }

    #[test]
    fn jordan_examples() {
        for ell in -3..4 {
            assert_eq!(jordan_weight_dim(0, &int(0), ell), 0);
        }
        assert_eq!(jordan_weight_dim(1, &int(1), 0), 1);
        assert_eq!(jordan_weight_dim(1, &int(1), -1), 0);
        assert_eq!(jordan_weight_dim(2, &rat(1, 3), 0), 1);
        assert_eq!(jordan_weight_dim(2, &rat(1, 3), 1), 2);
        assert_eq!(jordan_weight_dim(3, &int(0), -2), 1);
    }
}
