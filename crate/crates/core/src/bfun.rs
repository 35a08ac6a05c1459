//! b-functions as root data, the `c_{p,q}` gcd, and transport of
//! b-functions along `m ↦ p(s)·m`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{int, is_integer, pochhammer, Rational, RootPoly};

/// `b(s) = ∏ (s + λ_i)`, stored as the sorted multiset of the `λ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BFunction {
    lambdas: Vec<Rational>,
}

impl BFunction {
    pub fn new(mut lambdas: Vec<Rational>) -> Self {
        lambdas.sort();
        BFunction { lambdas }
    }

    /// Reads the `λ_i` off a monic polynomial: root `r` gives `λ = -r`.
    pub fn from_poly(p: &RootPoly) -> Self {
        Self::new(p.roots_flat().into_iter().map(|r| -r).collect())
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn degree(&self) -> usize {
        self.lambdas.len()
    }

    pub fn as_poly(&self) -> RootPoly {
        RootPoly::from_shifts(&self.lambdas)
    }

    /// `b(s + a)`, i.e. every `λ_i` raised by `a`.
    pub fn shift(&self, a: &Rational) -> BFunction {
        BFunction { lambdas: self.lambdas.iter().map(|l| l + a).collect() }
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.as_poly().eval(s)
    }

    /// Multiplicity of the root `s = -alpha`, i.e. `#{i : λ_i = α}`.
    pub fn mult_at(&self, alpha: &Rational) -> usize {
        self.lambdas.iter().filter(|l| *l == alpha).count()
    }

    /// `#{i : λ_i ∈ α + ℤ}`.
    pub fn root_class_count(&self, alpha: &Rational) -> usize {
        self.lambdas.iter().filter(|l| is_integer(&(*l - alpha))).count()
    }
}

impl fmt::Display for BFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_poly().fmt(f)
    }
}

/// Largest `k ≥ 0` with `[s + a]_k | p`.
fn pochhammer_depth(p: &RootPoly, a: &Rational) -> i64 {
    let mut k = 0i64;
    while p.multiplicity(&-(a + int(k))) > 0 {
        k += 1;
    }
    k
}

/// `c_{p,q}(s)`, the gcd over `i ≥ 0` of `p(s+i)·q(s)q(s+1)⋯q(s+i-1)`.
///
/// Repeatedly peels the factor `s + r` of `q` whose run `[s + r]_k` inside
/// `p` reaches furthest (maximal `r + k`), then recurses on the cofactors.
pub fn c_poly(p: &RootPoly, q: &RootPoly) -> RootPoly {
    let mut p = p.clone();
    let mut q = q.clone();
    let mut c = RootPoly::one();
    while !q.is_one() && !p.is_one() {
        let (r, k) = q
            .roots()
            .iter()
            .map(|(root, _)| {
                let r = -root.clone();
                let k = pochhammer_depth(&p, &r);
                (r, k)
            })
            .max_by(|(r1, k1), (r2, k2)| (r1 + int(*k1)).cmp(&(r2 + int(*k2))))
            .expect("q is not constant");
        let run = pochhammer(&r, k);
        p = p.checked_div(&run).expect("run divides p by construction");
        q = q.checked_div(&RootPoly::linear(&r)).expect("s + r divides q");
        c = c.mul(&run);
    }
    c
}

/// Exponents `k_i ≥ 0`, aligned with `b.lambdas()`, chosen greedily so that
/// `∏ [s + λ_i]_{k_i}` divides `p`.
///
/// The `λ_i` are visited from largest to smallest; each takes the longest
/// run still available in what is left of `p`.
pub fn transport_exponents(b: &BFunction, p: &RootPoly) -> Vec<i64> {
    let mut rest = p.clone();
    let mut ks = alloc::vec![0i64; b.degree()];
    for (i, lam) in b.lambdas.iter().enumerate().rev() {
        let k = pochhammer_depth(&rest, lam);
        rest = rest.checked_div(&pochhammer(lam, k)).expect("run divides the cofactor");
        ks[i] = k;
    }
    ks
}

/// The b-function of `p(s)·m` given the b-function `b` of `m`:
/// `∏ (s + λ_i + k_i)` with the greedy exponents of [`transport_exponents`].
pub fn transport(b: &BFunction, p: &RootPoly) -> BFunction {
    let ks = transport_exponents(b, p);
    BFunction::new(b.lambdas.iter().zip(ks).map(|(l, k)| l + int(k)).collect())
}

/// `b(s)·c(s+1)/c(s)` for a given `c = c_{p,b}`.
pub fn transport_from_c(b: &BFunction, c: &RootPoly) -> Result<BFunction> {
    let num = b.as_poly().mul(&c.shift(&int(1)));
    let q = num
        .checked_div(c)
        .ok_or_else(|| Error::Mismatch(format!("c = {c} does not divide b(s)c(s+1)")))?;
    Ok(BFunction::from_poly(&q))
}

/// [`transport`] computed through `b(s)·c_{p,b}(s+1)/c_{p,b}(s)`.
pub fn transport_by_gcd(b: &BFunction, p: &RootPoly) -> BFunction {
    transport_from_c(b, &c_poly(p, &b.as_poly())).expect("c_{p,b} divides b(s)c(s+1)")
}

/// Affine family `λ_i(a) = r_i + Σ_j c_ij a_j` over semigroup coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineBFamily {
    pub name: String,
    /// Dimension of the ambient space.
    pub dim: u32,
    /// Degree of the semi-invariant.
    pub d: usize,
    /// Degree of each semigroup generator.
    pub degrees: Vec<u32>,
    /// Index (0-based) of the generator equal to the semi-invariant itself.
    pub sigma_index: usize,
    pub r: Vec<Rational>,
    /// `d × k` coefficient matrix.
    pub c: Vec<Vec<Rational>>,
}

impl AffineBFamily {
    pub fn generators(&self) -> usize {
        self.degrees.len()
    }

    /// Checks the shapes, the coefficient bounds `0 ≤ c_ij ≤ deg h_j` and
    /// that the `σ` column is all ones.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFamily(m));
        let k = self.generators();
        if k == 0 {
            return bad("no generators".into());
        }
        if self.r.len() != self.d {
            return bad(format!("r has {} entries, expected d = {}", self.r.len(), self.d));
        }
        if self.c.len() != self.d {
            return bad(format!("c has {} rows, expected d = {}", self.c.len(), self.d));
        }
        if self.sigma_index >= k {
            return bad(format!("sigma index {} out of range", self.sigma_index));
        }
        for (i, row) in self.c.iter().enumerate() {
            if row.len() != k {
                return bad(format!("row {i} of c has {} entries, expected {k}", row.len()));
            }
            for (j, cij) in row.iter().enumerate() {
                if cij.is_negative() || *cij > int(self.degrees[j].into()) {
                    return bad(format!("c[{i}][{j}] = {cij} outside [0, {}]", self.degrees[j]));
                }
            }
            if row[self.sigma_index] != int(1) {
                return bad(format!("c[{i}][sigma] must be 1 for the shift law"));
            }
        }
        Ok(())
    }

    pub fn check_coords(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.generators() {
            return Err(Error::InvalidWeight(format!(
                "expected {} coordinates, got {}",
                self.generators(),
                a.len()
            )));
        }
        if let Some(j) = (0..a.len()).find(|&j| j != self.sigma_index && a[j] < 0) {
            return Err(Error::InvalidWeight(format!("coordinate {} is negative", j + 1)));
        }
        Ok(())
    }
}

/// `b_a(s) = ∏ (s + r_i + Σ_j c_ij a_j)`.
pub fn eval_family(fam: &AffineBFamily, a: &[i64]) -> Result<BFunction> {
    fam.check_coords(a)?;
    Ok(eval_unchecked(fam, a))
}

fn eval_unchecked(fam: &AffineBFamily, a: &[i64]) -> BFunction {
    let lambdas = fam
        .r
        .iter()
        .zip(&fam.c)
        .map(|(r, row)| row.iter().zip(a).fold(r.clone(), |acc, (c, x)| acc + c * int(*x)))
        .collect();
    BFunction::new(lambdas)
}

/// Outcome of [`check_symmetry`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub checked: usize,
    /// First coordinate vector where the identity fails.
    pub counterexample: Option<Vec<i64>>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `b_λ(s) = (-1)^d b_{λ*}(-s - n/d - 1)` on the given samples.
///
/// In root form this says `{λ_i} = {n/d + 1 - μ_i}` where the `μ_i` belong
/// to the dual weight.
pub fn check_symmetry(
    fam: &AffineBFamily,
    n: u32,
    dual: impl Fn(&[i64]) -> Vec<i64>,
    samples: &[Vec<i64>],
) -> SymmetryReport {
    let shift = Rational::new(n.into(), (fam.d as i64).into()) + int(1);
    for (i, a) in samples.iter().enumerate() {
        let lhs = eval_unchecked(fam, a);
        let mu = eval_unchecked(fam, &dual(a));
        let rhs = BFunction::new(mu.lambdas.iter().map(|m| &shift - m).collect());
        if lhs != rhs {
            return SymmetryReport { checked: i, counterexample: Some(a.clone()) };
        }
    }
    SymmetryReport { checked: samples.len(), counterexample: None }
}

/// `#{i : λ_i(a) ∈ α + ℤ}` for each sample; `Err` when the counts differ.
pub fn root_class_count(fam: &AffineBFamily, alpha: &Rational, samples: &[Vec<i64>]) -> Result<usize> {
    let base = eval_unchecked(fam, &alloc::vec![0; fam.generators()]).root_class_count(alpha);
    for a in samples {
        let c = eval_unchecked(fam, a).root_class_count(alpha);
        if c != base {
            return Err(Error::InvalidFamily(format!(
                "root count in class {alpha} + Z is {c} at {a:?} but {base} at 0"
            )));
        }
    }
    Ok(base)
}

/// Ones-valued helper used by the built-in families: `c_ij = [j ≥ i]`.
pub(crate) fn upper_ones(d: usize, k: usize) -> Vec<Vec<Rational>> {
    (0..d)
        .map(|i| (0..k).map(|j| if j >= i { int(1) } else { Rational::zero() }).collect())
        .collect()
}
