use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{divisors, Rational};
use super::root_poly::RootPoly;
use crate::error::{Error, Result};

/// Polynomial over ℚ in coefficient form, lowest degree first.
///
/// The leading coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `s^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        DensePoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `s^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> DensePoly {
        DensePoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &DensePoly) -> (DensePoly, DensePoly) {
        let dl = divisor.leading().expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (DensePoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / dl;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (DensePoly::new(quot), DensePoly::new(rem))
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> DensePoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => DensePoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &DensePoly) -> DensePoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `q(t) = p(t + a)` in coefficient form.
    pub fn taylor_shift(&self, a: &Rational) -> DensePoly {
        let lin = DensePoly::new(vec![a.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(DensePoly::zero(), |acc, c| acc.mul(&lin).add(&DensePoly::constant(c.clone())))
    }

    /// Factors into a leading coefficient and rational linear factors.
    ///
    /// Fails with [`Error::NotSplit`] when an irreducible factor of degree
    /// at least two remains. The zero polynomial does not split.
    pub fn split(&self) -> Result<(Rational, RootPoly)> {
        let lead = self.leading().ok_or(Error::NotSplit)?.clone();
        let mut work = self.monic();
        let mut roots: Vec<(Rational, u32)> = Vec::new();

        let zeros = work.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push((Rational::zero(), zeros as u32));
            work = DensePoly::new(work.coeffs[zeros..].to_vec());
        }
        if work.coeffs.len() > 1 {
            let ints = integer_coefficients(&work);
            let (c0, cn) = (&ints[0], ints.last().unwrap());
            let nums = divisors(c0);
            let dens = divisors(cn);
            for q in &dens {
                for p in &nums {
                    for sign in [1, -1] {
                        let cand = Rational::new(p * BigInt::from(sign), q.clone());
                        let mut m = 0u32;
                        while work.coeffs.len() > 1 && work.eval(&cand).is_zero() {
                            let lin = DensePoly::new(vec![-cand.clone(), Rational::one()]);
                            work = work.div_rem(&lin).0;
                            m += 1;
                        }
                        if m > 0 {
                            roots.push((cand, m));
                        }
                    }
                }
            }
        }
        if work.coeffs.len() > 1 {
            return Err(Error::NotSplit);
        }
        Ok((lead, RootPoly::from_roots(roots)))
    }
}

/// Primitive integer multiple of `p`.
fn integer_coefficients(p: &DensePoly) -> Vec<BigInt> {
    let l = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("s")?,
                _ => write!(f, "s^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};
    use alloc::string::ToString;

    fn dp(c: &[i64]) -> DensePoly {
        DensePoly::new(c.iter().map(|x| int(*x)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(dp(&[1, 0, 0]).degree(), Some(0));
        assert!(dp(&[0, 0]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = dp(&[5, -3, 0, 2, 1]);
        let b = dp(&[1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_of_products() {
        // (s+1)(s+2) and (s+2)(s-3)
        let g = dp(&[2, 3, 1]).gcd(&dp(&[-6, -1, 1]));
        assert_eq!(g, dp(&[2, 1]));
    }

    #[test]
    fn split_round_trip() {
        let p = RootPoly::from_shifts(&[rat(1, 2), int(-3), int(-3), int(0)]);
        let (lead, q) = p.to_dense().split().unwrap();
        assert_eq!(lead, int(1));
        assert_eq!(q, p);
        let (lead, q) = p.to_dense().scale(&rat(-2, 3)).split().unwrap();
        assert_eq!(lead, rat(-2, 3));
        assert_eq!(q, p);
    }

    #[test]
    fn split_rejects_irreducible() {
        assert_eq!(dp(&[1, 0, 1]).split(), Err(Error::NotSplit));
        assert_eq!(dp(&[-2, 0, 1]).mul(&dp(&[1, 1])).split(), Err(Error::NotSplit));
        assert_eq!(DensePoly::zero().split(), Err(Error::NotSplit));
    }

    #[test]
    fn taylor_shift_identity() {
        let p = dp(&[3, -1, 4, 1]);
        let q = p.taylor_shift(&rat(2, 5));
        for x in -3..4 {
            let x = int(x);
            assert_eq!(q.eval(&x), p.eval(&(&x + rat(2, 5))));
        }
    }

    #[test]
    fn display() {
        assert_eq!(dp(&[-1, 0, 1]).to_string(), "s^2 - 1");
        assert_eq!(dp(&[0, 2]).to_string(), "2*s");
        assert_eq!(DensePoly::zero().to_string(), "0");
    }
}
