use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::dense::DensePoly;
use super::rational::Rational;

/// Monic polynomial in `s` stored as the multiset of its rational roots.
///
/// The polynomial is `∏ (s - root)^multiplicity`. Roots are kept in
/// ascending order with positive multiplicities, so two values compare equal
/// exactly when the polynomials are equal. The empty multiset is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RootPoly {
    roots: Vec<(Rational, u32)>,
}

impl RootPoly {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a polynomial from `(root, multiplicity)` pairs in any order.
    pub fn from_roots<I>(roots: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u32)>,
    {
        let mut v: Vec<(Rational, u32)> = roots.into_iter().filter(|(_, m)| *m > 0).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Rational, u32)> = Vec::with_capacity(v.len());
        for (r, m) in v {
            match out.last_mut() {
                Some((last, lm)) if *last == r => *lm += m,
                _ => out.push((r, m)),
            }
        }
        RootPoly { roots: out }
    }

    /// The linear factor `s + a`.
    pub fn linear(a: &Rational) -> Self {
        RootPoly { roots: alloc::vec![(-a.clone(), 1)] }
    }

    /// `∏ (s + a_i)` for the given shifts `a_i`.
    pub fn from_shifts<'a, I>(shifts: I) -> Self
    where
        I: IntoIterator<Item = &'a Rational>,
    {
        Self::from_roots(shifts.into_iter().map(|a| (-a.clone(), 1)))
    }

    pub fn roots(&self) -> &[(Rational, u32)] {
        &self.roots
    }

    /// Roots listed with repetition, ascending.
    pub fn roots_flat(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .flat_map(|(r, m)| core::iter::repeat_n(r.clone(), *m as usize))
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn multiplicity(&self, root: &Rational) -> u32 {
        match self.roots.binary_search_by(|(r, _)| r.cmp(root)) {
            Ok(i) => self.roots[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &RootPoly) -> RootPoly {
        Self::from_roots(self.roots.iter().chain(other.roots.iter()).cloned())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &RootPoly) -> Option<RootPoly> {
        if other.roots.iter().any(|(r, m)| self.multiplicity(r) < *m) {
            return None;
        }
        let roots = self
            .roots
            .iter()
            .filter_map(|(r, m)| {
                let left = m - other.multiplicity(r);
                (left > 0).then(|| (r.clone(), left))
            })
            .collect();
        Some(RootPoly { roots })
    }

    pub fn divides(&self, other: &RootPoly) -> bool {
        other.checked_div(self).is_some()
    }

    /// `p(s + a)`: the factor `(s + c)` becomes `(s + c + a)`.
    pub fn shift(&self, a: &Rational) -> RootPoly {
        RootPoly { roots: self.roots.iter().map(|(r, m)| (r - a, *m)).collect() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::one();
        for (r, m) in &self.roots {
            let f = x - r;
            for _ in 0..*m {
                acc *= &f;
            }
        }
        acc
    }

    /// Expands the product into coefficient form.
    pub fn to_dense(&self) -> DensePoly {
        let mut coeffs = alloc::vec![Rational::one()];
        for r in self.roots_flat() {
            // multiply by (s - r)
            let mut next = alloc::vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &r;
            }
            coeffs = next;
        }
        DensePoly::new(coeffs)
    }

    /// The largest integer root, if any.
    pub fn max_integer_root(&self) -> Option<Rational> {
        self.roots.iter().rev().find(|(r, _)| r.denom().is_one()).map(|(r, _)| r.clone())
    }
}

/// `[s + a]_k = (s + a)(s + a + 1)⋯(s + a + k - 1)`, and `1` when `k ≤ 0`.
pub fn pochhammer(a: &Rational, k: i64) -> RootPoly {
    if k <= 0 {
        return RootPoly::one();
    }
    RootPoly::from_roots((0..k).map(|i| (-(a + Rational::from_integer(i.into())), 1)))
}

/// Multiset intersection of roots.
pub fn gcd(p: &RootPoly, q: &RootPoly) -> RootPoly {
    merge(p, q, |a, b| a.min(b))
}

/// Multiset union of roots with maximal multiplicities.
pub fn lcm(p: &RootPoly, q: &RootPoly) -> RootPoly {
    merge(p, q, |a, b| a.max(b))
}

fn merge(p: &RootPoly, q: &RootPoly, pick: impl Fn(u32, u32) -> u32) -> RootPoly {
    let (a, b) = (&p.roots, &q.roots);
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => core::cmp::Ordering::Less,
            _ => core::cmp::Ordering::Greater,
        };
        let (r, m) = match ord {
            core::cmp::Ordering::Less => {
                i += 1;
                (a[i - 1].0.clone(), pick(a[i - 1].1, 0))
            }
            core::cmp::Ordering::Greater => {
                j += 1;
                (b[j - 1].0.clone(), pick(0, b[j - 1].1))
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
                (a[i - 1].0.clone(), pick(a[i - 1].1, b[j - 1].1))
            }
        };
        if m > 0 {
            out.push((r, m));
        }
    }
    RootPoly { roots: out }
}

/// Coefficients `c_i` with `p(s) = Σ c_i (s + α)^i`.
pub fn expand_at(p: &RootPoly, alpha: &Rational) -> DensePoly {
    p.to_dense().taylor_shift(&-alpha.clone())
}

impl fmt::Display for RootPoly {
    /// Renders factors as `(s+1)(s+2)^2`, largest root first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return f.write_str("1");
        }
        for (r, m) in self.roots.iter().rev() {
            if r.is_zero() {
                f.write_str("s")?;
            } else if r.is_negative() {
                write!(f, "(s+{})", -r)?;
            } else {
                write!(f, "(s-{r})")?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
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

    fn shifts(a: &[i64]) -> RootPoly {
        let v: Vec<Rational> = a.iter().map(|x| int(*x)).collect();
        RootPoly::from_shifts(&v)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(1), 3), shifts(&[1, 2, 3]));
        assert_eq!(pochhammer(&rat(5, 2), 0), RootPoly::one());
        assert_eq!(pochhammer(&int(-1), 2), shifts(&[-1, 0]));
        assert_eq!(pochhammer(&int(4), -3), RootPoly::one());
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(gcd(&shifts(&[1, 2]), &shifts(&[2, 3])), shifts(&[2]));
        assert_eq!(gcd(&RootPoly::one(), &shifts(&[4, 4, 7])), RootPoly::one());
        assert_eq!(gcd(&shifts(&[1, 1]), &shifts(&[1, 5])), shifts(&[1]));
        assert_eq!(lcm(&shifts(&[1]), &shifts(&[1, 2])), shifts(&[1, 2]));
        assert_eq!(lcm(&RootPoly::one(), &shifts(&[3, 3])), shifts(&[3, 3]));
        assert_eq!(lcm(&shifts(&[-1, 0]), &shifts(&[1])), shifts(&[-1, 0, 1]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shifts(&[1, 2]).shift(&int(1)), shifts(&[2, 3]));
        assert_eq!(shifts(&[1, 2]).shift(&int(0)), shifts(&[1, 2]));
        assert_eq!(shifts(&[-1]).shift(&int(-2)), shifts(&[-3]));
    }

    #[test]
    fn expand_at_examples() {
        assert_eq!(expand_at(&shifts(&[2]), &int(1)).coeffs(), &[int(1), int(1)]);
        assert_eq!(expand_at(&shifts(&[1, 1]), &int(1)).coeffs(), &[int(0), int(0), int(1)]);
        // (s+1)(s+3) = ((s+2)-1)((s+2)+1) = (s+2)^2 - 1
        assert_eq!(expand_at(&shifts(&[1, 3]), &int(2)).coeffs(), &[int(-1), int(0), int(1)]);
    }

    #[test]
    fn division() {
        let p = shifts(&[1, 2, 2, 5]);
        assert_eq!(p.checked_div(&shifts(&[2, 5])), Some(shifts(&[1, 2])));
        assert_eq!(p.checked_div(&shifts(&[3])), None);
        assert_eq!(p.checked_div(&shifts(&[2, 2, 2])), None);
        assert_eq!(p.checked_div(&shifts(&[9])), None);
        assert!(shifts(&[2, 2]).divides(&p));
    }

    #[test]
    fn display() {
        assert_eq!(shifts(&[1, 2, 2]).to_string(), "(s+1)(s+2)^2");
        assert_eq!(shifts(&[-1, 0]).to_string(), "(s-1)s");
        let half = [rat(3, 2)];
        assert_eq!(RootPoly::from_shifts(&half).to_string(), "(s+3/2)");
        assert_eq!(RootPoly::one().to_string(), "1");
    }

    #[test]
    fn eval_and_dense_agree() {
        let p = RootPoly::from_shifts(&[rat(1, 2), int(-3), int(-3)]);
        let d = p.to_dense();
        for x in -4..5 {
            let x = rat(x, 3);
            assert_eq!(p.eval(&x), d.eval(&x));
        }
    }
}
