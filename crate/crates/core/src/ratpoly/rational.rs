//! Helpers around [`BigRational`], the scalar type of the whole crate.

use alloc::format;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"n"`, allowing surrounding whitespace and a sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("{s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `⌈r⌉` as an `i64`. Values in this crate are small; overflow panics.
pub fn ceil_i64(r: &Rational) -> i64 {
    r.ceil().to_integer().to_i64().expect("ceiling exceeds i64")
}

pub fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("floor exceeds i64")
}

/// Returns `Some(n)` when `r` is the integer `n`.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
pub(crate) fn divisors(n: &BigInt) -> alloc::vec::Vec<BigInt> {
    let n = n.abs();
    let mut small = alloc::vec::Vec::new();
    let mut large = alloc::vec::Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
