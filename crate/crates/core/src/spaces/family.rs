use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bfun::{eval_family, upper_ones, AffineBFamily, BFunction};
use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, Rational};

/// Which weights are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    /// All weights of the localization along the semi-invariant.
    Module,
    /// Weights of the coordinate ring itself.
    StructureSheaf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Det,
    SymDet,
    Pfaffian,
    E6,
    Affine(AffineBFamily),
}

/// A multiplicity-free space with a semi-invariant, its weight model and
/// the rule sending a weight to its b-function.
///
/// Matrix families use partition coordinates `(p_1, …, p_n)`; the E6 and
/// user-defined families use semigroup coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceFamily {
    name: String,
    n: usize,
    kind: Kind,
}

impl SpaceFamily {
    /// One of `det`, `symdet`, `pfaffian` or `e6`. The size `n` is ignored
    /// for `e6`.
    pub fn builtin(name: &str, n: usize) -> Result<Self> {
        let kind = match name {
            "det" => Kind::Det,
            "symdet" => Kind::SymDet,
            "pfaffian" => Kind::Pfaffian,
            "e6" => Kind::E6,
            _ => return Err(Error::InvalidFamily(format!("unknown space {name:?}"))),
        };
        let n = if kind == Kind::E6 { 3 } else { n };
        if n == 0 {
            return Err(Error::InvalidFamily("n must be at least 1".into()));
        }
        if kind == Kind::Pfaffian && n % 2 == 1 {
            return Err(Error::InvalidFamily(format!("pfaffian needs even n, got {n}")));
        }
        Ok(SpaceFamily { name: name.to_string(), n, kind })
    }

    /// Wraps a user-supplied affine family after validating it, including
    /// constancy of the root classes on a grid of sample coordinates.
    pub fn from_affine(fam: AffineBFamily) -> Result<Self> {
        fam.validate()?;
        let base = root_classes(&eval_family(&fam, &vec![0; fam.generators()])?);
        for a in sample_grid(fam.generators(), fam.sigma_index, 3, 200) {
            let b = eval_family(&fam, &a)?;
            if root_classes(&b) != base {
                return Err(Error::InvalidFamily(format!("root classes modulo Z change at {a:?}")));
            }
        }
        Ok(SpaceFamily { name: fam.name.clone(), n: fam.generators(), kind: Kind::Affine(fam) })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `det`, `symdet`, `pfaffian` or `e6` for the built-in families.
    pub fn builtin_kind(&self) -> Option<&'static str> {
        match self.kind {
            Kind::Det => Some("det"),
            Kind::SymDet => Some("symdet"),
            Kind::Pfaffian => Some("pfaffian"),
            Kind::E6 => Some("e6"),
            Kind::Affine(_) => None,
        }
    }

    /// Matrix size for the matrix families, generator count otherwise.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the ambient vector space.
    pub fn dim(&self) -> u32 {
        let n = self.n as u32;
        match &self.kind {
            Kind::Det => n * n,
            Kind::SymDet => n * (n + 1) / 2,
            Kind::Pfaffian => n * (n - 1) / 2,
            Kind::E6 => 27,
            Kind::Affine(f) => f.dim,
        }
    }

    /// Degree of the semi-invariant.
    pub fn d(&self) -> usize {
        match &self.kind {
            Kind::Pfaffian => self.n / 2,
            Kind::Affine(f) => f.d,
            _ => self.n,
        }
    }

    /// Number of weight coordinates.
    pub fn arity(&self) -> usize {
        self.n
    }

    /// The weight of the semi-invariant.
    pub fn sigma(&self) -> Vec<i64> {
        match &self.kind {
            Kind::Det | Kind::Pfaffian => vec![1; self.n],
            Kind::SymDet => vec![2; self.n],
            Kind::E6 => vec![0, 0, 1],
            Kind::Affine(f) => {
                let mut v = vec![0; self.n];
                v[f.sigma_index] = 1;
                v
            }
        }
    }

    fn is_matrix(&self) -> bool {
        matches!(self.kind, Kind::Det | Kind::SymDet | Kind::Pfaffian)
    }

    /// Human-readable constraints describing the admissible weights.
    pub fn constraints(&self, scope: Scope) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        if self.is_matrix() {
            for i in 1..n {
                out.push(format!("p{i} >= p{}", i + 1));
            }
            match self.kind {
                Kind::SymDet => out.push("all p_i even".into()),
                Kind::Pfaffian => {
                    for i in 1..=n / 2 {
                        out.push(format!("p{} = p{}", 2 * i - 1, 2 * i));
                    }
                }
                _ => {}
            }
            if scope == Scope::StructureSheaf {
                out.push(format!("p{n} >= 0"));
            }
        } else {
            let sigma = self.sigma_index();
            for j in 0..n {
                if j != sigma || scope == Scope::StructureSheaf {
                    out.push(format!("a{} >= 0", j + 1));
                }
            }
        }
        out
    }

    fn sigma_index(&self) -> usize {
        match &self.kind {
            Kind::Affine(f) => f.sigma_index,
            Kind::E6 => 2,
            _ => self.n - 1,
        }
    }

    /// Checks `w` against the weight model.
    pub fn check_weight(&self, w: &[i64], scope: Scope) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWeight(m));
        let n = self.n;
        if w.len() != n {
            return bad(format!("{} expects {n} coordinates, got {}", self.name, w.len()));
        }
        if self.is_matrix() {
            if let Some(i) = (1..n).find(|&i| w[i - 1] < w[i]) {
                return bad(format!("{w:?} is not dominant at position {i}"));
            }
            if self.kind == Kind::SymDet && w.iter().any(|p| p % 2 != 0) {
                return bad(format!("{w:?} has an odd entry"));
            }
            if self.kind == Kind::Pfaffian && (0..n / 2).any(|i| w[2 * i] != w[2 * i + 1]) {
                return bad(format!("{w:?} does not repeat entries in pairs"));
            }
            if scope == Scope::StructureSheaf && w[n - 1] < 0 {
                return bad(format!("{w:?} has a negative last entry"));
            }
        } else {
            let sigma = self.sigma_index();
            if let Some(j) = (0..n).find(|&j| w[j] < 0 && (j != sigma || scope == Scope::StructureSheaf)) {
                return bad(format!("coordinate {} of {w:?} is negative", j + 1));
            }
        }
        Ok(())
    }

    /// The b-function of the component of weight `w`.
    pub fn b_of_weight(&self, w: &[i64]) -> Result<BFunction> {
        self.check_weight(w, Scope::Module)?;
        let n = self.n as i64;
        let lambdas = match &self.kind {
            Kind::Det => (1..=n).map(|i| int(1 + w[i as usize - 1] + n - i)).collect(),
            Kind::SymDet => (1..=n).map(|i| int(1) + rat(w[i as usize - 1] + n - i, 2)).collect(),
            Kind::Pfaffian => (1..=n / 2).map(|i| int(1 + w[2 * i as usize - 1] + n - 2 * i)).collect(),
            Kind::E6 => vec![int(w[2] + 1), int(w[1] + w[2] + 5), int(w[0] + w[1] + w[2] + 9)],
            Kind::Affine(f) => return eval_family(f, w),
        };
        Ok(BFunction::new(lambdas))
    }

    /// The family in semigroup coordinates.
    pub fn affine_view(&self) -> AffineBFamily {
        let n = self.n;
        let ints = |v: &[i64]| v.iter().map(|x| int(*x)).collect::<Vec<_>>();
        let ladder = |k: usize| (1..=k as u32).collect::<Vec<_>>();
        let (d, r, c, degrees): (usize, Vec<Rational>, Vec<Vec<Rational>>, Vec<u32>) = match &self.kind {
            Kind::Affine(f) => return f.clone(),
            Kind::Det => (n, (1..=n).map(|i| int((n - i + 1) as i64)).collect(), upper_ones(n, n), ladder(n)),
            Kind::SymDet => {
                (n, (1..=n).map(|i| int(1) + rat((n - i) as i64, 2)).collect(), upper_ones(n, n), ladder(n))
            }
            Kind::Pfaffian => {
                let h = n / 2;
                (h, (1..=h).map(|i| int((n - 2 * i + 1) as i64)).collect(), upper_ones(h, h), ladder(h))
            }
            Kind::E6 => (
                3,
                ints(&[1, 5, 9]),
                vec![ints(&[0, 0, 1]), ints(&[0, 1, 1]), ints(&[1, 1, 1])],
                vec![1, 2, 3],
            ),
        };
        let sigma_index = degrees.len() - 1;
        AffineBFamily { name: self.name.clone(), dim: self.dim(), d, degrees, sigma_index, r, c }
    }

    /// Converts an admissible weight to semigroup coordinates.
    pub fn to_affine_coords(&self, w: &[i64]) -> Result<Vec<i64>> {
        self.check_weight(w, Scope::Module)?;
        let diffs = |q: &[i64], scale: i64| -> Vec<i64> {
            (0..q.len())
                .map(|j| (q[j] - q.get(j + 1).copied().unwrap_or(0)) / scale)
                .collect()
        };
        Ok(match &self.kind {
            Kind::Det => diffs(w, 1),
            Kind::SymDet => diffs(w, 2),
            Kind::Pfaffian => {
                let q: Vec<i64> = w.iter().skip(1).step_by(2).copied().collect();
                diffs(&q, 1)
            }
            Kind::E6 | Kind::Affine(_) => w.to_vec(),
        })
    }

    /// All admissible weights with every coordinate in `[-bound, bound]`,
    /// in lexicographic order.
    pub fn enumerate(&self, bound: i64, scope: Scope) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        if self.is_matrix() {
            let (len, step) = match self.kind {
                Kind::Pfaffian => (self.n / 2, 1),
                Kind::SymDet => (self.n, 2),
                _ => (self.n, 1),
            };
            let low = if scope == Scope::StructureSheaf { 0 } else { -bound };
            let mut cur = Vec::with_capacity(len);
            nonincreasing(len, bound, low, step, &mut cur, &mut out);
            if self.kind == Kind::Pfaffian {
                out = out.into_iter().map(|q| q.iter().flat_map(|&x| [x, x]).collect()).collect();
            }
            out.sort();
        } else {
            let sigma = self.sigma_index();
            let ranges: Vec<(i64, i64)> = (0..self.n)
                .map(|j| if j == sigma && scope == Scope::Module { (-bound, bound) } else { (0, bound) })
                .collect();
            let mut cur = vec![0; self.n];
            product(&ranges, 0, &mut cur, &mut out);
        }
        out
    }
}

/// Nonincreasing sequences of length `len` with entries in `[low, high]`
/// that are multiples of `step`.
fn nonincreasing(len: usize, high: i64, low: i64, step: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let top = cur.last().copied().unwrap_or(high);
    let mut x = top - top.rem_euclid(step);
    while x >= low {
        cur.push(x);
        nonincreasing(len, high, low, step, cur, out);
        cur.pop();
        x -= step;
    }
}

fn product(ranges: &[(i64, i64)], j: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if j == ranges.len() {
        out.push(cur.clone());
        return;
    }
    for x in ranges[j].0..=ranges[j].1 {
        cur[j] = x;
        product(ranges, j + 1, cur, out);
    }
}

fn root_classes(b: &BFunction) -> Vec<Rational> {
    let mut v: Vec<Rational> = b.lambdas().iter().map(|l| l - l.floor()).collect();
    v.sort();
    v
}

/// Up to `limit` coordinate vectors from `[0, side]^k`, with the `σ`
/// coordinate also allowed down to `-side`.
pub(crate) fn sample_grid(k: usize, sigma: usize, side: i64, limit: usize) -> Vec<Vec<i64>> {
    let ranges: Vec<(i64, i64)> =
        (0..k).map(|j| if j == sigma { (-side, side) } else { (0, side) }).collect();
    let mut out = Vec::new();
    product(&ranges, 0, &mut vec![0; k], &mut out);
    if out.len() > limit {
        let stride = out.len().div_ceil(limit);
        out = out.into_iter().step_by(stride).collect();
    }
    out
}
