use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        rref(&mut m, self.cols).len()
    }
}

/// Reduces the first `ncols` columns of `m` to reduced row echelon form in
/// place and returns the pivot columns.
fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..m.cols {
                m.data.swap(p * m.cols + c, row * m.cols + c);
            }
        }
        let inv = m.get(row, col).recip();
        for c in 0..m.cols {
            let v = m.get(row, c) * &inv;
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let f = m.get(r, col).clone();
            for c in 0..m.cols {
                let v = m.get(r, c) - &f * m.get(row, c);
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// The affine solution set `particular + span(null_basis)` of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<Rational>,
    pub null_basis: Vec<Vec<Rational>>,
}

/// Solves `A x = b` exactly. Fails with [`Error::Inconsistent`] when there is
/// no solution.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<SolutionSpace> {
    if b.len() != a.rows {
        return Err(Error::Precondition("right-hand side length differs from row count".into()));
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for r in 0..a.rows {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let pivots = rref(&mut aug, n);
    if (pivots.len()..a.rows).any(|r| !aug.get(r, n).is_zero()) {
        return Err(Error::Inconsistent);
    }

    let mut particular = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug.get(r, n).clone();
    }
    let free = (0..n).filter(|c| !pivots.contains(c));
    let null_basis = free
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug.get(r, f).clone();
            }
            v
        })
        .collect();
    Ok(SolutionSpace { particular, null_basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect())
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|x| int(*x)).collect()
    }

    #[test]
    fn identity_system() {
        let s = solve_linear(&Matrix::identity(3), &v(&[1, 0, 0])).unwrap();
        assert_eq!(s.particular, v(&[1, 0, 0]));
        assert!(s.null_basis.is_empty());
    }

    #[test]
    fn zero_system() {
        let s = solve_linear(&Matrix::zeros(2, 3), &v(&[0, 0])).unwrap();
        assert_eq!(s.particular, v(&[0, 0, 0]));
        assert_eq!(s.null_basis.len(), 3);
    }

    #[test]
    fn one_equation_two_unknowns() {
        let s = solve_linear(&m(&[&[1, 1]]), &v(&[1])).unwrap();
        assert_eq!(s.particular, v(&[1, 0]));
        assert_eq!(s.null_basis, vec![v(&[-1, 1])]);
    }

    #[test]
    fn inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve_linear(&a, &v(&[1, 3])), Err(Error::Inconsistent));
    }

    #[test]
    fn solutions_satisfy_system() {
        let a = m(&[&[2, -1, 0, 3], &[4, -2, 1, 0], &[6, -3, 1, 3]]);
        let b = v(&[1, 2, 3]);
        let s = solve_linear(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&s.particular), b);
        for n in &s.null_basis {
            assert!(a.mul_vec(n).iter().all(Zero::is_zero));
        }
        assert_eq!(s.null_basis.len(), 4 - a.rank());
    }
}
