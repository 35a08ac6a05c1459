//! Exact rationals, root-multiset and dense polynomials, and linear solving.

mod dense;
mod linear;
mod rational;
mod root_poly;

pub use dense::DensePoly;
pub use linear::{solve_linear, Matrix, SolutionSpace};
pub use rational::{as_i64, ceil_i64, floor_i64, int, is_integer, parse_rational, rat, Rational};
pub use root_poly::{expand_at, gcd, lcm, pochhammer, RootPoly};
