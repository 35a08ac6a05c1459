//! Exact computation of V-filtration, weight and Hodge data for equivariant
//! D-modules on multiplicity-free spaces, driven by b-function roots.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bfun;
pub mod error;
pub mod filtration;
pub mod oracle;
pub mod ratpoly;
pub mod spaces;

pub use error::{Error, Result};
