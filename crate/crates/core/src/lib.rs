//! Exact arithmetic toolkit for Galois-group certification of hyperelliptic
//! field families.

pub mod arith;
pub mod census;
pub mod config;
pub mod error;
pub mod family;
pub mod padic;
pub mod perm;
pub mod poly;

pub use error::{Error, ErrorKind, Result};
pub use poly::{DegreePartition, IntPolynomial, ModPoly, RatPolynomial};
