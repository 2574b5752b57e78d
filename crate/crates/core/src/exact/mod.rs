//! Exact rational and integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers; no operation
//! rounds. Elimination picks the first nonzero entry of a column as pivot so
//! results are deterministic.

mod int;
mod matrix;
mod rational;
mod sparse;

pub use int::{hermite_normal_form, integral_kernel, IntMatrix};
pub use matrix::RationalMatrix;
pub use rational::{
    format_rational, int, parse_rational, primitivize, rat, rational_from_int, Rational,
};
pub use sparse::SparseEchelon;

pub use num_bigint::BigInt;
