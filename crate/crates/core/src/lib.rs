//! Exact-arithmetic kernels and verifiers for generalized digit-sum
//! polynomial identities built on the Thue-Morse sign and its base-k
//! relatives.
//!
//! The crate computes, over cyclotomic fields Q(zeta_d):
//!
//! - the polynomials f_{m,n}(x) = sum_{i < k^n} zeta^(s_k(i)) (x + u(i))^m
//!   for recurrence-defined sequences u with values in a rational vector
//!   space, their constant terms F_{m,n}, and the normalized family H_{m,n},
//!   each by several independent evaluation paths;
//! - base-k digit counting, Prouhet-style partitions of {0,..,k^n-1} with
//!   equal power sums, and the product identity tying digit counts to
//!   polynomial coefficients;
//! - bounded verifiers for three conjectured multivariate generalizations.
//!
//! Everything is exact: scalars are arbitrary-precision rationals or
//! cyclotomic field elements; no floating point is used anywhere.

pub mod algebra;
pub mod combinatorics;
pub mod conjectures;
pub mod digitseq;
pub mod error;
pub mod prouhet;
pub mod ptm;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
