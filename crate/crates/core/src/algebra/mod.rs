//! Exact scalar and polynomial arithmetic: cyclotomic fields Q(zeta_d),
//! sparse multivariate polynomials over them, and rational matrices.

mod cyclotomic;
mod matrix;
mod poly;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, render_rational, CycOp, Cyclotomic};
pub use matrix::RationalMatrix;
pub use poly::{Monomial, MultiPoly, PolyOp, Var};
