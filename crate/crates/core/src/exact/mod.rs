//! Exact scalar arithmetic: arbitrary-precision rationals, the quadratic
//! extension ring Q(√d), and dense univariate polynomials over Q.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the whole module is safe for unrestricted concurrent use.

mod poly;
mod quadext;
mod rational;
mod scalar;

pub use poly::Poly;
pub use quadext::QuadExt;
pub use rational::Rational;
pub use scalar::Scalar;
