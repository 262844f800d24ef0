//! Exact arithmetic for bi-periodic Fibonacci and Lucas sequences.
//!
//! The sequences generalize Fibonacci by alternating the recurrence
//! coefficient between two nonzero rationals `a` and `b`; `a = b = 1` gives
//! Fibonacci, `a = b = 2` Pell, `a = b = k` the k-Fibonacci family. This
//! crate computes them (and their polynomial forms) exactly, realizes their
//! 2x2 generating matrices over rationals, polynomials, and quadratic
//! extensions, evaluates the classical closed forms (matrix powers, Binet,
//! Cassini, addition laws, Hadamard power products and their spectra), and
//! ships an audit harness that sweeps every identity against brute-force
//! oracles over parameter grids, reporting sign/transpose errata where the
//! printed closed forms fail as stated.
//!
//! All operations are pure functions over immutable values and safe for
//! unrestricted concurrent use.

pub mod audit;
pub mod bench;
pub mod error;
pub mod exact;
pub mod genmatrix;
pub mod sequences;
pub mod spectral;

pub use error::{Error, Result};
pub use exact::{Poly, QuadExt, Rational, Scalar};
pub use genmatrix::{Mat2, SeqFamily};
pub use sequences::ParamSet;
