//! Bi-periodic Fibonacci and Lucas sequences by recurrence, their polynomial
//! forms, and the scalar identities that relate them.
//!
//! The Fibonacci-side recurrence multiplies by `a` on even indices and `b` on
//! odd ones (the Lucas side alternates oppositely); the polynomial family
//! uses `a·x` / `b·x` with the same parity so that evaluating at `x = 1`
//! recovers the number sequence and the generating-matrix closed forms hold.
//! Negative indices extend by `q_{-n} = (-1)^{n+1} q_n` and
//! `l_{-n} = (-1)^n l_n`, the unique rules consistent with inverse matrix
//! powers.
//!
//! Everything here is a pure function of immutable inputs; no memo tables.

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};

/// Recurrence parameters: a pair of nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSet {
    a: Rational,
    b: Rational,
}

impl ParamSet {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidParameter(
                "parameters a and b must be nonzero".into(),
            ));
        }
        Ok(ParamSet { a, b })
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        ParamSet::new(a.into(), b.into())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn ab(&self) -> Rational {
        &self.a * &self.b
    }

    /// `b/a`, the scale that threads through every closed form.
    pub fn ratio_ba(&self) -> Rational {
        &self.b / &self.a
    }

    pub fn ratio_ab(&self) -> Rational {
        &self.a / &self.b
    }

    /// `ab + 4`; zero exactly on the degenerate locus.
    pub fn ab_plus_4(&self) -> Rational {
        &self.ab() + &Rational::from(4)
    }

    pub fn is_degenerate(&self) -> bool {
        self.ab_plus_4().is_zero()
    }

    /// Reject the `ab = -4` locus for operations whose value is undefined
    /// there (Lucas Cassini, Lucas Hadamard scaling, Binet denominators).
    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateParameters(
                "a*b = -4 is excluded for this operation".into(),
            ))
        } else {
            Ok(())
        }
    }
}

/// Parity indicator: 0 for even `n`, 1 for odd; negative indices take the
/// parity of `|n|`.
pub fn parity_eps(n: i64) -> i64 {
    n.rem_euclid(2)
}

fn fib_coeff(p: &ParamSet, index: i64) -> &Rational {
    if index % 2 == 0 {
        p.a()
    } else {
        p.b()
    }
}

fn lucas_coeff(p: &ParamSet, index: i64) -> &Rational {
    if index % 2 == 0 {
        p.b()
    } else {
        p.a()
    }
}

/// `n`-th bi-periodic Fibonacci number by direct recurrence
/// (`q_0 = 0`, `q_1 = 1`).
pub fn bp_fib(n: i64, p: &ParamSet) -> Rational {
    let k = n.unsigned_abs() as i64;
    let mut prev2 = Rational::zero();
    if k == 0 {
        return prev2;
    }
    let mut prev = Rational::one();
    for i in 2..=k {
        let coeff = fib_coeff(p, i);
        let next = if coeff.is_one() {
            &prev + &prev2
        } else {
            &(coeff * &prev) + &prev2
        };
        prev2 = std::mem::replace(&mut prev, next);
    }
    if n < 0 && k % 2 == 0 {
        -prev
    } else {
        prev
    }
}

/// `n`-th bi-periodic Lucas number by direct recurrence
/// (`l_0 = 2`, `l_1 = a`).
pub fn bp_lucas(n: i64, p: &ParamSet) -> Rational {
    let k = n.unsigned_abs() as i64;
    let mut prev2 = Rational::from(2);
    if k == 0 {
        return prev2;
    }
    let mut prev = p.a().clone();
    for i in 2..=k {
        let coeff = lucas_coeff(p, i);
        let next = if coeff.is_one() {
            &prev + &prev2
        } else {
            &(coeff * &prev) + &prev2
        };
        prev2 = std::mem::replace(&mut prev, next);
    }
    if n < 0 && k % 2 == 1 {
        -prev
    } else {
        prev
    }
}

/// `n`-th bi-periodic Fibonacci polynomial (`q_0(x) = 0`, `q_1(x) = 1`,
/// degree `n - 1` for `n >= 1`).
pub fn bp_fib_poly(n: u64, p: &ParamSet) -> Poly {
    bp_fib_poly_signed(n as i64, p)
}

/// Polynomial family extended to negative indices by the sign rule.
pub(crate) fn bp_fib_poly_signed(n: i64, p: &ParamSet) -> Poly {
    let k = n.unsigned_abs() as i64;
    let mut prev2 = Poly::zero();
    let mut prev = Poly::one();
    if k == 0 {
        return prev2;
    }
    for i in 2..=k {
        let step = Poly::from_coeffs(vec![Rational::zero(), fib_coeff(p, i).clone()]);
        let next = &(&step * &prev) + &prev2;
        prev2 = std::mem::replace(&mut prev, next);
    }
    if n < 0 && k % 2 == 0 {
        -prev
    } else {
        prev
    }
}

/// Residuals of the two bridge identities
/// `(ab+4)·q_n = l_{n+1} + l_{n-1}` and `l_n = q_{n+1} + q_{n-1}`;
/// both components are zero for every valid parameter set.
pub fn bridge_residuals(n: i64, p: &ParamSet) -> (Rational, Rational) {
    let lhs1 = &p.ab_plus_4() * &bp_fib(n, p);
    let rhs1 = &bp_lucas(n + 1, p) + &bp_lucas(n - 1, p);
    let lhs2 = bp_lucas(n, p);
    let rhs2 = &bp_fib(n + 1, p) + &bp_fib(n - 1, p);
    (&lhs1 - &rhs1, &lhs2 - &rhs2)
}

/// Fibonacci-side Cassini combination
/// `a^{1-eps} b^{eps} q_{n+1} q_{n-1} - a^{eps} b^{1-eps} q_n^2`;
/// equals `a·(-1)^n`.
pub fn cassini_q(n: i64, p: &ParamSet) -> Rational {
    let eps = parity_eps(n);
    let outer = &p.a().pow(1 - eps) * &p.b().pow(eps);
    let inner = &p.a().pow(eps) * &p.b().pow(1 - eps);
    let qn = bp_fib(n, p);
    &(&outer * &(&bp_fib(n + 1, p) * &bp_fib(n - 1, p))) - &(&inner * &(&qn * &qn))
}

/// Lucas-side Cassini combination
/// `(b/a)^{1-eps} l_{n+1} l_{n-1} - (b/a)^{eps} l_n^2`;
/// equals `(ab+4)·(-1)^{n+1}`. Rejects `ab = -4`.
pub fn cassini_l(n: i64, p: &ParamSet) -> Result<Rational> {
    p.require_nondegenerate()?;
    let eps = parity_eps(n);
    let ratio = p.ratio_ba();
    let ln = bp_lucas(n, p);
    Ok(&(&ratio.pow(1 - eps) * &(&bp_lucas(n + 1, p) * &bp_lucas(n - 1, p)))
        - &(&ratio.pow(eps) * &(&ln * &ln)))
}

/// `q_{m+n}` from terms of index at most `max(m, n) + 1`:
/// `q_{m+1} q_n + q_m q_{n-1}` when `m + n` is even, and
/// `(b/a)^{eps(m)} q_{m+1} q_n + (b/a)^{eps(n)} q_m q_{n-1}` when odd.
pub fn fib_add(m: i64, n: i64, p: &ParamSet) -> Result<Rational> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter(
            "fib_add requires m >= 1 and n >= 1".into(),
        ));
    }
    let t1 = &bp_fib(m + 1, p) * &bp_fib(n, p);
    let t2 = &bp_fib(m, p) * &bp_fib(n - 1, p);
    if (m + n) % 2 == 0 {
        Ok(&t1 + &t2)
    } else {
        let ratio = p.ratio_ba();
        Ok(&(&ratio.pow(parity_eps(m)) * &t1) + &(&ratio.pow(parity_eps(n)) * &t2))
    }
}

/// `q_{m-n}` for `m >= n >= 0`:
/// `(-1)^{n+1} (q_{m+1} q_n - q_m q_{n+1})` when `m + n` is even, and
/// `(-b/a)^{eps(m)} q_{m+1} q_n + (-b/a)^{eps(n)} q_m q_{n+1}` when odd.
pub fn fib_sub(m: i64, n: i64, p: &ParamSet) -> Result<Rational> {
    if !(0 <= n && n <= m) {
        return Err(Error::InvalidParameter(
            "fib_sub requires m >= n >= 0".into(),
        ));
    }
    let t1 = &bp_fib(m + 1, p) * &bp_fib(n, p);
    let t2 = &bp_fib(m, p) * &bp_fib(n + 1, p);
    if (m + n) % 2 == 0 {
        let diff = &t1 - &t2;
        Ok(if n % 2 == 0 { -diff } else { diff })
    } else {
        let neg_ratio = -p.ratio_ba();
        Ok(&(&neg_ratio.pow(parity_eps(m)) * &t1) + &(&neg_ratio.pow(parity_eps(n)) * &t2))
    }
}
