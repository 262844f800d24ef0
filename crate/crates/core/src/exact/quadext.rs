//! Exact arithmetic in the quadratic extension ring Q(√d).
//!
//! Elements are stored as `u + v·√d` with rational `u`, `v` and a fixed
//! rational radicand `d`. The radical is kept formal even when `d` is a
//! perfect square, so the same code path serves split and non-split cases;
//! inverses exist exactly when the norm `u² − v²·d` is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Element `u + v·√d` of Q(√d).
///
/// Two elements are equal only when both parts and the radicand agree;
/// arithmetic never mixes elements with different radicands.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExt {
    rational_part: Rational,
    radical_part: Rational,
    radicand: Rational,
}

impl QuadExt {
    pub fn new(rational_part: Rational, radical_part: Rational, radicand: Rational) -> Self {
        QuadExt { rational_part, radical_part, radicand }
    }

    /// Embed a rational into the extension with the given radicand.
    pub fn from_rational(value: Rational, radicand: &Rational) -> Self {
        QuadExt::new(value, Rational::zero(), radicand.clone())
    }

    /// The formal square root `0 + 1·√d`.
    pub fn sqrt_of(radicand: &Rational) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), radicand.clone())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational_part
    }

    pub fn radical_part(&self) -> &Rational {
        &self.radical_part
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.radical_part.is_zero()
    }

    /// True when the radical part vanishes and the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.radical_part.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadExt::new(
            self.rational_part.clone(),
            -&self.radical_part,
            self.radicand.clone(),
        )
    }

    /// Field norm `u² − v²·d`; zero exactly for non-units.
    pub fn norm(&self) -> Rational {
        &(&self.rational_part * &self.rational_part)
            - &(&(&self.radical_part * &self.radical_part) * &self.radicand)
    }

    fn require_same_radicand(&self, rhs: &QuadExt) -> Result<()> {
        if self.radicand == rhs.radicand {
            Ok(())
        } else {
            Err(Error::MismatchedRadicands {
                lhs: self.radicand.to_string(),
                rhs: rhs.radicand.to_string(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.require_same_radicand(rhs)?;
        Ok(QuadExt::new(
            &self.rational_part + &rhs.rational_part,
            &self.radical_part + &rhs.radical_part,
            self.radicand.clone(),
        ))
    }

    pub fn checked_sub(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.require_same_radicand(rhs)?;
        Ok(QuadExt::new(
            &self.rational_part - &rhs.rational_part,
            &self.radical_part - &rhs.radical_part,
            self.radicand.clone(),
        ))
    }

    /// `(u₁ + v₁√d)(u₂ + v₂√d) = (u₁u₂ + v₁v₂d) + (u₁v₂ + u₂v₁)√d`.
    pub fn checked_mul(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.require_same_radicand(rhs)?;
        let u = &(&self.rational_part * &rhs.rational_part)
            + &(&(&self.radical_part * &rhs.radical_part) * &self.radicand);
        let v = &(&self.rational_part * &rhs.radical_part)
            + &(&self.radical_part * &rhs.rational_part);
        Ok(QuadExt::new(u, v, self.radicand.clone()))
    }

    /// Multiplicative inverse `(u − v√d)/(u² − v²d)`; fails when the norm is
    /// zero (which includes zero itself and zero divisors of split rings).
    pub fn inv(&self) -> Result<QuadExt> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero("zero-norm quadratic element"));
        }
        let n_inv = n.inv()?;
        Ok(QuadExt::new(
            &self.rational_part * &n_inv,
            &(-&self.radical_part) * &n_inv,
            self.radicand.clone(),
        ))
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.checked_mul(&rhs.inv()?)
    }

    /// Integer power with signed exponent by binary exponentiation.
    pub fn pow(&self, exp: i64) -> Result<QuadExt> {
        let one = QuadExt::from_rational(Rational::one(), &self.radicand);
        if exp == 0 {
            return Ok(one);
        }
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut base = base;
        let mut acc = one;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, factor: &Rational) -> QuadExt {
        QuadExt::new(
            &self.rational_part * factor,
            &self.radical_part * factor,
            self.radicand.clone(),
        )
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical_part.is_zero() {
            return write!(f, "{}", self.rational_part);
        }
        let radical = if self.radical_part.is_one() {
            format!("sqrt({})", self.radicand)
        } else if self.radical_part == Rational::from(-1) {
            format!("-sqrt({})", self.radicand)
        } else {
            format!("{}*sqrt({})", self.radical_part, self.radicand)
        };
        if self.rational_part.is_zero() {
            write!(f, "{radical}")
        } else if let Some(tail) = radical.strip_prefix('-') {
            write!(f, "{} - {}", self.rational_part, tail)
        } else {
            write!(f, "{} + {}", self.rational_part, radical)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).expect("mixed radicands in quadratic arithmetic")
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(
            -&self.rational_part,
            -&self.radical_part,
            self.radicand.clone(),
        )
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into()).unwrap()
    }

    fn q(u: Rational, v: Rational, d: i64) -> QuadExt {
        QuadExt::new(u, v, Rational::from(d))
    }

    #[test]
    fn formal_root_squares_to_radicand() {
        let root = QuadExt::sqrt_of(&Rational::from(60));
        let sq = root.checked_mul(&root).unwrap();
        assert_eq!(sq, q(r(60, 1), r(0, 1), 60));
    }

    #[test]
    fn multiplicative_identity() {
        let one = QuadExt::from_rational(Rational::one(), &Rational::from(60));
        let z = q(r(3, 1), r(1, 2), 60);
        assert_eq!(one.checked_mul(&z).unwrap(), z);
    }

    #[test]
    fn root_product_matches_vieta() {
        // Characteristic roots for a=2, b=3, x=1: (6 ± sqrt(60))/2.
        let alpha = q(r(3, 1), r(1, 2), 60);
        let beta = q(r(3, 1), r(-1, 2), 60);
        assert_eq!(alpha.checked_mul(&beta).unwrap(), q(r(-6, 1), r(0, 1), 60));
    }

    #[test]
    fn inverse_round_trips() {
        let one = QuadExt::from_rational(Rational::one(), &Rational::from(60));
        assert_eq!(one.inv().unwrap(), one);

        let alpha = q(r(3, 1), r(1, 2), 60);
        let inv = alpha.inv().unwrap();
        assert_eq!(inv, q(r(-1, 2), r(1, 12), 60));
        assert_eq!(alpha.checked_mul(&inv).unwrap(), one);
    }

    #[test]
    fn zero_and_zero_divisors_not_invertible() {
        let zero = QuadExt::from_rational(Rational::zero(), &Rational::from(60));
        assert!(zero.inv().is_err());
        // 3 + 1*sqrt(9) has norm 9 - 9 = 0 in the split ring Q(sqrt(9)).
        let divisor = q(r(3, 1), r(1, 1), 9);
        assert!(divisor.inv().is_err());
    }

    #[test]
    fn mismatched_radicands_rejected() {
        let a = QuadExt::sqrt_of(&Rational::from(60));
        let b = QuadExt::sqrt_of(&Rational::from(5));
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::MismatchedRadicands { .. })
        ));
        assert_ne!(
            QuadExt::from_rational(Rational::one(), &Rational::from(4)),
            QuadExt::from_rational(Rational::one(), &Rational::from(9)),
        );
    }

    #[test]
    fn signed_powers() {
        let alpha = q(r(3, 1), r(1, 2), 60);
        let p3 = alpha.pow(3).unwrap();
        let m3 = alpha.pow(-3).unwrap();
        let one = QuadExt::from_rational(Rational::one(), &Rational::from(60));
        assert_eq!(p3.checked_mul(&m3).unwrap(), one);
        assert_eq!(alpha.pow(0).unwrap(), one);
    }
}
