//! Arbitrary-precision rational numbers in canonical form.
//!
//! Every value is fully reduced with a positive denominator; zero is stored
//! as `0/1`. The representation is `BigInt`-backed, with fast paths for
//! integer-valued operands (denominator one) so that long recurrences over
//! integer parameters never touch a gcd.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number.
///
/// Invariants: `gcd(|num|, den) = 1`, `den > 0`, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Construct without normalizing. Caller guarantees canonical form
    /// (checked by the property tests, not here: a gcd per construction
    /// would dominate the big-integer fast paths).
    fn raw(num: BigInt, den: BigInt) -> Self {
        debug_assert!(den.is_positive());
        Rational { num, den }
    }

    fn normalize(mut num: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            return Rational::raw(BigInt::zero(), BigInt::one());
        }
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num /= &g;
                den /= &g;
            }
        }
        Rational::raw(num, den)
    }

    /// Build `num/den`, reducing to canonical form. Fails on a zero
    /// denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("zero denominator"));
        }
        Ok(Rational::normalize(num, den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational::raw(n.into(), BigInt::one())
    }

    pub fn zero() -> Self {
        Rational::from_integer(0)
    }

    pub fn one() -> Self {
        Rational::from_integer(1)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Rational::raw(self.num.abs(), self.den.clone())
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero"));
        }
        if self.num.is_negative() {
            Ok(Rational::raw(-self.den.clone(), -self.num.clone()))
        } else {
            Ok(Rational::raw(self.den.clone(), self.num.clone()))
        }
    }

    /// Integer power with signed exponent. Panics when raising zero to a
    /// negative power; `0^0 = 1`.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        if self.is_zero() {
            assert!(exp > 0, "zero raised to a negative power");
            return Rational::zero();
        }
        if self.is_one() {
            return Rational::one();
        }
        let e = exp.unsigned_abs();
        let num = Pow::pow(&self.num, e);
        let den = Pow::pow(&self.den, e);
        // Powers of a reduced fraction stay reduced.
        if exp > 0 {
            Rational::raw(num, den)
        } else if num.is_negative() {
            Rational::raw(-den, -num)
        } else {
            Rational::raw(den, num)
        }
    }

    /// Exact square root when the value is a perfect square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let rn = self.num.sqrt();
        if &rn * &rn != self.num {
            return None;
        }
        let rd = self.den.sqrt();
        if &rd * &rd != self.den {
            return None;
        }
        Some(Rational::raw(rn, rd))
    }

    /// Nearest double; overflows to infinity for huge values.
    pub fn to_f64(&self) -> f64 {
        let n = self.num.to_f64().unwrap_or(f64::NAN);
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        if d.is_finite() && n.is_finite() {
            n / d
        } else {
            // Fall back on a bit-length split so inf/inf never appears.
            let shift = (self.num.bits().max(self.den.bits()) as i64 - 900).max(0);
            let sn = (&self.num >> shift).to_f64().unwrap_or(f64::NAN);
            let sd = (&self.den >> shift).to_f64().unwrap_or(f64::NAN);
            sn / sd
        }
    }

    fn add_signed(&self, rhs: &Rational, negate_rhs: bool) -> Rational {
        let rhs_num = if negate_rhs { -rhs.num.clone() } else { rhs.num.clone() };
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::raw(&self.num + rhs_num, BigInt::one());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            Rational::raw(&self.num * &rhs.den + rhs_num * &self.den, &self.den * &rhs.den)
        } else {
            // Knuth 4.5.1: reduce by gcd of denominators before combining.
            let ds = &self.den / &g;
            let dr = &rhs.den / &g;
            let t = &self.num * &dr + rhs_num * &ds;
            let g2 = t.gcd(&g);
            Rational::raw(t / &g2, ds * (&rhs.den / g2))
        }
    }

    fn mul_impl(&self, rhs: &Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::raw(&self.num * &rhs.num, BigInt::one());
        }
        // Cross-reduce so the result needs no final gcd.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        Rational::raw(
            (&self.num / &g1) * (&rhs.num / &g2),
            (&self.den / &g2) * (&rhs.den / &g1),
        )
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        Ok(self.mul_impl(&rhs.inv()?))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts an optional leading `-`, decimal digits, and an optional
    /// `/` followed by positive decimal digits, e.g. `-21/2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num_s.strip_prefix('-').unwrap_or(num_s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num = BigInt::from_str(num_s).map_err(|_| bad())?;
        let den = match den_s {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let den = BigInt::from_str(d).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator: {s:?}")));
                }
                den
            }
        };
        Ok(Rational::normalize(num, den))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl<'a> Add for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        self.add_signed(rhs, false)
    }
}

impl<'a> Sub for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        self.add_signed(rhs, true)
    }
}

impl<'a> Mul for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        self.mul_impl(rhs)
    }
}

impl<'a> Div for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational::raw(-self.num.clone(), self.den.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into()).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(-2, -4), r(1, 2));
        assert_eq!(r(2, -4), r(-1, 2));
        assert_eq!(r(0, 7), Rational::zero());
        assert_eq!(r(0, -7).to_string(), "0");
        assert!(r(3, -6).denominator().is_positive());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&r(1, 4) + &r(1, 6), r(5, 12));
        assert_eq!(&r(1, 2) - &r(1, 2), Rational::zero());
        assert_eq!(&r(2, 3) * &r(3, 4), r(1, 2));
        assert_eq!(&r(2, 3) / &r(4, 3), r(1, 2));
        assert_eq!(-r(3, 5), r(-3, 5));
    }

    #[test]
    fn pow_and_inv() {
        assert_eq!(r(3, 2).pow(2), r(9, 4));
        assert_eq!(r(3, 2).pow(-2), r(4, 9));
        assert_eq!(r(-3, 2).pow(-3), r(-8, 27));
        assert_eq!(r(0, 1).pow(0), Rational::one());
        assert_eq!(r(-2, 7).inv().unwrap(), r(-7, 2));
        assert!(Rational::zero().inv().is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-21/2".parse::<Rational>().unwrap(), r(-21, 2));
        assert_eq!("55".parse::<Rational>().unwrap(), r(55, 1));
        assert_eq!("4/6".parse::<Rational>().unwrap(), r(2, 3));
        assert_eq!(r(-21, 2).to_string(), "-21/2");
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("+3".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(1, 3));
        assert!(r(-1, 2) < r(-1, 3));
    }

    #[test]
    fn sqrt_exact_only() {
        assert_eq!(r(9, 4).sqrt(), Some(r(3, 2)));
        assert_eq!(r(2, 1).sqrt(), None);
        assert_eq!(r(-9, 4).sqrt(), None);
        assert_eq!(Rational::zero().sqrt(), Some(Rational::zero()));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Rational::new(1.into(), 0.into()).is_err());
    }
}
