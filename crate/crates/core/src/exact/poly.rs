//! Dense univariate polynomials over the exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Polynomial with rational coefficients stored in ascending degree.
///
/// The coefficient list never carries a trailing zero; the zero polynomial
/// is the empty list.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x0) + c;
        }
        acc
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Multiply by `x^k` (shift coefficients up).
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Inverse within the polynomial ring: defined only for nonzero
    /// constants.
    pub fn inv(&self) -> Result<Poly> {
        match self.coeffs.len() {
            0 => Err(Error::DivisionByZero("inverse of the zero polynomial")),
            1 => Ok(Poly::constant(self.coeffs[0].inv()?)),
            _ => Err(Error::NotInvertible),
        }
    }
}

impl<'a> Add for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = rhs.coeffs.get(i).unwrap_or(&zero);
                a + b
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<'a> Sub for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as an array of rational strings in ascending degree,
/// e.g. `["0", "4", "0", "12"]` for `12x^3 + 4x`.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(Rational::to_string))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<Rational>())
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into()).unwrap()
    }

    fn p(coeffs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&(n, d)| r(n, d)).collect())
    }

    #[test]
    fn eval_examples() {
        // 6x^2 + 1 at x = 1
        assert_eq!(p(&[(1, 1), (0, 1), (6, 1)]).eval(&r(1, 1)), r(7, 1));
        assert_eq!(Poly::zero().eval(&r(5, 1)), Rational::zero());
        assert_eq!(Poly::x().eval(&r(5, 1)), r(5, 1));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let q = Poly::from_coeffs(vec![r(1, 1), r(0, 1), r(0, 1)]);
        assert_eq!(q.degree(), Some(0));
        assert!(Poly::from_coeffs(vec![r(0, 1)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = p(&[(0, 1), (4, 1), (0, 1), (12, 1)]); // 12x^3 + 4x
        let b = p(&[(1, 1), (0, 1), (6, 1)]); // 6x^2 + 1
        assert_eq!(&a + &b, p(&[(1, 1), (4, 1), (6, 1), (12, 1)]));
        let prod = &a * &b;
        // (12x^3 + 4x)(6x^2 + 1) = 72x^5 + 36x^3 + 4x
        assert_eq!(prod, p(&[(0, 1), (4, 1), (0, 1), (36, 1), (0, 1), (72, 1)]));
        assert_eq!(&a - &a, Poly::zero());
    }

    #[test]
    fn inverses_for_constants_only() {
        assert_eq!(
            Poly::constant(r(-3, 2)).inv().unwrap(),
            Poly::constant(r(-2, 3))
        );
        assert!(Poly::x().inv().is_err());
        assert!(Poly::zero().inv().is_err());
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[(0, 1), (4, 1), (0, 1), (12, 1)]).to_string(), "12*x^3 + 4*x");
        assert_eq!(p(&[(1, 1), (0, 1), (6, 1)]).to_string(), "6*x^2 + 1");
        assert_eq!(p(&[(-1, 2), (1, 1)]).to_string(), "x - 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
