//! Ring abstraction shared by the 2x2 matrix code.

use std::fmt;

use crate::error::Result;
use crate::exact::{Poly, QuadExt, Rational};

/// Operations a scalar ring must provide to back a 2x2 matrix.
///
/// Context-carrying constructors (`zero_like`/`one_like`) exist because a
/// quadratic-extension zero is only meaningful relative to a radicand.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Multiplicative inverse where one exists in the ring.
    fn ring_inv(&self) -> Result<Self>;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Scalar for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::from_rational(Rational::zero(), self.radicand())
    }
    fn one_like(&self) -> Self {
        QuadExt::from_rational(Rational::one(), self.radicand())
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Scalar for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_inv(&self) -> Result<Self> {
        self.inv()
    }
}
