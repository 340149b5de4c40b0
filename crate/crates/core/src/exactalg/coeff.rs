//! The scalar fields that differential polynomials are written over: plain
//! rationals with the zero derivation, or rational functions of x with d/dx.

use super::{BigRat, RatFn, Var};
use num::{One, Zero};
use std::fmt;

/// A computable field of coefficients carrying a derivation.
pub trait CoeffField: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn from_rat(r: BigRat) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// The field's derivation: identically zero on constants, d/dx on C(x).
    fn derive(&self) -> Self;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|i| self.mul_ref(&i))
    }
}

impl CoeffField for BigRat {
    fn from_rat(r: BigRat) -> Self {
        r
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }
    fn derive(&self) -> Self {
        Self::zero()
    }
}

impl CoeffField for RatFn {
    fn from_rat(r: BigRat) -> Self {
        RatFn::constant(Var::X, r)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        RatFn::inverse(self).ok()
    }
    fn derive(&self) -> Self {
        self.derivative()
    }
}

/// Embedding of a coefficient field into C(x), used when expanding curve
/// coefficients as power series at x = 0.
pub trait ToQx: CoeffField {
    fn to_qx(&self) -> RatFn;
}

impl ToQx for BigRat {
    fn to_qx(&self) -> RatFn {
        RatFn::constant(Var::X, self.clone())
    }
}

impl ToQx for RatFn {
    fn to_qx(&self) -> RatFn {
        self.clone()
    }
}
