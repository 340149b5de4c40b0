//! Truncated power series in x over exact rationals.
//!
//! A series of order N stores coefficients u_0..u_N; all arithmetic
//! truncates consistently at the common order.

use crate::exactalg::{AlgError, BigRat, Poly, RatFn};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRat>,
}

impl TruncSeries {
    /// Series from coefficients u_0..u_N (order N = len - 1).
    pub fn new(coeffs: Vec<BigRat>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least u_0");
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![BigRat::zero(); order + 1] }
    }

    pub fn constant(c: BigRat, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series x (plus zeros up to the order).
    pub fn x(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRat::from_integer(1.into());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Appends the next coefficient, raising the order by one.
    pub fn push(&mut self, c: BigRat) {
        self.coeffs.push(c);
    }

    fn same_order(&self, rhs: &TruncSeries) -> usize {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        self.order()
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        self.same_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        self.same_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.same_order(rhs);
        let mut out = vec![BigRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> TruncSeries {
        assert!(self.order() >= 1, "derivative needs order >= 1");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * crate::exactalg::rat(i as i64))
            .collect();
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; errors when u_0 = 0.
    pub fn inverse(&self) -> Result<TruncSeries, AlgError> {
        if self.coeffs[0].is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let n = self.order();
        let a0_inv = BigRat::from_integer(1.into()) / &self.coeffs[0];
        let mut out = vec![BigRat::zero(); n + 1];
        out[0] = a0_inv.clone();
        for k in 1..=n {
            let mut acc = BigRat::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(acc * &a0_inv);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Substitutes the series into a polynomial (Horner).
    pub fn compose_poly(&self, p: &Poly) -> TruncSeries {
        let n = self.order();
        let mut acc = TruncSeries::zero(n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            acc.coeffs[0] += c;
        }
        acc
    }

    /// Substitutes the series into a rational function; errors if the
    /// denominator vanishes at u_0.
    pub fn compose_ratfn(&self, h: &RatFn) -> Result<TruncSeries, AlgError> {
        let num = self.compose_poly(h.num());
        let den = self.compose_poly(h.den());
        Ok(num.mul(&den.inverse()?))
    }

    /// Expands a rational function of x as a series at x = 0; errors when
    /// the denominator vanishes there.
    pub fn expand_ratfn_at_zero(h: &RatFn, order: usize) -> Result<TruncSeries, AlgError> {
        let x = TruncSeries::x(order);
        x.compose_ratfn(h)
    }
}
