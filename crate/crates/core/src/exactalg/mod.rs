//! Exact scalar, polynomial and rational-function arithmetic.
//!
//! Every quantity in this crate is an exact rational number or built from
//! exact rationals; there is no floating point anywhere in the library.
//! Verdicts produced by the higher layers are certificates, and certificates
//! only make sense over exact arithmetic.

mod bipoly;
mod coeff;
mod partfrac;
mod poly;
mod ratfn;

pub use bipoly::BiPoly;
pub use coeff::{CoeffField, ToQx};
pub use partfrac::{partial_fractions, PartialFractions};
pub use poly::{poly_gcd, resultant, squarefree_decompose, Poly, SqfDecomp};
pub use ratfn::RatFn;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator; zero is `0/1`.
pub type BigRat = BigRational;

/// Builds a `BigRat` from an integer.
pub fn rat(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds a `BigRat` from a numerator/denominator pair.
///
/// Panics if `den == 0`.
pub fn ratq(num: i64, den: i64) -> BigRat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an exact rational literal of the form `p` or `p/q`.
pub fn parse_rat(text: &str) -> Result<BigRat, AlgError> {
    let s = text.trim();
    s.parse::<BigRational>()
        .map_err(|_| AlgError::BadRationalLiteral(s.to_string()))
}

/// True if `r` is the square of a rational number.
pub fn is_rational_square(r: &BigRat) -> bool {
    if r.is_negative() {
        return false;
    }
    if r.is_zero() {
        return true;
    }
    int_is_square(r.numer()) && int_is_square(r.denom())
}

/// Exact square root of a rational square, if one exists (the nonnegative root).
pub fn rational_sqrt(r: &BigRat) -> Option<BigRat> {
    if r.is_negative() {
        return None;
    }
    let sn = int_sqrt_exact(r.numer())?;
    let sd = int_sqrt_exact(r.denom())?;
    Some(BigRational::new(sn, sd))
}

fn int_is_square(n: &BigInt) -> bool {
    int_sqrt_exact(n).is_some()
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

/// gcd of a finite set of rationals: `gcd(p_i)/lcm(q_i)`, always nonnegative.
///
/// Every input is an integer multiple of the result; for nonzero inputs the
/// multipliers are exactly the `m_i` of a common-scale decomposition.
pub fn rational_gcd(values: &[BigRat]) -> BigRat {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values {
        num_gcd = num::integer::gcd(num_gcd, v.numer().abs());
        den_lcm = num::integer::lcm(den_lcm, v.denom().clone());
    }
    if num_gcd.is_zero() {
        return BigRat::zero();
    }
    BigRational::new(num_gcd, den_lcm)
}

/// Variable tags carried by polynomials and rational functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Dependent variable of the differential equation.
    Y,
    /// The derivative symbol y'.
    Z,
    /// Independent variable of the base field C(x).
    X,
    /// Auxiliary variable of residue resultants.
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::Y => "y",
            Var::Z => "z",
            Var::X => "x",
            Var::T => "t",
        };
        f.write_str(s)
    }
}

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("variable tag mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    #[error("zero input not allowed for {0}")]
    ZeroInput(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not an exact rational literal: {0}")]
    BadRationalLiteral(String),
    #[error("denominator is not squarefree")]
    NotSquarefree,
    #[error("fraction is not proper (deg num >= deg den)")]
    ImproperFraction,
    #[error("{0}")]
    Precondition(String),
}
