//! Quadratic Hermite reduction.
//!
//! Rewrites a rational function as (derivative of a rational function) plus a
//! remainder whose denominator is squarefree. The remainder carries exactly
//! the residue information of the input, which is what the antiderivative
//! and exponential-form decisions consume.

use crate::exactalg::{poly_gcd, squarefree_decompose, BigRat, Poly, RatFn};
use num::One;

/// `input = derive(rational_part) + remainder`, with `den(remainder)`
/// squarefree. The remainder keeps the polynomial part of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteResult {
    pub rational_part: RatFn,
    pub remainder: RatFn,
}

/// Quadratic Hermite reduction driven by the squarefree decomposition of the
/// denominator.
pub fn hermite_reduce(w: &RatFn) -> HermiteResult {
    let var = w.var();
    let (poly_part, mut proper) = w.split_polynomial_part();
    let mut rational_part = RatFn::zero(var);

    loop {
        if proper.is_zero() {
            break;
        }
        let decomp = squarefree_decompose(proper.den()).expect("nonzero denominator");
        let m = decomp.max_multiplicity();
        if m <= 1 {
            break;
        }
        // V: product of the factors at top multiplicity; U: the rest.
        let mut v = Poly::one(var);
        let mut u = Poly::one(var);
        for (f, e) in &decomp.factors {
            if *e == m {
                v = &v * f;
            } else {
                u = &u * &f.pow(*e as u32);
            }
        }
        let a = proper.num();
        // Solve A = U B' V - (m-1) U V' B + C V with deg B < deg V:
        // B = A * [-(m-1) U V']^{-1} mod V.
        let mult = BigRat::from_integer((m as i64 - 1).into());
        let uvp = (&u * &v.derivative()).scale(&-mult);
        let b = mul_inverse_mod(a, &uvp, &v);
        let c_num = &(a - &(&(&u * &b.derivative()) * &v))
            + &(&(&u * &v.derivative()) * &b).scale(&BigRat::from_integer((m as i64 - 1).into()));
        let c = c_num.exact_div(&v);

        let v_pow = v.pow(m as u32 - 1);
        let step = RatFn::new(b, v_pow.clone()).expect("V^{m-1} nonzero");
        rational_part = &rational_part + &step;
        proper = RatFn::new(c, &u * &v_pow).expect("U V^{m-1} nonzero");
    }

    let remainder = &RatFn::from_poly(poly_part) + &proper;
    debug_assert!(
        squarefree_decompose(remainder.den()).unwrap().max_multiplicity() <= 1,
        "hermite remainder must have squarefree denominator"
    );
    HermiteResult { rational_part, remainder }
}

/// `a * b^{-1} mod v` for `gcd(b, v) = 1`.
fn mul_inverse_mod(a: &Poly, b: &Poly, v: &Poly) -> Poly {
    debug_assert!(poly_gcd(b, v).unwrap().is_one());
    let var = v.var();
    let (mut r0, mut r1) = (v.clone(), b.divrem(v).1);
    let (mut t0, mut t1) = (Poly::zero(var), Poly::one(var));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    let c = r0.as_constant().expect("coprime inputs leave a constant");
    let inv = t0.scale(&(BigRat::one() / c));
    (a * &inv).divrem(v).1
}
