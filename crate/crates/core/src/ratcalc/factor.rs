//! Shape-level factorization of monic squarefree polynomials over Q.
//!
//! The commensurability decision only needs to know the *shapes* of the
//! irreducible factors, not the factors' roots. Rational roots are found by
//! divisor enumeration, quadratics are decided by their discriminant, and
//! quartics are split (or proven unsplittable) by exhausting monic integer
//! quadratic factorizations. Degrees five and up are reported unfactored;
//! callers surface that as an explicit Unknown rather than guessing.

use crate::exactalg::{is_rational_square, rational_sqrt, BigRat, Poly};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeSet;

/// Shape of an irreducible factor of a residue resultant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorShape {
    /// `t - r` with rational r.
    Linear,
    /// `t^2 - a` with `a` not a rational square.
    QuadraticBinomial,
    /// Anything else (non-binomial quadratic, or irreducible of degree >= 3).
    Other,
}

/// Factorization of a monic squarefree polynomial into shape-tagged monic
/// irreducible factors, possibly with an unfactored tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeFactorization {
    pub factors: Vec<(Poly, FactorShape)>,
    /// Degree >= 5 residual, or a lower-degree residual whose divisor
    /// enumeration overflowed the factoring bounds.
    pub unfactored: Option<Poly>,
}

impl ShapeFactorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_none()
    }
}

/// Factors a monic squarefree polynomial into shapes. Panics on zero input;
/// constants yield an empty factor list.
pub fn factor_shapes(r: &Poly) -> ShapeFactorization {
    assert!(!r.is_zero(), "factor_shapes on zero polynomial");
    let var = r.var();
    let mut factors: Vec<(Poly, FactorShape)> = Vec::new();
    let mut residual = r.monic();

    let (roots, roots_complete) = rational_roots(&residual);
    for root in &roots {
        let lin = Poly::new(var, vec![-root, BigRat::one()]);
        residual = residual.exact_div(&lin);
        factors.push((lin, FactorShape::Linear));
    }

    let mut unfactored = None;
    match residual.deg() {
        0 => {}
        1 => {
            factors.push((residual.monic(), FactorShape::Linear));
        }
        2 => match split_quadratic(&residual) {
            Some((l1, l2)) => {
                factors.push((l1, FactorShape::Linear));
                factors.push((l2, FactorShape::Linear));
            }
            None => factors.push((residual.clone(), quadratic_shape(&residual))),
        },
        3 if roots_complete => factors.push((residual, FactorShape::Other)),
        4 if roots_complete => match split_quartic(&residual) {
            QuarticSplit::Split(q1, q2) => {
                for q in [q1, q2] {
                    match split_quadratic(&q) {
                        Some((l1, l2)) => {
                            factors.push((l1, FactorShape::Linear));
                            factors.push((l2, FactorShape::Linear));
                        }
                        None => factors.push((q.clone(), quadratic_shape(&q))),
                    }
                }
            }
            QuarticSplit::Irreducible => factors.push((residual, FactorShape::Other)),
            QuarticSplit::Incomplete => unfactored = Some(residual),
        },
        _ => unfactored = Some(residual),
    }

    factors.sort_by(|a, b| (a.0.deg(), a.0.to_string()).cmp(&(b.0.deg(), b.0.to_string())));
    ShapeFactorization { factors, unfactored }
}

/// Shape of an irreducible monic quadratic.
fn quadratic_shape(q: &Poly) -> FactorShape {
    if q.coeff(1).is_zero() {
        FactorShape::QuadraticBinomial
    } else {
        FactorShape::Other
    }
}

/// Splits a monic quadratic into linear factors when its discriminant is a
/// rational square.
fn split_quadratic(q: &Poly) -> Option<(Poly, Poly)> {
    let b = q.coeff(1);
    let c = q.coeff(0);
    let disc = &b * &b - BigRat::from_integer(4.into()) * &c;
    let s = rational_sqrt(&disc)?;
    let two = BigRat::from_integer(2.into());
    let r1 = (-&b + &s) / &two;
    let r2 = (-&b - &s) / &two;
    let var = q.var();
    Some((
        Poly::new(var, vec![-r1, BigRat::one()]),
        Poly::new(var, vec![-r2, BigRat::one()]),
    ))
}

/// All rational roots of a polynomial, each verified by exact evaluation.
/// The boolean is false when divisor enumeration hit the factoring bounds,
/// in which case the list may be incomplete.
pub fn rational_roots(p: &Poly) -> (Vec<BigRat>, bool) {
    let var = p.var();
    let mut work = p.monic();
    let mut roots = Vec::new();
    if work.is_constant() {
        return (roots, true);
    }
    // Strip roots at zero first.
    while !work.is_constant() && work.coeff(0).is_zero() {
        roots.push(BigRat::zero());
        work = work.exact_div(&Poly::var_poly(var));
    }
    if work.is_constant() {
        return (roots, true);
    }
    let ints = integer_coeffs(&work);
    let a0 = ints.first().expect("nonzero constant term").clone();
    let an = ints.last().expect("nonzero leading term").clone();
    let (ps, p_ok) = divisors(&a0.abs());
    let (qs, q_ok) = divisors(&an.abs());
    let complete = p_ok && q_ok;
    let mut candidates = BTreeSet::new();
    for p_div in &ps {
        for q_div in &qs {
            let c = BigRat::new(p_div.clone(), q_div.clone());
            candidates.insert(c.clone());
            candidates.insert(-c);
        }
    }
    for cand in candidates {
        while !work.is_constant() && work.eval(&cand).is_zero() {
            roots.push(cand.clone());
            let lin = Poly::new(var, vec![-&cand, BigRat::one()]);
            work = work.exact_div(&lin);
        }
    }
    (roots, complete)
}

/// Clears denominators and content: primitive integer coefficients.
fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let mut den_lcm = BigInt::one();
    for c in p.coeffs() {
        den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = num::integer::gcd(g, n.abs());
    }
    ints.into_iter().map(|n| n / &g).collect()
}

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;
const MAX_DIVISORS: usize = 20_000;

/// Positive divisors of |n| from trial-division factoring. The boolean is
/// false if a composite cofactor beyond the trial bound survived or the
/// divisor count overflowed.
fn divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    let mut n = n.abs();
    if n.is_zero() {
        return (vec![], false);
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, primes: &mut Vec<(BigInt, u32)>| {
        if e > 0 {
            primes.push((p, e));
        }
    };
    let mut e = 0;
    while (&n % 2u32).is_zero() {
        n /= 2u32;
        e += 1;
    }
    push(BigInt::from(2u32), e, &mut primes);
    let mut d: u64 = 3;
    let mut limit = sqrt_as_u64(&n);
    while d <= limit && d <= TRIAL_DIVISION_BOUND {
        let mut e = 0;
        while (&n % d).is_zero() {
            n /= d;
            e += 1;
        }
        if e > 0 {
            push(BigInt::from(d), e, &mut primes);
            limit = sqrt_as_u64(&n);
        }
        d += 2;
    }
    let mut complete = true;
    if !n.is_one() {
        // Cofactor with no divisor <= min(sqrt(n), bound): prime iff below
        // the bound squared.
        let bound_sq = BigInt::from(TRIAL_DIVISION_BOUND) * BigInt::from(TRIAL_DIVISION_BOUND);
        if n <= bound_sq {
            push(n.clone(), 1, &mut primes);
        } else {
            complete = false;
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > MAX_DIVISORS {
            return (vec![BigInt::one()], false);
        }
    }
    (divs, complete)
}

fn sqrt_as_u64(n: &BigInt) -> u64 {
    use num::ToPrimitive;
    n.sqrt().to_u64().unwrap_or(u64::MAX)
}

enum QuarticSplit {
    Split(Poly, Poly),
    Irreducible,
    Incomplete,
}

/// Decides whether a monic quartic with no rational roots splits into two
/// monic rational quadratics, by exhausting integer factorizations of the
/// monicized form (Gauss's lemma).
fn split_quartic(q: &Poly) -> QuarticSplit {
    debug_assert_eq!(q.deg(), 4);
    let var = q.var();
    let ints = integer_coeffs(q);
    let lead = ints[4].clone();
    // s = lead * t turns lead^3 q(s/lead) monic: s^4 + A s^3 + B s^2 + C s + D
    let a3 = &ints[3];
    let big_a = a3.clone();
    let big_b = &ints[2] * &lead;
    let big_c = &ints[1] * &lead * &lead;
    let big_d = &ints[0] * &lead * &lead * &lead;
    let (divs, complete) = divisors(&big_d.abs());
    if !complete {
        return QuarticSplit::Incomplete;
    }
    let two = BigInt::from(2u32);
    let mut signed = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        signed.push(d.clone());
        signed.push(-d);
    }
    for b in &signed {
        if b.is_zero() {
            continue;
        }
        if !(&big_d % b).is_zero() {
            continue;
        }
        let d = &big_d / b;
        if *b == d {
            // a + c = A, ac = B - 2b, and the s-coefficient forces C = A b.
            if big_c != &big_a * b {
                continue;
            }
            let disc = &big_a * &big_a - BigInt::from(4u32) * (&big_b - &two * b);
            if disc.sign() == num::bigint::Sign::Minus {
                continue;
            }
            let s = disc.sqrt();
            if &s * &s != disc {
                continue;
            }
            let a = (&big_a + &s) / &two;
            if (&big_a + &s) % &two != BigInt::zero() {
                continue;
            }
            let c = &big_a - &a;
            if let Some(pair) = assemble_quartic_split(q, var, &lead, &a, b, &c, &d) {
                return QuarticSplit::Split(pair.0, pair.1);
            }
        } else {
            // a (d - b) = C - A b
            let rhs = &big_c - &big_a * b;
            let den = &d - b;
            if !(&rhs % &den).is_zero() {
                continue;
            }
            let a = rhs / den;
            let c = &big_a - &a;
            if &big_b != &(b + &d + &a * &c) {
                continue;
            }
            if let Some(pair) = assemble_quartic_split(q, var, &lead, &a, b, &c, &d) {
                return QuarticSplit::Split(pair.0, pair.1);
            }
        }
    }
    QuarticSplit::Irreducible
}

/// Converts candidate monic integer quadratics in s back to monic rational
/// quadratics in t and verifies the product exactly.
fn assemble_quartic_split(
    q: &Poly,
    var: crate::exactalg::Var,
    lead: &BigInt,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
) -> Option<(Poly, Poly)> {
    let lead_rat = BigRat::from_integer(lead.clone());
    let lead_sq = &lead_rat * &lead_rat;
    let q1 = Poly::new(
        var,
        vec![
            BigRat::from_integer(b.clone()) / &lead_sq,
            BigRat::from_integer(a.clone()) / &lead_rat,
            BigRat::one(),
        ],
    );
    let q2 = Poly::new(
        var,
        vec![
            BigRat::from_integer(d.clone()) / &lead_sq,
            BigRat::from_integer(c.clone()) / &lead_rat,
            BigRat::one(),
        ],
    );
    if &q1 * &q2 == q.monic() {
        Some((q1, q2))
    } else {
        None
    }
}

/// True if `a/b` is the square of a rational (used on binomial constants).
pub fn is_square_ratio(a: &BigRat, b: &BigRat) -> Option<BigRat> {
    let ratio = a / b;
    if is_rational_square(&ratio) {
        rational_sqrt(&ratio)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratq, Var};

    fn t(ints: &[i64]) -> Poly {
        Poly::from_ints(Var::T, ints)
    }

    #[test]
    fn linear_pair() {
        // t^2 - 1 = (t-1)(t+1)
        let f = factor_shapes(&t(&[-1, 0, 1]));
        assert!(f.is_complete());
        assert_eq!(
            f.factors,
            vec![
                (t(&[1, 1]), FactorShape::Linear),
                (t(&[-1, 1]), FactorShape::Linear),
            ]
        );
    }

    #[test]
    fn binomial_quadratic() {
        // t^2 - 1/8 is irreducible binomial
        let p = Poly::new(Var::T, vec![ratq(-1, 8), rat(0), rat(1)]);
        let f = factor_shapes(&p);
        assert_eq!(f.factors, vec![(p, FactorShape::QuadraticBinomial)]);
    }

    #[test]
    fn mixed_linear_and_binomial() {
        let p = &t(&[-1, 1]) * &Poly::new(Var::T, vec![ratq(-1, 8), rat(0), rat(1)]);
        let f = factor_shapes(&p);
        assert!(f.is_complete());
        let shapes: Vec<_> = f.factors.iter().map(|&(_, s)| s).collect();
        assert_eq!(shapes, vec![FactorShape::Linear, FactorShape::QuadraticBinomial]);
    }

    #[test]
    fn irreducible_cubic_is_other() {
        // t^3 - 2
        let f = factor_shapes(&t(&[-2, 0, 0, 1]));
        assert!(f.is_complete());
        assert_eq!(f.factors[0].1, FactorShape::Other);
    }

    #[test]
    fn quartic_product_of_binomials_splits() {
        // (t^2 - 2)(t^2 - 8)
        let p = &t(&[-2, 0, 1]) * &t(&[-8, 0, 1]);
        let f = factor_shapes(&p);
        assert!(f.is_complete());
        assert_eq!(
            f.factors,
            vec![
                (t(&[-2, 0, 1]), FactorShape::QuadraticBinomial),
                (t(&[-8, 0, 1]), FactorShape::QuadraticBinomial),
            ]
        );
    }

    #[test]
    fn quartic_irreducible() {
        // t^4 + t + 1 is irreducible over Q
        let f = factor_shapes(&t(&[1, 1, 0, 0, 1]));
        assert!(f.is_complete());
        assert_eq!(f.factors, vec![(t(&[1, 1, 0, 0, 1]), FactorShape::Other)]);
    }

    #[test]
    fn quartic_with_non_binomial_quadratics() {
        // (t^2 + t + 1)(t^2 + 2t + 3)
        let p = &t(&[1, 1, 1]) * &t(&[3, 2, 1]);
        let f = factor_shapes(&p);
        assert!(f.is_complete());
        assert_eq!(f.factors.len(), 2);
        assert!(f.factors.iter().all(|&(_, s)| s == FactorShape::Other));
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2t - 1)(3t + 2)(t - 4) has roots 1/2, -2/3, 4
        let p = &(&t(&[-1, 2]) * &t(&[2, 3])) * &t(&[-4, 1]);
        let (mut roots, complete) = rational_roots(&p);
        roots.sort();
        assert!(complete);
        assert_eq!(roots, vec![ratq(-2, 3), ratq(1, 2), rat(4)]);
    }

    #[test]
    fn degree_five_reports_unfactored() {
        let p = t(&[-3, 0, 0, 0, 0, 1]); // t^5 - 3
        let f = factor_shapes(&p);
        assert!(!f.is_complete());
        assert_eq!(f.unfactored, Some(p));
    }
}
