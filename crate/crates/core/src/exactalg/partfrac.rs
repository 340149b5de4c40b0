//! Partial fraction decomposition over the squarefree factorization of the
//! denominator. Factors need not be linear; recombination is exact.

use super::poly::gcd_monic;
use super::{squarefree_decompose, Poly, RatFn, Var};

/// `polynomial_part + sum numerator / factor^order`, recombining exactly to
/// the decomposed input. Each numerator has degree < degree(factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractions {
    pub var: Var,
    pub polynomial_part: Poly,
    /// `(denominator_factor, pole_order, numerator)`, deterministically sorted.
    pub terms: Vec<(Poly, usize, Poly)>,
}

impl PartialFractions {
    /// Adds the terms back together; used by tests and certificate checks.
    pub fn recombine(&self) -> RatFn {
        let mut acc = RatFn::from_poly(self.polynomial_part.clone());
        for (f, j, n) in &self.terms {
            let term = RatFn::new(n.clone(), f.pow(*j as u32)).expect("factor is nonzero");
            acc = &acc + &term;
        }
        acc
    }

    /// True if some term has pole order 1.
    pub fn has_simple_pole_terms(&self) -> bool {
        self.terms.iter().any(|&(_, j, _)| j == 1)
    }

    /// True if every term has pole order 1.
    pub fn simple_poles_only(&self) -> bool {
        self.terms.iter().all(|&(_, j, _)| j == 1)
    }
}

/// Decomposes a rational function into polynomial part plus proper terms over
/// the squarefree factors of its denominator.
pub fn partial_fractions(w: &RatFn) -> PartialFractions {
    let var = w.var();
    let (polynomial_part, proper) = w.split_polynomial_part();
    let mut terms = Vec::new();
    if !proper.is_zero() {
        let decomp = squarefree_decompose(proper.den()).expect("denominator is nonzero");
        split_over_factors(proper.num().clone(), &decomp.factors, &mut terms);
    }
    terms.sort_by(|a, b| {
        (a.0.deg(), a.0.to_string(), a.1).cmp(&(b.0.deg(), b.0.to_string(), b.1))
    });
    PartialFractions { var, polynomial_part, terms }
}

fn split_over_factors(num: Poly, factors: &[(Poly, usize)], out: &mut Vec<(Poly, usize, Poly)>) {
    match factors {
        [] => debug_assert!(num.is_zero()),
        [(f, e)] => push_adic_digits(num, f, *e, out),
        [(f, e), rest @ ..] => {
            let a = f.pow(*e as u32);
            let mut b = Poly::one(f.var());
            for (g, m) in rest {
                b = &b * &g.pow(*m as u32);
            }
            // num/(a b) = ra/a + rb/b with ra = num * b^{-1} mod a
            let b_inv = bezout_inverse(&b, &a);
            let ra = (&num * &b_inv).divrem(&a).1;
            let rb = (&num - &(&ra * &b)).exact_div(&a);
            push_adic_digits(ra, f, *e, out);
            split_over_factors(rb, rest, out);
        }
    }
}

/// Writes `num / f^e` as digits `d_j / f^j`, `deg d_j < deg f`.
fn push_adic_digits(num: Poly, f: &Poly, e: usize, out: &mut Vec<(Poly, usize, Poly)>) {
    let mut q = num;
    for j in (1..=e).rev() {
        if q.is_zero() {
            return;
        }
        let (next, digit) = q.divrem(f);
        if !digit.is_zero() {
            out.push((f.clone(), j, digit));
        }
        q = next;
    }
    debug_assert!(q.is_zero(), "numerator not proper for its factor power");
}

/// Inverse of `b` modulo `m` for coprime inputs, via extended Euclid.
fn bezout_inverse(b: &Poly, m: &Poly) -> Poly {
    debug_assert!(gcd_monic(b, m).is_one(), "bezout_inverse needs coprime inputs");
    let var = b.var();
    let (mut r0, mut r1) = (m.clone(), b.divrem(m).1);
    let (mut t0, mut t1) = (Poly::zero(var), Poly::one(var));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    // r0 is a nonzero constant multiple of gcd = 1
    let c = r0.as_constant().expect("coprime inputs leave a constant");
    t0.scale(&(num::BigRational::from_integer(1.into()) / c)).divrem(m).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratq};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_ints(Var::Y, num), Poly::from_ints(Var::Y, den)).unwrap()
    }

    #[test]
    fn worked_example_with_double_pole() {
        // 1/(Y^2 (Y-1)) = 1/(Y-1) - 1/Y - 1/Y^2
        let f = w(&[1], &[0, 0, -1, 1]);
        let pf = partial_fractions(&f);
        assert!(pf.polynomial_part.is_zero());
        let y = Poly::from_ints(Var::Y, &[0, 1]);
        let ym1 = Poly::from_ints(Var::Y, &[-1, 1]);
        assert_eq!(
            pf.terms,
            vec![
                (y.clone(), 1, Poly::constant(Var::Y, rat(-1))),
                (y, 2, Poly::constant(Var::Y, rat(-1))),
                (ym1, 1, Poly::constant(Var::Y, rat(1))),
            ]
        );
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn polynomial_input_has_no_terms() {
        let f = RatFn::from_poly(Poly::from_ints(Var::Y, &[3, 0, 2]));
        let pf = partial_fractions(&f);
        assert_eq!(pf.polynomial_part, Poly::from_ints(Var::Y, &[3, 0, 2]));
        assert!(pf.terms.is_empty());
    }

    #[test]
    fn long_division_example() {
        // (Y+1)/Y = 1 + 1/Y
        let pf = partial_fractions(&w(&[1, 1], &[0, 1]));
        assert_eq!(pf.polynomial_part, Poly::one(Var::Y));
        assert_eq!(
            pf.terms,
            vec![(Poly::from_ints(Var::Y, &[0, 1]), 1, Poly::one(Var::Y))]
        );
    }

    #[test]
    fn quadratic_factor_stays_whole() {
        // 1/(Y^2+1) keeps its irreducible quadratic factor
        let pf = partial_fractions(&w(&[1], &[1, 0, 1]));
        assert_eq!(
            pf.terms,
            vec![(Poly::from_ints(Var::Y, &[1, 0, 1]), 1, Poly::one(Var::Y))]
        );
    }

    #[test]
    fn recombination_on_random_inputs() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let num = Poly::new(
                Var::Y,
                (0..=rng.gen_range(0..8usize)).map(|_| ratq(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect(),
            );
            let mut den = Poly::one(Var::Y);
            for _ in 0..rng.gen_range(1..=3) {
                let r = rng.gen_range(-3..=3);
                let e = rng.gen_range(1..=2);
                den = &den * &Poly::from_ints(Var::Y, &[-r, 1]).pow(e);
            }
            if rng.gen_bool(0.4) {
                den = &den * &Poly::from_ints(Var::Y, &[1, 0, 1]);
            }
            let f = RatFn::new(num, den).unwrap();
            let pf = partial_fractions(&f);
            assert_eq!(pf.recombine(), f, "recombination failed for {}", f);
            for (fac, _, n) in &pf.terms {
                assert!(n.deg() < fac.deg() || n.is_zero());
            }
        }
    }
}
