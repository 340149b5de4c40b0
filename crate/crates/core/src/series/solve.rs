//! Truncated series solutions of first order equations at x = 0.
//!
//! Expansion is always at x = 0 with rational seeds; equations whose
//! coefficients have a pole there must be pre-translated by the caller.

use super::trunc::TruncSeries;
use crate::curve::BiDiffPoly;
use crate::exactalg::{poly_gcd, AlgError, BigRat, Poly, RatFn, ToQx, Var};
use num::Zero;

/// Unique series u with u(0) = y0 and u' = h(u) through order `n`.
/// Errors when h has a pole at y0.
pub fn solve_series_autonomous(
    h: &RatFn,
    y0: &BigRat,
    n: usize,
) -> Result<TruncSeries, AlgError> {
    if h.den().eval(y0).is_zero() {
        return Err(AlgError::Precondition(format!(
            "h has a pole at the seed y0 = {}",
            y0
        )));
    }
    let mut u = TruncSeries::new(vec![y0.clone()]);
    for k in 0..n {
        // (k+1) u_{k+1} = coefficient k of h(u); padding with zero does not
        // change coefficients <= k.
        let hu = u.compose_ratfn(h)?;
        let next = hu.coeff(k) / crate::exactalg::rat(k as i64 + 1);
        u.push(next);
    }
    debug_assert!(residual_autonomous(h, &u).is_zero());
    Ok(u)
}

/// `u' - h(u)` through order n-1; identically zero for a solution series.
pub fn residual_autonomous(h: &RatFn, u: &TruncSeries) -> TruncSeries {
    let hu = u.compose_ratfn(h).expect("seed was checked");
    u.derivative().sub(&hu.truncate(u.order() - 1))
}

/// Unique series u with u(0) = y0, u'(0) = z0 and f(u, u') = 0 mod x^n,
/// built by undetermined coefficients on the implicit relation.
///
/// Requires, at x = 0: no coefficient pole (after clearing denominators),
/// f(y0, z0) = 0 and dF/dZ(y0, z0) != 0.
pub fn solve_series_curve<F: ToQx>(
    f: &BiDiffPoly<F>,
    y0: &BigRat,
    z0: &BigRat,
    n: usize,
) -> Result<TruncSeries, AlgError> {
    assert!(n >= 2, "curve series order must be at least 2");
    let cleared = clear_denominators(f)?;
    let order = n;
    // Polynomial coefficients expand exactly as series.
    let terms: Vec<((u32, u32), TruncSeries)> = cleared
        .iter()
        .map(|((i, j), p)| {
            let mut coeffs: Vec<BigRat> = p.coeffs().to_vec();
            coeffs.resize(order + 1, BigRat::zero());
            coeffs.truncate(order + 1);
            ((*i, *j), TruncSeries::new(coeffs))
        })
        .collect();

    // Seed conditions at x = 0.
    let at0 = |s: &TruncSeries| s.coeff(0);
    let mut f00 = BigRat::zero();
    let mut fz0 = BigRat::zero();
    for ((i, j), c) in &terms {
        let c0 = at0(c);
        if c0.is_zero() {
            continue;
        }
        let yp = pow_rat(y0, *i);
        f00 += &c0 * &yp * pow_rat(z0, *j);
        if *j >= 1 {
            fz0 += &c0 * crate::exactalg::rat(*j as i64) * &yp * pow_rat(z0, *j - 1);
        }
    }
    if !f00.is_zero() {
        return Err(AlgError::Precondition(format!(
            "seed ({}, {}) does not satisfy f = 0 at x = 0",
            y0, z0
        )));
    }
    if fz0.is_zero() {
        return Err(AlgError::Precondition(
            "unsolvable seed: dF/dZ vanishes at the expansion point".into(),
        ));
    }

    let mut u = TruncSeries::new(vec![y0.clone(), z0.clone()]);
    for k in 1..n {
        let r = curve_residual(&terms, &u, order);
        let next = -(r.coeff(k) / (&fz0 * crate::exactalg::rat(k as i64 + 1)));
        u.push(next);
    }
    let r = curve_residual(&terms, &u, order);
    for k in 0..n {
        assert!(
            r.coeff(k).is_zero(),
            "curve series residual nonzero at order {}",
            k
        );
    }
    Ok(u)
}

/// f(u, u') as a series of the given order, padding u as needed.
fn curve_residual(
    terms: &[((u32, u32), TruncSeries)],
    u: &TruncSeries,
    order: usize,
) -> TruncSeries {
    let mut u_pad = u.clone();
    while u_pad.order() < order + 1 {
        u_pad.push(BigRat::zero());
    }
    let du = u_pad.derivative().truncate(order);
    let u_pad = u_pad.truncate(order);
    let max_i = terms.iter().map(|&((i, _), _)| i).max().unwrap_or(0) as usize;
    let max_j = terms.iter().map(|&((_, j), _)| j).max().unwrap_or(0) as usize;
    let y_pows = series_powers(&u_pad, max_i, order);
    let z_pows = series_powers(&du, max_j, order);
    let mut acc = TruncSeries::zero(order);
    for ((i, j), c) in terms {
        let t = c.mul(&y_pows[*i as usize]).mul(&z_pows[*j as usize]);
        acc = acc.add(&t);
    }
    acc
}

fn series_powers(s: &TruncSeries, up_to: usize, order: usize) -> Vec<TruncSeries> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(TruncSeries::constant(BigRat::from_integer(1.into()), order));
    for _ in 0..up_to {
        let last = out.last().unwrap();
        out.push(last.mul(s));
    }
    out
}

fn pow_rat(b: &BigRat, e: u32) -> BigRat {
    num::pow::pow(b.clone(), e as usize)
}

/// Multiplies through by the monic lcm of coefficient denominators, turning
/// every coefficient into a polynomial in x. Errors if any coefficient has a
/// pole at x = 0 (the lcm would vanish there and kill the seed conditions).
fn clear_denominators<F: ToQx>(
    f: &BiDiffPoly<F>,
) -> Result<Vec<((u32, u32), Poly)>, AlgError> {
    let in_qx: Vec<((u32, u32), RatFn)> =
        f.terms().map(|(&k, c)| (k, c.to_qx())).collect();
    for (_, c) in &in_qx {
        if c.den().eval(&BigRat::zero()).is_zero() {
            return Err(AlgError::Precondition(
                "a coefficient of f has a pole at x = 0; translate x first".into(),
            ));
        }
    }
    let mut lcm = Poly::one(Var::X);
    for (_, c) in &in_qx {
        let g = poly_gcd(&lcm, c.den())?;
        lcm = &lcm * &c.den().exact_div(&g);
    }
    Ok(in_qx
        .into_iter()
        .map(|(k, c)| {
            let cleared = &(&lcm * c.num()).exact_div(c.den());
            (k, cleared.clone())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratq};

    fn hy(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_ints(Var::Y, num), Poly::from_ints(Var::Y, den)).unwrap()
    }

    #[test]
    fn exponential_series() {
        // u' = u, u(0) = 1: coefficients 1/n!
        let u = solve_series_autonomous(&hy(&[0, 1], &[1]), &rat(1), 6).unwrap();
        let mut fact = rat(1);
        for k in 0..=6 {
            if k > 0 {
                fact = fact * rat(k as i64);
            }
            assert_eq!(u.coeff(k), rat(1) / &fact);
        }
    }

    #[test]
    fn geometric_series_solution() {
        // u' = u^2, u(0) = 1: u = 1/(1-x) = sum x^n
        let u = solve_series_autonomous(&hy(&[0, 0, 1], &[1]), &rat(1), 8).unwrap();
        for k in 0..=8 {
            assert_eq!(u.coeff(k), rat(1));
        }
    }

    #[test]
    fn abel_recursion_start() {
        // u' = u^3 - u^2, u(0) = 2: u_1 = 4, u_2 = 16
        let u = solve_series_autonomous(&hy(&[0, 0, -1, 1], &[1]), &rat(2), 3).unwrap();
        assert_eq!(u.coeff(0), rat(2));
        assert_eq!(u.coeff(1), rat(4));
        assert_eq!(u.coeff(2), rat(16));
    }

    #[test]
    fn pole_at_seed_rejected() {
        let h = hy(&[1], &[0, 1]); // 1/y
        assert!(solve_series_autonomous(&h, &rat(0), 4).is_err());
    }

    #[test]
    fn curve_matches_autonomous_solver() {
        // f = Z - Y^2 with seed (1, 1)
        let f: BiDiffPoly<BigRat> = BiDiffPoly::new([
            ((0, 1), rat(1)),
            ((2, 0), rat(-1)),
        ])
        .unwrap();
        let u = solve_series_curve(&f, &rat(1), &rat(1), 8).unwrap();
        let v = solve_series_autonomous(&hy(&[0, 0, 1], &[1]), &rat(1), 8).unwrap();
        assert_eq!(u, v);
    }

    #[test]
    fn square_root_branch() {
        // f = Z^2 - Y, seed (1, 1): u = ((x+2)/2)^2 exactly
        let f: BiDiffPoly<BigRat> = BiDiffPoly::new([
            ((0, 2), rat(1)),
            ((1, 0), rat(-1)),
        ])
        .unwrap();
        let u = solve_series_curve(&f, &rat(1), &rat(1), 6).unwrap();
        assert_eq!(u.coeff(0), rat(1));
        assert_eq!(u.coeff(1), rat(1));
        assert_eq!(u.coeff(2), ratq(1, 4));
        for k in 3..6 {
            assert_eq!(u.coeff(k), rat(0));
        }
    }

    #[test]
    fn degenerate_seed_rejected() {
        // f = Z^2 - Y with z0 = 0: dF/dZ = 2 z0 = 0
        let f: BiDiffPoly<BigRat> = BiDiffPoly::new([
            ((0, 2), rat(1)),
            ((1, 0), rat(-1)),
        ])
        .unwrap();
        assert!(solve_series_curve(&f, &rat(0), &rat(0), 5).is_err());
    }

    #[test]
    fn off_curve_seed_rejected() {
        let f: BiDiffPoly<BigRat> = BiDiffPoly::new([
            ((0, 1), rat(1)),
            ((2, 0), rat(-1)),
        ])
        .unwrap();
        assert!(solve_series_curve(&f, &rat(1), &rat(5), 5).is_err());
    }

    #[test]
    fn coefficient_pole_at_zero_rejected() {
        // f = Z - (1/x) Y^2 has a coefficient pole at x = 0
        let one_over_x = RatFn::new(Poly::one(Var::X), Poly::var_poly(Var::X)).unwrap();
        let f: BiDiffPoly<RatFn> = BiDiffPoly::new([
            ((0, 1), RatFn::one(Var::X)),
            ((2, 0), -&one_over_x),
        ])
        .unwrap();
        assert!(solve_series_curve(&f, &rat(0), &rat(0), 5).is_err());
    }

    #[test]
    fn curve_with_x_dependent_coefficients() {
        // f = Z - (1+x) Y: u' = (1+x) u, u = exp(x + x^2/2)
        let one_plus_x = RatFn::from_poly(Poly::from_ints(Var::X, &[1, 1]));
        let f: BiDiffPoly<RatFn> = BiDiffPoly::new([
            ((0, 1), RatFn::one(Var::X)),
            ((1, 0), -&one_plus_x),
        ])
        .unwrap();
        let u = solve_series_curve(&f, &rat(1), &rat(1), 5).unwrap();
        // exp(x + x^2/2) = 1 + x + x^2 + 2/3 x^3 + 5/12 x^4 + ...
        assert_eq!(u.coeff(2), rat(1));
        assert_eq!(u.coeff(3), ratq(2, 3));
        assert_eq!(u.coeff(4), ratq(5, 12));
    }
}
