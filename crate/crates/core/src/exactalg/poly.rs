//! Dense univariate polynomials over `BigRat`.
//!
//! Coefficients are indexed by degree; the invariant is that the last stored
//! coefficient is nonzero (the zero polynomial stores no coefficients).
//! The gcd runs a primitive pseudo-remainder sequence so that coefficient
//! growth stays under control, and the resultant is the determinant of the
//! Sylvester matrix computed by fraction-free (Bareiss) elimination, whose
//! intermediate entries are subresultant coefficients.

use super::{AlgError, BigRat, Var};
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    var: Var,
    coeffs: Vec<BigRat>,
}

impl Poly {
    /// Builds a polynomial from coefficients listed by ascending degree.
    /// Trailing zeros are stripped.
    pub fn new(var: Var, mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: vec![] }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, BigRat::one())
    }

    pub fn constant(var: Var, c: BigRat) -> Self {
        Poly::new(var, vec![c])
    }

    /// The monomial `c * var^k`.
    pub fn monomial(var: Var, c: BigRat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        Poly { var, coeffs }
    }

    /// The identity polynomial `var`.
    pub fn var_poly(var: Var) -> Self {
        Poly::monomial(var, BigRat::one(), 1)
    }

    /// Convenience constructor from small integers, ascending degree.
    pub fn from_ints(var: Var, ints: &[i64]) -> Self {
        Poly::new(var, ints.iter().map(|&n| super::rat(n)).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0, for callers that have already
    /// excluded the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn constant_term(&self) -> BigRat {
        self.coeff(0)
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    fn assert_same_var(&self, other: &Poly) {
        assert_eq!(
            self.var, other.var,
            "polynomial arithmetic across variables ({} vs {})",
            self.var, other.var
        );
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * super::rat(i as i64))
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Antiderivative with constant term zero.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = vec![BigRat::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / super::rat(i as i64 + 1));
        }
        Poly::new(self.var, coeffs)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c / &lc).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.var);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Division with remainder; panics if `rhs` is zero.
    pub fn divrem(&self, rhs: &Poly) -> (Poly, Poly) {
        self.assert_same_var(rhs);
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dd = match self.degree() {
            None => return (Poly::zero(self.var), Poly::zero(self.var)),
            Some(d) => d,
        };
        let dr = rhs.deg();
        if dd < dr {
            return (Poly::zero(self.var), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRat::zero(); dd - dr + 1];
        let lc = rhs.lc();
        for k in (0..=dd - dr).rev() {
            let q = &rem[k + dr] / &lc;
            if !q.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    let t = c * &q;
                    rem[k + i] = &rem[k + i] - t;
                }
            }
            quo[k] = q;
        }
        rem.truncate(dr);
        (Poly::new(self.var, quo), Poly::new(self.var, rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, rhs: &Poly) -> Poly {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Substitutes `var + a` for the variable.
    pub fn shift(&self, a: &BigRat) -> Poly {
        let mut acc = Poly::zero(self.var);
        let lin = Poly::new(self.var, vec![a.clone(), BigRat::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(self.var, c.clone());
        }
        acc
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(inner.var, c.clone());
        }
        acc
    }

    /// Retags the variable without touching coefficients.
    pub fn with_var(&self, var: Var) -> Poly {
        Poly { var, coeffs: self.coeffs.clone() }
    }

    /// Integer-primitive form: multiplies by the lcm of coefficient
    /// denominators then divides by the gcd of numerators, keeping the sign
    /// of the leading coefficient.
    fn primitive_int(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for n in &ints {
            g = num::integer::gcd(g, n.abs());
        }
        let coeffs = ints
            .into_iter()
            .map(|n| BigRat::from_integer(n / &g))
            .collect();
        Poly { var: self.var, coeffs }
    }

    /// Pseudo-remainder: `lc(rhs)^(deg self - deg rhs + 1) * self mod rhs`.
    fn pseudo_rem(&self, rhs: &Poly) -> Poly {
        let dd = self.deg();
        let dr = rhs.deg();
        if self.is_zero() || dd < dr {
            return self.clone();
        }
        let scale = self.scale(&num::pow::pow(rhs.lc(), dd - dr + 1));
        scale.divrem(rhs).1
    }

    /// Squarefree part: `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() || self.is_constant() {
            return self.monic();
        }
        let g = gcd_monic(self, &self.derivative());
        self.exact_div(&g).monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_coeff {
                    f.write_str("*")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(self.var, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(self.var, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(self.var, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Monic gcd via a primitive pseudo-remainder sequence.
pub(crate) fn gcd_monic(p: &Poly, q: &Poly) -> Poly {
    p.assert_same_var(q);
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let (mut a, mut b) = if p.deg() >= q.deg() {
        (p.primitive_int(), q.primitive_int())
    } else {
        (q.primitive_int(), p.primitive_int())
    };
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_int();
        a = b;
        b = r;
    }
    a.monic()
}

/// Monic greatest common divisor.
///
/// `gcd(p, 0) = monic(p)`; errors if the variable tags disagree.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly, AlgError> {
    if p.var() != q.var() {
        return Err(AlgError::VarMismatch(p.var(), q.var()));
    }
    Ok(gcd_monic(p, q))
}

/// Squarefree decomposition `unit * prod factor_i^mult_i`.
///
/// Factors are monic, squarefree and pairwise coprime, listed by ascending
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqfDecomp {
    pub unit: BigRat,
    pub factors: Vec<(Poly, usize)>,
}

impl SqfDecomp {
    /// Multiplies the decomposition back out.
    pub fn reconstruct(&self, var: Var) -> Poly {
        let mut acc = Poly::constant(var, self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    /// Largest multiplicity present (0 for a constant input).
    pub fn max_multiplicity(&self) -> usize {
        self.factors.iter().map(|&(_, m)| m).max().unwrap_or(0)
    }
}

/// Yun's squarefree decomposition. Errors on zero input.
pub fn squarefree_decompose(p: &Poly) -> Result<SqfDecomp, AlgError> {
    if p.is_zero() {
        return Err(AlgError::ZeroInput("squarefree_decompose"));
    }
    let unit = p.lc();
    let f = p.monic();
    if f.is_constant() {
        return Ok(SqfDecomp { unit, factors: vec![] });
    }
    let fp = f.derivative();
    let g = gcd_monic(&f, &fp);
    let mut factors = Vec::new();
    if g.is_constant() {
        factors.push((f, 1));
        return Ok(SqfDecomp { unit, factors });
    }
    let mut c = f.exact_div(&g);
    let mut d = &fp.exact_div(&g) - &c.derivative();
    let mut mult = 1usize;
    loop {
        let a = gcd_monic(&c, &d);
        if a.deg() > 0 {
            factors.push((a.clone(), mult));
        }
        c = c.exact_div(&a);
        if c.is_constant() {
            break;
        }
        d = &d.exact_div(&a) - &c.derivative();
        mult += 1;
    }
    Ok(SqfDecomp { unit, factors })
}

/// Resultant of two nonzero polynomials in their shared variable, as the
/// determinant of the Sylvester matrix (fraction-free elimination).
pub fn resultant(p: &Poly, q: &Poly) -> Result<BigRat, AlgError> {
    if p.var() != q.var() {
        return Err(AlgError::VarMismatch(p.var(), q.var()));
    }
    if p.is_zero() || q.is_zero() {
        return Err(AlgError::ZeroInput("resultant"));
    }
    let m = p.deg();
    let n = q.deg();
    if m == 0 {
        return Ok(num::pow::pow(p.lc(), n));
    }
    if n == 0 {
        return Ok(num::pow::pow(q.lc(), m));
    }
    let size = m + n;
    let mut mat = vec![vec![BigRat::zero(); size]; size];
    for row in 0..n {
        for (i, c) in p.coeffs().iter().enumerate() {
            mat[row][row + m - i] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in q.coeffs().iter().enumerate() {
            mat[n + row][row + n - i] = c.clone();
        }
    }
    Ok(super::bipoly::bareiss_det(
        mat,
        BigRat::one(),
        |a, b| a * b,
        |a, b| a - b,
        |a, b| a / b,
        |a| a.is_zero(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratq};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn y(ints: &[i64]) -> Poly {
        Poly::from_ints(Var::Y, ints)
    }

    fn random_poly(rng: &mut StdRng, max_deg: usize) -> Poly {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| ratq(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        Poly::new(Var::Y, coeffs)
    }

    fn random_nonzero_poly(rng: &mut StdRng, max_deg: usize) -> Poly {
        loop {
            let p = random_poly(rng, max_deg);
            if !p.is_zero() {
                return p;
            }
        }
    }

    #[test]
    fn divrem_roundtrip() {
        let p = y(&[2, 0, -3, 1]);
        let d = y(&[-1, 1]);
        let (q, r) = p.divrem(&d);
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn gcd_shared_root() {
        // gcd(Y^2 - 1, Y - 1) = Y - 1
        let g = poly_gcd(&y(&[-1, 0, 1]), &y(&[-1, 1])).unwrap();
        assert_eq!(g, y(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_identity() {
        let p = y(&[2, 4]);
        let g = poly_gcd(&p, &Poly::zero(Var::Y)).unwrap();
        assert_eq!(g, y(&[1, 2]).monic());
        assert_eq!(g.lc(), rat(1));
    }

    #[test]
    fn gcd_var_mismatch_errors() {
        let p = y(&[1, 1]);
        let q = Poly::from_ints(Var::X, &[1, 1]);
        assert!(matches!(poly_gcd(&p, &q), Err(AlgError::VarMismatch(_, _))));
    }

    #[test]
    fn gcd_of_common_factor_products() {
        // gcd(g*a, g*b) = monic(g) for coprime a, b
        let mut rng = StdRng::seed_from_u64(42);
        let mut done = 0;
        while done < 50 {
            let g = random_nonzero_poly(&mut rng, 4);
            let a = random_nonzero_poly(&mut rng, 3);
            let b = random_nonzero_poly(&mut rng, 3);
            if gcd_monic(&a, &b).deg() != 0 {
                continue;
            }
            let got = poly_gcd(&(&g * &a), &(&g * &b)).unwrap();
            assert_eq!(got, g.monic());
            done += 1;
        }
    }

    #[test]
    fn gcd_divides_both_exactly() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let p = random_poly(&mut rng, 6);
            let q = random_poly(&mut rng, 6);
            if p.is_zero() && q.is_zero() {
                continue;
            }
            let g = poly_gcd(&p, &q).unwrap();
            assert!(g.divides(&p) && g.divides(&q));
            if !p.is_zero() {
                assert_eq!(&p.exact_div(&g) * &g, p);
            }
        }
    }

    #[test]
    fn squarefree_decompose_worked_example() {
        // Y^3 - Y^2 = Y^2 (Y - 1)
        let d = squarefree_decompose(&y(&[0, 0, -1, 1])).unwrap();
        assert_eq!(d.unit, rat(1));
        assert_eq!(d.factors, vec![(y(&[-1, 1]), 1), (y(&[0, 1]), 2)]);
    }

    #[test]
    fn squarefree_input_is_its_own_decomposition() {
        let p = y(&[2, 0, 4]); // lc 4, squarefree
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.unit, rat(4));
        assert_eq!(d.factors, vec![(p.monic(), 1)]);
    }

    #[test]
    fn squarefree_reconstruction_on_random_products() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            // Random product of distinct linear factors with multiplicities.
            let mut p = Poly::constant(Var::Y, ratq(rng.gen_range(1..=5), 1));
            let mut roots: Vec<i64> = vec![];
            for _ in 0..rng.gen_range(1..=3) {
                let r = rng.gen_range(-5..=5);
                if roots.contains(&r) {
                    continue;
                }
                roots.push(r);
                let e = rng.gen_range(1..=3);
                p = &p * &y(&[-r, 1]).pow(e);
            }
            let d = squarefree_decompose(&p).unwrap();
            assert_eq!(d.reconstruct(Var::Y), p);
            for (f, _) in &d.factors {
                assert_eq!(f.squarefree_part(), f.monic());
            }
        }
    }

    #[test]
    fn resultant_linear_case_is_evaluation() {
        // Res_Y(Y - a, q) = q(a) up to sign
        let a = ratq(5, 2);
        let p = Poly::new(Var::Y, vec![-a.clone(), rat(1)]);
        let q = y(&[1, -3, 2]);
        let r = resultant(&p, &q).unwrap();
        assert!(r == q.eval(&a) || r == -q.eval(&a));
    }

    #[test]
    fn resultant_of_poly_with_itself_is_zero() {
        let p = y(&[1, 2, 3]);
        assert!(resultant(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn resultant_matches_product_formula_on_split_polys() {
        // p with known rational roots: Res(p, q) = lc(p)^deg q * prod q(root)
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let roots: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-4..=4)).collect();
            let lead = rng.gen_range(1..=3);
            let mut p = Poly::constant(Var::Y, rat(lead));
            for &r in &roots {
                p = &p * &y(&[-r, 1]);
            }
            let q = random_nonzero_poly(&mut rng, 3);
            let mut expect = num::pow::pow(rat(lead), q.deg());
            for &r in &roots {
                expect *= q.eval(&rat(r));
            }
            let got = resultant(&p, &q).unwrap();
            assert!(got == expect || got == -expect.clone(), "{} vs {}", got, expect);
        }
    }

    #[test]
    fn shift_and_compose() {
        // (Y-1)^2 shifted by 1 is Y^2
        let p = y(&[1, -2, 1]);
        assert_eq!(p.shift(&rat(1)), y(&[0, 0, 1]));
        let q = y(&[0, 0, 1]).compose(&y(&[1, 1]));
        assert_eq!(q, y(&[1, 2, 1]));
    }

    #[test]
    fn display_is_readable() {
        let p = Poly::new(Var::Y, vec![rat(1), ratq(-3, 2), rat(0), rat(1)]);
        assert_eq!(p.to_string(), "y^3 - 3/2*y + 1");
        assert_eq!(Poly::zero(Var::X).to_string(), "0");
    }
}
