//! Canonical quotients of univariate polynomials.
//!
//! Invariants maintained by every constructor: the denominator is monic and
//! nonzero, numerator and denominator are coprime, and zero is `0/1`.

use super::poly::gcd_monic;
use super::{AlgError, BigRat, Poly, Var};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    var: Var,
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Builds `num/den` in canonical form. Errors if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgError> {
        if num.var() != den.var() {
            return Err(AlgError::VarMismatch(num.var(), den.var()));
        }
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let var = num.var();
        if num.is_zero() {
            return Ok(RatFn { var, num, den: Poly::one(var) });
        }
        let g = gcd_monic(&num, &den);
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        let lc = den.lc();
        if !lc.is_one() {
            num = num.scale(&(BigRat::one() / &lc));
            den = den.monic();
        }
        let w = RatFn { var, num, den };
        debug_assert!(w.is_canonical());
        Ok(w)
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFn { var, num: p, den: Poly::one(var) }
    }

    pub fn zero(var: Var) -> Self {
        RatFn::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        RatFn::from_poly(Poly::one(var))
    }

    pub fn constant(var: Var, c: BigRat) -> Self {
        RatFn::from_poly(Poly::constant(var, c))
    }

    pub fn var_fn(var: Var) -> Self {
        RatFn::from_poly(Poly::var_poly(var))
    }

    fn is_canonical(&self) -> bool {
        !self.den.is_zero()
            && self.den.lc().is_one()
            && (self.num.is_zero() && self.den.is_one()
                || gcd_monic(&self.num, &self.den).is_one())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn assert_same_var(&self, other: &RatFn) {
        assert_eq!(
            self.var, other.var,
            "rational-function arithmetic across variables ({} vs {})",
            self.var, other.var
        );
    }

    pub fn inverse(&self) -> Result<RatFn, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// Derivative with respect to the carried variable (quotient rule).
    pub fn derivative(&self) -> RatFn {
        if self.is_polynomial() {
            return RatFn::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFn::new(num, den).expect("nonzero denominator squared")
    }

    /// Evaluates at a point where the denominator does not vanish.
    pub fn eval(&self, x: &BigRat) -> Result<BigRat, AlgError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Splits into polynomial part and proper part: `self = poly + proper`
    /// with `deg num(proper) < deg den(proper)`.
    pub fn split_polynomial_part(&self) -> (Poly, RatFn) {
        let (q, r) = self.num.divrem(&self.den);
        let proper = RatFn { var: self.var, num: r, den: self.den.clone() };
        debug_assert!(proper.num.is_zero() || proper.num.deg() < proper.den.deg());
        (q, proper)
    }

    /// True when `deg num < deg den` (zero counts as proper).
    pub fn is_proper(&self) -> bool {
        self.num.is_zero() || !self.is_polynomial() && self.num.deg() < self.den.deg()
    }

    /// Substitutes `var + a` for the variable.
    pub fn shift(&self, a: &BigRat) -> RatFn {
        RatFn::new(self.num.shift(a), self.den.shift(a)).expect("shift preserves nonzero den")
    }

    /// Retags the variable without touching coefficients.
    pub fn with_var(&self, var: Var) -> RatFn {
        RatFn {
            var,
            num: self.num.with_var(var),
            den: self.den.with_var(var),
        }
    }

    pub fn scale(&self, c: &BigRat) -> RatFn {
        if c.is_zero() {
            return RatFn::zero(self.var);
        }
        RatFn { var: self.var, num: self.num.scale(c), den: self.den.clone() }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        // The denominator is monic, so a single-term denominator is a bare
        // power and needs no parentheses; everything else gets them.
        if atomic(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

fn atomic(p: &Poly) -> bool {
    if p.is_constant() {
        return true;
    }
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    nonzero == 1 && p.lc().is_one()
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        self.assert_same_var(rhs);
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFn::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self.assert_same_var(rhs);
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFn::new(num, den).expect("product of nonzero denominators")
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        self.assert_same_var(rhs);
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RatFn::new(num, den).expect("product of nonzero denominators")
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self.assert_same_var(rhs);
        assert!(!rhs.is_zero(), "division by the zero rational function");
        let num = &self.num * &rhs.den;
        let den = &self.den * &rhs.num;
        RatFn::new(num, den).expect("nonzero denominator")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            var: self.var,
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl num::Zero for RatFn {
    fn zero() -> Self {
        // Coefficient-field rational functions are always functions of x.
        RatFn::zero(Var::X)
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

impl num::One for RatFn {
    fn one() -> Self {
        RatFn::one(Var::X)
    }
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
    fn canonical_form() {
        // (2Y + 2)/(4Y) reduces to (Y + 1)/(2Y): monic den, coprime
        let f = w(&[2, 2], &[0, 4]);
        assert_eq!(f.num(), &Poly::new(Var::Y, vec![ratq(1, 2), ratq(1, 2)]));
        assert_eq!(f.den(), &Poly::from_ints(Var::Y, &[0, 1]));
        assert!(f.den().lc().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFn::new(Poly::one(Var::Y), Poly::zero(Var::Y)),
            Err(AlgError::DivisionByZero)
        ));
    }

    #[test]
    fn derivative_of_inverse_y() {
        // d/dY (1/Y) = -1/Y^2
        let f = w(&[1], &[0, 1]);
        assert_eq!(f.derivative(), w(&[-1], &[0, 0, 1]));
    }

    #[test]
    fn derivative_product_rule_holds() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..100 {
            let a = random_ratfn(&mut rng);
            let b = random_ratfn(&mut rng);
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            assert_eq!(lhs, rhs);
        }
    }

    fn random_ratfn(rng: &mut StdRng) -> RatFn {
        loop {
            let num = Poly::new(
                Var::Y,
                (0..rng.gen_range(1..=4)).map(|_| rat(rng.gen_range(-5..=5))).collect(),
            );
            let den = Poly::new(
                Var::Y,
                (0..rng.gen_range(1..=4)).map(|_| rat(rng.gen_range(-5..=5))).collect(),
            );
            if den.is_zero() {
                continue;
            }
            return RatFn::new(num, den).unwrap();
        }
    }

    #[test]
    fn polynomial_split() {
        // (Y+1)/Y = 1 + 1/Y
        let f = w(&[1, 1], &[0, 1]);
        let (p, proper) = f.split_polynomial_part();
        assert_eq!(p, Poly::one(Var::Y));
        assert_eq!(proper, w(&[1], &[0, 1]));
        assert!(proper.is_proper());
    }

    #[test]
    fn field_ops_roundtrip() {
        let a = w(&[1, 2], &[3, 0, 1]);
        let b = w(&[0, 5], &[-1, 1]);
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        let p = &a * &b;
        assert_eq!(&p / &b, a);
        assert_eq!(&a * &a.inverse().unwrap(), RatFn::one(Var::Y));
    }

    #[test]
    fn shift_composes_to_identity() {
        let f = w(&[1, 0, 2], &[1, 1]);
        let g = f.shift(&ratq(3, 2)).shift(&ratq(-3, 2));
        assert_eq!(g, f);
    }
}
