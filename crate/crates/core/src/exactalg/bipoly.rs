//! Polynomials in an outer variable whose coefficients are polynomials in an
//! inner variable, plus the fraction-free determinant that powers both
//! resultant routines.
//!
//! The only consumer with polynomial coefficients is the Rothstein-Trager
//! resultant `Res_Y(den, num - t*den')`, where the inner variable is `t`.

use super::{AlgError, Poly, Var};

/// Fraction-free (Bareiss) determinant over an integral domain given by
/// closures. All divisions performed are exact by the Bareiss identity.
pub(crate) fn bareiss_det<T: Clone>(
    mut m: Vec<Vec<T>>,
    one: T,
    mul: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
    exact_div: impl Fn(&T, &T) -> T,
    is_zero: impl Fn(&T) -> bool,
) -> T {
    let n = m.len();
    if n == 0 {
        return one;
    }
    let zero = sub(&one, &one);
    let mut sign_flip = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = sub(&mul(&m[k][k], &m[i][j]), &mul(&m[i][k], &m[k][j]));
                m[i][j] = exact_div(&t, &prev);
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        sub(&zero, &det)
    } else {
        det
    }
}

/// Polynomial in `outer` whose coefficients are polynomials in `inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    outer: Var,
    inner: Var,
    coeffs: Vec<Poly>,
}

impl BiPoly {
    /// Coefficients listed by ascending degree in the outer variable; each
    /// must be tagged with the inner variable. Trailing zeros are stripped.
    pub fn new(outer: Var, inner: Var, mut coeffs: Vec<Poly>) -> Self {
        assert_ne!(outer, inner, "outer and inner variables must differ");
        for c in &coeffs {
            assert_eq!(c.var(), inner, "coefficient variable must be the inner variable");
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { outer, inner, coeffs }
    }

    /// Lifts a plain polynomial: coefficients become inner-variable constants.
    pub fn lift(p: &Poly, inner: Var) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| Poly::constant(inner, c.clone()))
            .collect();
        BiPoly::new(p.var(), inner, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.inner))
    }

    /// Resultant with respect to the outer variable; the result is a
    /// polynomial in the inner variable.
    pub fn resultant_outer(&self, other: &BiPoly) -> Result<Poly, AlgError> {
        if self.outer != other.outer || self.inner != other.inner {
            return Err(AlgError::VarMismatch(self.outer, other.outer));
        }
        if self.is_zero() || other.is_zero() {
            return Err(AlgError::ZeroInput("resultant"));
        }
        let m = self.degree().unwrap();
        let n = other.degree().unwrap();
        let one = Poly::one(self.inner);
        if m == 0 {
            return Ok(poly_pow(&self.coeff(0), n));
        }
        if n == 0 {
            return Ok(poly_pow(&other.coeff(0), m));
        }
        let size = m + n;
        let zero = Poly::zero(self.inner);
        let mut mat = vec![vec![zero; size]; size];
        for row in 0..n {
            for i in 0..=m {
                mat[row][row + m - i] = self.coeff(i);
            }
        }
        for row in 0..m {
            for i in 0..=n {
                mat[n + row][row + n - i] = other.coeff(i);
            }
        }
        Ok(bareiss_det(
            mat,
            one,
            |a, b| a * b,
            |a, b| a - b,
            |a, b| a.exact_div(b),
            |a| a.is_zero(),
        ))
    }
}

fn poly_pow(p: &Poly, exp: usize) -> Poly {
    let mut acc = Poly::one(p.var());
    for _ in 0..exp {
        acc = &acc * p;
    }
    acc
}
