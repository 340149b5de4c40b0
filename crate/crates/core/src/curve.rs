//! Bivariate differential polynomials f(Y, Z) and their branch expansions.
//!
//! At a simple point at the origin with tangent line Z, the curve f(Y, Z) = 0
//! has a unique Y-adic expansion Z = lambda_2 Y^2 + lambda_3 Y^3 + ... whose
//! coefficients are solved order by order; each lambda is determined linearly
//! because dF/dZ does not vanish at the origin.

use crate::exactalg::{AlgError, CoeffField};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in (Y, Z) over a coefficient field; models f(y, y').
///
/// Irreducibility of f is *not* decided here; it is a documented caller
/// hypothesis surfaced in certificates as `irreducibility_unverified`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiDiffPoly<F: CoeffField> {
    terms: BTreeMap<(u32, u32), F>,
}

impl<F: CoeffField> BiDiffPoly<F> {
    /// Builds from `(deg_Y, deg_Z) -> coefficient` entries; zero coefficients
    /// are dropped. Errors on the zero polynomial.
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), F)>) -> Result<Self, AlgError> {
        let mut map = BTreeMap::new();
        for ((i, j), c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry((i, j)).or_insert_with(F::zero);
            *entry = entry.add_ref(&c);
            if entry.is_zero() {
                map.remove(&(i, j));
            }
        }
        if map.is_empty() {
            return Err(AlgError::ZeroInput("BiDiffPoly"));
        }
        Ok(BiDiffPoly { terms: map })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_y: u32, deg_z: u32) -> F {
        self.terms.get(&(deg_y, deg_z)).cloned().unwrap_or_else(F::zero)
    }

    /// True if some term involves Z; a differential equation must.
    pub fn involves_z(&self) -> bool {
        self.terms.keys().any(|&(_, j)| j >= 1)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn deg_z(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Multiplies every coefficient by a nonzero constant.
    pub fn scale(&self, c: &F) -> Result<Self, AlgError> {
        if c.is_zero() {
            return Err(AlgError::ZeroInput("scale"));
        }
        BiDiffPoly::new(self.terms.iter().map(|(&k, v)| (k, v.mul_ref(c))))
    }

    /// Evaluates at a point of the coefficient field.
    pub fn eval(&self, y: &F, z: &F) -> F {
        let max_i = self.deg_y() as usize;
        let max_j = self.deg_z() as usize;
        let y_pows = powers(y, max_i);
        let z_pows = powers(z, max_j);
        let mut acc = F::zero();
        for (&(i, j), c) in &self.terms {
            acc = acc.add_ref(&c.mul_ref(&y_pows[i as usize]).mul_ref(&z_pows[j as usize]));
        }
        acc
    }

    /// Partial derivative with respect to Z, evaluated at a point.
    pub fn eval_dz(&self, y: &F, z: &F) -> F {
        let y_pows = powers(y, self.deg_y() as usize);
        let z_pows = powers(z, self.deg_z() as usize);
        let mut acc = F::zero();
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                continue;
            }
            let jf = F::from_rat(crate::exactalg::rat(j as i64));
            acc = acc.add_ref(
                &c.mul_ref(&jf)
                    .mul_ref(&y_pows[i as usize])
                    .mul_ref(&z_pows[(j - 1) as usize]),
            );
        }
        acc
    }

    /// `g(Y, Z) = f(Y + y0, Z + z0)`, exactly.
    pub fn translate(&self, y0: &F, z0: &F) -> Self {
        let mut out: BTreeMap<(u32, u32), F> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let y_exp = binomial_expansion(y0, i);
            let z_exp = binomial_expansion(z0, j);
            for (a, ca) in y_exp.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in z_exp.iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let add = c.mul_ref(ca).mul_ref(cb);
                    let key = (a as u32, b as u32);
                    let entry = out.entry(key).or_insert_with(F::zero);
                    *entry = entry.add_ref(&add);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        debug_assert!(!out.is_empty(), "translation of a nonzero polynomial is nonzero");
        BiDiffPoly { terms: out }
    }
}

/// `(v + X)^n` as coefficients of X^k: binom(n, k) v^(n-k).
fn binomial_expansion<F: CoeffField>(v: &F, n: u32) -> Vec<F> {
    let v_pows = powers(v, n as usize);
    let mut binom = crate::exactalg::BigRat::from_integer(1.into());
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let c = F::from_rat(binom.clone()).mul_ref(&v_pows[(n - k) as usize]);
        out.push(c);
        if k < n {
            binom = binom * crate::exactalg::ratq((n - k) as i64, (k + 1) as i64);
        }
    }
    out
}

fn powers<F: CoeffField>(v: &F, n: usize) -> Vec<F> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(F::one());
    for _ in 0..n {
        let last = out.last().unwrap();
        out.push(last.mul_ref(v));
    }
    out
}

/// Why the simple-point/tangent check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplePointFailure {
    /// f(0,0) != 0.
    NotThroughOrigin,
    /// Both first partials vanish at the origin.
    SingularPoint,
    /// The tangent line at the origin is not Z = 0.
    TangentNotZ,
}

impl fmt::Display for SimplePointFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplePointFailure::NotThroughOrigin => f.write_str("curve does not pass through (0,0)"),
            SimplePointFailure::SingularPoint => {
                f.write_str("(0,0) is a singular point: both partial derivatives vanish")
            }
            SimplePointFailure::TangentNotZ => f.write_str("tangent line at (0,0) is not Z"),
        }
    }
}

/// Checks that (0,0) is a simple point of f with tangent line Z:
/// f(0,0) = 0, dF/dZ(0,0) != 0 and dF/dY(0,0) = 0.
pub fn simple_point_tangent_z<F: CoeffField>(f: &BiDiffPoly<F>) -> Result<(), SimplePointFailure> {
    if !f.coeff(0, 0).is_zero() {
        return Err(SimplePointFailure::NotThroughOrigin);
    }
    let fy = f.coeff(1, 0);
    let fz = f.coeff(0, 1);
    if fz.is_zero() {
        if fy.is_zero() {
            return Err(SimplePointFailure::SingularPoint);
        }
        return Err(SimplePointFailure::TangentNotZ);
    }
    if !fy.is_zero() {
        return Err(SimplePointFailure::TangentNotZ);
    }
    Ok(())
}

/// The Y-adic expansion `Z = lambda_2 Y^2 + ... + lambda_N Y^N` of the curve
/// branch at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchExpansion<F: CoeffField> {
    lambdas: Vec<F>,
    order: usize,
}

impl<F: CoeffField> BranchExpansion<F> {
    /// `lambda_k` for `2 <= k <= order`.
    pub fn lambda(&self, k: usize) -> &F {
        assert!((2..=self.order).contains(&k), "lambda index out of range");
        &self.lambdas[k - 2]
    }

    pub fn lambdas(&self) -> &[F] {
        &self.lambdas
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// Solves the branch expansion to order `n >= 3`.
///
/// Requires `simple_point_tangent_z(f)`; the residual
/// `f(Y, sum lambda_i Y^i)` is verified to vanish mod `Y^(n+1)` before the
/// expansion is returned.
pub fn branch_expand<F: CoeffField>(
    f: &BiDiffPoly<F>,
    n: usize,
) -> Result<BranchExpansion<F>, AlgError> {
    if n < 3 {
        return Err(AlgError::Precondition("branch expansion order must be >= 3".into()));
    }
    if let Err(fail) = simple_point_tangent_z(f) {
        return Err(AlgError::Precondition(fail.to_string()));
    }
    let fz0 = f.coeff(0, 1);
    let fz0_inv = fz0.inverse().expect("checked nonzero");
    // s holds the partial expansion as coefficients of Y^0..Y^n.
    let mut s = vec![F::zero(); n + 1];
    let mut lambdas = Vec::with_capacity(n - 1);
    for k in 2..=n {
        let residual = eval_on_series(f, &s, k + 1);
        let lambda = residual[k].mul_ref(&fz0_inv).neg_ref();
        s[k] = lambda.clone();
        lambdas.push(lambda);
    }
    let residual = eval_on_series(f, &s, n + 1);
    if residual.iter().any(|c| !c.is_zero()) {
        return Err(AlgError::Precondition(
            "branch expansion residual failed to vanish".into(),
        ));
    }
    Ok(BranchExpansion { lambdas, order: n })
}

/// Residual of the expansion: coefficients of `f(Y, s(Y))` mod `Y^len`.
pub(crate) fn eval_on_series<F: CoeffField>(
    f: &BiDiffPoly<F>,
    s: &[F],
    len: usize,
) -> Vec<F> {
    let max_j = f.deg_z() as usize;
    // Truncated powers of s.
    let mut s_pows: Vec<Vec<F>> = Vec::with_capacity(max_j + 1);
    let mut one = vec![F::zero(); len];
    one[0] = F::one();
    s_pows.push(one);
    for _ in 0..max_j {
        let prev = s_pows.last().unwrap();
        s_pows.push(mul_trunc(prev, s, len));
    }
    let mut acc = vec![F::zero(); len];
    for (&(i, j), c) in &f.terms {
        let i = i as usize;
        if i >= len {
            continue;
        }
        let pw = &s_pows[j as usize];
        for k in 0..len - i {
            if pw[k].is_zero() {
                continue;
            }
            acc[i + k] = acc[i + k].add_ref(&c.mul_ref(&pw[k]));
        }
    }
    acc
}

fn mul_trunc<F: CoeffField>(a: &[F], b: &[F], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add_ref(&ai.mul_ref(bj));
        }
    }
    out
}
