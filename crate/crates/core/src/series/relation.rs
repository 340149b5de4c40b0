//! Bounded-degree algebraic relation search over truncated series.
//!
//! The search matches coefficients of a candidate polynomial relation (total
//! degree <= d over the input series, polynomial-in-x coefficients of degree
//! <= dx) against the first N+1 series coefficients, computes an exact
//! rational nullspace by fraction-free elimination, and accepts a candidate
//! only if it re-verifies on the full supplied truncation (callers pass
//! series at truncation 2N). NoneAtBounds is a bounded-search outcome, never
//! a proof of independence.

use super::trunc::TruncSeries;
use crate::exactalg::{AlgError, BigRat, Poly, Var};
use num::{BigInt, One, Zero};

/// A verified relation: sum over monomials of (coefficient in Q[x]) times
/// (product of the input series with the given exponents) vanishes to the
/// verified order. The first nonzero coefficient (in column order) is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCandidate {
    /// `(exponent vector over the input series, coefficient polynomial)`.
    pub terms: Vec<(Vec<u32>, Poly)>,
    pub degree_bound: usize,
    pub x_degree_bound: usize,
    pub solve_order: usize,
    pub verified_order: usize,
}

/// Outcome of the bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationSearch {
    Found(RelationCandidate),
    NoneAtBounds {
        degree_bound: usize,
        x_degree_bound: usize,
        solve_order: usize,
    },
}

impl RelationSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, RelationSearch::Found(_))
    }
}

/// Margin between equation count and unknown count; makes spurious
/// truncation-level relations improbable (re-verification at the full
/// truncation makes acceptance exact regardless).
const SAFETY_MARGIN: usize = 10;

/// Searches for an exact algebraic relation among the series at the given
/// bounds, solving on coefficients 0..=n and re-verifying candidates on the
/// full truncation of the inputs, which must be at least 2n.
pub fn find_algebraic_relation(
    series: &[TruncSeries],
    d: usize,
    dx: usize,
    n: usize,
) -> Result<RelationSearch, AlgError> {
    if series.is_empty() || d == 0 {
        return Err(AlgError::Precondition(
            "need at least one series and degree bound >= 1".into(),
        ));
    }
    let full = series[0].order();
    if series.iter().any(|s| s.order() != full) {
        return Err(AlgError::Precondition("series must share one truncation order".into()));
    }
    if full < 2 * n {
        return Err(AlgError::Precondition(format!(
            "series truncation {} too small: re-verification needs 2N = {}",
            full,
            2 * n
        )));
    }
    let monos = monomials(series.len(), d);
    let unknowns = monos.len() * (dx + 1);
    if n < unknowns + SAFETY_MARGIN {
        return Err(AlgError::Precondition(format!(
            "truncation order {} too small for {} unknowns (margin {})",
            n, unknowns, SAFETY_MARGIN
        )));
    }

    // Column (mono, e): series of x^e * prod u_i^{alpha_i}, rows 0..=n.
    let mut columns: Vec<Vec<BigRat>> = Vec::with_capacity(unknowns);
    let full_products: Vec<TruncSeries> =
        monos.iter().map(|m| monomial_series(series, m, full)).collect();
    for prod in &full_products {
        for e in 0..=dx {
            let mut col = Vec::with_capacity(n + 1);
            for row in 0..=n {
                col.push(if row >= e { prod.coeff(row - e) } else { BigRat::zero() });
            }
            columns.push(col);
        }
    }

    let basis = rational_nullspace(&columns, n + 1);
    if basis.is_empty() {
        return Ok(RelationSearch::NoneAtBounds {
            degree_bound: d,
            x_degree_bound: dx,
            solve_order: n,
        });
    }

    for vector in basis {
        let candidate = build_candidate(&monos, &vector, d, dx, n, full);
        if verify_relation(&candidate, &monos, &full_products) {
            return Ok(RelationSearch::Found(candidate));
        }
    }
    Ok(RelationSearch::NoneAtBounds {
        degree_bound: d,
        x_degree_bound: dx,
        solve_order: n,
    })
}

/// Evaluates the relation against the monomial products at full truncation
/// and checks that every coefficient vanishes.
fn verify_relation(
    candidate: &RelationCandidate,
    monos: &[Vec<u32>],
    full_products: &[TruncSeries],
) -> bool {
    let full = full_products[0].order();
    let mut acc = TruncSeries::zero(full);
    for (alpha, coeff) in &candidate.terms {
        let pos = monos.iter().position(|m| m == alpha).expect("known monomial");
        let mut poly_series = vec![BigRat::zero(); full + 1];
        for (e, c) in coeff.coeffs().iter().enumerate() {
            if e <= full {
                poly_series[e] = c.clone();
            }
        }
        let coeff_series = TruncSeries::new(poly_series);
        acc = acc.add(&coeff_series.mul(&full_products[pos]));
    }
    acc.is_zero()
}

fn build_candidate(
    monos: &[Vec<u32>],
    vector: &[BigRat],
    d: usize,
    dx: usize,
    n: usize,
    full: usize,
) -> RelationCandidate {
    let mut terms = Vec::new();
    for (mi, mono) in monos.iter().enumerate() {
        let coeffs: Vec<BigRat> = (0..=dx).map(|e| vector[mi * (dx + 1) + e].clone()).collect();
        let p = Poly::new(Var::X, coeffs);
        if !p.is_zero() {
            terms.push((mono.clone(), p));
        }
    }
    RelationCandidate {
        terms,
        degree_bound: d,
        x_degree_bound: dx,
        solve_order: n,
        verified_order: full,
    }
}

/// All exponent vectors of total degree <= d, graded lexicographic.
pub fn monomials(count: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..=d {
        let mut current = vec![0u32; count];
        fill(0, total as u32, &mut current, &mut out);
    }
    out
}

fn fill(pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos == current.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    for take in (0..=remaining).rev() {
        current[pos] = take;
        fill(pos + 1, remaining - take, current, out);
    }
    current[pos] = 0;
}

fn monomial_series(series: &[TruncSeries], alpha: &[u32], order: usize) -> TruncSeries {
    let mut acc = TruncSeries::constant(BigRat::one(), order);
    for (u, &e) in series.iter().zip(alpha) {
        for _ in 0..e {
            acc = acc.mul(&u.truncate(order));
        }
    }
    acc
}

/// Exact rational nullspace basis of the matrix whose columns are given,
/// via fraction-free (Bareiss) row echelon over cleared-integer rows and
/// rational back-substitution. First nonzero entry of each basis vector is 1.
fn rational_nullspace(columns: &[Vec<BigRat>], rows: usize) -> Vec<Vec<BigRat>> {
    let ncols = columns.len();
    // Row-major integer matrix: scale each row by the lcm of denominators.
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut lcm = BigInt::one();
        for col in columns {
            lcm = num::integer::lcm(lcm, col[r].denom().clone());
        }
        let row: Vec<BigInt> = columns
            .iter()
            .map(|col| col[r].numer() * (&lcm / col[r].denom()))
            .collect();
        mat.push(row);
    }

    // Fraction-free elimination with column pivot tracking.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot_row = (rank..rows).find(|&r| !mat[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        mat.swap(rank, pr);
        let pivot = mat[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..ncols {
                let t = &pivot * &mat[r][c] - &mat[r][col] * &mat[rank][c];
                mat[r][c] = &t / &prev;
            }
            mat[r][col] = BigInt::zero();
        }
        prev = pivot;
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    let pivot_set: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &free in &free_cols {
        let mut v = vec![BigRat::zero(); ncols];
        v[free] = BigRat::one();
        // Back-substitute pivot variables from the echelon rows.
        for (i, &pc) in pivot_cols.iter().enumerate().rev() {
            let mut acc = BigRat::zero();
            for c in pc + 1..ncols {
                if mat[i][c].is_zero() || v[c].is_zero() {
                    continue;
                }
                acc += BigRat::from_integer(mat[i][c].clone()) * &v[c];
            }
            v[pc] = -acc / BigRat::from_integer(mat[i][pc].clone());
        }
        // Normalize: first nonzero coefficient is 1.
        let first = v.iter().position(|c| !c.is_zero()).expect("nonzero vector");
        let scale = v[first].clone();
        for c in v.iter_mut() {
            *c = &*c / &scale;
        }
        basis.push(v);
    }
    basis
}
