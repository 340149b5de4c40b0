//! Rothstein-Trager residue resultants and the commensurability decision.
//!
//! For a proper fraction with squarefree denominator, the roots of
//! `Res_Y(den, num - t*den')` are exactly the residues at the finite poles.
//! Exponential form requires those residues to be pairwise rational-ratio;
//! that is decided from the shapes of the resultant's irreducible factors
//! without ever constructing an algebraic number.

use super::factor::{factor_shapes, is_square_ratio, FactorShape};
use super::hermite::hermite_reduce;
use crate::exactalg::{
    poly_gcd, rational_gcd, AlgError, BiPoly, BigRat, Poly, RatFn, Var,
};
use num::{BigInt, One, Zero};

/// Monic squarefree Rothstein-Trager resultant of a proper fraction with
/// squarefree denominator. Its roots are the residues of `h`.
pub fn rt_resultant(h: &RatFn) -> Result<Poly, AlgError> {
    if h.is_zero() {
        return Err(AlgError::ZeroInput("rt_resultant"));
    }
    if !h.is_proper() {
        return Err(AlgError::ImproperFraction);
    }
    let den = h.den();
    if !poly_gcd(den, &den.derivative())?.is_one() {
        return Err(AlgError::NotSquarefree);
    }
    let dprime = den.derivative();
    let num = h.num();
    // Coefficients of num - t*den' as polynomials in t.
    let deg = num.deg().max(dprime.deg());
    let mut coeffs = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        coeffs.push(Poly::new(Var::T, vec![num.coeff(i), -dprime.coeff(i)]));
    }
    let lhs = BiPoly::lift(den, Var::T);
    let rhs = BiPoly::new(h.var(), Var::T, coeffs);
    let res = lhs.resultant_outer(&rhs)?;
    Ok(res.squarefree_part())
}

/// How residues relate to a single common scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleClassWitness {
    /// All residues rational: `residue_i = scale * multiple_i` with integer
    /// multiples whose gcd is 1.
    RationalResidues { scale: BigRat, multiples: Vec<BigInt> },
    /// All residues are roots of binomials `t^2 - a_i` with `a_i = s_i^2 *
    /// base`; the common scale is a square root of `base`, which need not be
    /// rational.
    QuadraticScaleClass { base: BigRat, scales: Vec<BigRat> },
}

/// Outcome of the commensurability decision. `Unknown` is first-class and is
/// never silently collapsed into `No`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Commensurability {
    Yes(ScaleClassWitness),
    No { reason: String },
    Unknown { reason: String },
}

impl Commensurability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Commensurability::Yes(_))
    }
}

/// Decides whether all roots of a monic squarefree polynomial (with nonzero
/// constant term) have pairwise rational ratios.
///
/// Decision rule: factor over Q; Yes when all irreducible factors are linear
/// (common denominator), or all are quadratic binomials `t^2 - a_i` with
/// every `a_i/a_j` a rational square. Any factor of degree >= 3, any
/// non-binomial quadratic, and any mix of shapes forces No. Unknown only
/// when the factorization fell back to "unfactored".
pub fn residues_commensurable(r: &Poly) -> Result<Commensurability, AlgError> {
    if r.is_zero() || r.is_constant() {
        return Err(AlgError::ZeroInput("residues_commensurable"));
    }
    if r.coeff(0).is_zero() {
        return Err(AlgError::Precondition(
            "residue resultant vanishes at 0; zero residues must be excluded upstream".into(),
        ));
    }
    if !r.lc().is_one() || !r.squarefree_part().eq(&r.monic()) {
        return Err(AlgError::Precondition(
            "residue resultant must be monic and squarefree".into(),
        ));
    }
    let f = factor_shapes(r);
    if let Some(tail) = &f.unfactored {
        return Ok(Commensurability::Unknown {
            reason: format!(
                "factor of degree {} left unfactored (factorization supports degree <= 4)",
                tail.deg()
            ),
        });
    }
    let all_linear = f.factors.iter().all(|&(_, s)| s == FactorShape::Linear);
    let all_binomial = f
        .factors
        .iter()
        .all(|&(_, s)| s == FactorShape::QuadraticBinomial);
    if all_linear {
        let roots: Vec<BigRat> = f.factors.iter().map(|(p, _)| -p.coeff(0)).collect();
        let scale = rational_gcd(&roots);
        let multiples = roots
            .iter()
            .map(|r| {
                let m = r / &scale;
                debug_assert!(m.is_integer());
                m.to_integer()
            })
            .collect();
        return Ok(Commensurability::Yes(ScaleClassWitness::RationalResidues {
            scale,
            multiples,
        }));
    }
    if all_binomial {
        let consts: Vec<BigRat> = f.factors.iter().map(|(p, _)| -p.coeff(0)).collect();
        let base = consts[0].clone();
        let mut scales = Vec::with_capacity(consts.len());
        for a in &consts {
            match is_square_ratio(a, &base) {
                Some(s) => scales.push(s),
                None => {
                    return Ok(Commensurability::No {
                        reason: format!(
                            "binomial constants {} and {} have non-square ratio",
                            a, base
                        ),
                    })
                }
            }
        }
        return Ok(Commensurability::Yes(ScaleClassWitness::QuadraticScaleClass {
            base,
            scales,
        }));
    }
    let reason = if f
        .factors
        .iter()
        .any(|&(ref p, s)| s == FactorShape::Other && p.deg() >= 3)
    {
        "irreducible factor of degree >= 3".to_string()
    } else if f.factors.iter().any(|&(_, s)| s == FactorShape::Other) {
        "non-binomial irreducible quadratic factor".to_string()
    } else {
        "rational residues mixed with irrational ones".to_string()
    };
    Ok(Commensurability::No { reason })
}

/// Residue-level profile of a rational function: where its poles sit, the
/// residue resultant of its Hermite remainder, and the commensurability
/// verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueProfile {
    pub poly_part_zero: bool,
    pub simple_poles_only: bool,
    /// Monic squarefree resultant whose roots are the residues; `1` when
    /// there are no residues at all.
    pub rt_resultant: Poly,
    pub rt_factors: Vec<(Poly, FactorShape)>,
    pub commensurable: Commensurability,
}

impl ResidueProfile {
    pub fn has_residues(&self) -> bool {
        !self.rt_resultant.is_constant()
    }

    /// The rational residues, read off the linear factors.
    pub fn rational_residues(&self) -> Vec<BigRat> {
        let mut rs: Vec<BigRat> = self
            .rt_factors
            .iter()
            .filter(|&&(_, s)| s == FactorShape::Linear)
            .map(|(p, _)| -p.coeff(0))
            .collect();
        rs.sort();
        rs
    }
}

/// Computes the residue profile of `w` through its Hermite remainder.
pub fn residue_profile(w: &RatFn) -> ResidueProfile {
    let (poly_part, _) = w.split_polynomial_part();
    let poly_part_zero = poly_part.is_zero();
    let simple_poles_only = poly_gcd(w.den(), &w.den().derivative())
        .expect("same variable")
        .is_one();
    let reduced = hermite_reduce(w);
    let (_, proper_rem) = reduced.remainder.split_polynomial_part();
    if proper_rem.is_zero() {
        return ResidueProfile {
            poly_part_zero,
            simple_poles_only,
            rt_resultant: Poly::one(Var::T),
            rt_factors: vec![],
            commensurable: Commensurability::No { reason: "no residues".into() },
        };
    }
    let rt = rt_resultant(&proper_rem).expect("hermite remainder is proper with squarefree den");
    let shapes = factor_shapes(&rt);
    let commensurable = residues_commensurable(&rt).expect("rt resultant is monic squarefree");
    ResidueProfile {
        poly_part_zero,
        simple_poles_only,
        rt_resultant: rt,
        rt_factors: shapes.factors,
        commensurable,
    }
}
