//! Differentiation and integration analysis of rational functions.
//!
//! The questions answered here are existence questions: does an element of
//! C(x) (or a constant) have an antiderivative in its own field, and is a
//! rational function a logarithmic derivative up to a constant scale. Both
//! reduce to residue conditions computed exactly.

mod factor;
mod hermite;
mod residues;

pub use factor::{factor_shapes, rational_roots, FactorShape, ShapeFactorization};
pub use hermite::{hermite_reduce, HermiteResult};
pub use residues::{
    residue_profile, residues_commensurable, rt_resultant, Commensurability, ResidueProfile,
    ScaleClassWitness,
};

use crate::exactalg::{AlgError, BigRat, CoeffField, Poly, RatFn};
use num::Zero;
use std::fmt;

/// Which derivation the scalars carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationMode {
    /// Scalars are constants; the derivation is identically zero.
    ConstantsQ,
    /// Scalars are rational functions of x; the derivation is d/dx.
    RationalQx,
}

impl fmt::Display for DerivationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationMode::ConstantsQ => f.write_str("const"),
            DerivationMode::RationalQx => f.write_str("qx"),
        }
    }
}

/// Exact derivative of a rational function with respect to its variable.
pub fn derive(w: &RatFn) -> RatFn {
    w.derivative()
}

/// Why an element has no antiderivative in its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Nonzero constant under the zero derivation.
    NonzeroConstant { value: BigRat },
    /// Nonzero residues: the residue resultant of the Hermite remainder and
    /// whatever rational roots it has.
    NonzeroResidues { resultant: Poly, rational_residues: Vec<BigRat> },
}

/// Answer to "does w have an antiderivative in its field".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldAntiderivative<F> {
    Yes { witness: F },
    No { evidence: Obstruction },
}

impl<F> FieldAntiderivative<F> {
    pub fn is_yes(&self) -> bool {
        matches!(self, FieldAntiderivative::Yes { .. })
    }
}

/// Antiderivative existence for a rational function in its own variable:
/// yes iff the proper part of the Hermite remainder vanishes (all residues
/// zero); polynomial parts always integrate by the power rule.
pub fn antiderivative_in_field(w: &RatFn) -> FieldAntiderivative<RatFn> {
    let reduced = hermite_reduce(w);
    let (poly_rem, proper_rem) = reduced.remainder.split_polynomial_part();
    if proper_rem.is_zero() {
        let witness = &reduced.rational_part + &RatFn::from_poly(poly_rem.antiderivative());
        debug_assert_eq!(witness.derivative(), *w);
        return FieldAntiderivative::Yes { witness };
    }
    let resultant =
        rt_resultant(&proper_rem).expect("hermite remainder is proper with squarefree den");
    let (rational_residues, _) = rational_roots(&resultant);
    FieldAntiderivative::No {
        evidence: Obstruction::NonzeroResidues { resultant, rational_residues },
    }
}

/// Antiderivative existence in the given derivation mode.
///
/// In `ConstantsQ` mode the input must be a scalar; only zero integrates.
/// In `RationalQx` mode the decision runs over the function field of the
/// carried variable.
pub fn has_antiderivative(
    w: &RatFn,
    mode: DerivationMode,
) -> Result<FieldAntiderivative<RatFn>, AlgError> {
    match mode {
        DerivationMode::ConstantsQ => {
            let c = w.as_constant().ok_or_else(|| {
                AlgError::Precondition(
                    "ConstantsQ mode requires a scalar input (the derivation is zero)".into(),
                )
            })?;
            if c.is_zero() {
                Ok(FieldAntiderivative::Yes { witness: RatFn::zero(w.var()) })
            } else {
                Ok(FieldAntiderivative::No {
                    evidence: Obstruction::NonzeroConstant { value: c },
                })
            }
        }
        DerivationMode::RationalQx => Ok(antiderivative_in_field(w)),
    }
}

/// A coefficient field in which antiderivative existence is decidable.
pub trait Integrable: CoeffField {
    const MODE: DerivationMode;
    fn antiderivative(&self) -> FieldAntiderivative<Self>;
}

impl Integrable for BigRat {
    const MODE: DerivationMode = DerivationMode::ConstantsQ;
    fn antiderivative(&self) -> FieldAntiderivative<BigRat> {
        if self.is_zero() {
            FieldAntiderivative::Yes { witness: BigRat::zero() }
        } else {
            FieldAntiderivative::No {
                evidence: Obstruction::NonzeroConstant { value: self.clone() },
            }
        }
    }
}

impl Integrable for RatFn {
    const MODE: DerivationMode = DerivationMode::RationalQx;
    fn antiderivative(&self) -> FieldAntiderivative<RatFn> {
        antiderivative_in_field(self)
    }
}

/// Outcome of the logarithmic-derivative recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogDerivative {
    /// `w = c * g'/g`-shaped: no polynomial part, simple poles, commensurable
    /// residues. The profile is the scale-class certificate.
    Yes { profile: ResidueProfile },
    No { reason: String },
    Unknown { reason: String, profile: ResidueProfile },
}

impl LogDerivative {
    pub fn is_yes(&self) -> bool {
        matches!(self, LogDerivative::Yes { .. })
    }
}

/// Recognizes `w = c * sum m_i/(y - c_i)`: zero polynomial part, squarefree
/// denominator, and commensurable residues.
pub fn is_log_derivative_form(w: &RatFn) -> LogDerivative {
    if w.is_zero() {
        return LogDerivative::No { reason: "zero input".into() };
    }
    let profile = residue_profile(w);
    if !profile.poly_part_zero {
        return LogDerivative::No { reason: "nonzero polynomial part".into() };
    }
    if !profile.simple_poles_only {
        return LogDerivative::No { reason: "pole of order >= 2".into() };
    }
    match &profile.commensurable {
        Commensurability::Yes(_) => LogDerivative::Yes { profile },
        Commensurability::No { reason } => LogDerivative::No { reason: reason.clone() },
        Commensurability::Unknown { reason } => {
            let reason = reason.clone();
            LogDerivative::Unknown { reason, profile }
        }
    }
}
