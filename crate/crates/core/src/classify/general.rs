//! Certification of general type via the branch-expansion criterion, and the
//! Abel shortcut.
//!
//! The criterion is sufficient only: if both lambda_2 and lambda_3 of the
//! Y-adic expansion have no antiderivative in the base field, the equation is
//! of general type. Inconclusive is a bounded outcome, not a classification.

use crate::curve::{branch_expand, BiDiffPoly};
use crate::exactalg::AlgError;
use crate::ratcalc::{FieldAntiderivative, Integrable, Obstruction};

/// Hypotheses the certificate relies on but does not verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    /// Irreducibility of f is a caller obligation; deciding it exactly is out
    /// of scope, so every certificate records it as unverified.
    pub irreducibility_unverified: bool,
}

impl Default for Hypotheses {
    fn default() -> Self {
        Hypotheses { irreducibility_unverified: true }
    }
}

/// Machine-checkable certificate: re-running the antiderivative decision on
/// the lambdas must reproduce the evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralTypeCertificate<F: Integrable> {
    pub lambda2: F,
    pub lambda3: F,
    pub evidence2: Obstruction,
    pub evidence3: Obstruction,
    pub hypotheses: Hypotheses,
}

/// Outcome of the sufficient criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralCertification<F: Integrable> {
    Certified(GeneralTypeCertificate<F>),
    Inconclusive { reason: String },
}

impl<F: Integrable> GeneralCertification<F> {
    pub fn is_certified(&self) -> bool {
        matches!(self, GeneralCertification::Certified(_))
    }
}

/// Runs the branch-expansion criterion on a curve with a simple point at the
/// origin and tangent line Z (translate first if needed).
pub fn certify_general<F: Integrable>(
    f: &BiDiffPoly<F>,
) -> Result<GeneralCertification<F>, AlgError> {
    if !f.involves_z() {
        return Err(AlgError::Precondition(
            "the polynomial must involve y' to define a differential equation".into(),
        ));
    }
    let expansion = branch_expand(f, 3)?;
    let lambda2 = expansion.lambda(2).clone();
    let lambda3 = expansion.lambda(3).clone();
    certify_from_lambdas(lambda2, lambda3)
}

/// Abel equations y' = a_n y^n + ... + a_3 y^3 + a_2 y^2 (n >= 3): certified
/// general iff a_2 and a_3 both lack antiderivatives. Equivalent to
/// `certify_general` on Z - sum a_i Y^i, where lambda_2 = a_2 and
/// lambda_3 = a_3.
pub fn classify_abel<F: Integrable>(
    coeffs: &[F],
) -> Result<GeneralCertification<F>, AlgError> {
    if coeffs.len() < 2 {
        return Err(AlgError::Precondition(
            "Abel form needs coefficients a_2, a_3, ... with n >= 3".into(),
        ));
    }
    certify_from_lambdas(coeffs[0].clone(), coeffs[1].clone())
}

fn certify_from_lambdas<F: Integrable>(
    lambda2: F,
    lambda3: F,
) -> Result<GeneralCertification<F>, AlgError> {
    let evidence2 = match lambda2.antiderivative() {
        FieldAntiderivative::Yes { witness } => {
            return Ok(GeneralCertification::Inconclusive {
                reason: format!(
                    "lambda_2 = {} has antiderivative {}; the criterion does not apply",
                    lambda2, witness
                ),
            })
        }
        FieldAntiderivative::No { evidence } => evidence,
    };
    let evidence3 = match lambda3.antiderivative() {
        FieldAntiderivative::Yes { witness } => {
            return Ok(GeneralCertification::Inconclusive {
                reason: format!(
                    "lambda_3 = {} has antiderivative {}; the criterion does not apply",
                    lambda3, witness
                ),
            })
        }
        FieldAntiderivative::No { evidence } => evidence,
    };
    Ok(GeneralCertification::Certified(GeneralTypeCertificate {
        lambda2,
        lambda3,
        evidence2,
        evidence3,
        hypotheses: Hypotheses::default(),
    }))
}
