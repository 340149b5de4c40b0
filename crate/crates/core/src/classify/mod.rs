//! The verdict engines: autonomous classification, general-type
//! certification, the Abel shortcut, Riccati Moebius transforms, and
//! Weierstrass validation.
//!
//! Weierstrass and Riccati *membership* for arbitrary equations is not
//! decided anywhere here: the supported entry points are syntactic (given
//! coefficients), and `certify_general` is a sufficient criterion whose
//! Inconclusive outcome is not a classification. No Algebraic verdict is
//! ever emitted.

mod autonomous;
mod general;
mod riccati;
mod weierstrass;

pub use autonomous::{
    classify_autonomous, AutonomousVerdict, ExactCertificate, ExponentialCertificate,
    GeneralEvidence, UnknownEvidence,
};
pub use general::{
    certify_general, classify_abel, GeneralCertification, GeneralTypeCertificate, Hypotheses,
};
pub use riccati::{mobius_riccati, Mobius, RiccatiCoeffs};
pub use weierstrass::{
    iso_over_kbar, j_invariant, weierstrass_validate, Validity, WeierstrassData,
};
