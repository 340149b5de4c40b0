//! Complete classification of rational autonomous equations y' = h(y).
//!
//! With w = 1/h, the equation is of exact type iff w has no residues, of
//! exponential type iff w is a commensurable sum of simple poles, and of
//! general type iff both fail decisively. The only gap is commensurability
//! factoring, which surfaces as an explicit Unknown.

use crate::exactalg::{AlgError, RatFn};
use crate::ratcalc::{
    antiderivative_in_field, residue_profile, Commensurability, FieldAntiderivative,
    ResidueProfile,
};

/// Classification of y' = h(y) with machine-checkable evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutonomousVerdict {
    /// There is t in C(y) with t' = 1 along the equation.
    Exact(ExactCertificate),
    /// There is t in C(y)-bar scale with t' = c t; certified by the residue
    /// scale class.
    Exponential(ExponentialCertificate),
    /// Neither form holds; the evidence shows which conditions broke.
    General(GeneralEvidence),
    /// Commensurability could not be decided (factorization fell back).
    Unknown(UnknownEvidence),
}

impl AutonomousVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            AutonomousVerdict::Exact(_) => "Exact",
            AutonomousVerdict::Exponential(_) => "Exponential",
            AutonomousVerdict::General(_) => "General",
            AutonomousVerdict::Unknown(_) => "Unknown",
        }
    }
}

/// Witness t with dt/dy = 1/h, so that t' = (dt/dy) h = 1 along solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCertificate {
    pub witness: RatFn,
}

/// Residue profile with a commensurability witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentialCertificate {
    pub profile: ResidueProfile,
}

/// Which of the two form conditions failed, and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralEvidence {
    pub profile: ResidueProfile,
    /// Why the antiderivative form is ruled out (always nonzero residues).
    pub exact_obstruction: String,
    /// Why the exponential form is ruled out.
    pub exponential_obstruction: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownEvidence {
    pub profile: ResidueProfile,
    pub reason: String,
}

/// Classifies the rational autonomous equation y' = h(y). Errors on h = 0.
pub fn classify_autonomous(h: &RatFn) -> Result<AutonomousVerdict, AlgError> {
    if h.is_zero() {
        return Err(AlgError::ZeroInput("classify_autonomous: y' = 0 is excluded"));
    }
    let w = h.inverse().expect("nonzero");
    let profile = residue_profile(&w);
    if !profile.has_residues() {
        let witness = match antiderivative_in_field(&w) {
            FieldAntiderivative::Yes { witness } => witness,
            FieldAntiderivative::No { .. } => {
                unreachable!("no residues implies an antiderivative exists")
            }
        };
        debug_assert!((&witness.derivative() * h) == RatFn::one(h.var()));
        return Ok(AutonomousVerdict::Exact(ExactCertificate { witness }));
    }
    let exact_obstruction = format!(
        "nonzero residues (resultant {})",
        profile.rt_resultant
    );
    if !profile.poly_part_zero || !profile.simple_poles_only {
        let mut reasons = Vec::new();
        if !profile.poly_part_zero {
            reasons.push("1/h has a nonzero polynomial part");
        }
        if !profile.simple_poles_only {
            reasons.push("1/h has a pole of order >= 2");
        }
        return Ok(AutonomousVerdict::General(GeneralEvidence {
            profile,
            exact_obstruction,
            exponential_obstruction: reasons.join("; "),
        }));
    }
    match profile.commensurable.clone() {
        Commensurability::Yes(_) => {
            Ok(AutonomousVerdict::Exponential(ExponentialCertificate { profile }))
        }
        Commensurability::No { reason } => Ok(AutonomousVerdict::General(GeneralEvidence {
            profile,
            exact_obstruction,
            exponential_obstruction: format!("residues not commensurable: {}", reason),
        })),
        Commensurability::Unknown { reason } => {
            Ok(AutonomousVerdict::Unknown(UnknownEvidence { profile, reason }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratq, Poly, Var};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn h(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_ints(Var::Y, num), Poly::from_ints(Var::Y, den)).unwrap()
    }

    #[test]
    fn cubic_minus_square_is_general() {
        // y' = y^3 - y^2: residues -1, +1 and a double pole
        let v = classify_autonomous(&h(&[0, 0, -1, 1], &[1])).unwrap();
        match &v {
            AutonomousVerdict::General(e) => {
                assert_eq!(e.profile.rational_residues(), vec![rat(-1), rat(1)]);
                assert!(!e.profile.simple_poles_only);
            }
            other => panic!("expected General, got {}", other.tag()),
        }
    }

    #[test]
    fn rational_h_with_poly_part_is_general() {
        // y' = y/(y+1): 1/h = 1 + 1/y
        let v = classify_autonomous(&h(&[0, 1], &[1, 1])).unwrap();
        match &v {
            AutonomousVerdict::General(e) => {
                assert!(!e.profile.poly_part_zero);
                assert_eq!(e.profile.rational_residues(), vec![rat(1)]);
            }
            other => panic!("expected General, got {}", other.tag()),
        }
    }

    #[test]
    fn square_is_exact() {
        // y' = y^2: witness t = -1/y
        let v = classify_autonomous(&h(&[0, 0, 1], &[1])).unwrap();
        match v {
            AutonomousVerdict::Exact(c) => {
                assert_eq!(c.witness, h(&[-1], &[0, 1]));
            }
            other => panic!("expected Exact, got {}", other.tag()),
        }
    }

    #[test]
    fn square_minus_y_is_exponential() {
        let v = classify_autonomous(&h(&[0, -1, 1], &[1])).unwrap();
        assert_eq!(v.tag(), "Exponential");
    }

    #[test]
    fn square_minus_two_is_exponential() {
        // residues +-1/(2 sqrt 2): binomial resultant, commensurable
        let v = classify_autonomous(&h(&[-2, 0, 1], &[1])).unwrap();
        match &v {
            AutonomousVerdict::Exponential(c) => {
                assert_eq!(
                    c.profile.rt_resultant,
                    Poly::new(Var::T, vec![ratq(-1, 8), rat(0), rat(1)])
                );
            }
            other => panic!("expected Exponential, got {}", other.tag()),
        }
    }

    #[test]
    fn zero_equation_rejected() {
        assert!(classify_autonomous(&RatFn::zero(Var::Y)).is_err());
    }

    #[test]
    fn exact_witness_satisfies_chain_rule() {
        let mut rng = StdRng::seed_from_u64(43);
        let mut done = 0;
        while done < 20 {
            // Build h = 1/t'(y) for rational t of small degree: always exact.
            let t_num = Poly::new(
                Var::Y,
                (0..=rng.gen_range(1..=2)).map(|_| rat(rng.gen_range(-4..=4))).collect(),
            );
            let t_den = Poly::from_ints(Var::Y, &[rng.gen_range(-4..=4), 1]);
            let t = match RatFn::new(t_num, t_den) {
                Ok(t) => t,
                Err(_) => continue,
            };
            let w = t.derivative();
            if w.is_zero() {
                continue;
            }
            let h = w.inverse().unwrap();
            match classify_autonomous(&h).unwrap() {
                AutonomousVerdict::Exact(c) => {
                    assert_eq!(&c.witness.derivative() * &h, RatFn::one(Var::Y));
                }
                other => panic!("constructed-exact equation classified {}", other.tag()),
            }
            done += 1;
        }
    }

    #[test]
    fn verdict_invariant_under_root_shift() {
        let mut rng = StdRng::seed_from_u64(47);
        let mut done = 0;
        while done < 50 {
            let num = Poly::new(
                Var::Y,
                (0..=rng.gen_range(0..=3)).map(|_| rat(rng.gen_range(-4..=4))).collect(),
            );
            let den = Poly::new(
                Var::Y,
                (0..=rng.gen_range(0..=2)).map(|_| rat(rng.gen_range(-4..=4))).collect(),
            );
            let hh = match RatFn::new(num, den) {
                Ok(h) if !h.is_zero() => h,
                _ => continue,
            };
            let alpha = ratq(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            let shifted = hh.shift(&alpha);
            let v1 = classify_autonomous(&hh).unwrap();
            let v2 = classify_autonomous(&shifted).unwrap();
            assert_eq!(v1.tag(), v2.tag(), "shift by {} changed verdict for {}", alpha, hh);
            done += 1;
        }
    }
}
