//! Weierstrass data validation and j-invariant comparison.
//!
//! For the normalization (t')^2 = alpha^2 (4t^3 - g2 t - g3) the
//! nondegeneracy condition is 27 g3^2 - g2^3 != 0 and the isomorphism class
//! over an algebraically closed field is j = 1728 g2^3/(g2^3 - 27 g3^2).

use crate::exactalg::{rat, AlgError, BigRat, CoeffField};
use num::Zero;

/// A syntactic Weierstrass equation (t')^2 = alpha^2 (4t^3 - g2 t - g3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassData<F: CoeffField> {
    pub g2: BigRat,
    pub g3: BigRat,
    pub alpha: F,
}

impl<F: CoeffField> WeierstrassData<F> {
    pub fn new(g2: BigRat, g3: BigRat, alpha: F) -> Result<Self, AlgError> {
        if alpha.is_zero() {
            return Err(AlgError::ZeroInput("Weierstrass scaling alpha"));
        }
        if let Validity::Invalid { .. } = weierstrass_validate(&g2, &g3) {
            return Err(AlgError::Precondition("degenerate Weierstrass data: 27 g3^2 = g2^3".into()));
        }
        Ok(WeierstrassData { g2, g3, alpha })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid { reason: String },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Valid iff 27 g3^2 - g2^3 != 0.
pub fn weierstrass_validate(g2: &BigRat, g3: &BigRat) -> Validity {
    if (rat(27) * g3 * g3 - g2 * g2 * g2).is_zero() {
        Validity::Invalid { reason: "27*g3^2 - g2^3 = 0".into() }
    } else {
        Validity::Valid
    }
}

/// Exact j-invariant of a valid pair: 1728 g2^3 / (g2^3 - 27 g3^2).
pub fn j_invariant(g2: &BigRat, g3: &BigRat) -> Result<BigRat, AlgError> {
    if !weierstrass_validate(g2, g3).is_valid() {
        return Err(AlgError::Precondition("degenerate Weierstrass data: 27 g3^2 = g2^3".into()));
    }
    let g2_cubed = g2 * g2 * g2;
    Ok(rat(1728) * &g2_cubed / (&g2_cubed - rat(27) * g3 * g3))
}

/// Over an algebraically closed field, two valid curves are isomorphic iff
/// their j-invariants agree.
pub fn iso_over_kbar(c1: (&BigRat, &BigRat), c2: (&BigRat, &BigRat)) -> Result<bool, AlgError> {
    Ok(j_invariant(c1.0, c1.1)? == j_invariant(c2.0, c2.1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn validation_examples() {
        assert!(weierstrass_validate(&rat(1), &rat(0)).is_valid());
        assert!(!weierstrass_validate(&rat(0), &rat(0)).is_valid());
        // 27*1 - 27 = 0
        assert!(!weierstrass_validate(&rat(3), &rat(1)).is_valid());
    }

    #[test]
    fn j_special_values() {
        assert_eq!(j_invariant(&rat(1), &rat(0)).unwrap(), rat(1728));
        assert_eq!(j_invariant(&rat(0), &rat(1)).unwrap(), rat(0));
        assert_eq!(j_invariant(&rat(4), &rat(1)).unwrap(), rat(1728) * ratq(64, 37));
        assert!(j_invariant(&rat(3), &rat(1)).is_err());
    }

    #[test]
    fn twist_invariance() {
        let mut rng = StdRng::seed_from_u64(59);
        let mut done = 0;
        while done < 50 {
            let g2 = ratq(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            let g3 = ratq(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            if !weierstrass_validate(&g2, &g3).is_valid() {
                continue;
            }
            let u = ratq(rng.gen_range(1..=9), rng.gen_range(1..=4));
            let u4 = &u * &u * &u * &u;
            let u6 = &u4 * &u * &u;
            assert_eq!(
                j_invariant(&(&g2 * &u4), &(&g3 * &u6)).unwrap(),
                j_invariant(&g2, &g3).unwrap()
            );
            done += 1;
        }
    }

    #[test]
    fn iso_examples() {
        // g3 = 0 forces j = 1728 on both sides
        assert!(iso_over_kbar((&rat(1), &rat(0)), (&rat(16), &rat(0))).unwrap());
        assert!(!iso_over_kbar((&rat(1), &rat(0)), (&rat(0), &rat(1))).unwrap());
        assert!(iso_over_kbar((&rat(5), &rat(2)), (&rat(5), &rat(2))).unwrap());
    }

    #[test]
    fn data_constructor_guards() {
        assert!(WeierstrassData::new(rat(1), rat(0), rat(2)).is_ok());
        assert!(WeierstrassData::new(rat(3), rat(1), rat(2)).is_err());
        assert!(WeierstrassData::new(rat(1), rat(0), rat(0)).is_err());
    }
}
