//! Riccati coefficient transport along Moebius transformations.
//!
//! If t satisfies t' = r2 t^2 + r1 t + r0 and y = (a t + b)/(c t + d) with
//! ad - bc != 0, then y satisfies another Riccati equation whose coefficients
//! are computed symbolically here; degree <= 2 is preserved both ways.

use crate::exactalg::{AlgError, CoeffField};

/// Coefficients of t' = a2 t^2 + a1 t + a0; not all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiccatiCoeffs<F: CoeffField> {
    pub a2: F,
    pub a1: F,
    pub a0: F,
}

impl<F: CoeffField> RiccatiCoeffs<F> {
    pub fn new(a2: F, a1: F, a0: F) -> Result<Self, AlgError> {
        if a2.is_zero() && a1.is_zero() && a0.is_zero() {
            return Err(AlgError::Precondition(
                "Riccati coefficients must not all be zero".into(),
            ));
        }
        Ok(RiccatiCoeffs { a2, a1, a0 })
    }
}

/// The substitution y = (a t + b)/(c t + d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius<F: CoeffField> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: CoeffField> Mobius<F> {
    pub fn identity() -> Self {
        Mobius { a: F::one(), b: F::zero(), c: F::zero(), d: F::one() }
    }

    pub fn det(&self) -> F {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    /// Adjugate matrix; as a Moebius map this inverts the substitution
    /// (scaling a Moebius matrix changes nothing).
    pub fn inverse(&self) -> Result<Self, AlgError> {
        if self.det().is_zero() {
            return Err(AlgError::Precondition("singular Moebius matrix".into()));
        }
        Ok(Mobius {
            a: self.d.clone(),
            b: self.b.neg_ref(),
            c: self.c.neg_ref(),
            d: self.a.clone(),
        })
    }
}

/// Transports Riccati coefficients through y = (a t + b)/(c t + d).
///
/// Differentiating the substitution and clearing (c t + d)^2 gives
/// `y' (ct+d)^2 = (c a' - c' a) t^2 + (a'd + b'c - b c' - a d') t +
/// (d b' - b d') + (ad - bc) t'`; substituting t = (d y - b)/(a - c y) turns
/// the right side into a quadratic in y.
pub fn mobius_riccati<F: CoeffField>(
    r: &RiccatiCoeffs<F>,
    m: &Mobius<F>,
) -> Result<RiccatiCoeffs<F>, AlgError> {
    let w = m.det();
    if w.is_zero() {
        return Err(AlgError::Precondition("singular Moebius matrix".into()));
    }
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    let (da, db, dc, dd) = (a.derive(), b.derive(), c.derive(), d.derive());

    // P(t) = p2 t^2 + p1 t + p0 is y'(ct+d)^2 expressed in t.
    let p2 = c.mul_ref(&da).sub_ref(&dc.mul_ref(a)).add_ref(&w.mul_ref(&r.a2));
    let p1 = da
        .mul_ref(d)
        .add_ref(&db.mul_ref(c))
        .sub_ref(&b.mul_ref(&dc))
        .sub_ref(&a.mul_ref(&dd))
        .add_ref(&w.mul_ref(&r.a1));
    let p0 = d.mul_ref(&db).sub_ref(&b.mul_ref(&dd)).add_ref(&w.mul_ref(&r.a0));

    // Substitute t = (d y - b)/(a - c y); (ct+d) = W/(a - cy).
    let w2 = w.mul_ref(&w);
    let w2_inv = w2.inverse().expect("nonzero determinant");
    let two = F::from_rat(crate::exactalg::rat(2));

    let s2 = p2
        .mul_ref(&d.mul_ref(d))
        .sub_ref(&p1.mul_ref(&c.mul_ref(d)))
        .add_ref(&p0.mul_ref(&c.mul_ref(c)))
        .mul_ref(&w2_inv);
    let s1 = p1
        .mul_ref(&a.mul_ref(d).add_ref(&b.mul_ref(c)))
        .sub_ref(&two.mul_ref(&p2).mul_ref(&b.mul_ref(d)))
        .sub_ref(&two.mul_ref(&p0).mul_ref(&a.mul_ref(c)))
        .mul_ref(&w2_inv);
    let s0 = p2
        .mul_ref(&b.mul_ref(b))
        .sub_ref(&p1.mul_ref(&a.mul_ref(b)))
        .add_ref(&p0.mul_ref(&a.mul_ref(a)))
        .mul_ref(&w2_inv);

    if s2.is_zero() && s1.is_zero() && s0.is_zero() {
        return Err(AlgError::Precondition(
            "transform degenerates: the image satisfies y' = 0".into(),
        ));
    }
    Ok(RiccatiCoeffs { a2: s2, a1: s1, a0: s0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratq, BigRat, Poly, RatFn, Var};
    use num::Zero;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rc(a2: i64, a1: i64, a0: i64) -> RiccatiCoeffs<BigRat> {
        RiccatiCoeffs::new(rat(a2), rat(a1), rat(a0)).unwrap()
    }

    #[test]
    fn identity_preserves_coefficients() {
        let r = rc(2, -1, 3);
        let out = mobius_riccati(&r, &Mobius::identity()).unwrap();
        assert_eq!(out, r);
    }

    #[test]
    fn inversion_of_t_squared() {
        // t' = t^2, y = 1/t gives y' = -1
        let r = rc(1, 0, 0);
        let m = Mobius { a: rat(0), b: rat(1), c: rat(1), d: rat(0) };
        let out = mobius_riccati(&r, &m).unwrap();
        assert_eq!(out, rc(0, 0, -1));
    }

    #[test]
    fn shift_flow_to_full_square() {
        // t' = 1, y = t/(t+1) gives y' = y^2 - 2y + 1
        let r = rc(0, 0, 1);
        let m = Mobius { a: rat(1), b: rat(0), c: rat(1), d: rat(1) };
        let out = mobius_riccati(&r, &m).unwrap();
        assert_eq!(out, rc(1, -2, 1));
    }

    #[test]
    fn singular_matrix_rejected() {
        let r = rc(1, 0, 0);
        let m = Mobius { a: rat(1), b: rat(2), c: rat(2), d: rat(4) };
        assert!(mobius_riccati(&r, &m).is_err());
    }

    #[test]
    fn round_trip_on_random_constant_matrices() {
        let mut rng = StdRng::seed_from_u64(53);
        let mut done = 0;
        while done < 50 {
            let r = RiccatiCoeffs::new(
                ratq(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                ratq(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                ratq(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
            );
            let r = match r {
                Ok(r) => r,
                Err(_) => continue,
            };
            let m = Mobius {
                a: rat(rng.gen_range(-4..=4)),
                b: rat(rng.gen_range(-4..=4)),
                c: rat(rng.gen_range(-4..=4)),
                d: rat(rng.gen_range(-4..=4)),
            };
            if m.det().is_zero() {
                continue;
            }
            let there = match mobius_riccati(&r, &m) {
                Ok(s) => s,
                Err(_) => continue,
            };
            let back = mobius_riccati(&there, &m.inverse().unwrap()).unwrap();
            assert_eq!(back, r);
            done += 1;
        }
    }

    #[test]
    fn round_trip_with_function_entries() {
        // Entries in C(x): derivations matter.
        let x = RatFn::var_fn(Var::X);
        let r = RiccatiCoeffs::new(
            RatFn::one(Var::X),
            x.clone(),
            RatFn::new(Poly::one(Var::X), Poly::from_ints(Var::X, &[1, 0, 1])).unwrap(),
        )
        .unwrap();
        let m = Mobius {
            a: x.clone(),
            b: RatFn::one(Var::X),
            c: RatFn::one(Var::X),
            d: x.clone(),
        };
        assert!(!m.det().is_zero());
        let there = mobius_riccati(&r, &m).unwrap();
        let back = mobius_riccati(&there, &m.inverse().unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn degenerate_image_is_an_error() {
        // t' = -1 and y = t + x: y' = t' + 1 = 0
        let r = RiccatiCoeffs::new(
            RatFn::zero(Var::X),
            RatFn::zero(Var::X),
            -&RatFn::one(Var::X),
        )
        .unwrap();
        let m = Mobius {
            a: RatFn::one(Var::X),
            b: RatFn::var_fn(Var::X),
            c: RatFn::zero(Var::X),
            d: RatFn::one(Var::X),
        };
        assert!(mobius_riccati(&r, &m).is_err());
    }
}
