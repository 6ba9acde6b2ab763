//! Curve descriptors: a-invariants, signatures and their transformation laws.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{check_prime, check_squarefree, vp_unchecked, Rat, Val};

/// y² + a1xy + a3y = x³ + a2x² + a4x + a6.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AInvariants {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a6: Rat,
}

impl AInvariants {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<AInvariants> {
        let a = AInvariants { a1, a2, a3, a4, a6 };
        signature_of(&a)?;
        Ok(a)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<AInvariants> {
        let [a1, a2, a3, a4, a6] = a.map(Rat::int);
        AInvariants::new(a1, a2, a3, a4, a6)
    }

    /// Parse "a1,a2,a3,a4,a6" with each entry a rational string.
    pub fn parse(s: &str) -> Result<AInvariants> {
        let parts: Vec<Rat> = s.split(',').map(str::parse).collect::<Result<_>>()?;
        let [a1, a2, a3, a4, a6]: [Rat; 5] = parts
            .try_into()
            .map_err(|_| Error::Parse { what: "a-invariants", input: s.to_string() })?;
        AInvariants::new(a1, a2, a3, a4, a6)
    }
}

/// (c4, c6, Δ) with Δ ≠ 0 and c4³ − c6² = 1728Δ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Signature {
    c4: Rat,
    c6: Rat,
    delta: Rat,
}

impl Signature {
    pub fn new(c4: Rat, c6: Rat, delta: Rat) -> Result<Signature> {
        if delta.is_zero() {
            return Err(Error::Singular);
        }
        if c4.pow(3) - c6.pow(2) != &delta * 1728 {
            return Err(Error::DiscriminantMismatch {
                c4: c4.to_string(),
                c6: c6.to_string(),
                delta: delta.to_string(),
            });
        }
        Ok(Signature { c4, c6, delta })
    }

    /// The signature determined by (c4, c6) alone.
    pub fn from_c4_c6(c4: Rat, c6: Rat) -> Result<Signature> {
        let delta = (c4.pow(3) - c6.pow(2)) / 1728;
        Signature::new(c4, c6, delta)
    }

    /// Parse "c4,c6,delta".
    pub fn parse(s: &str) -> Result<Signature> {
        let parts: Vec<Rat> = s.split(',').map(str::parse).collect::<Result<_>>()?;
        let [c4, c6, delta]: [Rat; 3] = parts
            .try_into()
            .map_err(|_| Error::Parse { what: "signature", input: s.to_string() })?;
        Signature::new(c4, c6, delta)
    }

    pub fn c4(&self) -> &Rat {
        &self.c4
    }

    pub fn c6(&self) -> &Rat {
        &self.c6
    }

    pub fn delta(&self) -> &Rat {
        &self.delta
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c4, self.c6, self.delta)
    }
}

/// (vp(c4), vp(c6), vp(Δ)) at a fixed prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PSignature {
    pub vc4: Val,
    pub vc6: Val,
    pub vdelta: i64,
}

impl PSignature {
    pub fn is_integral(&self) -> bool {
        self.vc4.ge(0) && self.vc6.ge(0) && self.vdelta >= 0
    }
}

impl fmt::Display for PSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.vc4, self.vc6, self.vdelta)
    }
}

impl Serialize for PSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.vc4, self.vc6, self.vdelta).serialize(s)
    }
}

pub fn signature_of(a: &AInvariants) -> Result<Signature> {
    let AInvariants { a1, a2, a3, a4, a6 } = a;
    let b2 = a1 * a1 + a2 * 4;
    let b4 = a4 * 2 + a1 * a3;
    let b6 = a3 * a3 + a6 * 4;
    let b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - &b4 * 24;
    let c6 = -(&b2 * &b2 * &b2) + &b2 * &b4 * 36 - &b6 * 216;
    let delta = -(&b2 * &b2 * &b8) - &b4 * &b4 * &b4 * 8 - &b6 * &b6 * 27 + &b2 * &b4 * &b6 * 9;
    Signature::new(c4, c6, delta)
}

pub fn p_signature(s: &Signature, p: u64) -> Result<PSignature> {
    check_prime(p)?;
    Ok(p_signature_unchecked(s, p))
}

pub(crate) fn p_signature_unchecked(s: &Signature, p: u64) -> PSignature {
    PSignature {
        vc4: vp_unchecked(&s.c4, p),
        vc6: vp_unchecked(&s.c6, p),
        vdelta: vp_unchecked(&s.delta, p).finite().expect("delta is nonzero"),
    }
}

/// The signature of the model obtained by scaling with u: (c4/u⁴, c6/u⁶, Δ/u¹²).
pub fn transform(s: &Signature, u: &Rat) -> Result<Signature> {
    if u.is_zero() {
        return Err(Error::Zero { what: "scaling factor u" });
    }
    Ok(Signature {
        c4: &s.c4 / &u.pow(4),
        c6: &s.c6 / &u.pow(6),
        delta: &s.delta / &u.pow(12),
    })
}

/// Quadratic twist by a square-free d: (d²c4, d³c6, d⁶Δ).
pub fn twist_sig(s: &Signature, d: &BigInt) -> Result<Signature> {
    check_squarefree(d)?;
    let d = Rat::int(d.clone());
    Ok(Signature {
        c4: &s.c4 * &d.pow(2),
        c6: &s.c6 * &d.pow(3),
        delta: &s.delta * &d.pow(6),
    })
}

pub fn j_invariant(s: &Signature) -> Rat {
    s.c4.pow(3) / &s.delta
}

/// y² = x³ + Ax + B with A = −c4/48, B = −c6/864.
pub fn short_model(s: &Signature) -> AInvariants {
    AInvariants {
        a1: Rat::zero(),
        a2: Rat::zero(),
        a3: Rat::zero(),
        a4: -(&s.c4 / 48),
        a6: -(&s.c6 / 864),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(c4: i64, c6: i64, delta: i64) -> Signature {
        Signature::new(Rat::int(c4), Rat::int(c6), Rat::int(delta)).unwrap()
    }

    #[test]
    fn signatures_of_printed_models() {
        let a = AInvariants::from_ints([1, 1, 1, -30, -76]).unwrap();
        assert_eq!(signature_of(&a).unwrap(), sig(11 * 131, 11 * 4973, -121));
        let b = AInvariants::from_ints([0, -1, 1, -7, 10]).unwrap();
        assert_eq!(signature_of(&b).unwrap(), sig(32 * 11, -8 * 7 * 121, -1331));
        let e = AInvariants::from_ints([0, 0, 0, -1, 0]).unwrap();
        assert_eq!(signature_of(&e).unwrap(), sig(48, 0, 64));
        assert_eq!(AInvariants::from_ints([0, 0, 0, 0, 0]), Err(Error::Singular));
    }

    #[test]
    fn p_signatures() {
        let a1 = signature_of(&AInvariants::from_ints([1, 1, 1, -305, 7888]).unwrap()).unwrap();
        let ps = p_signature(&a1, 11).unwrap();
        assert_eq!((ps.vc4, ps.vc6, ps.vdelta), (Val::Finite(4), Val::Finite(5), 10));
        let b = sig(32 * 11, -8 * 7 * 121, -1331);
        let ps = p_signature(&b, 2).unwrap();
        assert_eq!((ps.vc4, ps.vc6, ps.vdelta), (Val::Finite(5), Val::Finite(3), 0));
        let ps = p_signature(&sig(48, 0, 64), 2).unwrap();
        assert_eq!(ps.vc6, Val::Infinity);
        assert!(p_signature(&b, 4).is_err());
    }

    #[test]
    fn twists_and_j() {
        let a = sig(11 * 131, 11 * 4973, -121);
        let t = twist_sig(&a, &BigInt::from(11)).unwrap();
        assert_eq!(t, sig(1331 * 131, 14641 * 4973, -214358881));
        assert_eq!(twist_sig(&sig(48, 0, 64), &BigInt::from(-1)).unwrap(), sig(48, 0, 64));
        assert!(matches!(twist_sig(&a, &BigInt::from(12)), Err(Error::NotSquarefree(_))));
        assert_eq!(j_invariant(&a), Rat::int(-11 * 131i64.pow(3)));
        assert_eq!(j_invariant(&sig(32 * 11, -8 * 7 * 121, -1331)), Rat::int(-(1 << 15)));
        assert_eq!(j_invariant(&sig(0, -864, -432)), Rat::zero());
    }

    #[test]
    fn short_models() {
        let m = short_model(&sig(48, 0, 64));
        assert_eq!((m.a4.clone(), m.a6.clone()), (Rat::int(-1), Rat::zero()));
        let m = short_model(&sig(0, -864, -432));
        assert_eq!((m.a4.clone(), m.a6.clone()), (Rat::zero(), Rat::one()));
    }

    #[test]
    fn constructor_rejects_bad_triples() {
        assert!(matches!(
            Signature::new(Rat::int(48), Rat::int(0), Rat::int(65)),
            Err(Error::DiscriminantMismatch { .. })
        ));
        assert_eq!(Signature::new(Rat::int(12), Rat::int(-72 * 0), Rat::zero()), Err(Error::Singular));
    }

    fn any_sig() -> impl Strategy<Value = Signature> {
        (-500i64..500, -500i64..500, -500i64..500, -500i64..500, -500i64..500)
            .prop_filter_map("singular", |(a1, a2, a3, a4, a6)| {
                AInvariants::from_ints([a1 % 2, a2 % 3, a3 % 2, a4, a6])
                    .ok()
                    .map(|a| signature_of(&a).unwrap())
            })
    }

    proptest! {
        #[test]
        fn constructor_fuzz(c4 in -1000i64..1000, c6 in -1000i64..1000, bump in 1i64..1000) {
            let c4 = Rat::int(c4);
            let c6 = Rat::int(c6);
            let delta = (c4.pow(3) - c6.pow(2)) / 1728;
            prop_assume!(!delta.is_zero());
            prop_assert!(Signature::new(c4.clone(), c6.clone(), delta.clone()).is_ok());
            let off = delta + Rat::frac(bump, 7);
            prop_assert!(Signature::new(c4, c6, off).is_err());
        }

        #[test]
        fn j_is_twist_invariant(s in any_sig(), di in 0usize..8) {
            let d = BigInt::from([-1i64, 2, -3, 5, 6, -7, 10, 11][di]);
            prop_assert_eq!(j_invariant(&twist_sig(&s, &d).unwrap()), j_invariant(&s));
        }

        #[test]
        fn transform_shifts_p_signature(s in any_sig(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let a = p_signature(&s, p).unwrap();
            let b = p_signature(&transform(&s, &Rat::int(p as i64)).unwrap(), p).unwrap();
            prop_assert_eq!(b.vc4, a.vc4.shift(-4));
            prop_assert_eq!(b.vc6, a.vc6.shift(-6));
            prop_assert_eq!(b.vdelta, a.vdelta - 12);
        }

        #[test]
        fn short_model_round_trip(s in any_sig()) {
            prop_assert_eq!(signature_of(&short_model(&s)).unwrap(), s.clone());
            let u = Rat::frac(3, 2);
            let back = transform(&transform(&s, &u).unwrap(), &u.recip().unwrap()).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
