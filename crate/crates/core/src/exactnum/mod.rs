//! Exact rationals, p-adic valuations and residues.

mod primes;
mod rat;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use primes::{check_prime, factor, is_prime};
pub use rat::{gcd, Rat};

/// A p-adic valuation: an integer, or infinity for zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Val {
    Finite(i64),
    Infinity,
}

impl Val {
    pub fn finite(self) -> Option<i64> {
        match self {
            Val::Finite(v) => Some(v),
            Val::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Val::Infinity
    }

    /// Shift by an integer; infinity absorbs.
    pub fn shift(self, k: i64) -> Val {
        match self {
            Val::Finite(v) => Val::Finite(v + k),
            Val::Infinity => Val::Infinity,
        }
    }

    pub fn ge(self, k: i64) -> bool {
        self >= Val::Finite(k)
    }

    pub fn eq(self, k: i64) -> bool {
        self == Val::Finite(k)
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Val) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Val) -> Ordering {
        match (self, other) {
            (Val::Finite(a), Val::Finite(b)) => a.cmp(b),
            (Val::Finite(_), Val::Infinity) => Ordering::Less,
            (Val::Infinity, Val::Finite(_)) => Ordering::Greater,
            (Val::Infinity, Val::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for Val {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Val::Finite(v) => s.serialize_i64(*v),
            Val::Infinity => s.serialize_str("infinity"),
        }
    }
}

/// Exponent of p in a nonzero integer.
pub fn vp_int(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let bp = BigInt::from(p);
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(&bp);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

/// Split a nonzero integer into p^e times a p-free part.
fn split_p(n: &BigInt, p: u64) -> (u32, BigInt) {
    let e = vp_int(n, p);
    (e, n / BigInt::from(p).pow(e))
}

pub fn vp(x: &Rat, p: u64) -> Result<Val> {
    check_prime(p)?;
    Ok(vp_unchecked(x, p))
}

// For callers that already validated p.
pub(crate) fn vp_unchecked(x: &Rat, p: u64) -> Val {
    if x.is_zero() {
        return Val::Infinity;
    }
    Val::Finite(vp_int(x.numer(), p) as i64 - vp_int(x.denom(), p) as i64)
}

/// p^k as a machine word, if it fits.
pub fn prime_power(p: u64, k: u32) -> Result<u64> {
    p.checked_pow(k).ok_or_else(|| Error::ModulusTooLarge(format!("{p}^{k}")))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Residue of the p-free part p^(-vp(x))·x modulo p^k.
pub fn unit_residue(x: &Rat, p: u64, k: u32) -> Result<u64> {
    check_prime(p)?;
    if x.is_zero() {
        return Err(Error::Zero { what: "unit_residue argument" });
    }
    let m = BigInt::from(prime_power(p, k)?);
    let (_, n) = split_p(x.numer(), p);
    let (_, d) = split_p(x.denom(), p);
    let r = (n * inverse_mod(&d, &m)).mod_floor(&m);
    Ok(r.to_u64().expect("residue below modulus"))
}

/// Residue of a p-integral rational modulo p^k.
pub fn residue_mod(x: &Rat, p: u64, k: u32) -> Result<u64> {
    check_prime(p)?;
    let m = BigInt::from(prime_power(p, k)?);
    if x.is_zero() {
        return Ok(0);
    }
    if vp_unchecked(x, p) < Val::Finite(0) {
        return Err(Error::NotIntegral { what: x.to_string(), p });
    }
    let r = (x.numer() * inverse_mod(x.denom(), &m)).mod_floor(&m);
    Ok(r.to_u64().expect("residue below modulus"))
}

/// Square-freeness by trial division up to the cube root.
///
/// After stripping every prime up to n^(1/3), the cofactor has at most two
/// prime factors, so it is square-free exactly when it is not a perfect square.
pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::Zero { what: "square-free test argument" });
    }
    let mut m = n.abs();
    let bound = m.cbrt();
    let mut q = BigInt::from(2);
    while q <= bound {
        let (quo, rem) = m.div_rem(&q);
        if rem.is_zero() {
            if (&quo % &q).is_zero() {
                return Ok(false);
            }
            m = quo;
        }
        q += if q == BigInt::from(2) { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(true);
    }
    let r = m.sqrt();
    Ok(&r * &r != m)
}

pub fn check_squarefree(d: &BigInt) -> Result<()> {
    if is_squarefree(d)? {
        Ok(())
    } else {
        Err(Error::NotSquarefree(d.to_string()))
    }
}

/// Interpret an integral rational as a square-free integer.
pub fn squarefree_from_rat(d: &Rat) -> Result<BigInt> {
    let n = d
        .to_integer()
        .ok_or_else(|| Error::NotSquarefree(d.to_string()))?;
    check_squarefree(&n)?;
    Ok(n)
}

/// d modulo m, as a nonnegative residue.
pub fn int_mod(d: &BigInt, m: u64) -> u64 {
    d.mod_floor(&BigInt::from(m)).to_u64().expect("residue below modulus")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    #[test]
    fn valuations() {
        assert_eq!(vp(&r(45, 7), 3).unwrap(), Val::Finite(2));
        assert_eq!(vp(&r(7, 45), 3).unwrap(), Val::Finite(-2));
        assert_eq!(vp(&Rat::zero(), 5).unwrap(), Val::Infinity);
        assert!(matches!(vp(&r(1, 1), 6), Err(Error::NotPrime(_))));
        assert!(Val::Infinity > Val::Finite(1 << 40));
    }

    #[test]
    fn unit_residues() {
        assert_eq!(unit_residue(&r(45, 7), 3, 2).unwrap(), 2);
        assert_eq!(unit_residue(&Rat::int(8), 2, 2).unwrap(), 1);
        assert_eq!(unit_residue(&Rat::int(-1331), 11, 1).unwrap(), 10);
        assert!(unit_residue(&Rat::zero(), 3, 1).is_err());
        assert_eq!(residue_mod(&r(1, 3), 2, 2).unwrap(), 3);
        assert!(residue_mod(&r(1, 2), 2, 2).is_err());
    }

    fn trial_squarefree(n: i64) -> bool {
        let n = n.unsigned_abs();
        (2u64..).take_while(|q| q * q <= n).all(|q| n % (q * q) != 0)
    }

    #[test]
    fn squarefree_matches_trial_factorization() {
        for n in -100_000i64..=100_000 {
            if n == 0 {
                continue;
            }
            assert_eq!(is_squarefree(&BigInt::from(n)).unwrap(), trial_squarefree(n), "{n}");
        }
        assert!(is_squarefree(&BigInt::zero()).is_err());
        // Large cofactor squares: 1000003^2 * 2.
        let big = BigInt::from(1_000_003u64).pow(2) * 2;
        assert!(!is_squarefree(&big).unwrap());
        let big = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        assert!(is_squarefree(&big).unwrap());
    }

    fn nonzero_rat() -> impl Strategy<Value = Rat> {
        (-10_000i64..10_000, 1i64..10_000)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| Rat::frac(n, d))
    }

    proptest! {
        #[test]
        fn valuation_is_additive(x in nonzero_rat(), y in nonzero_rat(), pi in 0usize..5) {
            let p = [2u64, 3, 5, 7, 11][pi];
            let vx = vp(&x, p).unwrap().finite().unwrap();
            let vy = vp(&y, p).unwrap().finite().unwrap();
            prop_assert_eq!(vp(&(&x * &y), p).unwrap(), Val::Finite(vx + vy));
        }

        #[test]
        fn unit_residue_times_denominator(x in nonzero_rat(), pi in 0usize..4, k in 1u32..6) {
            let p = [2u64, 3, 5, 7][pi];
            let m = BigInt::from(p.pow(k));
            let u = BigInt::from(unit_residue(&x, p, k).unwrap());
            let (_, n) = split_p(x.numer(), p);
            let (_, d) = split_p(x.denom(), p);
            prop_assert_eq!((u * d - n).mod_floor(&m), BigInt::zero());
        }
    }
}
