//! Does a p-integral (c4, c6) pair come from an integral Weierstrass model?
//!
//! Only p = 2 and p = 3 can fail, since 24 and 216 are units elsewhere.
//! Arithmetic is done on residues modulo a fixed power of p, which is enough
//! because every condition below reads at most a few p-adic digits.

use crate::error::{Error, Result};
use crate::exactnum::{check_prime, residue_mod};
use crate::weierstrass::{p_signature_unchecked, Signature};

fn inv_mod(a: u64, m: u64) -> u64 {
    (1..m).find(|x| (a * x) % m == 1).expect("unit modulo m")
}

pub fn realizable(s: &Signature, p: u64) -> Result<bool> {
    check_prime(p)?;
    let ps = p_signature_unchecked(s, p);
    if !ps.is_integral() {
        return Err(Error::NotIntegral { what: format!("signature {s}"), p });
    }
    Ok(match p {
        2 => realizable_at_2(s)?,
        3 => realizable_at_3(s)?,
        _ => true,
    })
}

fn realizable_at_3(s: &Signature) -> Result<bool> {
    const M: u64 = 729; // 3^6
    let c4 = residue_mod(s.c4(), 3, 6)?;
    let c6 = residue_mod(s.c6(), 3, 6)?;
    let inv8 = inv_mod(8, M);
    for b2 in 0..81u64 {
        let x = (b2 * b2 + M - c4) % M;
        if x % 3 != 0 {
            continue;
        }
        // b4 = x/24 = (x/3)·8⁻¹, known modulo 3^5.
        let b4 = (x / 3) * inv8 % (M / 3);
        let num = (M * M - b2 * b2 % M * b2 % M + 36 * b2 % M * b4 % M + M - c6) % (M / 3);
        if num % 27 == 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn realizable_at_2(s: &Signature) -> Result<bool> {
    const M: u64 = 1 << 12;
    let c4 = residue_mod(s.c4(), 2, 12)?;
    let c6 = residue_mod(s.c6(), 2, 12)?;
    let inv3 = inv_mod(3, 1 << 9);
    let inv27 = inv_mod(27, 1 << 6);
    for a1 in 0..2u64 {
        for a3 in 0..2u64 {
            for b2 in (0..128u64).filter(|b| b % 4 == a1 * a1) {
                let x = (b2 * b2 + M - c4) % M;
                if x % 8 != 0 {
                    continue;
                }
                let b4 = (x / 8) * inv3 % (1 << 9);
                if b4 % 2 != a1 * a3 {
                    continue;
                }
                let m9 = 1u64 << 9;
                let cube = b2 * b2 % m9 * b2 % m9;
                let num = (2 * m9 - cube + 36 * b2 % m9 * b4 % m9 + m9 - c6 % m9) % m9;
                if num % 8 != 0 {
                    continue;
                }
                let b6 = (num / 8) * inv27 % (1 << 6);
                if b6 % 4 == a3 * a3 {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;
    use crate::weierstrass::{signature_of, transform, AInvariants};
    use proptest::prelude::*;

    #[test]
    fn basic_cases() {
        let s = Signature::new(Rat::int(48), Rat::zero(), Rat::int(64)).unwrap();
        assert!(realizable(&s, 2).unwrap());
        assert!(realizable(&s, 5).unwrap());
        let half = transform(&s, &Rat::int(2)).unwrap();
        assert!(realizable(&half, 2).is_err());
    }

    proptest! {
        // Signatures of integral models are realizable; scaling an integral
        // model down by p stays realizable.
        #[test]
        fn integral_models_are_realizable(
            a in prop::array::uniform5(-200i64..200), pi in 0usize..2, k in 0u32..3
        ) {
            let p = [2i64, 3][pi];
            if let Ok(m) = AInvariants::from_ints(a) {
                let s = signature_of(&m).unwrap();
                prop_assert!(realizable(&s, p as u64).unwrap());
                let down = transform(&s, &Rat::frac(1, p.pow(k))).unwrap();
                prop_assert!(realizable(&down, p as u64).unwrap());
            }
        }
    }
}
