//! Twist values u_p(𝓔^d): the scaling that re-minimalizes a twisted minimal model.

use num_bigint::BigInt;

use super::{Kodaira, LocalClassification};
use crate::error::{Error, Result};
use crate::exactnum::{check_squarefree, int_mod, unit_residue, Rat, Val};
use crate::weierstrass::Signature;

/// Pal value at the prime of `c`, for a minimal model with signature `minimal`.
pub fn pal_u(c: &LocalClassification, minimal: &Signature, d: &BigInt) -> Result<Rat> {
    check_squarefree(d)?;
    if c.u_p != Rat::one() {
        return Err(Error::Inconsistent(format!(
            "pal_u needs a minimal model at {}, got u_p = {}",
            c.p, c.u_p
        )));
    }
    let p = c.p;
    if p != 2 {
        let divisible = int_mod(d, p) == 0;
        return Ok(if divisible && c.kodaira.is_starred() { Rat::int(p as i64) } else { Rat::one() });
    }
    let ps = c.minimal_psig;
    let (a, b, e) = (ps.vc4, ps.vc6, ps.vdelta);
    let one_one_any = a == Val::Finite(0) && b == Val::Finite(0);
    let half = Rat::frac(1, 2);
    Ok(match int_mod(d, 4) {
        1 => Rat::one(),
        2 => {
            let c6d = || unit_residue(&(minimal.c6() * &Rat::int(d.clone())), 2, 2);
            if one_one_any {
                half
            } else if a.eq(6) && b.eq(9) && e >= 18 && c6d()? == 3 {
                Rat::int(4)
            } else if a.eq(4) || a.eq(5) {
                Rat::one()
            } else if b.eq(3) || b.eq(5) || b.eq(7) {
                Rat::one()
            } else if a.ge(6) && b.eq(6) && e == 6 && c6d()? == 3 {
                Rat::one()
            } else {
                Rat::int(2)
            }
        }
        3 => {
            if one_one_any || (a.ge(4) && b.eq(3) && e == 0) {
                half
            } else if (a.eq(4) && b.eq(6) && e >= 12) || (a.ge(8) && b.eq(9) && e == 12) {
                Rat::int(2)
            } else {
                Rat::one()
            }
        }
        _ => unreachable!("square-free d is not divisible by 4"),
    })
}

impl Kodaira {
    pub fn is_starred(self) -> bool {
        matches!(self, Kodaira::IStar(_) | Kodaira::IVStar | Kodaira::IIIStar | Kodaira::IIStar)
    }
}
