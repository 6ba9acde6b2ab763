//! The side conditions that split shared p-signatures between Kodaira symbols.
//!
//! Each evaluator assumes the valuations of the table row it is attached to,
//! so quotients such as c6/3^3 are p-adic units or integers there.

use serde::Serialize;

use crate::error::Result;
use crate::exactnum::{residue_mod, unit_residue, Rat};
use crate::weierstrass::Signature;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Cond {
    #[serde(rename = "3a")]
    C3a,
    #[serde(rename = "3b")]
    C3b,
    #[serde(rename = "2a")]
    C2a,
    #[serde(rename = "2b")]
    C2b,
    #[serde(rename = "2c")]
    C2c,
    #[serde(rename = "2d")]
    C2d,
    #[serde(rename = "2e")]
    C2e,
    #[serde(rename = "2f")]
    C2f,
    #[serde(rename = "2g")]
    C2g,
}

impl Cond {
    pub fn label(self) -> &'static str {
        match self {
            Cond::C3a => "3a",
            Cond::C3b => "3b",
            Cond::C2a => "2a",
            Cond::C2b => "2b",
            Cond::C2c => "2c",
            Cond::C2d => "2d",
            Cond::C2e => "2e",
            Cond::C2f => "2f",
            Cond::C2g => "2g",
        }
    }

    pub fn eval(self, s: &Signature) -> Result<bool> {
        match self {
            Cond::C3a => cond_3(s, 3, 2),
            Cond::C3b => cond_3(s, 6, 4),
            Cond::C2a => cond_2a(s),
            Cond::C2b => cond_2b(s),
            Cond::C2c => cond_2c(s),
            Cond::C2d => cond_2d(s),
            Cond::C2e => Ok(unit_residue(s.c4(), 2, 2)? == 3),
            Cond::C2f => Ok(unit_residue(s.c6(), 2, 2)? == 1),
            Cond::C2g => Ok(unit_residue(s.c6(), 2, 2)? == 3),
        }
    }
}

// (c6/3^e6)^2 + 2 - 3(c4/3^e4) ≡ 0 (mod 9)
fn cond_3(s: &Signature, e6: i32, e4: i32) -> Result<bool> {
    let three = Rat::int(3);
    let x = residue_mod(&(s.c6() / &three.pow(e6)), 3, 2)?;
    let y = residue_mod(&(s.c4() / &three.pow(e4)), 3, 2)?;
    Ok((x * x + 2 + 27 - 3 * y) % 9 == 0)
}

/// A = −c4/48 and B = −c6/864 modulo 2^k.
fn ab_mod(s: &Signature, k: u32) -> Result<(u64, u64)> {
    let a = -(s.c4() / 48);
    let b = -(s.c6() / 864);
    Ok((residue_mod(&a, 2, k)?, residue_mod(&b, 2, k)?))
}

fn psi2(x: u64, a: u64, b: u64, m: u64) -> u64 {
    (x * x % m * x + a * x + b) % m
}

fn psi3(x: u64, a: u64, b: u64, m: u64) -> u64 {
    let x2 = x * x % m;
    (3 * x2 % m * x2 + 6 * a % m * x2 + 12 * b % m * x + m * m - a * a % m) % m
}

fn cond_2a(s: &Signature) -> Result<bool> {
    let (a, b) = ab_mod(s, 2)?;
    Ok((a == 1 && b <= 1) || (a != 1 && b >= 2))
}

fn cond_2b(s: &Signature) -> Result<bool> {
    let (a, b) = ab_mod(s, 3)?;
    Ok(psi3(a, a, b, 8) != 0)
}

fn roots_psi3_mod32(s: &Signature) -> Result<(Vec<u64>, u64, u64)> {
    let (a, b) = ab_mod(s, 5)?;
    Ok(((0..32).filter(|&r| psi3(r, a, b, 32) == 0).collect(), a, b))
}

fn cond_2c(s: &Signature) -> Result<bool> {
    let (roots, a, b) = roots_psi3_mod32(s)?;
    Ok(roots.iter().all(|&r| matches!(psi2(r, a % 16, b % 16, 16), 1 | 8 | 9 | 12)))
}

fn cond_2d(s: &Signature) -> Result<bool> {
    let (roots, _, _) = roots_psi3_mod32(s)?;
    Ok(roots.iter().all(|&r| matches!(r % 4, 1 | 2)))
}
