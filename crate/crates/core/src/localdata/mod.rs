//! Per-prime local data: realizability, minimal scale u_p, Kodaira symbol and
//! twist values.

mod conditions;
mod pal;
mod realize;
pub mod tables;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{check_prime, check_squarefree, factor, int_mod, unit_residue, Rat};
use crate::weierstrass::{p_signature_unchecked, transform, PSignature, Signature};

pub use conditions::Cond;
pub use pal::pal_u;
pub use realize::realizable;
use tables::{table_for, Outcome, Row, UCell};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kodaira {
    /// I_n; n = 0 is good reduction.
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

impl Serialize for Kodaira {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A side condition evaluated while matching the table row.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CondValue {
    pub label: Cond,
    pub value: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LocalClassification {
    pub p: u64,
    /// p^k with the minimal model equal to transform(input, u_p).
    pub u_p: Rat,
    pub minimal_psig: PSignature,
    pub kodaira: Kodaira,
    pub conditions: Vec<CondValue>,
    /// Index of the matched row in the table for p.
    #[serde(skip)]
    pub row: usize,
    /// Printed twist u-cells of the matched outcome.
    #[serde(skip)]
    pub ucells: &'static [UCell],
}

fn p_pow(p: u64, k: i64) -> Rat {
    Rat::int(p as i64).pow(k as i32)
}

/// Largest k with transform(s, p^k) p-integral.
fn max_integral_k(ps: &PSignature) -> i64 {
    let mut k = ps.vdelta.div_euclid(12);
    if let Some(a) = ps.vc4.finite() {
        k = k.min(a.div_euclid(4));
    }
    if let Some(b) = ps.vc6.finite() {
        k = k.min(b.div_euclid(6));
    }
    k
}

/// Match the table for p against an integral, realizable signature.
fn lookup(s: &Signature, p: u64) -> Result<(usize, &'static Row, Outcome, Vec<CondValue>)> {
    let ps = p_signature_unchecked(s, p);
    let table = table_for(p);
    let (idx, row) = table
        .iter()
        .enumerate()
        .find(|(_, r)| r.matches(&ps))
        .ok_or_else(|| Error::TableMiss(format!("p={p}, sig_p={ps}")))?;
    let mut evaluated: Vec<CondValue> = Vec::new();
    let mut value_of = |c: Cond| -> Result<bool> {
        if let Some(cv) = evaluated.iter().find(|cv| cv.label == c) {
            return Ok(cv.value);
        }
        let v = c.eval(s)?;
        evaluated.push(CondValue { label: c, value: v });
        Ok(v)
    };
    let mut chosen = None;
    for (guard, outcome) in row.alts {
        let mut ok = true;
        for (c, want) in guard.iter() {
            if value_of(*c)? != *want {
                ok = false;
                break;
            }
        }
        if ok {
            chosen = Some(*outcome);
            break;
        }
    }
    let outcome = chosen.ok_or_else(|| Error::TableMiss(format!("p={p}, sig_p={ps}: no guard holds")))?;
    Ok((idx, row, outcome, evaluated))
}

/// Minimal model, Kodaira symbol and scale at p for any signature.
pub fn classify(s: &Signature, p: u64) -> Result<LocalClassification> {
    check_prime(p)?;
    let ps0 = p_signature_unchecked(s, p);
    let mut k = max_integral_k(&ps0).min(0);
    let at = |k: i64| transform(s, &p_pow(p, k));

    // Scale up until an integral model exists; at most two steps are ever needed.
    let mut model = at(k)?;
    let mut steps = 0;
    while !realizable(&model, p)? {
        k -= 1;
        steps += 1;
        if steps > 3 {
            return Err(Error::Inconsistent(format!("no realizable model at p={p} for {s}")));
        }
        model = at(k)?;
    }

    let cap = 1 + p_signature_unchecked(&model, p).vdelta / 12;
    for _ in 0..=cap {
        let (row, _, outcome, conditions) = lookup(&model, p)?;
        match outcome {
            Outcome::Minimal(kod, ucells) => {
                let minimal_psig = p_signature_unchecked(&model, p);
                return Ok(LocalClassification {
                    p,
                    u_p: p_pow(p, k),
                    minimal_psig,
                    kodaira: kod.at(minimal_psig.vdelta),
                    conditions,
                    row,
                    ucells,
                });
            }
            Outcome::Rescale => {
                k += 1;
                model = at(k)?;
                let ps = p_signature_unchecked(&model, p);
                if !ps.is_integral() || !realizable(&model, p)? {
                    return Err(Error::Inconsistent(format!(
                        "rescaled model at p={p} is not integral and realizable: {ps}"
                    )));
                }
            }
        }
    }
    Err(Error::Inconsistent(format!("rescaling loop at p={p} exceeded its bound")))
}

/// The u-value printed in the table for the twist class of d.
pub fn table_twist_u(c: &LocalClassification, minimal: &Signature, d: &BigInt) -> Result<Rat> {
    check_squarefree(d)?;
    let col = if c.p == 2 {
        (int_mod(d, 4) - 1) as usize
    } else if int_mod(d, c.p) == 0 {
        0
    } else {
        1
    };
    Ok(match c.ucells[col] {
        UCell::Val(n, m) => Rat::frac(n, m),
        UCell::P => Rat::int(c.p as i64),
        cell @ (UCell::Foot66 | UCell::Foot69) => {
            let c6 = unit_residue(minimal.c6(), 2, 2)?;
            let half_d = unit_residue(&Rat::int(d.clone()), 2, 2)?;
            let differ = if cell == UCell::Foot66 { 1 } else { 4 };
            Rat::int(if c6 != half_d { differ } else { 2 })
        }
    })
}

/// Primes that can have u_p ≠ 1: 2, 3, and any prime dividing a denominator or
/// the gcd of the numerators. Elsewhere some entry is a p-adic unit, so the
/// model is integral and no rescaling row can match.
pub fn candidate_primes(s: &Signature) -> Result<Vec<u64>> {
    let mut primes: BTreeSet<u64> = [2, 3].into_iter().collect();
    let mut g = BigInt::zero();
    let mut den = BigInt::from(1);
    for x in [s.c4(), s.c6(), s.delta()] {
        g = g.gcd(x.numer());
        den = den.lcm(x.denom());
    }
    for n in [g, den] {
        let n: BigUint = n.abs().to_biguint().expect("nonnegative");
        if n.is_zero() {
            continue;
        }
        for (p, _) in factor(&n)? {
            primes.insert(p);
        }
    }
    Ok(primes.into_iter().collect())
}

/// Global minimal model and u = ∏ u_p with minimal = transform(s, u).
pub fn global_minimal(s: &Signature) -> Result<(Signature, Rat)> {
    let mut u = Rat::one();
    for p in candidate_primes(s)? {
        u = u * classify(s, p)?.u_p;
    }
    Ok((transform(s, &u)?, u))
}

/// u(𝓔^d) = ∏_p u_p(𝓔^d) for a global minimal signature.
pub fn global_pal(minimal: &Signature, d: &BigInt) -> Result<Rat> {
    check_squarefree(d)?;
    let mut primes: BTreeSet<u64> = [2].into_iter().collect();
    let ad: BigUint = d.abs().to_biguint().expect("nonnegative");
    for (p, _) in factor(&ad)? {
        primes.insert(p);
    }
    let mut u = Rat::one();
    for p in primes {
        let c = classify(minimal, p)?;
        u = u * pal_u(&c, minimal, d)?;
    }
    Ok(u)
}
