//! Explicit families: the 3-power chain over X0(9), its Fricke involution,
//! and the two rational 11-isogeny classes with the j-map on X0(11).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weierstrass::{signature_of, AInvariants, Signature};
use crate::Rat;

/// Horner evaluation, coefficients from the leading term down.
fn poly(coeffs: &[i64], t: &Rat) -> Rat {
    coeffs.iter().fold(Rat::zero(), |acc, &c| acc * t + c)
}

const Q: [i64; 3] = [1, 9, 27];

fn nonzero(t: &Rat) -> Result<()> {
    if t.is_zero() {
        return Err(Error::Cusp(t.to_string()));
    }
    Ok(())
}

/// Signatures of (E_1, E_3, E_9) at t. The chain is normalized: both
/// 3-isogenies pull back the invariant differential to itself.
pub fn l39_signatures(t: &Rat) -> Result<[Signature; 3]> {
    nonzero(t)?;
    let q = poly(&Q, t);
    let e1 = Signature::new(
        poly(&[1, 3], t) * poly(&[1, 9, 27, 3], t),
        poly(&[1, 18, 135, 504, 891, 486, -27], t),
        t * &q,
    )?;
    let e3 = Signature::new(
        poly(&[1, 3], t) * poly(&[1, 9], t) * poly(&[1, 0, 27], t),
        poly(&[1, 0, -27], t) * poly(&[1, 18, 162, 486, 729], t),
        (t * &q).pow(3),
    )?;
    let e9 = Signature::new(
        poly(&[1, 9], t) * poly(&[1, 243, 2187, 6561], t),
        poly(&[1, -486, -24057, -367416, -2657205, -9565938, -14348907], t),
        t.pow(9) * &q,
    )?;
    Ok([e1, e3, e9])
}

fn slot(i: u64) -> Result<usize> {
    match i {
        1 => Ok(0),
        3 => Ok(1),
        9 => Ok(2),
        _ => Err(Error::Parse { what: "L3(9) vertex index (1, 3 or 9)", input: i.to_string() }),
    }
}

/// j(E_i)(t) from the factored closed forms.
///
/// For E_3 the numerator carries the factor (t²+27)³ coming from c4(E_3);
/// without it the form would not agree with c4³/Δ.
pub fn l39_j(i: u64, t: &Rat) -> Result<Rat> {
    nonzero(t)?;
    let q = poly(&Q, t);
    Ok(match slot(i)? {
        0 => (poly(&[1, 3], t) * poly(&[1, 9, 27, 3], t)).pow(3) / (t * &q),
        1 => (poly(&[1, 3], t) * poly(&[1, 9], t) * poly(&[1, 0, 27], t)).pow(3) / (t * &q).pow(3),
        _ => (poly(&[1, 9], t) * poly(&[1, 243, 2187, 6561], t)).pow(3) / (t.pow(9) * &q),
    })
}

/// The Fricke involution t ↦ 27/t, which swaps E_1 and E_9.
pub fn fricke_w9(t: &Rat) -> Result<Rat> {
    if t.is_zero() {
        return Err(Error::Zero { what: "t" });
    }
    Ok(Rat::int(27) / t)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum L211Variant {
    A,
    B,
}

impl std::str::FromStr for L211Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<L211Variant> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(L211Variant::A),
            "b" => Ok(L211Variant::B),
            _ => Err(Error::Parse { what: "L2(11) variant (a or b)", input: s.to_string() }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct L211Curve {
    pub vertex: &'static str,
    pub label: &'static str,
    pub ainvs: AInvariants,
    pub signature: Signature,
    pub j: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct L211Class {
    pub variant: L211Variant,
    pub curves: [L211Curve; 2],
}

fn curve(vertex: &'static str, label: &'static str, a: [i64; 5], sig: [i64; 3]) -> L211Curve {
    let ainvs = AInvariants::from_ints(a).expect("nonsingular model");
    let signature = signature_of(&ainvs).expect("nonsingular model");
    let [c4, c6, delta] = sig.map(Rat::int);
    assert_eq!(signature, Signature::new(c4, c6, delta).expect("valid triple"), "{label}");
    let j = crate::weierstrass::j_invariant(&signature);
    L211Curve { vertex, label, ainvs, signature, j }
}

/// The minimal models of the two classes of conductor 121 with a rational
/// 11-isogeny; every L2(11) class is a quadratic twist of one of them.
pub fn l211_class(variant: L211Variant) -> L211Class {
    const E11: i64 = 11;
    let curves = match variant {
        L211Variant::A => [
            curve("E_1", "121.a2", [1, 1, 1, -30, -76], [E11 * 131, E11 * 4973, -E11.pow(2)]),
            curve("E_11", "121.a1", [1, 1, 1, -305, 7888], [E11.pow(4), -E11.pow(5) * 43, -E11.pow(10)]),
        ],
        L211Variant::B => [
            curve("E_1", "121.b2", [0, -1, 1, -7, 10], [32 * E11, -8 * 7 * E11.pow(2), -E11.pow(3)]),
            curve("E_11", "121.b1", [0, -1, 1, -887, -10143], [32 * E11.pow(3), 8 * 7 * E11.pow(5), -E11.pow(9)]),
        ],
    };
    L211Class { variant, curves }
}

/// The value at (16, 60), which the j-map below cannot produce directly.
pub fn x011_j_at_16_60() -> Rat {
    Rat::int(-11 * 131i64.pow(3))
}

fn on_x011(x: &Rat, y: &Rat) -> Result<()> {
    if y * y + y != poly(&[1, -1, -10, -20], x) {
        return Err(Error::NotOnCurve { x: x.to_string(), y: y.to_string() });
    }
    if *x == Rat::int(16) {
        return Err(Error::Indeterminate);
    }
    Ok(())
}

/// j: X0(11) → X0(1) on y² + y = x³ − x² − 10x − 20, as N(x, y)/(x − 16).
///
/// The numerator is linear in y after reducing by the curve equation:
/// N = −11x⁶ + (148 − y)x⁵ + (643 − 23y)x⁴ + (697y − 2704)x³
///     − (1031y + 6780)x² + (1781 − 2170y)x + 3308 − 353y.
pub fn x011_j(x: &Rat, y: &Rat) -> Result<Rat> {
    on_x011(x, y)?;
    let cy = |a: i64, b: i64| Rat::int(a) + y * b;
    let coeffs = [cy(-11, 0), cy(148, -1), cy(643, -23), cy(-2704, 697), cy(-6780, -1031), cy(1781, -2170), cy(3308, -353)];
    let n = coeffs.iter().fold(Rat::zero(), |acc, c| acc * x + c);
    Ok(n / (x - 16))
}

/// The map with the quadratic-in-x numerator P2(y)x² + P1(y)x + P0(y) as
/// it circulates in print. It does not reproduce the known values: at
/// (5, 5) it gives −2864296/11 rather than −2¹⁵.
pub fn x011_j_printed(x: &Rat, y: &Rat) -> Result<Rat> {
    on_x011(x, y)?;
    let p2 = poly(&[-11, 641, -452, 11803, -14372], y);
    let p1 = poly(&[-24, 536, 4540, 6341], y);
    let p0 = poly(&[-1, 125, -502, 1776], y);
    Ok((p2 * x * x + p1 * x + p0) / (x - 16))
}
