//! Rows of the reduction tables for p ≥ 5, p = 3 and p = 2, transcribed as data.
//!
//! A row is a pattern on (vp(c4), vp(c6), vp(Δ)) plus one or more guarded
//! outcomes. Rows are tried top to bottom and the first matching pattern wins.
//! The u-columns record the printed twist values so they can be checked
//! against the Pal rule independently.

use super::conditions::Cond;
use super::Kodaira;
use crate::exactnum::Val;
use crate::weierstrass::PSignature;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pat {
    Eq(i64),
    Ge(i64),
    /// Inclusive range.
    In(i64, i64),
}

impl Pat {
    pub fn matches(self, v: Val) -> bool {
        match (self, v) {
            (Pat::Eq(k), v) => v == Val::Finite(k),
            (Pat::Ge(k), v) => v >= Val::Finite(k),
            (Pat::In(a, b), Val::Finite(x)) => a <= x && x <= b,
            (Pat::In(..), Val::Infinity) => false,
        }
    }
}

/// Kodaira symbol as a function of vp(Δ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KodSpec {
    Fixed(Kodaira),
    /// I_n with n = vp(Δ) − offset.
    In(i64),
    /// I*_n with n = vp(Δ) − offset.
    InStar(i64),
}

impl KodSpec {
    pub fn at(self, vdelta: i64) -> Kodaira {
        match self {
            KodSpec::Fixed(k) => k,
            KodSpec::In(o) => Kodaira::I((vdelta - o) as u32),
            KodSpec::InStar(o) => Kodaira::IStar((vdelta - o) as u32),
        }
    }
}

/// A printed u-value cell of a twist column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UCell {
    /// The value num/den.
    Val(i64, i64),
    /// The prime p itself.
    P,
    /// "1* or 2*": 1 if c6/2^6 ≢ d/2 (mod 4), else 2.
    Foot66,
    /// "4* or 2*": 4 if c6/2^9 ≢ d/2 (mod 4), else 2.
    Foot69,
}

/// Guard on an outcome: a conjunction of (condition, required truth value).
pub type Guard = &'static [(Cond, bool)];

#[derive(Clone, Copy, Debug)]
pub enum Outcome {
    /// Minimal; Kodaira symbol and twist u-columns.
    Minimal(KodSpec, &'static [UCell]),
    /// Not minimal: rescale by u = p and look again.
    Rescale,
}

#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub pat: (Pat, Pat, Pat),
    pub alts: &'static [(Guard, Outcome)],
}

impl Row {
    pub fn matches(&self, ps: &PSignature) -> bool {
        self.pat.0.matches(ps.vc4) && self.pat.1.matches(ps.vc6) && self.pat.2.matches(Val::Finite(ps.vdelta))
    }
}

use Kodaira::*;
use Pat::{Eq as E, Ge as G, In as R};

const U11: &[UCell] = &[UCell::Val(1, 1), UCell::Val(1, 1)];
const UP1: &[UCell] = &[UCell::P, UCell::Val(1, 1)];

const fn min(k: KodSpec, u: &'static [UCell]) -> Outcome {
    Outcome::Minimal(k, u)
}

const fn fx(k: Kodaira) -> KodSpec {
    KodSpec::Fixed(k)
}

const ALWAYS: Guard = &[];

macro_rules! row {
    ($a:expr, $b:expr, $c:expr => $($g:expr => $o:expr),+ $(,)?) => {
        Row { pat: ($a, $b, $c), alts: &[$(($g, $o)),+] }
    };
}

/// Primes p ≥ 5. Columns: d ≡ 0 (p), d ≢ 0 (p).
pub static TABLE_P5: &[Row] = &[
    row!(E(0), G(0), E(0) => ALWAYS => min(fx(I(0)), U11)),
    row!(G(0), E(0), E(0) => ALWAYS => min(fx(I(0)), U11)),
    row!(G(0), E(0), G(0) => ALWAYS => min(KodSpec::In(0), U11)),
    row!(G(1), E(1), E(2) => ALWAYS => min(fx(II), U11)),
    row!(E(1), G(2), E(3) => ALWAYS => min(fx(III), U11)),
    row!(G(2), E(2), E(4) => ALWAYS => min(fx(IV), U11)),
    row!(E(2), G(3), E(6) => ALWAYS => min(fx(IStar(0)), UP1)),
    row!(G(2), E(3), E(6) => ALWAYS => min(fx(IStar(0)), UP1)),
    row!(E(2), E(3), G(6) => ALWAYS => min(KodSpec::InStar(6), UP1)),
    row!(G(3), E(4), E(8) => ALWAYS => min(fx(IVStar), UP1)),
    row!(E(3), G(5), E(9) => ALWAYS => min(fx(IIIStar), UP1)),
    row!(G(4), E(5), E(10) => ALWAYS => min(fx(IIStar), UP1)),
    row!(G(4), G(6), G(12) => ALWAYS => Outcome::Rescale),
];

const U31: &[UCell] = &[UCell::Val(3, 1), UCell::Val(1, 1)];

/// p = 3. Columns: d ≡ 0 (3), d ≢ 0 (3).
pub static TABLE_P3: &[Row] = &[
    row!(E(0), E(0), G(0) => ALWAYS => min(KodSpec::In(0), U11)),
    row!(E(1), G(3), E(0) => ALWAYS => min(fx(I(0)), U11)),
    row!(G(2), E(3), E(3) =>
        &[(Cond::C3a, true)] => min(fx(III), U11),
        &[(Cond::C3a, false)] => min(fx(II), U11)),
    row!(E(2), E(3), E(4) => ALWAYS => min(fx(II), U11)),
    row!(E(2), E(3), E(5) => ALWAYS => min(fx(IV), U11)),
    row!(E(2), E(3), G(6) => ALWAYS => min(KodSpec::InStar(6), U31)),
    row!(E(2), E(4), E(3) => ALWAYS => min(fx(II), U11)),
    row!(E(2), G(5), E(3) => ALWAYS => min(fx(III), U11)),
    row!(G(3), E(4), E(5) => ALWAYS => min(fx(II), U11)),
    row!(E(3), E(5), E(6) => ALWAYS => min(fx(IV), U11)),
    row!(E(3), G(6), E(6) => ALWAYS => min(fx(IStar(0)), U31)),
    row!(G(4), E(5), E(7) => ALWAYS => min(fx(IV), U11)),
    row!(G(4), E(6), E(9) =>
        &[(Cond::C3b, true)] => min(fx(IIIStar), U31),
        &[(Cond::C3b, false)] => min(fx(IVStar), U31)),
    row!(E(4), E(6), E(10) => ALWAYS => min(fx(IVStar), U31)),
    row!(E(4), E(6), E(11) => ALWAYS => min(fx(IIStar), U31)),
    row!(E(4), E(6), G(12) => ALWAYS => Outcome::Rescale),
    row!(E(4), E(7), E(9) => ALWAYS => min(fx(IVStar), U31)),
    row!(E(4), G(8), E(9) => ALWAYS => min(fx(IIIStar), U31)),
    row!(G(5), E(7), E(11) => ALWAYS => min(fx(IVStar), U31)),
    row!(E(5), E(8), E(12) => ALWAYS => min(fx(IIStar), U31)),
    row!(E(5), G(9), E(12) => ALWAYS => Outcome::Rescale),
    row!(G(6), E(8), E(13) => ALWAYS => min(fx(IIStar), U31)),
    row!(G(6), G(9), G(15) => ALWAYS => Outcome::Rescale),
];

const fn v(n: i64, d: i64) -> UCell {
    UCell::Val(n, d)
}

const W111: &[UCell] = &[v(1, 1), v(1, 1), v(1, 1)];
const W121: &[UCell] = &[v(1, 1), v(2, 1), v(1, 1)];

/// p = 2. Columns: d ≡ 1, 2, 3 (mod 4).
pub static TABLE_P2: &[Row] = &[
    row!(E(0), E(0), G(0) => ALWAYS => min(KodSpec::In(0), &[v(1, 1), v(1, 2), v(1, 2)])),
    row!(G(4), E(3), E(0) => ALWAYS => min(fx(I(0)), &[v(1, 1), v(1, 1), v(1, 2)])),
    row!(E(4), E(5), E(4) =>
        &[(Cond::C2a, true)] => min(fx(II), W111),
        &[(Cond::C2a, false), (Cond::C2b, true)] => min(fx(III), W111),
        &[(Cond::C2a, false), (Cond::C2b, false)] => min(fx(IV), W111)),
    row!(E(4), G(6), E(6) =>
        &[(Cond::C2a, true)] => min(fx(II), W111),
        &[(Cond::C2a, false)] => min(fx(III), W111)),
    row!(E(4), E(6), E(7) => ALWAYS => min(fx(II), W111)),
    row!(E(4), E(6), E(8) =>
        &[(Cond::C2c, true)] => min(fx(IStar(0)), W111),
        &[(Cond::C2c, false), (Cond::C2d, true)] => min(fx(IStar(1)), W111),
        &[(Cond::C2c, false), (Cond::C2d, false)] => min(fx(IVStar), W111)),
    row!(E(4), E(6), E(9) => ALWAYS => min(fx(IStar(0)), W111)),
    row!(E(4), E(6), E(10) =>
        &[(Cond::C2d, true)] => min(fx(IStar(2)), W111),
        &[(Cond::C2d, false)] => min(fx(IIIStar), W111)),
    row!(E(4), E(6), E(11) =>
        &[(Cond::C2d, true)] => min(fx(IStar(3)), W111),
        &[(Cond::C2d, false)] => min(fx(IIStar), W111)),
    row!(E(4), E(6), G(12) =>
        &[(Cond::C2f, true)] => min(KodSpec::InStar(8), &[v(1, 1), v(1, 1), v(2, 1)]),
        &[(Cond::C2f, false)] => Outcome::Rescale),
    row!(E(5), E(5), E(4) =>
        &[(Cond::C2a, true)] => min(fx(II), W111),
        &[(Cond::C2a, false)] => min(fx(III), W111)),
    row!(E(5), E(6), E(6) => ALWAYS => min(fx(II), W111)),
    row!(G(6), E(6), E(6) => ALWAYS => min(fx(II), &[v(1, 1), UCell::Foot66, v(1, 1)])),
    row!(E(5), E(7), E(8) => ALWAYS => min(fx(III), W111)),
    row!(E(5), G(8), E(9) => ALWAYS => min(fx(III), W111)),
    row!(G(6), E(5), E(4) =>
        &[(Cond::C2a, true)] => min(fx(II), W111),
        &[(Cond::C2a, false)] => min(fx(IV), W111)),
    row!(E(6), E(7), E(8) =>
        &[(Cond::C2c, true)] => min(fx(IStar(0)), W111),
        &[(Cond::C2c, false)] => min(fx(IStar(1)), W111)),
    row!(G(6), E(8), E(10) => ALWAYS => min(fx(IStar(0)), W121)),
    row!(E(6), E(9), E(13) => ALWAYS => min(fx(IStar(2)), W121)),
    row!(E(6), E(9), R(14, 17) => ALWAYS => min(KodSpec::InStar(10), W121)),
    row!(E(6), E(9), G(18) => ALWAYS => min(KodSpec::InStar(10), &[v(1, 1), UCell::Foot69, v(1, 1)])),
    row!(E(6), G(9), E(12) =>
        &[(Cond::C2e, true)] => min(fx(IStar(2)), W121),
        &[(Cond::C2e, false)] => min(fx(IStar(3)), W121)),
    row!(G(7), E(7), E(8) =>
        &[(Cond::C2c, true)] => min(fx(IStar(0)), W111),
        &[(Cond::C2c, false)] => min(fx(IVStar), W111)),
    row!(E(7), E(9), E(12) => ALWAYS => min(fx(IIIStar), W121)),
    row!(E(7), E(10), E(14) => ALWAYS => min(fx(IIIStar), W121)),
    row!(E(7), G(11), E(15) => ALWAYS => min(fx(IIIStar), W121)),
    row!(G(8), E(9), E(12) =>
        &[(Cond::C2g, true)] => min(fx(IIStar), &[v(1, 1), v(2, 1), v(2, 1)]),
        &[(Cond::C2g, false)] => Outcome::Rescale),
    row!(G(8), E(10), E(14) => ALWAYS => min(fx(IIStar), W121)),
    row!(G(8), G(11), G(16) => ALWAYS => Outcome::Rescale),
];

pub fn table_for(p: u64) -> &'static [Row] {
    match p {
        2 => TABLE_P2,
        3 => TABLE_P3,
        _ => TABLE_P5,
    }
}
