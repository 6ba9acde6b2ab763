//! Period lattices through the complex arithmetic-geometric mean.
//!
//! For y² = 4(x − e1)(x − e2)(x − e3) each ordering (i, j, k) of the roots
//! gives a period π / M(√(e_i − e_k), √(e_i − e_j)), where M is the optimal
//! complex AGM: at every step the sign of the geometric mean is chosen so
//! that |a' − b'| ≤ |a' + b'|. With that choice the value is the principal
//! one and the three periods span the full lattice. For y² = x³ + Ax + B the
//! substitution y ↦ 2y turns dx/2y into dx/y, so the cubic's roots are used
//! as they are.

use astro_float::BigFloat;

use super::real::{Cx, Work, RM};
use crate::error::{Error, Result};
use crate::weierstrass::Signature;
use crate::Rat;

fn exhausted(p: usize, detail: &str) -> Error {
    Error::PrecisionExhausted { bits: p, detail: detail.to_string() }
}

/// The optimal AGM. Each step at least halves |a − b|.
fn agm(mut a: Cx, mut b: Cx, w: &Work) -> Result<Cx> {
    let p = w.p;
    let tol = w.pow2(-(p as i64) + 8);
    let half = w.pow2(-1);
    let mut gap = a.sub(&b, p).abs(p);
    for _ in 0..(4 * p) {
        let scale = a.abs(p);
        if gap <= scale.mul(&tol, p, RM) {
            return Ok(a);
        }
        let a1 = a.add(&b, p).half(p);
        let mut b1 = a.mul(&b, p).sqrt(p);
        if a1.sub(&b1, p).abs(p) > a1.add(&b1, p).abs(p) {
            b1 = b1.neg();
        }
        let gap1 = a1.sub(&b1, p).abs(p);
        let bound = gap.mul(&half, p, RM).add(&scale.mul(&tol, p, RM), p, RM);
        debug_assert!(gap1 <= bound, "AGM failed to contract");
        (a, b, gap) = (a1, b1, gap1);
    }
    Err(exhausted(p, "AGM did not converge"))
}

/// A real root of x³ + ax + b, seeded in f64 and polished by Newton's method.
/// The coefficients are assumed to be of moderate size.
fn real_root(a: &Rat, b: &Rat, w: &mut Work) -> Result<BigFloat> {
    let (af, bf) = (a.to_f64(), b.to_f64());
    let f = |x: f64| x * x * x + af * x + bf;
    let r = 1.0 + af.abs() + bf.abs();
    let (mut lo, mut hi) = (-r, r);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = w.p;
    let (ab, bb) = (w.rat(a), w.rat(b));
    let three = w.int(3);
    let tol = w.pow2(-(p as i64) + 4);
    let mut x = BigFloat::from_f64(0.5 * (lo + hi), p);
    for _ in 0..(2 * p) {
        let x2 = x.mul(&x, p, RM);
        let fx = x2.mul(&x, p, RM).add(&ab.mul(&x, p, RM), p, RM).add(&bb, p, RM);
        let dfx = three.mul(&x2, p, RM).add(&ab, p, RM);
        if dfx.is_zero() {
            break;
        }
        let dx = fx.div(&dfx, p, RM);
        x = x.sub(&dx, p, RM);
        if dx.abs() <= tol.mul(&x.abs().add(&w.int(1), p, RM), p, RM) {
            break;
        }
    }
    Ok(x)
}

/// Covolume of the period lattice of y² = x³ + ax + b at working precision.
fn raw_volume(a: &Rat, b: &Rat, w: &mut Work) -> Result<BigFloat> {
    let p = w.p;
    let e1 = real_root(a, b, w)?;
    // The other two roots solve x² + e1·x + (e1² + a) = 0.
    let disc = e1.mul(&e1, p, RM).mul(&w.int(-3), p, RM).sub(&w.rat(a).mul(&w.int(4), p, RM), p, RM);
    let s = Cx::real(disc, p).sqrt(p);
    let m = Cx::real(e1.neg(), p);
    let e = [Cx::real(e1, p), m.add(&s, p).half(p), m.sub(&s, p).half(p)];
    let pi = Cx::real(w.pi(), p);
    let mut periods = Vec::with_capacity(3);
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let m = agm(e[i].sub(&e[k], p).sqrt(p), e[i].sub(&e[j], p).sqrt(p), w)?;
        periods.push(pi.div(&m, p));
    }
    // Each pair spans either the lattice or nothing; nonzero areas must agree.
    let floor = w.pow2(-(p as i64) / 2);
    let mut areas = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let area = periods[i].cross(&periods[j], p).abs();
        let scale = periods[i].abs(p).mul(&periods[j].abs(p), p, RM);
        if area > scale.mul(&floor, p, RM) {
            areas.push(area);
        }
    }
    let lo = areas.iter().min_by(|x, y| x.partial_cmp(y).expect("finite")).cloned();
    let hi = areas.iter().max_by(|x, y| x.partial_cmp(y).expect("finite")).cloned();
    match (lo, hi) {
        (Some(lo), Some(hi)) if hi.sub(&lo, p, RM) <= lo.mul(&floor, p, RM) => Ok(lo),
        (Some(_), Some(_)) => Err(Error::Inconsistent("AGM periods do not span a single lattice".into())),
        _ => Err(exhausted(p, "periods are numerically collinear")),
    }
}

/// Bit length of |x| as a rough log2, or None for zero.
fn log2_rat(x: &Rat) -> Option<i64> {
    (!x.is_zero()).then(|| x.numer().bits() as i64 - x.denom().bits() as i64)
}

/// The short model y² = x³ + Ax + B of s, rescaled by 2^k so that A and B
/// are of moderate size, together with k.
pub(crate) fn balanced_short(s: &Signature) -> (Rat, Rat, i64) {
    let a = -(s.c4() / 48);
    let b = -(s.c6() / 864);
    let ka = log2_rat(&a).map(|l| l.div_euclid(4));
    let kb = log2_rat(&b).map(|l| l.div_euclid(6));
    let k = ka.into_iter().chain(kb).max().unwrap_or(0);
    let u = Rat::int(2).pow(k as i32);
    (a / u.pow(4), b / u.pow(6), k)
}

pub(crate) const MAX_BITS: usize = 8192;

/// Volume at `bits`, doubling the working precision until two evaluations
/// agree to within vol·2^(−bits/2). Returns (volume, claimed error).
pub(crate) fn volume(s: &Signature, bits: usize) -> Result<(BigFloat, BigFloat, usize)> {
    let (a, b, k) = balanced_short(s);
    let mut p = bits;
    loop {
        let mut w = Work::new(p);
        let coarse = raw_volume(&a, &b, &mut w)?;
        let mut wf = Work::new(p + 64);
        let fine = raw_volume(&a, &b, &mut wf)?;
        let q = p + 64;
        let err = fine.sub(&coarse, q, RM).abs().add(&fine.mul(&wf.pow2(-(p as i64) + 8), q, RM), q, RM);
        let target = fine.mul(&wf.pow2(-(bits as i64) / 2), q, RM);
        if err <= target {
            // vol(s) = 2^(−2k)·vol(transform(s, 2^k)).
            let scale = wf.pow2(-2 * k);
            return Ok((fine.mul(&scale, q, RM), err.mul(&scale, q, RM), p));
        }
        if 2 * p > MAX_BITS {
            return Err(exhausted(p, "volume did not stabilize"));
        }
        p *= 2;
    }
}
