//! Multiprecision reals and complex numbers on top of astro-float.

use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use serde::Serialize;

use crate::Rat;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision plus the constant cache astro-float needs for π and ln.
pub(crate) struct Work {
    pub p: usize,
    cc: Consts,
}

impl Work {
    pub fn new(p: usize) -> Work {
        Work { p, cc: Consts::new().expect("constant cache") }
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.p)
    }

    pub fn rat(&mut self, x: &Rat) -> BigFloat {
        let n = BigFloat::parse(&x.numer().to_string(), Radix::Dec, self.p + 64, RM, &mut self.cc);
        let d = BigFloat::parse(&x.denom().to_string(), Radix::Dec, self.p + 64, RM, &mut self.cc);
        n.div(&d, self.p, RM)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.p, RM, &mut self.cc)
    }

    /// 2^e for any integer e.
    pub fn pow2(&self, e: i64) -> BigFloat {
        let m = BigFloat::from_u8(2, self.p).powi(e.unsigned_abs() as usize, self.p, RM);
        if e < 0 {
            m.reciprocal(self.p, RM)
        } else {
            m
        }
    }
}

/// A multiprecision real carried through reports; serializes as a decimal string.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Real(pub BigFloat);

impl Real {
    pub fn to_f64(&self) -> f64 {
        self.decimal(20).parse().unwrap_or(f64::NAN)
    }

    /// Scientific notation with `digits` significant digits.
    pub fn decimal(&self, digits: usize) -> String {
        let mut cc = Consts::new().expect("constant cache");
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8;
        let mut x = self.0.clone();
        if x.set_precision(bits.max(64), RM).is_err() {
            return "NaN".into();
        }
        let s = x.format(Radix::Dec, RM, &mut cc).unwrap_or_else(|_| "NaN".into());
        trim_mantissa(&s, digits)
    }
}

/// Cut the mantissa of "d.ddddde±x" to `digits` significant digits.
fn trim_mantissa(s: &str, digits: usize) -> String {
    let (mant, exp) = match s.find('e') {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    };
    let sign = usize::from(mant.starts_with('-'));
    let keep = (sign + digits + 1).min(mant.len());
    format!("{}{}", &mant[..keep], exp)
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal(30))
    }
}

impl Serialize for Real {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cx {
    pub fn new(re: BigFloat, im: BigFloat) -> Cx {
        Cx { re, im }
    }

    pub fn real(re: BigFloat, p: usize) -> Cx {
        Cx { re, im: BigFloat::from_u8(0, p) }
    }

    pub fn add(&self, o: &Cx, p: usize) -> Cx {
        Cx::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM))
    }

    pub fn sub(&self, o: &Cx, p: usize) -> Cx {
        Cx::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM))
    }

    pub fn neg(&self) -> Cx {
        Cx::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, o: &Cx, p: usize) -> Cx {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Cx::new(re, im)
    }

    pub fn div(&self, o: &Cx, p: usize) -> Cx {
        let den = o.re.mul(&o.re, p, RM).add(&o.im.mul(&o.im, p, RM), p, RM);
        let re = self.re.mul(&o.re, p, RM).add(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.im.mul(&o.re, p, RM).sub(&self.re.mul(&o.im, p, RM), p, RM);
        Cx::new(re.div(&den, p, RM), im.div(&den, p, RM))
    }

    pub fn half(&self, p: usize) -> Cx {
        let two = BigFloat::from_u8(2, p);
        Cx::new(self.re.div(&two, p, RM), self.im.div(&two, p, RM))
    }

    pub fn abs(&self, p: usize) -> BigFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM).sqrt(p, RM)
    }

    /// Principal square root (non-negative real part).
    pub fn sqrt(&self, p: usize) -> Cx {
        let r = self.abs(p);
        if r.is_zero() {
            return Cx::real(BigFloat::from_u8(0, p), p);
        }
        let two = BigFloat::from_u8(2, p);
        if !self.re.is_negative() {
            let s = r.add(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
            Cx::new(s.clone(), self.im.div(&s.mul(&two, p, RM), p, RM))
        } else {
            let t = r.sub(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
            let re = self.im.abs().div(&t.mul(&two, p, RM), p, RM);
            Cx::new(re, if self.im.is_negative() { t.neg() } else { t })
        }
    }

    /// Im(conj(self)·o): the signed area spanned by the two vectors.
    pub fn cross(&self, o: &Cx, p: usize) -> BigFloat {
        self.re.mul(&o.im, p, RM).sub(&self.im.mul(&o.re, p, RM), p, RM)
    }
}
