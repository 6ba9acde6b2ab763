//! Branch conditions on the parameter t and on the twist d.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int_mod, residue_mod, vp, Rat, Val};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cmp {
    Ge(i64),
    Eq(i64),
    Le(i64),
    Ne(i64),
}

impl Cmp {
    fn holds(self, v: i64) -> bool {
        match self {
            Cmp::Ge(k) => v >= k,
            Cmp::Eq(k) => v == k,
            Cmp::Le(k) => v <= k,
            Cmp::Ne(k) => v != k,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TCond {
    /// v_p(t) compared with a constant.
    V(u64, Cmp),
    /// v_p(t + shift) mod m lies in the set.
    VShift { p: u64, shift: i64, m: i64, set: &'static [i64] },
    /// t/p^e is p-integral and its residue mod p^k lies in the set.
    Cong { p: u64, e: i64, k: u32, set: &'static [u64] },
}

impl TCond {
    /// Evaluate at a nonzero t.
    pub fn eval(&self, t: &Rat) -> Result<bool> {
        match *self {
            TCond::V(p, cmp) => match vp(t, p)? {
                Val::Finite(v) => Ok(cmp.holds(v)),
                Val::Infinity => Err(Error::Cusp(t.to_string())),
            },
            TCond::VShift { p, shift, m, set } => match vp(&(t + shift), p)? {
                Val::Finite(v) => Ok(set.contains(&v.rem_euclid(m))),
                Val::Infinity => Err(Error::UndefinedBranch(format!(
                    "t={t} gives v{p}(t{shift:+}) = infinity"
                ))),
            },
            TCond::Cong { p, e, k, set } => {
                let x = t / &Rat::int(p as i64).pow(e as i32);
                Ok(match residue_mod(&x, p, k) {
                    Ok(r) => set.contains(&r),
                    Err(Error::NotIntegral { .. }) => false,
                    Err(err) => return Err(err),
                })
            }
        }
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for TCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TCond::V(p, cmp) => {
                let (op, k) = match cmp {
                    Cmp::Ge(k) => (">=", k),
                    Cmp::Eq(k) => ("=", k),
                    Cmp::Le(k) => ("<=", k),
                    Cmp::Ne(k) => ("!=", k),
                };
                write!(f, "v{p}(t){op}{k}")
            }
            TCond::VShift { p, shift, m, set } => write!(f, "v{p}(t{shift:+})≡{} (mod {m})", join(set)),
            TCond::Cong { p, e, k, set } => {
                let m = p.pow(k);
                match e {
                    0 => write!(f, "t≡{} (mod {m})", join(set)),
                    1 => write!(f, "t/{p}≡{} (mod {m})", join(set)),
                    _ => write!(f, "t/{p}^{e}≡{} (mod {m})", join(set)),
                }
            }
        }
    }
}

pub fn describe(conds: &[TCond]) -> String {
    if conds.is_empty() {
        return "any".into();
    }
    conds.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

/// Condition on the square-free twist parameter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum DCond {
    All,
    Div(u64),
    NotDiv(u64),
}

impl DCond {
    pub fn holds(self, d: &BigInt) -> bool {
        match self {
            DCond::All => true,
            DCond::Div(p) => int_mod(d, p) == 0,
            DCond::NotDiv(p) => int_mod(d, p) != 0,
        }
    }
}

impl fmt::Display for DCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DCond::All => write!(f, "all"),
            DCond::Div(p) => write!(f, "d≡0({p})"),
            DCond::NotDiv(p) => write!(f, "d≢0({p})"),
        }
    }
}
