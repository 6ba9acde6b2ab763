#![allow(dead_code)]

pub mod tate;

use std::collections::{BTreeMap, BTreeSet};

use isotwist::exactnum::is_squarefree;
use isotwist::graphs::{u_branches, u_vectors, Edition, GraphType, Param};
use isotwist::weierstrass::{signature_of, AInvariants, Signature};
use isotwist::{Error, Rat};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random non-singular integral a-invariants biased towards bad reduction at p:
/// each a_i gets a random power of p, and some models are scaled by p^{ik}
/// so that they are not minimal.
pub fn random_model(r: &mut ChaCha8Rng, p: u64) -> ([i64; 5], Signature) {
    let p = p as i64;
    loop {
        let mut a = [0i64; 5];
        for (slot, w) in a.iter_mut().zip([1u32, 2, 3, 4, 6]) {
            let e = r.gen_range(0..=w + 1);
            let unit: i64 = r.gen_range(-6..=6);
            *slot = unit * p.pow(e.min(7));
        }
        if r.gen_bool(0.2) {
            for (slot, w) in a.iter_mut().zip([1u32, 2, 3, 4, 6]) {
                *slot *= p.pow(w);
            }
        }
        if a.iter().any(|x| x.unsigned_abs() > 1 << 40) {
            continue;
        }
        if let Ok(ai) = AInvariants::from_ints(a) {
            return (a, signature_of(&ai).unwrap());
        }
    }
}

pub fn corpus(seed: u64, p: u64, n: usize) -> Vec<([i64; 5], Signature)> {
    let mut r = rng(seed ^ p);
    (0..n).map(|_| random_model(&mut r, p)).collect()
}

/// Square-free integers in [-50, 50] \ {0}, covering every class at small primes.
pub fn small_squarefree() -> Vec<i64> {
    (-50i64..=50)
        .filter(|&d| d != 0 && (2..=7).all(|q: i64| d % (q * q) != 0))
        .collect()
}

fn unit(r: &mut impl Rng) -> i64 {
    loop {
        let u: i64 = r.gen_range(1..600);
        if [2, 3, 5, 7, 13].iter().all(|p| u % p != 0) {
            return u;
        }
    }
}

/// Random nonzero t with independently chosen valuations at the primes the
/// tables look at, and occasionally t close to -64 or -27 so that the shifted
/// valuations take every residue.
pub fn random_t(r: &mut impl Rng) -> Rat {
    let sign = if r.gen_bool(0.5) { 1 } else { -1 };
    let mut t = Rat::frac(sign * unit(r), unit(r));
    match r.gen_range(0..10) {
        0 => return Rat::int(-64) + Rat::int(2).pow(r.gen_range(6..16)) * t,
        1 => return Rat::int(-27) + Rat::int(3).pow(r.gen_range(3..12)) * t,
        _ => {}
    }
    for (p, lo, hi) in [(2, -4, 10), (3, -3, 7), (5, -3, 5), (7, -2, 4), (13, -2, 3)] {
        t = t * Rat::int(p).pow(r.gen_range(lo..=hi));
    }
    t
}

pub fn class_ds(g: GraphType) -> Vec<BigInt> {
    let mut ds: BTreeSet<i64> = (-60i64..=60).filter(|&d| d != 0 && is_squarefree(&d.into()).unwrap()).collect();
    for p in g.isogeny_primes() {
        let p = p as i64;
        for m in [1, 2, 3, 5, 6, 7, 10, 11, 13] {
            if m % p != 0 {
                ds.insert(p * m);
                ds.insert(-p * m);
            }
        }
    }
    ds.into_iter().map(BigInt::from).collect()
}

pub fn sample_points(g: GraphType, seed: u64, per_branch: usize) -> Vec<Param> {
    if g.genus_ge_1() {
        let mut v = vec![Param::Sporadic(None)];
        if g == GraphType::L2(11) {
            v.push(Param::Sporadic(Some("a".into())));
            v.push(Param::Sporadic(Some("b".into())));
        }
        return v;
    }
    let mut r = rng(seed);
    let wanted: usize = u_branches(g, Edition::Corrected).iter().map(|(_, rows)| rows.len()).sum();
    let mut hits: BTreeMap<(usize, String), usize> = BTreeMap::new();
    let mut out = Vec::new();
    for _ in 0..400_000 {
        let t = Param::T(random_t(&mut r));
        let u = match u_vectors(g, &t, &BigInt::from(1), Edition::Corrected) {
            Ok(u) => u,
            Err(Error::UndefinedBranch(_)) => continue,
            Err(e) => panic!("{g} {t:?}: {e}"),
        };
        let mut useful = false;
        for (i, b) in u.branch.iter().enumerate() {
            let key = (i, b.split("; ").next().unwrap().to_string());
            let n = hits.entry(key).or_default();
            if *n < per_branch {
                useful = true;
            }
            *n += 1;
        }
        if useful {
            out.push(t);
        }
        if hits.len() == wanted && hits.values().all(|&n| n >= per_branch) {
            return out;
        }
    }
    panic!("{g}: branch coverage {hits:?}");
}
