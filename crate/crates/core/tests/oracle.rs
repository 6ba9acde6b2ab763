mod common;

use isotwist::exactnum::is_squarefree;
use isotwist::families::{l211_class, l39_signatures, L211Variant};
use isotwist::graphs::{Edition, GraphType, Param};
use isotwist::localdata::{global_minimal, global_pal};
use isotwist::oracle::*;
use isotwist::weierstrass::{signature_of, transform, twist_sig, AInvariants, Signature};
use isotwist::Rat;
use num_bigint::BigInt;
use rand::Rng;

const BITS: usize = 128;

fn vol(s: &Signature) -> f64 {
    lattice_volume(s, BITS).unwrap().volume.to_f64()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

/// Adaptive Simpson on [a, b].
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn step(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol.max(1e-15 * (left + right).abs()) {
            return left + right + (left + right - whole) / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 30)
}

/// Real roots of x³ + ax + b by bisection on sign changes of a fine grid.
fn real_roots(a: f64, b: f64) -> Vec<f64> {
    let f = |x: f64| x * x * x + a * x + b;
    let r = 1.0 + a.abs() + b.abs();
    let n = 200_000;
    let mut roots = Vec::new();
    for i in 0..n {
        let (mut lo, mut hi) = (-r + 2.0 * r * i as f64 / n as f64, -r + 2.0 * r * (i + 1) as f64 / n as f64);
        if f(lo) == 0.0 {
            roots.push(lo);
            continue;
        }
        if f(lo).signum() == f(hi).signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(lo).signum() == f(mid).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots.sort_by(|x, y| y.partial_cmp(x).unwrap());
    roots.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
    roots
}

/// Covolume of the lattice of dx/y on y² = x³ + ax + b, from real integrals
/// of the invariant differential along the two real cycles.
fn quadrature_volume(s: &Signature) -> f64 {
    let a = -s.c4().to_f64() / 48.0;
    let b = -s.c6().to_f64() / 864.0;
    let e = real_roots(a, b);
    let tol = 1e-13;
    // ∫ from e1 to ∞ with x = e1 + s², s = u/(1-u).
    let tail = |e1: f64, sign: f64, g: &dyn Fn(f64) -> f64| {
        let h = |u: f64| {
            if u >= 1.0 {
                return 2.0;
            }
            let s = u / (1.0 - u);
            2.0 / g(e1 + sign * s * s).sqrt() / ((1.0 - u) * (1.0 - u))
        };
        simpson(&h, 0.0, 1.0, tol)
    };
    if e.len() == 3 {
        let (e1, e2, e3) = (e[0], e[1], e[2]);
        let omega = tail(e1, 1.0, &|x| (x - e2) * (x - e3));
        // ∫ from e2 to e1 of dx/√(−f) with x = e2 + (e1−e2)sin²θ.
        let h = |th: f64| {
            let x = e2 + (e1 - e2) * th.sin().powi(2);
            2.0 / (x - e3).sqrt()
        };
        let omega_im = simpson(&h, 0.0, std::f64::consts::FRAC_PI_2, tol);
        omega * omega_im
    } else {
        let e1 = e[0];
        let g = |x: f64| x * x + e1 * x + e1 * e1 + a;
        let omega = tail(e1, 1.0, &g);
        let omega_im = tail(e1, -1.0, &g);
        omega * omega_im / 2.0
    }
}

fn random_curve(r: &mut impl Rng) -> Signature {
    loop {
        let a = [r.gen_range(0..2), r.gen_range(-1..2), r.gen_range(0..2), r.gen_range(-60..60), r.gen_range(-200..200)];
        if let Ok(e) = AInvariants::from_ints(a) {
            return signature_of(&e).unwrap();
        }
    }
}

#[test]
fn agm_matches_quadrature() {
    let s = Signature::new(Rat::int(48), Rat::zero(), Rat::int(64)).unwrap();
    assert!(close(vol(&s), quadrature_volume(&s), 1e-9));
    let mut r = common::rng(11);
    let (mut pos, mut neg) = (0, 0);
    for _ in 0..20 {
        let s = random_curve(&mut r);
        if s.delta().is_negative() {
            neg += 1;
        } else {
            pos += 1;
        }
        let (a, q) = (vol(&s), quadrature_volume(&s));
        assert!(close(a, q, 1e-8), "{s}: agm {a}, quadrature {q}");
    }
    assert!(pos > 0 && neg > 0);
}

#[test]
fn transformation_law() {
    let mut r = common::rng(12);
    for _ in 0..10 {
        let s = random_curve(&mut r);
        let v = vol(&s);
        for u in [Rat::int(2), Rat::int(3), Rat::int(5), Rat::frac(1, 2)] {
            let expect = v * u.to_f64().powi(2);
            assert!(close(vol(&transform(&s, &u).unwrap()), expect, 1e-9), "{s}, u={u}");
        }
    }
}

#[test]
fn three_isogenies_divide_volume_by_three() {
    let mut r = common::rng(13);
    let mut ts = vec![Rat::one()];
    ts.extend((0..10).map(|_| Rat::frac(r.gen_range(-500..500) | 1, r.gen_range(1..50))));
    for t in ts {
        let v: Vec<f64> = l39_signatures(&t).unwrap().iter().map(vol).collect();
        assert!(close(v[0] / v[1], 3.0, 1e-9), "t={t}");
        assert!(close(v[1] / v[2], 3.0, 1e-9), "t={t}");
    }
}

#[test]
fn neron_volumes() {
    let a2 = &l211_class(L211Variant::A).curves[0].signature;
    let n = neron_volume(a2, BITS).unwrap().volume.to_f64();
    assert!(close(n, vol(a2), 1e-12));
    assert!(close(n, quadrature_volume(a2), 1e-8));
    // v3(t) = 2: Néron volumes in proportion (1 : 3 : 1).
    for t in [Rat::int(9), Rat::frac(45, 7), Rat::int(-18)] {
        let v: Vec<f64> =
            l39_signatures(&t).unwrap().iter().map(|s| neron_volume(s, BITS).unwrap().volume.to_f64()).collect();
        assert!(close(v[1] / v[0], 3.0, 1e-9) && close(v[2] / v[0], 1.0, 1e-9), "t={t}: {v:?}");
    }
}

#[test]
fn twist_composition() {
    let mut r = common::rng(14);
    for _ in 0..8 {
        let s = random_curve(&mut r);
        let (min, u) = global_minimal(&s).unwrap();
        let d = loop {
            let d: i64 = r.gen_range(-80..80);
            if d != 0 && d != 1 && is_squarefree(&d.into()).unwrap() {
                break BigInt::from(d);
            }
        };
        let pal = global_pal(&min, &d).unwrap();
        let direct = neron_volume(&twist_sig(&s, &d).unwrap(), BITS).unwrap().volume.to_f64();
        let composed = (&pal * &u).to_f64().powi(2) * vol(&s) / (d.to_string().parse::<f64>().unwrap().abs());
        assert!(close(direct, composed, 1e-9), "{s}, d={d}");
    }
}

#[test]
fn heights_order_the_121a_class() {
    let a = l211_class(L211Variant::A);
    let h = |s: &Signature| faltings_height(s, BITS).unwrap().to_f64();
    let (e1, e11) = (&a.curves[0].signature, &a.curves[1].signature);
    assert!(h(e1) < h(e11));
    let d = BigInt::from(-11);
    assert!(h(&twist_sig(e1, &d).unwrap()) > h(&twist_sig(e11, &d).unwrap()));
    let unit = Signature::new(Rat::int(48), Rat::zero(), Rat::int(64)).unwrap();
    let hv = faltings_height(&unit, BITS).unwrap().to_f64();
    assert!(close(hv, -0.5 * 6.875185818020372f64.ln(), 1e-12));
}

#[test]
fn verify_examples() {
    let d = |n: i64| BigInt::from(n);
    let r = verify_class(GraphType::L3(3), &Param::T(Rat::int(45)), &d(3), BITS).unwrap();
    assert_eq!((r.argmin, r.matches), ("E_9", true));
    let r = verify_class(GraphType::L2(11), &Param::Sporadic(Some("b".into())), &d(1), BITS).unwrap();
    assert_eq!((r.argmin, r.matches), ("E_1", true));
    let r = verify_class(GraphType::L3(3), &Param::T(Rat::frac(1, 3)), &d(-7), BITS).unwrap();
    assert_eq!((r.argmin, r.matches), ("E_1", true));
    assert!(r.margin.to_f64() >= 3.0 - 1e-6);
}

/// The 27a class carries normalized minimal models for L4; its Néron
/// volumes are in proportion (1 : 3 : 1 : 1/3).
#[test]
fn l4_from_the_27a_class() {
    let models: Vec<Signature> = [[0, 0, 1, -30, 63], [0, 0, 1, 0, 0], [0, 0, 1, 0, -7], [0, 0, 1, -270, -1708]]
        .into_iter()
        .map(|a| signature_of(&AInvariants::from_ints(a).unwrap()).unwrap())
        .collect();
    let v: Vec<f64> = models.iter().map(|s| neron_volume(s, BITS).unwrap().volume.to_f64()).collect();
    for (x, want) in v.iter().zip([1.0, 3.0, 1.0, 1.0 / 3.0]) {
        assert!(close(x / v[0], want, 1e-9), "{v:?}");
    }
    for dd in [1, -1, 2, 3, -3, 5, 6, -15] {
        let r = verify_models(GraphType::L4, &Param::Sporadic(None), &models, &BigInt::from(dd), BITS, Edition::Corrected)
            .unwrap();
        assert!(r.matches, "d={dd}: numeric {}, table {}", r.argmin, r.theorem_vertex);
    }
}

#[test]
fn densities() {
    for (p, want) in [(3, 0.25), (2, 1.0 / 3.0)] {
        let r = squarefree_density(p, 1_000_000).unwrap();
        assert!((r.fraction_divisible - want).abs() < 0.005);
        assert!((r.overall_density - 0.6079).abs() < 0.003);
    }
}

#[test]
fn empirical_examples() {
    let freq = |g, param: Param| {
        let r = empirical_prob(g, &param, 100_000, Edition::Corrected).unwrap();
        r.frequencies.iter().map(|f| (f.vertex, f.frequency, f.predicted.to_f64())).collect::<Vec<_>>()
    };
    for (v, f, want) in freq(GraphType::L3(3), Param::T(Rat::int(3))) {
        assert!((f - want).abs() < 0.01, "{v}: {f} vs {want}");
    }
    let l67 = freq(GraphType::L2(67), Param::Sporadic(None));
    assert_eq!(l67.len(), 2);
    for (v, f, want) in l67 {
        assert!((f - want).abs() < 0.01, "{v}: {f} vs {want}");
    }
    assert_eq!(freq(GraphType::L2(13), Param::T(Rat::int(13))), vec![("E_13", 1.0, 1.0)]);
}
