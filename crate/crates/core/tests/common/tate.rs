//! Tate's algorithm on integral a-invariants, used as an independent oracle
//! for the table-driven classifier. Root finding is brute force over F_p, so
//! this is only meant for small primes.

use isotwist::localdata::Kodaira;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug)]
struct Model {
    a1: BigInt,
    a2: BigInt,
    a3: BigInt,
    a4: BigInt,
    a6: BigInt,
}

impl Model {
    fn change(&self, r: &BigInt, s: &BigInt, t: &BigInt) -> Model {
        let Model { a1, a2, a3, a4, a6 } = self;
        Model {
            a1: a1 + 2 * s,
            a2: a2 - s * a1 + 3 * r - s * s,
            a3: a3 + r * a1 + 2 * t,
            a4: a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6: a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
        }
    }

    fn b(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let Model { a1, a2, a3, a4, a6 } = self;
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        (b2, b4, b6, b8)
    }

    fn delta(&self) -> BigInt {
        let (b2, b4, b6, b8) = self.b();
        -&b2 * &b2 * &b8 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }
}

fn val(x: &BigInt, p: &BigInt) -> u32 {
    if x.is_zero() {
        return u32::MAX;
    }
    let mut e = 0;
    let mut m = x.clone();
    while (&m % p).is_zero() {
        m /= p;
        e += 1;
    }
    e
}

fn div(x: &BigInt, p: &BigInt, k: u32) -> bool {
    (x % p.pow(k)).is_zero()
}

fn residues(p: &BigInt) -> impl Iterator<Item = BigInt> {
    let n: u64 = p.try_into().unwrap();
    (0..n).map(BigInt::from)
}

/// Whether Y² + aY − b has distinct roots over F̄_p.
fn quad_distinct(a: &BigInt, b: &BigInt, p: &BigInt) -> bool {
    !div(&(a * a + 4 * b), p, 1)
}

fn quad_root(a: &BigInt, b: &BigInt, p: &BigInt) -> BigInt {
    residues(p).find(|y| div(&(y * y + a * y - b), p, 1)).expect("double root is rational")
}

/// Outcome of Tate's algorithm: Kodaira symbol and number of divisions by p.
pub fn tate(a: [i64; 5], p: u64) -> (Kodaira, u32) {
    let pb = BigInt::from(p);
    let p = &pb;
    let mut m = Model {
        a1: a[0].into(),
        a2: a[1].into(),
        a3: a[2].into(),
        a4: a[3].into(),
        a6: a[4].into(),
    };
    let mut divisions = 0;
    loop {
        let n = val(&m.delta(), p);
        if n == 0 {
            return (Kodaira::I(0), divisions);
        }
        // Move the singular point to (0, 0).
        let mut found = None;
        'search: for r in residues(p) {
            for t in residues(p) {
                let c = m.change(&r, &BigInt::zero(), &t);
                if div(&c.a3, p, 1) && div(&c.a4, p, 1) && div(&c.a6, p, 1) {
                    found = Some(c);
                    break 'search;
                }
            }
        }
        m = found.expect("singular point is rational");
        let (b2, _, b6, b8) = m.b();
        if !div(&b2, p, 1) {
            return (Kodaira::I(n), divisions);
        }
        if !div(&m.a6, p, 2) {
            return (Kodaira::II, divisions);
        }
        if !div(&b8, p, 3) {
            return (Kodaira::III, divisions);
        }
        if !div(&b6, p, 3) {
            return (Kodaira::IV, divisions);
        }
        let mut found = None;
        'search6: for r in residues(p) {
            for s in residues(p) {
                for t in residues(p) {
                    let c = m.change(&(&r * p), &s, &(&t * p));
                    if div(&c.a1, p, 1)
                        && div(&c.a2, p, 1)
                        && div(&c.a3, p, 2)
                        && div(&c.a4, p, 2)
                        && div(&c.a6, p, 3)
                    {
                        found = Some(c);
                        break 'search6;
                    }
                }
            }
        }
        m = found.expect("step 6 change exists");
        let p2 = p * p;
        let p3 = &p2 * p;
        // P(T) = T³ + a2,1 T² + a4,2 T + a6,3
        let (ca, cb, cc) = (&m.a2 / p, &m.a4 / &p2, &m.a6 / &p3);
        let disc = &ca * &ca * &cb * &cb - 4 * &cb * &cb * &cb - 4 * &ca * &ca * &ca * &cc - 27 * &cc * &cc
            + 18 * &ca * &cb * &cc;
        if !div(&disc, p, 1) {
            return (Kodaira::IStar(0), divisions);
        }
        let triple = div(&(&ca * &ca - 3 * &cb), p, 1);
        let pol = |x: &BigInt| x * x * x + &ca * x * x + &cb * x + &cc;
        let der = |x: &BigInt| 3 * x * x + 2 * &ca * x + &cb;
        let root = residues(p)
            .find(|x| div(&pol(x), p, 1) && div(&der(x), p, 1))
            .expect("multiple root is rational");
        m = m.change(&(&root * p), &BigInt::zero(), &BigInt::zero());
        if !triple {
            // I*_n: alternate between the y-quadratic and the x-quadratic.
            let mut mx = p2.clone();
            let mut my = p2.clone();
            let mut ix = 3u32;
            let mut iy = 3u32;
            loop {
                let a3t = &m.a3 / &my;
                let a6t = &m.a6 / (&mx * &my);
                if quad_distinct(&a3t, &a6t, p) {
                    break;
                }
                let y0 = quad_root(&a3t, &a6t, p);
                m = m.change(&BigInt::zero(), &BigInt::zero(), &(&y0 * &my));
                my *= p;
                iy += 1;
                let a2t = &m.a2 / p;
                let a4t = &m.a4 / (p * &mx);
                let a6t = &m.a6 / (&mx * &my);
                // a2t X² + a4t X + a6t; a2t is a unit here.
                if !div(&(&a4t * &a4t - 4 * &a2t * &a6t), p, 1) {
                    break;
                }
                let x0 = residues(p)
                    .find(|x| div(&(&a2t * x * x + &a4t * x + &a6t), p, 1))
                    .expect("double root is rational");
                m = m.change(&(&x0 * &mx), &BigInt::zero(), &BigInt::zero());
                mx *= p;
                ix += 1;
            }
            return (Kodaira::IStar(ix + iy - 5), divisions);
        }
        // Triple root at 0: p² | a2, p³ | a4, p⁴ | a6.
        let a3t = &m.a3 / &p2;
        let a6t = &m.a6 / (&p2 * &p2);
        if quad_distinct(&a3t, &a6t, p) {
            return (Kodaira::IVStar, divisions);
        }
        let y0 = quad_root(&a3t, &a6t, p);
        m = m.change(&BigInt::zero(), &BigInt::zero(), &(&y0 * &p2));
        if !div(&m.a4, p, 4) {
            return (Kodaira::IIIStar, divisions);
        }
        if !div(&m.a6, p, 6) {
            return (Kodaira::IIStar, divisions);
        }
        // Not minimal: divide by p and start again.
        m = Model {
            a1: &m.a1 / p,
            a2: &m.a2 / &p2,
            a3: &m.a3 / &p3,
            a4: &m.a4 / (&p2 * &p2),
            a6: &m.a6 / (&p3 * &p3),
        };
        divisions += 1;
    }
}
