//! Decision data for every isogeny-graph type, in two editions.
//!
//! Each row carries an edition tag. Rows tagged `Printed` reproduce the
//! published tables literally, rows tagged `Corrected` replace them, and
//! untagged rows are shared. See [`super::ERRATA`] for the list of changes.

use super::cond::{Cmp, DCond, TCond};
use super::GraphType;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Ed {
    Both,
    Printed,
    Corrected,
}

/// One branch of a per-prime u-vector table.
#[derive(Clone, Debug)]
pub(crate) struct UBranch {
    pub t: Vec<TCond>,
    pub u_e: Vec<u64>,
    pub u_ed: Vec<(DCond, Vec<u64>)>,
    pub ed: Ed,
}

/// u-vectors for one prime; a type's vectors are products over its sub-tables.
#[derive(Clone, Debug)]
pub(crate) struct SubTable {
    pub prime: u64,
    pub rows: Vec<UBranch>,
}

/// One outcome of the closed-form decision table.
#[derive(Clone, Debug)]
pub(crate) struct TheoremRow {
    pub t: Vec<TCond>,
    pub vertex: &'static str,
    pub d: DCond,
    pub prob: (u64, u64),
    pub ed: Ed,
}

#[derive(Clone, Debug)]
pub(crate) struct TypeData {
    pub vertices: Vec<&'static str>,
    /// Denominators n of the volume vector (1 : 1/n_2 : ...).
    pub volume_den: Vec<u64>,
    /// (i, j, degree) with vol(j) = vol(i)/degree.
    pub edges: Vec<(usize, usize, u64)>,
    pub sub: Vec<SubTable>,
    pub theorem: Vec<TheoremRow>,
}

fn v(p: u64, c: Cmp) -> TCond {
    TCond::V(p, c)
}

use Cmp::{Eq, Ge, Le, Ne};

fn ones(n: usize) -> Vec<u64> {
    vec![1; n]
}

fn all(u: Vec<u64>) -> Vec<(DCond, Vec<u64>)> {
    vec![(DCond::All, u)]
}

fn split(p: u64, not_div: Vec<u64>, div: Vec<u64>) -> Vec<(DCond, Vec<u64>)> {
    vec![(DCond::NotDiv(p), not_div), (DCond::Div(p), div)]
}

fn ub(t: Vec<TCond>, u_e: Vec<u64>, u_ed: Vec<(DCond, Vec<u64>)>) -> UBranch {
    UBranch { t, u_e, u_ed, ed: Ed::Both }
}

fn only(ed: Ed, mut b: UBranch) -> UBranch {
    b.ed = ed;
    b
}

fn th(t: Vec<TCond>, vertex: &'static str, d: DCond) -> TheoremRow {
    TheoremRow { t, vertex, d, prob: default_prob(d), ed: Ed::Both }
}

fn th_ed(ed: Ed, t: Vec<TCond>, vertex: &'static str, d: DCond) -> TheoremRow {
    TheoremRow { ed, ..th(t, vertex, d) }
}

/// The printed probability column: it always equals the density of the d-class.
fn default_prob(d: DCond) -> (u64, u64) {
    match d {
        DCond::All => (1, 1),
        DCond::Div(p) => (1, p + 1),
        DCond::NotDiv(p) => (p, p + 1),
    }
}

/// Both d-classes at p, sending d∤ to `nd` and d| to `dv`.
fn th_split(t: Vec<TCond>, p: u64, nd: &'static str, dv: &'static str) -> Vec<TheoremRow> {
    vec![th(t.clone(), nd, DCond::NotDiv(p)), th(t, dv, DCond::Div(p))]
}

fn sub(prime: u64, rows: Vec<UBranch>) -> Vec<SubTable> {
    vec![SubTable { prime, rows }]
}

fn chain(p: u64, len: usize) -> Vec<(usize, usize, u64)> {
    (1..len).map(|i| (i - 1, i, p)).collect()
}

fn line_dens(p: u64, len: usize) -> Vec<u64> {
    (0..len as u32).map(|k| p.pow(k)).collect()
}

const L2_VERTS: [&[&str]; 12] = [
    &["E_1", "E_2"],
    &["E_1", "E_3"],
    &["E_1", "E_5"],
    &["E_1", "E_7"],
    &["E_1", "E_11"],
    &["E_1", "E_13"],
    &["E_1", "E_17"],
    &["E_1", "E_19"],
    &["E_1", "E_37"],
    &["E_1", "E_43"],
    &["E_1", "E_67"],
    &["E_1", "E_163"],
];

pub(crate) const L2_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 37, 43, 67, 163];

fn l2(p: u64) -> TypeData {
    let idx = L2_PRIMES.iter().position(|&q| q == p).expect("L2 prime");
    let (e1, ep) = (L2_VERTS[idx][0], L2_VERTS[idx][1]);
    let vertices = L2_VERTS[idx].to_vec();
    let (rows, theorem) = match p {
        2 | 3 => {
            // Ladder with thresholds top, top-1, mid (two VShift halves), mid-1, below.
            let (top, shift, m, hi, lo): (i64, i64, i64, &'static [i64], &'static [i64]) = if p == 2 {
                (8, 64, 4, &[2, 3], &[0, 1])
            } else {
                (5, 27, 6, &[3, 4, 5], &[0, 1, 2])
            };
            let mid = top - 2;
            let hi_t = vec![v(p, Eq(mid)), TCond::VShift { p, shift, m, set: hi }];
            let lo_t = vec![v(p, Eq(mid)), TCond::VShift { p, shift, m, set: lo }];
            let rows = vec![
                ub(vec![v(p, Ge(top))], vec![1, p], all(ones(2))),
                ub(vec![v(p, Eq(top - 1))], vec![1, p], split(p, ones(2), vec![p, 1])),
                ub(hi_t.clone(), vec![1, p], split(p, ones(2), vec![p, 1])),
                ub(lo_t.clone(), ones(2), split(p, ones(2), vec![1, p])),
                ub(vec![v(p, Eq(mid - 1))], ones(2), split(p, ones(2), vec![1, p])),
                ub(vec![v(p, Le(mid - 2))], ones(2), all(ones(2))),
            ];
            let mut theorem = vec![th(vec![v(p, Ge(top))], ep, DCond::All)];
            theorem.extend(th_split(vec![v(p, Eq(top - 1))], p, ep, e1));
            theorem.extend(th_split(hi_t, p, ep, e1));
            theorem.extend(th_split(lo_t, p, e1, ep));
            theorem.extend(th_split(vec![v(p, Eq(mid - 1))], p, e1, ep));
            theorem.push(th(vec![v(p, Le(mid - 2))], e1, DCond::All));
            (rows, theorem)
        }
        5 => {
            let rows = vec![
                ub(vec![v(5, Ge(3))], vec![1, 5], all(ones(2))),
                ub(vec![v(5, Eq(2))], vec![1, 5], split(5, ones(2), vec![5, 1])),
                ub(vec![v(5, Eq(1))], ones(2), split(5, ones(2), vec![1, 5])),
                ub(vec![v(5, Le(0))], ones(2), all(ones(2))),
            ];
            let mut theorem = vec![th(vec![v(5, Ge(3))], ep, DCond::All)];
            theorem.extend(th_split(vec![v(5, Eq(2))], 5, ep, e1));
            theorem.extend(th_split(vec![v(5, Eq(1))], 5, e1, ep));
            theorem.push(th(vec![v(5, Le(0))], e1, DCond::All));
            (rows, theorem)
        }
        7 => {
            let rows = vec![
                ub(vec![v(7, Ge(2))], vec![1, 7], all(ones(2))),
                ub(vec![v(7, Eq(1))], ones(2), split(7, ones(2), vec![1, 7])),
                ub(vec![v(7, Le(0))], ones(2), all(ones(2))),
            ];
            let mut theorem = vec![th(vec![v(7, Ge(2))], ep, DCond::All)];
            theorem.extend(th_split(vec![v(7, Eq(1))], 7, e1, ep));
            theorem.push(th(vec![v(7, Le(0))], e1, DCond::All));
            (rows, theorem)
        }
        13 => {
            let rows = vec![
                ub(vec![v(13, Ge(1))], vec![1, 13], all(ones(2))),
                ub(vec![v(13, Le(0))], ones(2), all(ones(2))),
            ];
            let theorem = vec![
                th(vec![v(13, Ge(1))], ep, DCond::All),
                th(vec![v(13, Le(0))], e1, DCond::All),
            ];
            (rows, theorem)
        }
        37 => (vec![ub(vec![], ones(2), all(ones(2)))], vec![th(vec![], e1, DCond::All)]),
        _ => (
            vec![ub(vec![], ones(2), split(p, ones(2), vec![1, p]))],
            th_split(vec![], p, e1, ep),
        ),
    };
    TypeData { vertices, volume_den: vec![1, p], edges: chain(p, 2), sub: sub(p, rows), theorem }
}

fn l3(p: u64) -> TypeData {
    let vertices = if p == 3 { vec!["E_1", "E_3", "E_9"] } else { vec!["E_1", "E_5", "E_25"] };
    let (e1, ep, ep2) = (vertices[0], vertices[1], vertices[2]);
    let (rows, theorem) = if p == 3 {
        let rows = vec![
            ub(vec![v(3, Ge(3))], vec![1, 3, 9], all(ones(3))),
            ub(vec![v(3, Eq(2))], vec![1, 3, 3], split(3, ones(3), vec![1, 1, 3])),
            ub(vec![v(3, Eq(1))], ones(3), split(3, ones(3), vec![1, 3, 3])),
            ub(vec![v(3, Le(0))], ones(3), all(ones(3))),
        ];
        let mut theorem = vec![th(vec![v(3, Ge(3))], ep2, DCond::All)];
        theorem.extend(th_split(vec![v(3, Eq(2))], 3, ep, ep2));
        theorem.extend(th_split(vec![v(3, Eq(1))], 3, e1, ep));
        theorem.push(th(vec![v(3, Le(0))], e1, DCond::All));
        (rows, theorem)
    } else {
        let rows = vec![
            ub(vec![v(5, Ge(1))], vec![1, 5, 25], all(ones(3))),
            ub(vec![v(5, Le(0))], ones(3), all(ones(3))),
        ];
        let theorem = vec![th(vec![v(5, Ge(1))], ep2, DCond::All), th(vec![v(5, Le(0))], e1, DCond::All)];
        (rows, theorem)
    };
    TypeData { vertices, volume_den: line_dens(p, 3), edges: chain(p, 3), sub: sub(p, rows), theorem }
}

fn l4() -> TypeData {
    let tw = split(3, ones(4), vec![1, 1, 3, 3]);
    TypeData {
        vertices: vec!["E_1", "E_3", "E_9", "E_27"],
        volume_den: line_dens(3, 4),
        edges: chain(3, 4),
        sub: sub(
            3,
            vec![
                only(Ed::Printed, ub(vec![], ones(4), tw.clone())),
                only(Ed::Corrected, ub(vec![], vec![1, 3, 3, 3], tw)),
            ],
        ),
        theorem: th_split(vec![], 3, "E_3", "E_9"),
    }
}

/// R4(pq): vertices (E_1, E_p, E_q, E_pq).
fn r4(n: u64) -> TypeData {
    let (p, q, vertices): (u64, u64, Vec<&'static str>) = match n {
        6 => (2, 3, vec!["E_1", "E_2", "E_3", "E_6"]),
        10 => (2, 5, vec!["E_1", "E_2", "E_5", "E_10"]),
        14 => (2, 7, vec!["E_1", "E_2", "E_7", "E_14"]),
        15 => (3, 5, vec!["E_1", "E_3", "E_5", "E_15"]),
        21 => (3, 7, vec!["E_1", "E_3", "E_7", "E_21"]),
        _ => unreachable!("R4 level"),
    };
    let edges = vec![(0, 1, p), (0, 2, q), (1, 3, q), (2, 3, p)];
    let volume_den = vec![1, p, q, p * q];
    let (sub, theorem) = match n {
        6 => {
            let s2 = SubTable {
                prime: 2,
                rows: vec![
                    ub(vec![v(2, Ge(2))], vec![1, 2, 1, 2], all(ones(4))),
                    ub(vec![v(2, Le(1))], ones(4), all(ones(4))),
                ],
            };
            let s3 = SubTable {
                prime: 3,
                rows: vec![
                    ub(vec![v(3, Ge(2))], vec![1, 1, 3, 3], all(ones(4))),
                    ub(vec![v(3, Eq(1))], ones(4), split(3, ones(4), vec![1, 1, 3, 3])),
                    ub(vec![v(3, Le(0))], ones(4), all(ones(4))),
                ],
            };
            let mut theorem = Vec::new();
            // `up` is the 3-isogenous vertex above `down`.
            for (c2, up, down) in [(Ge(2), "E_6", "E_2"), (Le(1), "E_3", "E_1")] {
                theorem.push(th(vec![v(2, c2), v(3, Ge(2))], up, DCond::All));
                let t = vec![v(2, c2), v(3, Eq(1))];
                theorem.push(th_ed(Ed::Printed, t.clone(), down, DCond::Div(3)));
                theorem.push(th_ed(Ed::Printed, t.clone(), up, DCond::NotDiv(3)));
                theorem.push(th_ed(Ed::Corrected, t.clone(), up, DCond::Div(3)));
                theorem.push(th_ed(Ed::Corrected, t, down, DCond::NotDiv(3)));
                theorem.push(th(vec![v(2, c2), v(3, Le(0))], down, DCond::All));
            }
            (vec![s2, s3], theorem)
        }
        10 => {
            let not4: &'static [u64] = &[1, 2, 3];
            let is4: &'static [u64] = &[4];
            let c5 = |set| TCond::Cong { p: 5, e: 0, k: 1, set };
            let s2 = SubTable {
                prime: 2,
                rows: vec![
                    ub(vec![v(2, Ge(2))], vec![1, 2, 1, 2], all(ones(4))),
                    ub(vec![v(2, Eq(1))], vec![1, 2, 1, 2], split(2, ones(4), vec![2, 1, 2, 1])),
                    ub(vec![v(2, Le(0))], ones(4), all(ones(4))),
                ],
            };
            let s5 = SubTable {
                prime: 5,
                rows: vec![
                    ub(vec![v(5, Ne(0))], ones(4), all(ones(4))),
                    ub(vec![v(5, Eq(0)), c5(not4)], ones(4), all(ones(4))),
                    ub(vec![v(5, Eq(0)), c5(is4)], vec![1, 1, 5, 5], all(ones(4))),
                ],
            };
            let mut theorem = vec![
                th(vec![v(2, Ge(2)), v(5, Ne(0))], "E_2", DCond::All),
                th(vec![v(2, Ge(2)), v(5, Eq(0)), c5(not4)], "E_2", DCond::All),
                th(vec![v(2, Ge(2)), v(5, Eq(0)), c5(is4)], "E_10", DCond::All),
            ];
            let mid = |rest: Vec<TCond>| [vec![v(2, Eq(1))], rest].concat();
            theorem.extend(th_split(mid(vec![v(5, Ne(0))]), 2, "E_2", "E_1"));
            theorem.extend(th_split(mid(vec![v(5, Eq(0)), c5(not4)]), 2, "E_2", "E_1"));
            theorem.extend(th_split(mid(vec![v(5, Eq(0)), c5(is4)]), 2, "E_10", "E_5"));
            theorem.extend([
                th(vec![v(2, Le(0)), v(5, Eq(0)), c5(is4)], "E_5", DCond::All),
                th(vec![v(2, Le(0)), v(5, Ne(0))], "E_1", DCond::All),
                th(vec![v(2, Le(0)), v(5, Eq(0)), c5(not4)], "E_1", DCond::All),
            ]);
            (vec![s2, s5], theorem)
        }
        _ => {
            // Genus >= 1: one class, twist-sensitive at a single prime.
            let (r, twisted) = match n {
                14 => (7, vec![1, 1, 7, 7]),
                15 => (5, vec![1, 1, 5, 5]),
                _ => (3, vec![1, 3, 1, 3]),
            };
            let big = vertices[twisted.iter().position(|&x| x != 1).unwrap()];
            let s = sub(r, vec![ub(vec![], ones(4), split(r, ones(4), twisted))]);
            (s, th_split(vec![], r, "E_1", big))
        }
    };
    TypeData { vertices, volume_den, edges, sub, theorem }
}

fn r6() -> TypeData {
    let n = 6;
    TypeData {
        vertices: vec!["E_1", "E_2", "E_3", "E_6", "E_9", "E_18"],
        volume_den: vec![1, 2, 3, 6, 9, 18],
        edges: vec![(0, 1, 2), (0, 2, 3), (2, 3, 2), (2, 4, 3), (4, 5, 2), (1, 3, 3), (3, 5, 3)],
        sub: vec![
            SubTable {
                prime: 2,
                rows: vec![
                    ub(vec![v(2, Ge(1))], vec![1, 2, 1, 2, 1, 2], all(ones(n))),
                    ub(vec![v(2, Le(0))], ones(n), all(ones(n))),
                ],
            },
            SubTable {
                prime: 3,
                rows: vec![
                    ub(vec![v(3, Eq(0))], vec![1, 1, 3, 3, 9, 9], all(ones(n))),
                    ub(vec![v(3, Ne(0))], ones(n), all(ones(n))),
                ],
            },
        ],
        theorem: vec![
            th(vec![v(2, Ge(1)), v(3, Ne(0))], "E_2", DCond::All),
            th(vec![v(2, Ge(1)), v(3, Eq(0))], "E_18", DCond::All),
            th(vec![v(2, Le(0)), v(3, Ne(0))], "E_1", DCond::All),
            th(vec![v(2, Le(0)), v(3, Eq(0))], "E_9", DCond::All),
        ],
    }
}

fn c2(e: i64, set: &'static [u64]) -> TCond {
    TCond::Cong { p: 2, e, k: 2, set }
}

fn t4() -> TypeData {
    let n = 4;
    let rows = vec![
        ub(vec![v(2, Ge(6))], vec![1, 2, 4, 1], all(ones(n))),
        ub(vec![v(2, Eq(5))], vec![1, 2, 2, 2], split(2, ones(n), vec![1, 1, 2, 1])),
        ub(vec![v(2, Eq(4)), c2(4, &[1])], vec![1, 2, 2, 2], split(2, ones(n), vec![1, 1, 1, 2])),
        ub(vec![v(2, Eq(4)), c2(4, &[3])], vec![1, 2, 2, 4], all(ones(n))),
        only(Ed::Printed, ub(vec![v(2, Eq(3))], ones(n), split(2, vec![1, 2, 2, 2], ones(n)))),
        only(Ed::Corrected, ub(vec![v(2, Eq(3))], ones(n), split(2, ones(n), vec![1, 2, 2, 2]))),
        ub(vec![v(2, Le(2))], ones(n), all(ones(n))),
    ];
    let mut theorem = vec![th(vec![v(2, Ge(6))], "E_4", DCond::All)];
    theorem.extend(th_split(vec![v(2, Eq(5))], 2, "E_2", "E_4"));
    theorem.extend(th_split(vec![v(2, Eq(4)), c2(4, &[1])], 2, "E_2", "E_12"));
    theorem.push(th(vec![v(2, Eq(4)), c2(4, &[3])], "E_12", DCond::All));
    theorem.extend(th_split(vec![v(2, Eq(3))], 2, "E_1", "E_2"));
    theorem.push(th(vec![v(2, Le(2))], "E_1", DCond::All));
    TypeData {
        vertices: vec!["E_1", "E_2", "E_4", "E_12"],
        volume_den: vec![1, 2, 4, 4],
        edges: vec![(0, 1, 2), (1, 2, 2), (1, 3, 2)],
        sub: sub(2, rows),
        theorem,
    }
}

fn t6() -> TypeData {
    let n = 6;
    let a = vec![1, 2, 2, 4, 4, 8];
    let b = vec![1, 2, 2, 4, 8, 4];
    let three = vec![v(2, Eq(2)), c2(2, &[3])];
    let one = vec![v(2, Eq(2)), c2(2, &[1])];
    let rows = vec![
        ub(vec![v(2, Ge(3))], vec![1, 2, 4, 2, 2, 2], all(ones(n))),
        only(Ed::Printed, ub(three.clone(), a.clone(), all(ones(n)))),
        only(Ed::Printed, ub(one.clone(), b.clone(), all(ones(n)))),
        only(Ed::Corrected, ub(three.clone(), b, all(ones(n)))),
        only(Ed::Corrected, ub(one.clone(), a, all(ones(n)))),
        ub(vec![v(2, Le(1))], ones(n), all(ones(n))),
    ];
    TypeData {
        vertices: vec!["E_1", "E_2", "E_12", "E_4", "E_8", "E_22"],
        volume_den: vec![1, 2, 4, 4, 8, 8],
        edges: vec![(0, 1, 2), (1, 2, 2), (1, 3, 2), (3, 4, 2), (3, 5, 2)],
        sub: sub(2, rows),
        theorem: vec![
            th(vec![v(2, Ge(3))], "E_12", DCond::All),
            th(three, "E_8", DCond::All),
            th(one, "E_22", DCond::All),
            th(vec![v(2, Le(1))], "E_1", DCond::All),
        ],
    }
}

fn t8() -> TypeData {
    let n = 8;
    let three = vec![v(2, Eq(1)), c2(1, &[3])];
    let one = vec![v(2, Eq(1)), c2(1, &[1])];
    let rows = vec![
        ub(vec![v(2, Ge(2))], vec![1, 2, 4, 2, 2, 2, 2, 2], all(ones(n))),
        ub(three.clone(), vec![1, 2, 2, 4, 4, 8, 16, 8], all(ones(n))),
        ub(one.clone(), vec![1, 2, 2, 4, 4, 8, 8, 16], all(ones(n))),
        ub(vec![v(2, Le(0))], ones(n), all(ones(n))),
    ];
    TypeData {
        vertices: vec!["E_1", "E_2", "E_21", "E_4", "E_41", "E_8", "E_81", "E_16"],
        volume_den: vec![1, 2, 4, 4, 8, 8, 16, 16],
        edges: vec![(0, 1, 2), (1, 2, 2), (1, 3, 2), (3, 4, 2), (3, 5, 2), (5, 6, 2), (5, 7, 2)],
        sub: sub(2, rows),
        theorem: vec![
            th(vec![v(2, Ge(2))], "E_21", DCond::All),
            th(three, "E_81", DCond::All),
            th(one, "E_16", DCond::All),
            th_ed(Ed::Printed, vec![v(2, Le(0))], "E_2", DCond::All),
            th_ed(Ed::Corrected, vec![v(2, Le(0))], "E_1", DCond::All),
        ],
    }
}

fn s8() -> TypeData {
    let n = 8;
    let mut rows2 = vec![ub(vec![v(2, Ne(0))], ones(n), all(ones(n)))];
    for (ed, e) in [(Ed::Printed, 1), (Ed::Corrected, 0)] {
        rows2.push(only(
            ed,
            ub(vec![v(2, Eq(0)), c2(e, &[3])], vec![1, 1, 2, 2, 2, 4, 4, 2], all(ones(n))),
        ));
        rows2.push(only(
            ed,
            ub(vec![v(2, Eq(0)), c2(e, &[1])], vec![1, 1, 2, 2, 4, 2, 2, 4], all(ones(n))),
        ));
    }
    let rows3 = vec![
        ub(vec![v(3, Ge(1))], vec![1, 3, 1, 3, 1, 3, 1, 3], all(ones(n))),
        ub(vec![v(3, Le(0))], ones(n), all(ones(n))),
    ];
    let mut theorem = Vec::new();
    for (ed, hi) in [(Ed::Printed, 2), (Ed::Corrected, 1)] {
        for (c3, a, b, c) in [(Ge(hi), "E_3", "E_12", "E_31"), (Le(0), "E_1", "E_4", "E_21")] {
            theorem.push(th_ed(ed, vec![v(3, c3), v(2, Ne(0))], a, DCond::All));
            theorem.push(th_ed(ed, vec![v(3, c3), v(2, Eq(0)), c2(0, &[3])], b, DCond::All));
            theorem.push(th_ed(ed, vec![v(3, c3), v(2, Eq(0)), c2(0, &[1])], c, DCond::All));
        }
    }
    TypeData {
        vertices: vec!["E_1", "E_3", "E_2", "E_6", "E_21", "E_12", "E_4", "E_31"],
        volume_den: vec![1, 3, 2, 6, 4, 12, 4, 12],
        edges: vec![
            (0, 2, 2),
            (0, 1, 3),
            (1, 3, 2),
            (2, 3, 3),
            (2, 4, 2),
            (2, 6, 2),
            (3, 5, 2),
            (3, 7, 2),
            (4, 5, 3),
            (6, 7, 3),
        ],
        sub: vec![SubTable { prime: 2, rows: rows2 }, SubTable { prime: 3, rows: rows3 }],
        theorem,
    }
}

pub(crate) fn build(g: GraphType) -> TypeData {
    match g {
        GraphType::L2(p) => l2(p),
        GraphType::L3(p) => l3(p),
        GraphType::L4 => l4(),
        GraphType::R4(n) => r4(n),
        GraphType::R6 => r6(),
        GraphType::T4 => t4(),
        GraphType::T6 => t6(),
        GraphType::T8 => t8(),
        GraphType::S8 => s8(),
    }
}
