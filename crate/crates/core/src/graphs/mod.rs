//! Rational isogeny-graph types, their volume vectors and u-vector tables,
//! and the Faltings vertex of every twisted class.
//!
//! Two independent routes pick the vertex: the closed-form decision table
//! ([`faltings_by_theorem`]) and the argmax of ũ²u²v over the vertices
//! ([`faltings_by_volumes`]). Their agreement is checked in tests.

mod cond;
mod data;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{check_prime, check_squarefree, Rat};

pub use cond::{describe, Cmp, DCond, TCond};
use data::{Ed, TypeData, L2_PRIMES};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GraphType {
    /// Two vertices joined by a p-isogeny.
    L2(u64),
    /// Path of two p-isogenies, p ∈ {3, 5}.
    L3(u64),
    L4,
    /// Square with sides p and q, indexed by N = pq.
    R4(u64),
    R6,
    T4,
    T6,
    T8,
    S8,
}

impl GraphType {
    pub fn all() -> Vec<GraphType> {
        let mut v: Vec<GraphType> = L2_PRIMES.iter().map(|&p| GraphType::L2(p)).collect();
        v.extend([GraphType::L3(3), GraphType::L3(5), GraphType::L4]);
        v.extend([6, 10, 14, 15, 21].map(GraphType::R4));
        v.extend([GraphType::R6, GraphType::T4, GraphType::T6, GraphType::T8, GraphType::S8]);
        v
    }

    /// Level N of the modular curve X_0(N) the type comes from.
    pub fn level(self) -> u64 {
        match self {
            GraphType::L2(p) => p,
            GraphType::L3(p) => p * p,
            GraphType::L4 => 27,
            GraphType::R4(n) => n,
            GraphType::R6 => 18,
            GraphType::T4 => 4,
            GraphType::T6 => 8,
            GraphType::T8 => 16,
            GraphType::S8 => 12,
        }
    }

    /// Rational points come in finitely many classes rather than a t-line.
    pub fn genus_ge_1(self) -> bool {
        matches!(
            self,
            GraphType::L2(11 | 17 | 19 | 37 | 43 | 67 | 163) | GraphType::L4 | GraphType::R4(14 | 15 | 21)
        )
    }

    /// Primes dividing some isogeny degree of the graph.
    pub fn isogeny_primes(self) -> Vec<u64> {
        match self {
            GraphType::L2(p) | GraphType::L3(p) => vec![p],
            GraphType::L4 => vec![3],
            GraphType::R4(6) => vec![2, 3],
            GraphType::R4(10) => vec![2, 5],
            GraphType::R4(14) => vec![2, 7],
            GraphType::R4(15) => vec![3, 5],
            GraphType::R4(_) => vec![3, 7],
            GraphType::R6 | GraphType::S8 => vec![2, 3],
            GraphType::T4 | GraphType::T6 | GraphType::T8 => vec![2],
        }
    }

    fn data(self) -> &'static TypeData {
        static DATA: OnceLock<HashMap<GraphType, TypeData>> = OnceLock::new();
        &DATA.get_or_init(|| GraphType::all().into_iter().map(|g| (g, data::build(g))).collect())[&self]
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphType::L2(p) => write!(f, "L2({p})"),
            GraphType::L3(p) => write!(f, "L3({})", p * p),
            GraphType::L4 => write!(f, "L4"),
            GraphType::R4(n) => write!(f, "R4({n})"),
            GraphType::R6 => write!(f, "R6"),
            GraphType::T4 => write!(f, "T4"),
            GraphType::T6 => write!(f, "T6"),
            GraphType::T8 => write!(f, "T8"),
            GraphType::S8 => write!(f, "S8"),
        }
    }
}

impl FromStr for GraphType {
    type Err = Error;

    /// Accepts `L3_9`, `L3(9)`, `l3-9` and the like.
    fn from_str(s: &str) -> Result<GraphType> {
        let norm: String = s
            .trim()
            .to_ascii_uppercase()
            .chars()
            .map(|c| if matches!(c, '(' | '_' | '-' | ' ') { ',' } else { c })
            .filter(|&c| c != ')')
            .collect();
        let unknown = || Error::UnknownType(s.to_string());
        let (head, arg) = match norm.split_once(',') {
            Some((h, a)) => (h, Some(a.parse::<u64>().map_err(|_| unknown())?)),
            None => (norm.as_str(), None),
        };
        let g = match (head, arg) {
            ("L2", Some(p)) if L2_PRIMES.contains(&p) => GraphType::L2(p),
            ("L3", Some(9)) => GraphType::L3(3),
            ("L3", Some(25)) => GraphType::L3(5),
            ("L4", None) => GraphType::L4,
            ("R4", Some(n)) if [6, 10, 14, 15, 21].contains(&n) => GraphType::R4(n),
            ("R6", None) => GraphType::R6,
            ("T4", None) => GraphType::T4,
            ("T6", None) => GraphType::T6,
            ("T8", None) => GraphType::T8,
            ("S8", None) => GraphType::S8,
            _ => return Err(unknown()),
        };
        Ok(g)
    }
}

impl Serialize for GraphType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Which transcription of the decision data to use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Edition {
    /// The tables exactly as published.
    Printed,
    /// Published tables with [`ERRATA`] applied; the two routes agree.
    #[default]
    Corrected,
}

impl FromStr for Edition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Edition> {
        match s.trim().to_ascii_lowercase().as_str() {
            "printed" => Ok(Edition::Printed),
            "corrected" => Ok(Edition::Corrected),
            _ => Err(Error::Parse { what: "edition", input: s.to_string() }),
        }
    }
}

fn in_edition(ed: Ed, e: Edition) -> bool {
    match ed {
        Ed::Both => true,
        Ed::Printed => e == Edition::Printed,
        Ed::Corrected => e == Edition::Corrected,
    }
}

/// Which published table an erratum touches.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrataTarget {
    /// The closed-form Faltings table.
    Decision,
    /// The per-branch u-vectors.
    UVectors,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Erratum {
    pub graph: &'static str,
    pub target: ErrataTarget,
    pub change: &'static str,
}

/// Differences between the printed and corrected editions.
pub const ERRATA: &[Erratum] = &[
    Erratum {
        graph: "T4",
        target: ErrataTarget::UVectors,
        change: "v2(t)=3: the twist vectors (1:2:2:2) and (1:1:1:1) belong to d even and d odd respectively; printed the other way round",
    },
    Erratum {
        graph: "R4(6)",
        target: ErrataTarget::Decision,
        change: "v3(t)=1: the d≡0(3) and d≢0(3) vertices are exchanged in both v2 branches (E_6/E_2 and E_3/E_1)",
    },
    Erratum {
        graph: "T6",
        target: ErrataTarget::UVectors,
        change: "v2(t)=2: the u(E) vectors of t/4≡3 and t/4≡1 are exchanged; (1:2:2:4:8:4) goes with t/4≡3",
    },
    Erratum {
        graph: "T8",
        target: ErrataTarget::Decision,
        change: "v2(t)<=0: the Faltings vertex is E_1, printed as E_2",
    },
    Erratum {
        graph: "S8",
        target: ErrataTarget::Decision,
        change: "the upper v3 branch is v3(t)>0, printed as v3(t)>1, which leaves v3(t)=1 uncovered",
    },
    Erratum {
        graph: "S8",
        target: ErrataTarget::UVectors,
        change: "v2(t)=0: the congruences are on t mod 4, printed as t/2 mod 4, which is not 2-integral",
    },
    Erratum {
        graph: "L4",
        target: ErrataTarget::UVectors,
        change: "u(E) is (1:3:3:3), printed as (1:1:1:1); checked against the Neron volumes of 27a4, 27a3, 27a1, 27a2",
    },
];

/// The parameter that selects a rational point on X_0(N).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Param {
    /// Hauptmodul value for genus-0 types.
    T(Rat),
    /// A sporadic point of a genus >= 1 type, optionally naming the class
    /// (`a` or `b` for L2(11)).
    Sporadic(Option<String>),
}

impl Param {
    pub fn t(&self) -> Option<&Rat> {
        match self {
            Param::T(t) => Some(t),
            Param::Sporadic(_) => None,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::T(t) => write!(f, "t={t}"),
            Param::Sporadic(Some(c)) => write!(f, "class {c}"),
            Param::Sporadic(None) => write!(f, "sporadic"),
        }
    }
}

fn check_param(g: GraphType, param: &Param) -> Result<Option<&Rat>> {
    match (g.genus_ge_1(), param) {
        (false, Param::T(t)) => {
            if t.is_zero() {
                return Err(Error::Cusp(t.to_string()));
            }
            Ok(Some(t))
        }
        (false, Param::Sporadic(_)) => Err(Error::MissingParameter(format!("{g} needs a value of t"))),
        (true, Param::T(_)) => Err(Error::MissingParameter(format!("{g} takes no t; it has finitely many points"))),
        (true, Param::Sporadic(None)) => Ok(None),
        (true, Param::Sporadic(Some(c))) => {
            if g == GraphType::L2(11) && (c == "a" || c == "b") {
                Ok(None)
            } else {
                Err(Error::Parse { what: "isogeny class tag", input: c.clone() })
            }
        }
    }
}

fn conds_hold(conds: &[TCond], t: Option<&Rat>) -> Result<bool> {
    for c in conds {
        let t = t.expect("genus >= 1 rows carry no t-conditions");
        if !c.eval(t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_d(d: &BigInt) -> Result<()> {
    if d == &BigInt::from(0) {
        return Err(Error::Zero { what: "d" });
    }
    check_squarefree(d)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Edge {
    pub a: &'static str,
    pub b: &'static str,
    pub degree: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphStructure {
    pub vertices: Vec<&'static str>,
    pub edges: Vec<Edge>,
}

pub fn graph_structure(g: GraphType) -> GraphStructure {
    let data = g.data();
    let edges = data
        .edges
        .iter()
        .map(|&(i, j, degree)| Edge { a: data.vertices[i], b: data.vertices[j], degree })
        .collect();
    GraphStructure { vertices: data.vertices.clone(), edges }
}

/// Projective Néron-lattice volumes with the first entry 1.
pub fn volume_vector(g: GraphType) -> Vec<Rat> {
    g.data().volume_den.iter().map(|&n| Rat::frac(1, n as i64)).collect()
}

/// Branch descriptions of the u-vector tables, one list per prime.
pub fn u_branches(g: GraphType, edition: Edition) -> Vec<(u64, Vec<String>)> {
    g.data()
        .sub
        .iter()
        .map(|s| {
            let rows = s.rows.iter().filter(|r| in_edition(r.ed, edition)).map(|r| describe(&r.t)).collect();
            (s.prime, rows)
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UVectors {
    #[serde(rename = "uE")]
    pub u_e: Vec<Rat>,
    #[serde(rename = "uEd")]
    pub u_ed: Vec<Rat>,
    /// Branch descriptions, one per sub-table.
    pub branch: Vec<String>,
}

/// [u(E)] and [u(𝓔^d)], multiplied over the per-prime sub-tables.
pub fn u_vectors(g: GraphType, param: &Param, d: &BigInt, edition: Edition) -> Result<UVectors> {
    let t = check_param(g, param)?;
    check_d(d)?;
    let data = g.data();
    let n = data.vertices.len();
    let mut u_e = vec![1u64; n];
    let mut u_ed = vec![1u64; n];
    let mut branch = Vec::new();
    for sub in &data.sub {
        let mut hits = Vec::new();
        for row in sub.rows.iter().filter(|r| in_edition(r.ed, edition)) {
            if conds_hold(&row.t, t)? {
                hits.push(row);
            }
        }
        let what = || format!("{g} at {} for t={}", sub.prime, t.map_or("-".into(), |t| t.to_string()));
        let row = match hits.as_slice() {
            [row] => *row,
            [] => return Err(Error::TableMiss(what())),
            _ => return Err(Error::AmbiguousRows(what())),
        };
        let twist: Vec<_> = row.u_ed.iter().filter(|(dc, _)| dc.holds(d)).collect();
        let [(dc, ued)] = twist.as_slice() else {
            return Err(Error::TableMiss(format!("{} with d={d}", what())));
        };
        for i in 0..n {
            u_e[i] *= row.u_e[i];
            u_ed[i] *= ued[i];
        }
        let mut desc = describe(&row.t);
        if *dc != DCond::All {
            desc.push_str(&format!("; {dc}"));
        }
        branch.push(desc);
    }
    let to_rat = |v: Vec<u64>| v.into_iter().map(|x| Rat::int(x as i64)).collect();
    Ok(UVectors { u_e: to_rat(u_e), u_ed: to_rat(u_ed), branch })
}

/// ũ_i² u_i² v_i for every vertex: proportional to the twisted Néron volumes.
pub fn twisted_volumes(g: GraphType, param: &Param, d: &BigInt, edition: Edition) -> Result<Vec<Rat>> {
    let u = u_vectors(g, param, d, edition)?;
    Ok(volume_vector(g)
        .into_iter()
        .zip(u.u_e.iter().zip(&u.u_ed))
        .map(|(v, (a, b))| (a * b).pow(2) * v)
        .collect())
}

/// The vertex of largest twisted volume, i.e. least Faltings height.
pub fn faltings_by_volumes(g: GraphType, param: &Param, d: &BigInt, edition: Edition) -> Result<&'static str> {
    let vols = twisted_volumes(g, param, d, edition)?;
    let max = vols.iter().max().expect("nonempty graph");
    let winners: Vec<usize> = (0..vols.len()).filter(|&i| &vols[i] == max).collect();
    let labels = &g.data().vertices;
    match winners.as_slice() {
        [i] => Ok(labels[*i]),
        _ => Err(Error::Tie(format!(
            "{g}: {} at {max}",
            winners.iter().map(|&i| labels[i]).collect::<Vec<_>>().join(", ")
        ))),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FaltingsResult {
    pub vertex: &'static str,
    pub d_condition: DCond,
    pub probability: Rat,
    pub branch: String,
}

fn theorem_rows(g: GraphType, t: Option<&Rat>, edition: Edition) -> Result<Vec<FaltingsResult>> {
    let mut out = Vec::new();
    for row in g.data().theorem.iter().filter(|r| in_edition(r.ed, edition)) {
        if conds_hold(&row.t, t)? {
            out.push(FaltingsResult {
                vertex: row.vertex,
                d_condition: row.d,
                probability: Rat::frac(row.prob.0 as i64, row.prob.1 as i64),
                branch: describe(&row.t),
            });
        }
    }
    Ok(out)
}

/// Every outcome for a fixed point, with the density of its d-class.
pub fn prob_table(g: GraphType, param: &Param, edition: Edition) -> Result<Vec<FaltingsResult>> {
    let t = check_param(g, param)?;
    let rows = theorem_rows(g, t, edition)?;
    if rows.is_empty() {
        return Err(Error::TableMiss(format!("{g} decision table for {param}")));
    }
    let total = rows.iter().fold(Rat::zero(), |acc, r| acc + &r.probability);
    if total != Rat::one() {
        return Err(Error::AmbiguousRows(format!("{g} for {param}: probabilities sum to {total}")));
    }
    Ok(rows)
}

/// The decision-table row for (g, t, d).
pub fn faltings_by_theorem(g: GraphType, param: &Param, d: &BigInt, edition: Edition) -> Result<FaltingsResult> {
    check_d(d)?;
    let rows = prob_table(g, param, edition)?;
    let mut hits: Vec<FaltingsResult> = rows.into_iter().filter(|r| r.d_condition.holds(d)).collect();
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        0 => Err(Error::TableMiss(format!("{g} decision table for d={d}"))),
        _ => Err(Error::AmbiguousRows(format!("{g} decision table for d={d}"))),
    }
}

/// Density among square-free integers of those divisible (or not) by p: 1/(p+1) or p/(p+1).
pub fn probability_of_branch(p: u64, divisible: bool) -> Result<Rat> {
    check_prime(p)?;
    let p = p as i64;
    Ok(if divisible { Rat::frac(1, p + 1) } else { Rat::frac(p, p + 1) })
}

/// Density of a d-class among square-free integers.
pub fn dcond_density(dc: DCond) -> Result<Rat> {
    match dc {
        DCond::All => Ok(Rat::one()),
        DCond::Div(p) => probability_of_branch(p, true),
        DCond::NotDiv(p) => probability_of_branch(p, false),
    }
}
