//! Numeric cross-check of the decision tables: Néron lattice volumes from
//! complex AGM periods, Faltings heights, and sieved densities.

mod density;
mod periods;
mod real;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{l211_class, l39_signatures};
use crate::graphs::{faltings_by_theorem, graph_structure, Edition, GraphType, Param};
use crate::localdata::global_minimal;
use crate::weierstrass::{twist_sig, Signature};
use crate::Rat;

pub use density::{empirical_prob, squarefree_density, squarefree_sieve, DensityReport, EmpiricalReport, VertexFrequency};
pub use real::Real;

use periods::MAX_BITS;
use real::{Work, RM};

pub const DEFAULT_BITS: usize = 128;

#[derive(Clone, Debug, Serialize)]
pub struct LatticeApprox {
    pub volume: Real,
    pub claimed_error: Real,
    /// Working precision that met the target.
    pub bits: usize,
}

fn check_bits(bits: usize) -> Result<()> {
    if !(64..=MAX_BITS).contains(&bits) {
        return Err(Error::BadPrecision(bits));
    }
    Ok(())
}

/// Covolume of the period lattice of the short model of s, for the
/// differential dx/2y.
pub fn lattice_volume(s: &Signature, bits: usize) -> Result<LatticeApprox> {
    check_bits(bits)?;
    let (v, err, used) = periods::volume(s, bits)?;
    let out = LatticeApprox { volume: Real(v), claimed_error: Real(err), bits: used };
    if out.claimed_error.0 >= out.volume.0.mul(&astro_float::BigFloat::from_f64(1e-6, 64), 64, RM) {
        return Err(Error::PrecisionExhausted { bits: used, detail: "error bound too wide".into() });
    }
    Ok(out)
}

/// Volume of the Néron lattice: the period lattice of a global minimal model.
/// Equal to u(E)²·lattice_volume(s).
pub fn neron_volume(s: &Signature, bits: usize) -> Result<LatticeApprox> {
    let (minimal, _) = global_minimal(s)?;
    lattice_volume(&minimal, bits)
}

/// h(E) = −½·log vol(Λ(𝓔)).
pub fn faltings_height(s: &Signature, bits: usize) -> Result<Real> {
    Ok(height_of(&neron_volume(s, bits)?.volume, bits))
}

fn height_of(vol: &Real, bits: usize) -> Real {
    let mut w = Work::new(bits + 64);
    let ln = w.ln(&vol.0);
    Real(ln.div(&w.int(-2), bits + 64, RM))
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexHeight {
    pub label: &'static str,
    pub neron_volume: Real,
    pub faltings_height: Real,
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightReport {
    pub graph: GraphType,
    pub param: String,
    pub d: String,
    pub bits: usize,
    pub vertices: Vec<VertexHeight>,
    /// Vertex of least Faltings height, found numerically.
    pub argmin: &'static str,
    /// Largest Néron volume over the runner-up.
    pub margin: Real,
    pub theorem_vertex: &'static str,
    pub probability: Rat,
    pub matches: bool,
}

/// Per-vertex signatures of a normalized graph when the crate carries them:
/// the 3-power chain for L3(9) and the two conductor-121 classes for L2(11).
pub fn models_for(g: GraphType, param: &Param) -> Result<Vec<Signature>> {
    match (g, param) {
        (GraphType::L3(3), Param::T(t)) => Ok(l39_signatures(t)?.to_vec()),
        (GraphType::L2(11), Param::Sporadic(Some(c))) => {
            Ok(l211_class(c.parse()?).curves.iter().map(|c| c.signature.clone()).collect())
        }
        (GraphType::L2(11), Param::Sporadic(None)) => {
            Err(Error::MissingParameter("L2(11) needs a class: a or b".into()))
        }
        _ => Err(Error::MissingParameter(format!(
            "no model family for {g}; supply per-vertex signatures"
        ))),
    }
}

/// Compare the numeric argmin of Faltings heights over the twisted class
/// with the decision table, using the given normalized models.
pub fn verify_models(
    g: GraphType,
    param: &Param,
    models: &[Signature],
    d: &BigInt,
    bits: usize,
    edition: Edition,
) -> Result<HeightReport> {
    check_bits(bits)?;
    let labels = graph_structure(g).vertices;
    if models.len() != labels.len() {
        return Err(Error::MissingParameter(format!(
            "{g} has {} vertices but {} signatures were given",
            labels.len(),
            models.len()
        )));
    }
    let theorem = faltings_by_theorem(g, param, d, edition)?;
    let twisted: Vec<Signature> = models.iter().map(|s| twist_sig(s, d)).collect::<Result<_>>()?;
    let mut p = bits;
    loop {
        let vols: Vec<LatticeApprox> = twisted.iter().map(|s| neron_volume(s, p)).collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..vols.len()).collect();
        order.sort_by(|&i, &j| vols[j].volume.partial_cmp(&vols[i].volume).expect("finite volumes"));
        let (top, next) = (&vols[order[0]], &vols[order[1]]);
        let q = p + 64;
        let gap = top.volume.0.sub(&next.volume.0, q, RM);
        let noise = top.claimed_error.0.add(&next.claimed_error.0, q, RM).mul(&Work::new(q).int(1000), q, RM);
        if gap > noise {
            let argmin = labels[order[0]];
            let vertices = labels
                .iter()
                .zip(&vols)
                .map(|(&label, v)| VertexHeight {
                    label,
                    neron_volume: v.volume.clone(),
                    faltings_height: height_of(&v.volume, p),
                })
                .collect();
            return Ok(HeightReport {
                graph: g,
                param: param.to_string(),
                d: d.to_string(),
                bits: p,
                vertices,
                argmin,
                margin: Real(top.volume.0.div(&next.volume.0, q, RM)),
                theorem_vertex: theorem.vertex,
                probability: theorem.probability,
                matches: argmin == theorem.vertex,
            });
        }
        if 2 * p > MAX_BITS {
            return Err(Error::Inconclusive(format!("{g} at {param}, d={d}: top two volumes agree")));
        }
        p *= 2;
    }
}

/// verify_models with the crate's own model families.
pub fn verify_class(g: GraphType, param: &Param, d: &BigInt, bits: usize) -> Result<HeightReport> {
    let models = models_for(g, param)?;
    verify_models(g, param, &models, d, bits, Edition::Corrected)
}
