//! Square-free densities and the empirical Prob column, by sieving.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::check_prime;
use crate::graphs::{faltings_by_theorem, prob_table, Edition, GraphType, Param};
use crate::Rat;

/// is_sf[n] for 0 ≤ n ≤ bound (index 0 is false).
pub fn squarefree_sieve(bound: u64) -> Vec<bool> {
    let n = bound as usize;
    let mut is_sf = vec![true; n + 1];
    is_sf[0] = false;
    let mut q = 2usize;
    while q * q <= n {
        for m in (q * q..=n).step_by(q * q) {
            is_sf[m] = false;
        }
        q += 1;
    }
    is_sf
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub p: u64,
    pub bound: u64,
    pub squarefree: u64,
    pub divisible_by_p: u64,
    pub fraction_divisible: f64,
    pub predicted_fraction: Rat,
    pub overall_density: f64,
    pub predicted_overall: f64,
}

pub const MIN_DENSITY_BOUND: u64 = 10_000;

/// Among square-free n in [1, N], the share divisible by p (predicted
/// 1/(1+p)), and the share of square-free n overall (predicted 6/π²).
pub fn squarefree_density(p: u64, bound: u64) -> Result<DensityReport> {
    check_prime(p)?;
    if bound < MIN_DENSITY_BOUND {
        return Err(Error::BoundTooSmall { min: MIN_DENSITY_BOUND, got: bound });
    }
    let sieve = squarefree_sieve(bound);
    let squarefree = sieve.iter().filter(|&&b| b).count() as u64;
    let divisible_by_p = sieve.iter().step_by(p as usize).filter(|&&b| b).count() as u64;
    Ok(DensityReport {
        p,
        bound,
        squarefree,
        divisible_by_p,
        fraction_divisible: divisible_by_p as f64 / squarefree as f64,
        predicted_fraction: Rat::frac(1, p as i64 + 1),
        overall_density: squarefree as f64 / bound as f64,
        predicted_overall: 6.0 / (std::f64::consts::PI * std::f64::consts::PI),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexFrequency {
    pub vertex: &'static str,
    pub count: u64,
    pub frequency: f64,
    pub predicted: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmpiricalReport {
    pub graph: GraphType,
    pub param: String,
    pub bound: u64,
    pub total: u64,
    pub frequencies: Vec<VertexFrequency>,
}

/// How often each vertex is the Faltings curve of the twist, over every
/// square-free d with 0 < |d| ≤ N.
pub fn empirical_prob(g: GraphType, param: &Param, bound: u64, edition: Edition) -> Result<EmpiricalReport> {
    let mut predicted: BTreeMap<&'static str, Rat> = BTreeMap::new();
    for row in prob_table(g, param, edition)? {
        let e = predicted.entry(row.vertex).or_insert_with(Rat::zero);
        *e = &*e + &row.probability;
    }
    let sieve = squarefree_sieve(bound);
    let counts = (1..=bound)
        .into_par_iter()
        .filter(|&n| sieve[n as usize])
        .flat_map_iter(|n| [n as i64, -(n as i64)])
        .try_fold(BTreeMap::new, |mut acc: BTreeMap<&'static str, u64>, d| {
            let v = faltings_by_theorem(g, param, &BigInt::from(d), edition)?.vertex;
            *acc.entry(v).or_default() += 1;
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            Ok(a)
        })?;
    let total: u64 = counts.values().sum();
    let mut frequencies: Vec<VertexFrequency> = predicted
        .into_iter()
        .map(|(vertex, predicted)| {
            let count = counts.get(vertex).copied().unwrap_or(0);
            VertexFrequency { vertex, count, frequency: count as f64 / total.max(1) as f64, predicted }
        })
        .collect();
    for (&vertex, &count) in &counts {
        if !frequencies.iter().any(|f| f.vertex == vertex) {
            frequencies.push(VertexFrequency {
                vertex,
                count,
                frequency: count as f64 / total as f64,
                predicted: Rat::zero(),
            });
        }
    }
    Ok(EmpiricalReport { graph: g, param: param.to_string(), bound, total, frequencies })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        let s = squarefree_sieve(30);
        let sf: Vec<usize> = (0..=30).filter(|&n| s[n]).collect();
        assert_eq!(sf, vec![1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30]);
    }

    #[test]
    fn density_validation() {
        assert!(matches!(squarefree_density(3, 100), Err(Error::BoundTooSmall { .. })));
        assert!(squarefree_density(4, 100_000).is_err());
    }
}
