use super::graph::{DistancePartition, VertexGraph};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::spectral::JacobiCoefficients;

/// Splitting `A = A⁺ + A⁻ + A⁰` by stratum: `A⁺` moves stratum `k` to
/// `k + 1`, `A⁻` moves it back and `A⁰` stays inside it.
#[derive(Debug, Clone)]
pub struct QuantumDecomposition {
    pub plus: Matrix,
    pub minus: Matrix,
    pub zero: Matrix,
}

pub fn quantum_decomposition(g: &VertexGraph, partition: &DistancePartition) -> Result<QuantumDecomposition> {
    let n = g.order();
    if partition.distances.len() != n {
        return Err(Error::InconsistentInputs("partition does not cover the graph".into()));
    }
    let mut plus = Matrix::zeros(n, n);
    let mut minus = Matrix::zeros(n, n);
    let mut zero = Matrix::zeros(n, n);
    for (v, nb) in g.neighbours.iter().enumerate() {
        for &u in nb {
            // entry (u, v) carries v to u
            let (from, to) = (partition.distances[v], partition.distances[u]);
            match to as i64 - from as i64 {
                1 => plus[(u, v)] = 1.0,
                -1 => minus[(u, v)] = 1.0,
                0 => zero[(u, v)] = 1.0,
                _ => return Err(Error::NotDistanceRegular(format!("edge {v}-{u} skips a stratum"))),
            }
        }
    }
    Ok(QuantumDecomposition { plus, minus, zero })
}

impl QuantumDecomposition {
    /// `|A⁺ + A⁻ + A⁰ - A|_max`.
    pub fn reconstruction_defect(&self, g: &VertexGraph) -> f64 {
        let n = g.order();
        let sum = Matrix::from_fn(n, n, |i, j| self.plus[(i, j)] + self.minus[(i, j)] + self.zero[(i, j)]);
        sum.max_abs_diff(&g.adjacency())
    }

    /// `|(A⁻)ᵀ - A⁺|_max`.
    pub fn adjoint_defect(&self) -> f64 {
        self.minus.transpose().max_abs_diff(&self.plus)
    }

    /// Largest deviation from `A⁺φ_k = √ω_{k+1} φ_{k+1}`,
    /// `A⁻φ_k = √ω_k φ_{k-1}` and `A⁰φ_k = α_{k+1} φ_k` on the normalized
    /// stratum vectors `φ_k`.
    pub fn ladder_defect(&self, partition: &DistancePartition, jc: &JacobiCoefficients) -> Result<f64> {
        let d = partition.strata.len() - 1;
        if jc.diameter() != d {
            return Err(Error::InconsistentInputs(format!(
                "{} strata for a Jacobi sequence of diameter {}",
                d + 1,
                jc.diameter()
            )));
        }
        let n = partition.distances.len();
        let phi: Vec<Vec<f64>> = partition
            .strata
            .iter()
            .map(|s| {
                let mut v = vec![0.0; n];
                let w = 1.0 / (s.len() as f64).sqrt();
                for &i in s {
                    v[i] = w;
                }
                v
            })
            .collect();
        let apply = |m: &Matrix, v: &[f64]| -> Vec<f64> {
            (0..n)
                .map(|i| m.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
                .collect()
        };
        let dev = |got: Vec<f64>, scale: f64, target: Option<&Vec<f64>>| -> f64 {
            got.iter()
                .enumerate()
                .map(|(i, x)| (x - target.map_or(0.0, |t| scale * t[i])).abs())
                .fold(0.0, f64::max)
        };
        let mut worst = 0.0f64;
        for k in 0..=d {
            let up = if k < d { jc.omega[k].sqrt() } else { 0.0 };
            let down = if k > 0 { jc.omega[k - 1].sqrt() } else { 0.0 };
            worst = worst
                .max(dev(apply(&self.plus, &phi[k]), up, phi.get(k + 1)))
                .max(dev(
                    apply(&self.minus, &phi[k]),
                    down,
                    k.checked_sub(1).map(|j| &phi[j]),
                ))
                .max(dev(apply(&self.zero, &phi[k]), jc.alpha[k], Some(&phi[k])));
        }
        Ok(worst)
    }
}
