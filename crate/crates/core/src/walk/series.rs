use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scheme::ValencyVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Amplitude on the unit stratum vector `|φ_k⟩`.
    Stratum,
    /// Amplitude on a single vertex of stratum `k`.
    Vertex,
}

/// Amplitudes per time (rows) and stratum (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeSeries {
    pub times: Vec<f64>,
    pub strata_sizes: ValencyVector,
    pub amplitudes: Vec<Vec<Complex64>>,
    pub normalization: Normalization,
}

impl AmplitudeSeries {
    pub fn new(times: Vec<f64>, strata_sizes: ValencyVector, amplitudes: Vec<Vec<Complex64>>) -> Self {
        AmplitudeSeries {
            times,
            strata_sizes,
            amplitudes,
            normalization: Normalization::Stratum,
        }
    }

    pub fn strata(&self) -> usize {
        self.strata_sizes.len()
    }

    /// Total probability of every row, counting each vertex of a stratum
    /// for vertex-level series.
    pub fn row_norms(&self) -> Vec<f64> {
        self.amplitudes
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.strata_sizes.a)
                    .map(|(z, &a)| match self.normalization {
                        Normalization::Stratum => z.norm_sqr(),
                        Normalization::Vertex => a as f64 * z.norm_sqr(),
                    })
                    .sum()
            })
            .collect()
    }

    /// Largest `|Σ_k P_k(t) - 1|` over the time grid.
    pub fn unitarity_defect(&self) -> f64 {
        self.row_norms().iter().fold(0.0, |m, s| m.max((s - 1.0).abs()))
    }

    /// Rescales to single-vertex amplitudes `amp_k / √a_k`.
    pub fn to_vertex(&self) -> AmplitudeSeries {
        if self.normalization == Normalization::Vertex {
            return self.clone();
        }
        let scale: Vec<f64> = self.strata_sizes.a.iter().map(|&a| 1.0 / (a as f64).sqrt()).collect();
        AmplitudeSeries {
            times: self.times.clone(),
            strata_sizes: self.strata_sizes.clone(),
            amplitudes: self
                .amplitudes
                .iter()
                .map(|row| row.iter().zip(&scale).map(|(z, s)| z * s).collect())
                .collect(),
            normalization: Normalization::Vertex,
        }
    }

    /// Largest entrywise distance to another series on the same grid.
    pub fn max_difference(&self, other: &AmplitudeSeries) -> Result<f64> {
        if self.times != other.times || self.strata() != other.strata() || self.normalization != other.normalization {
            return Err(Error::InconsistentInputs("series have different shapes".into()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).norm()))
            .fold(0.0, f64::max))
    }
}
