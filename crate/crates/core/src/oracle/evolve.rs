use num_complex::Complex64;

use super::eigen::{jacobi_eigen, SymmetricEigen};
use super::graph::{DistancePartition, VertexGraph};
use crate::error::Result;
use crate::scheme::ValencyVector;
use crate::walk::AmplitudeSeries;

/// Spectral decomposition of a graph, reusable across time points.
#[derive(Debug, Clone)]
pub struct VertexEvolution {
    pub eigen: SymmetricEigen,
    pub root: usize,
}

impl VertexEvolution {
    pub fn new(g: &VertexGraph) -> Result<Self> {
        Ok(VertexEvolution {
            eigen: jacobi_eigen(&g.adjacency())?,
            root: g.root,
        })
    }

    /// `⟨β|e^{-iAt}|root⟩ = Σ_j U_{βj} e^{-iλ_j t} U_{root,j}` for every `β`.
    pub fn amplitudes(&self, t: f64) -> Vec<Complex64> {
        let n = self.eigen.values.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (lambda, u) in self.eigen.values.iter().zip(&self.eigen.vectors) {
            let (s, c) = (lambda * t).sin_cos();
            let coeff = Complex64::new(c, -s) * u[self.root];
            for (o, x) in out.iter_mut().zip(u) {
                *o += coeff * x;
            }
        }
        out
    }

    pub fn stratum_series(&self, partition: &DistancePartition, times: &[f64]) -> AmplitudeSeries {
        let amplitudes = times
            .iter()
            .map(|&t| {
                let amp = self.amplitudes(t);
                partition
                    .strata
                    .iter()
                    .map(|s| s.iter().map(|&v| amp[v]).sum::<Complex64>() / (s.len() as f64).sqrt())
                    .collect()
            })
            .collect();
        AmplitudeSeries::new(times.to_vec(), ValencyVector::from_sizes(partition.sizes()), amplitudes)
    }

    pub fn uniformity(&self, partition: &DistancePartition, times: &[f64]) -> UniformityReport {
        let mut max_spread = 0.0f64;
        let mut norm_defect = 0.0f64;
        for &t in times {
            let amp = self.amplitudes(t);
            norm_defect = norm_defect.max((amp.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0).abs());
            for s in &partition.strata {
                let first = amp[s[0]];
                let spread = s.iter().map(|&v| (amp[v] - first).norm()).fold(0.0, f64::max);
                max_spread = max_spread.max(spread);
            }
        }
        UniformityReport {
            max_spread,
            norm_defect,
        }
    }
}

/// Per-vertex amplitudes, one row per time.
pub fn exact_walk(g: &VertexGraph, times: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    let ev = VertexEvolution::new(g)?;
    Ok(times.iter().map(|&t| ev.amplitudes(t)).collect())
}

/// Projections `⟨φ_k|φ_0(t)⟩` with `|φ_k⟩ = Σ_{β∈Γ_k} |β⟩ / √|Γ_k|`.
pub fn stratum_series(g: &VertexGraph, partition: &DistancePartition, times: &[f64]) -> Result<AmplitudeSeries> {
    Ok(VertexEvolution::new(g)?.stratum_series(partition, times))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformityReport {
    /// Largest `|amp_β - amp_β'|` over pairs in a common stratum.
    pub max_spread: f64,
    /// Largest `|Σ_β |amp_β|² - 1|`.
    pub norm_defect: f64,
}

impl UniformityReport {
    pub fn passed(&self) -> bool {
        self.max_spread < 1e-9 && self.norm_defect < 1e-9
    }
}

/// Spread of the vertex amplitudes within each stratum.
pub fn check_stratum_uniformity(
    g: &VertexGraph,
    partition: &DistancePartition,
    times: &[f64],
) -> Result<UniformityReport> {
    Ok(VertexEvolution::new(g)?.uniformity(partition, times))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::bfs_strata;
    use crate::walk::complete_origin_amplitude;

    #[test]
    fn root_at_time_zero() {
        let g = VertexGraph::kneser(5, 2).unwrap();
        let a = exact_walk(&g, &[0.0]).unwrap();
        for (v, z) in a[0].iter().enumerate() {
            let want = if v == g.root { 1.0 } else { 0.0 };
            assert!((z - want).norm() < 1e-12);
        }
    }

    #[test]
    fn complete_graph() {
        let g = VertexGraph::complete(5).unwrap();
        let times: Vec<f64> = (0..20).map(|i| i as f64 * 0.7).collect();
        for (t, row) in times.iter().zip(exact_walk(&g, &times).unwrap()) {
            assert!((row[g.root] - complete_origin_amplitude(5, *t)).norm() < 1e-10);
        }
    }

    #[test]
    fn uniform_on_strata() {
        let times: Vec<f64> = (0..64).map(|i| 20.0 * i as f64 / 63.0).collect();
        for g in [
            VertexGraph::kneser(5, 2).unwrap(),
            VertexGraph::cycle(9).unwrap(),
            VertexGraph::complete(2).unwrap(),
        ] {
            let r = check_stratum_uniformity(&g, &bfs_strata(&g), &times).unwrap();
            assert!(r.max_spread < 1e-10 && r.norm_defect < 1e-10, "{r:?}");
        }
    }
}
