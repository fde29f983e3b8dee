//! Long-time averages of the stratum probabilities `|⟨φ_k|φ_0(t)⟩|²`.
//!
//! Cross terms between distinct eigenvalues average out, so every route
//! first merges eigenvalues closer than [`ATOM_MERGE_TOL`].

use num_complex::Complex64;

use super::engines::{cayley_eigenvalues, group_coefficients};
use super::series::AmplitudeSeries;
use crate::error::{Error, Result};
use crate::group::CharacterTable;
use crate::scheme::{derive_stratum_sizes, IntersectionArray, SchemeEigenstructure, ValencyVector};
use crate::spectral::{normalized_polynomials, DiscreteDistribution, JacobiCoefficients};

pub const ATOM_MERGE_TOL: f64 = 1e-9;

/// Indices grouped by equal value within the merge tolerance.
fn merge_equal(values: &[f64]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if (values[i] - values[*g.last().unwrap()]).abs() <= ATOM_MERGE_TOL => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    groups
}

/// `P̄_k = (a_k / n²) Σ_λ (Σ_{i: P_{i,g} = λ} Q_{ki})²`.
pub fn average_eigen(es: &SchemeEigenstructure) -> Vec<f64> {
    let n = es.order() as f64;
    let groups = merge_equal(&es.generator_eigenvalues());
    (0..es.classes())
        .map(|k| {
            let s: f64 = groups
                .iter()
                .map(|g| g.iter().map(|&i| es.q[(k, i)]).sum::<f64>().powi(2))
                .sum();
            es.valencies.a[k] as f64 * s / (n * n)
        })
        .collect()
}

/// `P̄_k = (1/a_k) Σ_l B_l² P_k(x_l)²`; requires pairwise distinct atoms.
pub fn average_spectral(
    dist: &DiscreteDistribution,
    jc: &JacobiCoefficients,
    ia: &IntersectionArray,
) -> Result<Vec<f64>> {
    if let Some((a, b)) = dist.closest_pair_within(ATOM_MERGE_TOL) {
        return Err(Error::DegenerateSpectrumUnmerged(a, b));
    }
    let sizes = derive_stratum_sizes(ia)?;
    let d = ia.diameter();
    let poly: Vec<Vec<f64>> = dist
        .atoms
        .iter()
        .map(|&x| normalized_polynomials(jc, ia, x, d))
        .collect();
    Ok((0..=d)
        .map(|k| {
            let s: f64 = dist.weights.iter().zip(&poly).map(|(w, p)| (w * p[k]).powi(2)).sum();
            s / sizes.a[k] as f64
        })
        .collect())
}

/// Character route: irreps sharing a Cayley eigenvalue are merged before
/// squaring.
pub fn average_group(table: &CharacterTable, generating: &[usize], strata: &[Vec<usize>]) -> Result<Vec<f64>> {
    let lambda = cayley_eigenvalues(table, generating)?;
    let groups = merge_equal(&lambda);
    Ok(group_coefficients(table, strata)
        .iter()
        .map(|row| {
            groups
                .iter()
                .map(|g| g.iter().map(|&i| row[i]).sum::<Complex64>().norm_sqr())
                .sum()
        })
        .collect())
}

/// Single-vertex averages `P̄_k / a_k`.
pub fn vertex_averages(stratum: &[f64], sizes: &ValencyVector) -> Vec<f64> {
    stratum.iter().zip(&sizes.a).map(|(p, &a)| p / a as f64).collect()
}

/// Trapezoid average of `|amp_k|²` over the series' (ascending) time grid.
pub fn numerical_time_average(series: &AmplitudeSeries) -> Result<Vec<f64>> {
    let t = &series.times;
    if t.len() < 2 || t.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::BadParameter(
            "need an ascending grid of at least two times".into(),
        ));
    }
    let s = series.strata();
    let mut acc = vec![0.0; s];
    for (i, w) in t.windows(2).enumerate() {
        let h = w[1] - w[0];
        for (k, slot) in acc.iter_mut().enumerate() {
            *slot += 0.5 * h * (series.amplitudes[i][k].norm_sqr() + series.amplitudes[i + 1][k].norm_sqr());
        }
    }
    let span = t[t.len() - 1] - t[0];
    Ok(acc.into_iter().map(|a| a / span).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::eigenstructure_from_array;
    use crate::spectral::{golub_welsch, jacobi_from_intersection};

    #[test]
    fn complete_graph_averages() {
        for n in 3..9u64 {
            let ia = IntersectionArray::new(vec![n - 1], vec![1]).unwrap();
            let es = eigenstructure_from_array(&ia).unwrap();
            let nf = n as f64;
            let av = average_eigen(&es);
            let vertex = vertex_averages(&av, &es.valencies);
            assert!((vertex[0] - (1.0 - 2.0 * (nf - 1.0) / (nf * nf))).abs() < 1e-12);
            assert!((vertex[1] - 2.0 / (nf * nf)).abs() < 1e-12);
            let jc = jacobi_from_intersection(&ia).unwrap();
            let sp = average_spectral(&golub_welsch(&jc).unwrap(), &jc, &ia).unwrap();
            for (a, b) in av.iter().zip(&sp) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn degenerate_atoms_are_rejected() {
        let ia = IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap();
        let jc = jacobi_from_intersection(&ia).unwrap();
        let dist = DiscreteDistribution::new(vec![1.0, 1.0, 3.0], vec![0.5, 0.4, 0.1]).unwrap();
        assert!(matches!(
            average_spectral(&dist, &jc, &ia),
            Err(Error::DegenerateSpectrumUnmerged(_, _))
        ));
    }
}
