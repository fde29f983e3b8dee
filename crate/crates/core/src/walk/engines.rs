use num_complex::Complex64;

use super::series::AmplitudeSeries;
use crate::error::{Error, Result};
use crate::group::CharacterTable;
use crate::scheme::{derive_stratum_sizes, IntersectionArray, SchemeEigenstructure, ValencyVector};
use crate::spectral::{evaluate_polynomials, normalized_polynomials, DiscreteDistribution, JacobiCoefficients};

fn phase(x: f64, t: f64) -> Complex64 {
    let (s, c) = (x * t).sin_cos();
    Complex64::new(c, -s)
}

/// `⟨φ_k|φ_0(t)⟩ = (1/√a_k) Σ_l B_l e^{-i x_l t} P_k(x_l)` with
/// `P_k = Q_k / (b_1 ... b_k)`.
pub fn amplitudes_spectral(
    dist: &DiscreteDistribution,
    jc: &JacobiCoefficients,
    ia: &IntersectionArray,
    times: &[f64],
) -> Result<AmplitudeSeries> {
    let d = ia.diameter();
    if jc.diameter() != d {
        return Err(Error::InconsistentInputs(format!(
            "Jacobi sequence of diameter {} for an array of diameter {d}",
            jc.diameter()
        )));
    }
    let sizes = derive_stratum_sizes(ia)?;
    let inv_sqrt: Vec<f64> = sizes.a.iter().map(|&a| 1.0 / (a as f64).sqrt()).collect();
    let poly: Vec<Vec<f64>> = dist
        .atoms
        .iter()
        .map(|&x| normalized_polynomials(jc, ia, x, d))
        .collect();
    let amplitudes = times
        .iter()
        .map(|&t| {
            (0..=d)
                .map(|k| {
                    let s: Complex64 = dist
                        .atoms
                        .iter()
                        .zip(&dist.weights)
                        .zip(&poly)
                        .map(|((&x, &w), p)| phase(x, t) * (w * p[k]))
                        .sum();
                    s * inv_sqrt[k]
                })
                .collect()
        })
        .collect();
    Ok(AmplitudeSeries::new(times.to_vec(), sizes, amplitudes))
}

/// Stratum amplitudes for an arbitrary (possibly sampled or truncated)
/// measure through the orthonormal polynomials `Q_k / √(ω_1 ... ω_k)`;
/// returns `levels` columns per time.
pub fn amplitudes_orthonormal(
    points: &[(f64, f64)],
    jc: &JacobiCoefficients,
    levels: usize,
    times: &[f64],
) -> Result<Vec<Vec<Complex64>>> {
    if levels == 0 || levels > jc.diameter() + 1 {
        return Err(Error::InconsistentInputs(format!(
            "{levels} levels requested from {} recurrence coefficients",
            jc.diameter()
        )));
    }
    let mut norms = vec![1.0];
    for w in &jc.omega[..levels - 1] {
        let last = *norms.last().unwrap();
        norms.push(last * w.sqrt());
    }
    let poly: Vec<Vec<f64>> = points
        .iter()
        .map(|&(x, _)| {
            evaluate_polynomials(jc, x, levels - 1)
                .into_iter()
                .zip(&norms)
                .map(|(q, n)| q / n)
                .collect()
        })
        .collect();
    Ok(times
        .iter()
        .map(|&t| {
            (0..levels)
                .map(|k| {
                    points
                        .iter()
                        .zip(&poly)
                        .map(|(&(x, w), p)| phase(x, t) * (w * p[k]))
                        .sum()
                })
                .collect()
        })
        .collect())
}

/// `⟨φ_k|φ_0(t)⟩ = (√a_k / n) Σ_i e^{-i P_{i,g} t} Q_{ki}` where `g` is the
/// generating relation.
pub fn amplitudes_eigen(es: &SchemeEigenstructure, times: &[f64]) -> AmplitudeSeries {
    let size = es.classes();
    let n = es.order() as f64;
    let eig = es.generator_eigenvalues();
    let amplitudes = times
        .iter()
        .map(|&t| {
            let ph: Vec<Complex64> = eig.iter().map(|&x| phase(x, t)).collect();
            (0..size)
                .map(|k| {
                    let s: Complex64 = (0..size).map(|i| ph[i] * es.q[(k, i)]).sum();
                    s * ((es.valencies.a[k] as f64).sqrt() / n)
                })
                .collect()
        })
        .collect();
    AmplitudeSeries::new(times.to_vec(), es.valencies.clone(), amplitudes)
}

/// Eigenvalues `λ_i = Σ_{g} κ_g χ_i(α_g) / d_i` of the Cayley graph whose
/// connection set is the union of `generating` classes.
pub(crate) fn cayley_eigenvalues(table: &CharacterTable, generating: &[usize]) -> Result<Vec<f64>> {
    if generating.is_empty() || generating.contains(&0) {
        return Err(Error::BadParameter(
            "generating set must be nonempty and exclude the identity".into(),
        ));
    }
    if generating.iter().any(|&k| k >= table.classes()) {
        return Err(Error::BadParameter("generating class out of range".into()));
    }
    if generating
        .iter()
        .any(|&k| !generating.contains(&table.inverse_class[k]))
    {
        return Err(Error::NonRealGeneratingClass);
    }
    (0..table.values.len())
        .map(|i| {
            let s: Complex64 = generating
                .iter()
                .map(|&g| table.class_sizes[g] as f64 * table.value(i, g))
                .sum::<Complex64>()
                / table.irrep_dims[i] as f64;
            if s.im.abs() > 1e-9 {
                Err(Error::NonRealGeneratingClass)
            } else {
                Ok(s.re)
            }
        })
        .collect()
}

/// Spectral distribution of the Cayley graph in the identity state:
/// atom `λ_i` with weight `d_i² / n`, equal eigenvalues merged.
pub fn cayley_distribution(table: &CharacterTable, generating: &[usize]) -> Result<DiscreteDistribution> {
    let lambda = cayley_eigenvalues(table, generating)?;
    let n = table.order() as f64;
    let mut order: Vec<usize> = (0..lambda.len()).collect();
    order.sort_by(|&a, &b| lambda[a].total_cmp(&lambda[b]));
    let (mut atoms, mut weights): (Vec<f64>, Vec<f64>) = (Vec::new(), Vec::new());
    for i in order {
        let w = (table.irrep_dims[i] * table.irrep_dims[i]) as f64 / n;
        match atoms.last() {
            Some(&x) if (lambda[i] - x).abs() <= 1e-9 => *weights.last_mut().unwrap() += w,
            _ => {
                atoms.push(lambda[i]);
                weights.push(w);
            }
        }
    }
    DiscreteDistribution::new(atoms, weights)
}

/// Character engine: the Cayley graph whose connection set is the union of
/// the classes in `generating`, walked from the identity and projected onto
/// the class unions in `strata`.
///
/// `⟨φ_K|φ_0(t)⟩ = (1 / (n √a_K)) Σ_{k∈K} κ_k Σ_i d_i e^{-iλ_i t} conj χ_i(α_k)`.
pub fn amplitudes_group(
    table: &CharacterTable,
    generating: &[usize],
    strata: &[Vec<usize>],
    times: &[f64],
) -> Result<AmplitudeSeries> {
    let lambda = cayley_eigenvalues(table, generating)?;
    let coeff = group_coefficients(table, strata);
    let sizes = ValencyVector::from_sizes(
        strata
            .iter()
            .map(|p| p.iter().map(|&k| table.class_sizes[k]).sum())
            .collect(),
    );
    let amplitudes = times
        .iter()
        .map(|&t| {
            let ph: Vec<Complex64> = lambda.iter().map(|&x| phase(x, t)).collect();
            coeff
                .iter()
                .map(|row| row.iter().zip(&ph).map(|(c, p)| c * p).sum())
                .collect()
        })
        .collect();
    Ok(AmplitudeSeries::new(times.to_vec(), sizes, amplitudes))
}

/// `c_{Ki} = (d_i / (n √a_K)) Σ_{k∈K} κ_k conj χ_i(α_k)`, rows per stratum.
pub(crate) fn group_coefficients(table: &CharacterTable, strata: &[Vec<usize>]) -> Vec<Vec<Complex64>> {
    let n = table.order() as f64;
    strata
        .iter()
        .map(|part| {
            let a: u64 = part.iter().map(|&k| table.class_sizes[k]).sum();
            let scale = 1.0 / (n * (a as f64).sqrt());
            (0..table.values.len())
                .map(|i| {
                    let s: Complex64 = part
                        .iter()
                        .map(|&k| table.class_sizes[k] as f64 * table.value(i, k).conj())
                        .sum();
                    s * (table.irrep_dims[i] as f64 * scale)
                })
                .collect()
        })
        .collect()
}

/// Merges strata: `amp_K = Σ_{k∈K} √a_k amp_k / √(Σ_{k∈K} a_k)`.
pub fn coarsen(series: &AmplitudeSeries, groups: &[Vec<usize>]) -> Result<AmplitudeSeries> {
    let s = series.strata();
    let mut seen = vec![false; s];
    for &k in groups.iter().flatten() {
        if k >= s || seen[k] {
            return Err(Error::InconsistentInputs(format!("stratum {k} missing or repeated")));
        }
        seen[k] = true;
    }
    if seen.iter().any(|x| !x) {
        return Err(Error::InconsistentInputs("groups do not cover every stratum".into()));
    }
    let stratum_series = series.clone();
    let a = &series.strata_sizes.a;
    let sizes: Vec<u64> = groups.iter().map(|g| g.iter().map(|&k| a[k]).sum()).collect();
    let amplitudes = stratum_series
        .amplitudes
        .iter()
        .map(|row| {
            groups
                .iter()
                .zip(&sizes)
                .map(|(g, &total)| {
                    let s: Complex64 = g.iter().map(|&k| row[k] * (a[k] as f64).sqrt()).sum();
                    s / (total as f64).sqrt()
                })
                .collect()
        })
        .collect();
    Ok(AmplitudeSeries::new(
        series.times.clone(),
        ValencyVector::from_sizes(sizes),
        amplitudes,
    ))
}
