//! Closed forms: complete graphs and their products (Hamming schemes), the
//! Johnson-graph limits and the infinite line.

use num_complex::Complex64;

use super::engines::amplitudes_orthonormal;
use super::series::AmplitudeSeries;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scheme::{SchemeEigenstructure, ValencyVector};
use crate::spectral::{
    continuous_line_distribution, meixner_distribution, DiscreteDistribution, GeometricAtoms, JacobiCoefficients,
};

fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Origin amplitude of `K_n` under the raw adjacency matrix:
/// `((n-1) e^{it} + e^{-i(n-1)t}) / n`.
pub fn complete_origin_amplitude(n: u64, t: f64) -> Complex64 {
    let nf = n as f64;
    (Complex64::new(0.0, t).exp() * (nf - 1.0) + Complex64::new(0.0, -(nf - 1.0) * t).exp()) / nf
}

/// Amplitude of moving from the origin to one fixed other vertex of `K_n`.
fn complete_hop_amplitude(n: u64, t: f64) -> Complex64 {
    (Complex64::new(0.0, -(n as f64 - 1.0) * t).exp() - Complex64::new(0.0, t).exp()) / n as f64
}

/// `K_k(x) = Σ_i (-1)^i (n-1)^{k-i} C(x, i) C(d-x, k-i)`.
pub fn krawtchouk(k: u64, x: u64, n: u64, d: u64) -> f64 {
    (0..=k)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * ((n - 1) as f64).powi((k - i) as i32) * binomial(x, i) * binomial(d - x, k - i)
        })
        .sum()
}

fn check_hamming(n: u64, d: u64) -> Result<()> {
    if n < 2 || d < 1 {
        return Err(Error::BadParams(format!(
            "hamming needs n >= 2 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    if (n as f64).powi(d as i32) > 1e15 {
        return Err(Error::BadParams(format!("H({d},{n}) is too large")));
    }
    Ok(())
}

/// Eigenmatrices of the Hamming scheme `H(d, n)` from Krawtchouk
/// polynomials; `P = Q`, eigenspace `j` has eigenvalue `(n-1)d - nj`.
pub fn hamming_eigenstructure(n: u64, d: u64) -> Result<SchemeEigenstructure> {
    check_hamming(n, d)?;
    let size = d as usize + 1;
    let p = Matrix::from_fn(size, size, |j, k| krawtchouk(k as u64, j as u64, n, d));
    let sizes: Vec<u64> = (0..=d)
        .map(|k| (binomial(d, k) * ((n - 1) as f64).powi(k as i32)).round() as u64)
        .collect();
    Ok(SchemeEigenstructure {
        q: p.clone(),
        p,
        m: sizes.iter().map(|&a| a as f64).collect(),
        valencies: ValencyVector::from_sizes(sizes),
        generator: 1,
    })
}

/// Product-form walk on `H(d, n)`: a vertex at distance `k` has amplitude
/// `a(t)^{d-k} b(t)^k`, with `a`, `b` the stay and hop amplitudes of `K_n`.
/// Also returns the binomial spectral distribution.
pub fn hamming_walk(n: u64, d: u64, times: &[f64]) -> Result<(AmplitudeSeries, DiscreteDistribution)> {
    check_hamming(n, d)?;
    let sizes: Vec<u64> = (0..=d)
        .map(|k| (binomial(d, k) * ((n - 1) as f64).powi(k as i32)).round() as u64)
        .collect();
    let amplitudes = times
        .iter()
        .map(|&t| {
            let (a, b) = (complete_origin_amplitude(n, t), complete_hop_amplitude(n, t));
            (0..=d)
                .map(|k| a.powi((d - k) as i32) * b.powi(k as i32) * (sizes[k as usize] as f64).sqrt())
                .collect()
        })
        .collect();
    let nf = n as f64;
    let dist = DiscreteDistribution::new(
        (0..=d).map(|l| nf * l as f64 - d as f64).collect(),
        (0..=d)
            .map(|l| binomial(d, l) * (nf - 1.0).powi((d - l) as i32) / nf.powi(d as i32))
            .collect(),
    )?;
    Ok((
        AmplitudeSeries::new(times.to_vec(), ValencyVector::from_sizes(sizes), amplitudes),
        dist,
    ))
}

/// Stratum-`k` amplitude of the Johnson-graph limit with parameter `p`.
///
/// `p = 1` is the closed form `(it)^k / (1 + it)^{k+1}`; `0 < p < 1` sums
/// the geometric atomic measure, truncated at tail mass `tail_tolerance`,
/// against the orthonormal recurrence polynomials.
pub fn johnson_limit_amplitudes(p: f64, k: usize, times: &[f64], tail_tolerance: f64) -> Result<Vec<Complex64>> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::BadParameter(format!("p = {p} outside (0, 1]")));
    }
    if p == 1.0 {
        return Ok(times
            .iter()
            .map(|&t| {
                // as a power of a ratio of modulus below one, so that large
                // `k t` cannot overflow
                let it = Complex64::new(0.0, t);
                (it / (it + 1.0)).powi(k as i32) / (it + 1.0)
            })
            .collect());
    }
    let dist = meixner_distribution(p, tail_tolerance)?;
    let jc = GeometricAtoms::meixner_jacobi(p, k + 1);
    let rows = amplitudes_orthonormal(&dist.truncated(), &jc, k + 1, times)?;
    Ok(rows.into_iter().map(|row| row[k]).collect())
}

/// Stratum amplitudes `k = 0..levels` on the infinite line, by quadrature
/// of the arcsine law with `nodes` points.
pub fn line_amplitudes(nodes: usize, levels: usize, times: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    if levels == 0 {
        return Err(Error::BadParameter("need at least one level".into()));
    }
    let omega = (1..levels).map(|k| if k == 1 { 2.0 } else { 1.0 }).collect();
    let jc = JacobiCoefficients::new(omega, vec![0.0; levels])?;
    amplitudes_orthonormal(&continuous_line_distribution(nodes).quadrature(), &jc, levels, times)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::amplitudes_eigen;

    fn grid() -> Vec<f64> {
        (0..40).map(|i| 0.37 * i as f64).collect()
    }

    #[test]
    fn krawtchouk_values() {
        // K_1(x) = (n-1)d - nx
        for x in 0..=4 {
            assert_eq!(krawtchouk(1, x, 3, 4), (8 - 3 * x as i64) as f64);
        }
        assert_eq!(krawtchouk(0, 2, 3, 4), 1.0);
    }

    #[test]
    fn hamming_eigen_matches_product() {
        for (n, d) in [(2u64, 2u64), (3, 2), (2, 3), (4, 3), (5, 2)] {
            let es = hamming_eigenstructure(n, d).unwrap();
            assert!(es.check().passed(), "H({d},{n}) {:?}", es.check());
            let (prod, dist) = hamming_walk(n, d, &grid()).unwrap();
            assert!(amplitudes_eigen(&es, &grid()).max_difference(&prod).unwrap() < 1e-12);
            assert!((dist.total_mass() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn four_cycle() {
        let (s, _) = hamming_walk(2, 2, &grid()).unwrap();
        for (t, row) in s.times.iter().zip(&s.amplitudes) {
            assert!((row[0] - t.cos().powi(2)).norm() < 1e-14);
        }
    }

    #[test]
    fn laguerre_limit() {
        let t = grid();
        let a0 = johnson_limit_amplitudes(1.0, 0, &t, 1e-12).unwrap();
        for (ti, a) in t.iter().zip(&a0) {
            assert!((a - 1.0 / Complex64::new(1.0, *ti)).norm() < 1e-15);
        }
        for k in 1..5 {
            assert_eq!(
                johnson_limit_amplitudes(1.0, k, &[0.0], 1e-12).unwrap()[0],
                Complex64::new(0.0, 0.0)
            );
        }
        assert!(johnson_limit_amplitudes(1.5, 0, &t, 1e-12).is_err());
    }

    #[test]
    fn laguerre_partial_sums_at_large_times() {
        for t in [5.0, 20.0, 300.0f64] {
            let total: f64 = (0..=200)
                .map(|k| johnson_limit_amplitudes(1.0, k, &[t], 1e-12).unwrap()[0].norm_sqr())
                .sum();
            let r = t * t / (1.0 + t * t);
            assert!((1.0 - total - r.powi(201)).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn meixner_origin_amplitude() {
        let t = grid();
        let got = johnson_limit_amplitudes(0.5, 0, &t, 1e-14).unwrap();
        let dist = meixner_distribution(0.5, 1e-14).unwrap();
        for (ti, g) in t.iter().zip(&got) {
            let want: Complex64 = (0..100)
                .map(|k| {
                    let (x, w) = dist.atom(k);
                    Complex64::new(0.0, -x * ti).exp() * w
                })
                .sum();
            assert!((g - want).norm() < 1e-12);
        }
    }

    #[test]
    fn line_is_bessel_like_and_unitary() {
        let t = [0.0, 0.5, 1.0, 2.0];
        let rows = line_amplitudes(512, 40, &t).unwrap();
        for row in &rows {
            let total: f64 = row.iter().map(|z| z.norm_sqr()).sum();
            assert!((total - 1.0).abs() < 1e-9);
        }
        // J_0(2t) at t = 1
        assert!((rows[2][0].re - 0.223_890_779_141_235_7).abs() < 1e-12);
    }
}
