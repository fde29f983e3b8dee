use std::f64::consts::PI;

use num_complex::Complex64;

use super::jacobi::JacobiCoefficients;
use super::tridiag::tridiagonal_eigen;
use crate::error::{Error, Result};

/// Default tail mass left out when truncating an infinite atomic measure.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-12;

/// Atoms closer than this are treated as coincident.
const ATOM_SEPARATION: f64 = 1e-9;

/// Finite atomic measure, atoms ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    pub atoms: Vec<f64>,
    pub weights: Vec<f64>,
}

impl DiscreteDistribution {
    /// Sorts the pairs by atom.
    pub fn new(atoms: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if atoms.len() != weights.len() || atoms.is_empty() {
            return Err(Error::InconsistentInputs(format!(
                "{} atoms and {} weights",
                atoms.len(),
                weights.len()
            )));
        }
        let mut pairs: Vec<(f64, f64)> = atoms.into_iter().zip(weights).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (atoms, weights) = pairs.into_iter().unzip();
        Ok(DiscreteDistribution { atoms, weights })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn moment(&self, m: u32) -> f64 {
        self.atoms
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * x.powi(m as i32))
            .sum()
    }

    /// First pair of neighbouring atoms closer than `tol`, if any.
    pub fn closest_pair_within(&self, tol: f64) -> Option<(f64, f64)> {
        self.atoms
            .windows(2)
            .find(|w| (w[1] - w[0]).abs() <= tol)
            .map(|w| (w[0], w[1]))
    }
}

/// Absolutely continuous measure on a bounded interval.
///
/// The quadrature substitutes `x = c + h cos θ` on the support `[c - h, c + h]`
/// and samples `θ` at `N` uniform midpoints, so an arcsine-type endpoint
/// singularity in the density is integrated exactly.
#[derive(Debug, Clone, Copy)]
pub struct ContinuousDistribution {
    pub density: fn(f64) -> f64,
    pub support: (f64, f64),
    pub quadrature_nodes: usize,
}

impl ContinuousDistribution {
    /// Nodes and weights `(x_j, w_j)` with `Σ_j w_j f(x_j) ≈ ∫ f dμ`.
    pub fn quadrature(&self) -> Vec<(f64, f64)> {
        let (lo, hi) = self.support;
        let (c, h) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
        let n = self.quadrature_nodes;
        (0..n)
            .map(|j| {
                let theta = PI * (j as f64 + 0.5) / n as f64;
                let x = c + h * theta.cos();
                let w = PI / n as f64 * (self.density)(x) * h * theta.sin();
                (x, w)
            })
            .collect()
    }

    pub fn total_mass(&self) -> f64 {
        self.quadrature().iter().map(|(_, w)| w).sum()
    }

    pub fn moment(&self, m: u32) -> f64 {
        self.quadrature().iter().map(|(x, w)| w * x.powi(m as i32)).sum()
    }
}

/// Atoms `x_k = start + k·spacing` with geometric weights `(1 - r) r^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricAtoms {
    pub start: f64,
    pub spacing: f64,
    pub ratio: f64,
    pub tail_tolerance: f64,
}

impl GeometricAtoms {
    pub fn atom(&self, k: usize) -> (f64, f64) {
        (
            self.start + k as f64 * self.spacing,
            (1.0 - self.ratio) * self.ratio.powi(k as i32),
        )
    }

    /// Smallest `K` whose tail mass `r^K` is below the tolerance.
    pub fn truncation_len(&self) -> usize {
        if self.ratio <= 0.0 {
            return 1;
        }
        let k = (self.tail_tolerance.ln() / self.ratio.ln()).floor() as usize + 1;
        let mut k = k.max(1);
        while self.ratio.powi(k as i32) >= self.tail_tolerance {
            k += 1;
        }
        k
    }

    pub fn tail_mass(&self, len: usize) -> f64 {
        self.ratio.powi(len as i32)
    }

    pub fn truncated(&self) -> Vec<(f64, f64)> {
        (0..self.truncation_len()).map(|k| self.atom(k)).collect()
    }
}

#[derive(Debug, Clone)]
pub enum SpectralDistribution {
    Discrete(DiscreteDistribution),
    Continuous(ContinuousDistribution),
    DiscreteInfinite(GeometricAtoms),
}

impl SpectralDistribution {
    /// Quadrature-ready `(x, w)` pairs: exact for finite measures, the
    /// sampling rule for continuous ones and the truncation for infinite ones.
    pub fn points(&self) -> Vec<(f64, f64)> {
        match self {
            SpectralDistribution::Discrete(d) => d.atoms.iter().copied().zip(d.weights.iter().copied()).collect(),
            SpectralDistribution::Continuous(c) => c.quadrature(),
            SpectralDistribution::DiscreteInfinite(g) => g.truncated(),
        }
    }
}

/// Gauss quadrature for the Jacobi matrix: atoms are its eigenvalues,
/// weights the squared first eigenvector components.
pub fn golub_welsch(jc: &JacobiCoefficients) -> Result<DiscreteDistribution> {
    let (diag, off) = jc.tridiagonal();
    let eig = tridiagonal_eigen(&diag, &off)?;
    let weights = eig.first_components.iter().map(|z| z * z).collect();
    let dist = DiscreteDistribution::new(eig.values, weights)?;
    if let Some((a, b)) = dist.closest_pair_within(ATOM_SEPARATION) {
        return Err(Error::DegenerateAtoms(a, b));
    }
    Ok(dist)
}

/// `G(z) = ∫ dμ(y) / (z - y)`.
pub fn stieltjes_transform(dist: &SpectralDistribution, z: Complex64) -> Result<Complex64> {
    let points = dist.points();
    if let SpectralDistribution::Discrete(_) = dist {
        if let Some((x, _)) = points.iter().find(|(x, _)| (z - x).norm() < 1e-12) {
            return Err(Error::PoleProximity(*x));
        }
    }
    Ok(points.iter().map(|(x, w)| *w / (z - x)).sum())
}

fn arcsine_density(x: f64) -> f64 {
    let s = 4.0 - x * x;
    if s <= 0.0 {
        0.0
    } else {
        1.0 / (PI * s.sqrt())
    }
}

/// Arcsine law on `[-2, 2]`, the spectral distribution of the infinite line.
pub fn continuous_line_distribution(nodes: usize) -> ContinuousDistribution {
    ContinuousDistribution {
        density: arcsine_density,
        support: (-2.0, 2.0),
        quadrature_nodes: nodes,
    }
}

/// Geometric atomic measure of the Johnson-graph limit with `0 < p < 1`.
pub fn meixner_distribution(p: f64, tail_tolerance: f64) -> Result<GeometricAtoms> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::BadParameter(format!("p = {p} outside (0, 1)")));
    }
    if !(tail_tolerance > 0.0 && tail_tolerance < 1.0) {
        return Err(Error::BadParameter(format!(
            "tail tolerance {tail_tolerance} outside (0, 1)"
        )));
    }
    let scale = (p * (2.0 - p)).sqrt();
    Ok(GeometricAtoms {
        start: -p / scale,
        spacing: 2.0 * (1.0 - p) / scale,
        ratio: p / (2.0 - p),
        tail_tolerance,
    })
}

impl GeometricAtoms {
    /// Recurrence coefficients of the orthonormal polynomials of the
    /// Johnson-limit measure, truncated to `levels` strata.
    pub fn meixner_jacobi(p: f64, levels: usize) -> JacobiCoefficients {
        let scale = (p * (2.0 - p)).sqrt();
        let omega = (1..levels).map(|n| (n * n) as f64).collect();
        let alpha = (0..levels).map(|n| 2.0 * n as f64 / scale).collect();
        JacobiCoefficients { omega, alpha }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::IntersectionArray;
    use crate::spectral::jacobi_from_intersection;

    #[test]
    fn petersen_quadrature() {
        let ia = IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap();
        let dist = golub_welsch(&jacobi_from_intersection(&ia).unwrap()).unwrap();
        let want = [(-2.0, 0.4), (1.0, 0.5), (3.0, 0.1)];
        for ((x, w), (wx, ww)) in dist.atoms.iter().zip(&dist.weights).zip(want) {
            assert!((x - wx).abs() < 1e-12 && (w - ww).abs() < 1e-12);
        }
        assert!((dist.total_mass() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diameter_zero_is_a_point_mass() {
        let jc = JacobiCoefficients::new(vec![], vec![1.5]).unwrap();
        let dist = golub_welsch(&jc).unwrap();
        assert_eq!(dist.atoms, vec![1.5]);
        assert_eq!(dist.weights, vec![1.0]);
    }

    #[test]
    fn stieltjes_values() {
        let point = SpectralDistribution::Discrete(DiscreteDistribution::new(vec![0.0], vec![1.0]).unwrap());
        let g = stieltjes_transform(&point, Complex64::new(2.0, 0.0)).unwrap();
        assert!((g - 0.5).norm() < 1e-15);
        assert!(stieltjes_transform(&point, Complex64::new(1e-13, 0.0)).is_err());

        let petersen = SpectralDistribution::Discrete(
            DiscreteDistribution::new(vec![3.0, 1.0, -2.0], vec![0.1, 0.5, 0.4]).unwrap(),
        );
        let g = stieltjes_transform(&petersen, Complex64::new(4.0, 0.0)).unwrap();
        assert!((g - 1.0 / 3.0).norm() < 1e-15);
        let z = Complex64::new(1e6, 3e5);
        assert!((z * stieltjes_transform(&petersen, z).unwrap() - 1.0).norm() < 1e-5);
    }

    #[test]
    fn arcsine_moments() {
        let line = continuous_line_distribution(256);
        assert!((line.total_mass() - 1.0).abs() < 1e-10);
        assert!((line.moment(2) - 2.0).abs() < 1e-10);
        assert!((line.moment(4) - 6.0).abs() < 1e-10);
        assert!((line.moment(6) - 20.0).abs() < 1e-10);
        assert!(line.moment(3).abs() < 1e-10);
    }

    #[test]
    fn meixner_atoms() {
        let g = meixner_distribution(0.5, DEFAULT_TAIL_TOLERANCE).unwrap();
        let (x0, w0) = g.atom(0);
        let (_, w1) = g.atom(1);
        assert!((w1 / w0 - 1.0 / 3.0).abs() < 1e-15);
        assert!((x0 + 0.5 / 0.75f64.sqrt()).abs() < 1e-15);
        let len = g.truncation_len();
        assert!(g.tail_mass(len) < 1e-12 && g.tail_mass(len - 1) >= 1e-12);
        let mass: f64 = g.truncated().iter().map(|(_, w)| w).sum();
        assert!((mass - 1.0).abs() < 1e-12);
        let mean: f64 = g.truncated().iter().map(|(x, w)| x * w).sum();
        assert!(mean.abs() < 1e-10);
        assert!(meixner_distribution(1.0, 1e-12).is_err());
        assert!(meixner_distribution(0.0, 1e-12).is_err());
    }

    #[test]
    fn meixner_polynomials_are_orthonormal() {
        let p = 0.3;
        let g = meixner_distribution(p, 1e-60).unwrap();
        let jc = GeometricAtoms::meixner_jacobi(p, 6);
        let pts = g.truncated();
        let norm = |k: usize| -> f64 { jc.omega[..k].iter().product::<f64>().sqrt() };
        for j in 0..5 {
            for k in 0..5 {
                let s: f64 = pts
                    .iter()
                    .map(|(x, w)| {
                        let q = crate::spectral::evaluate_polynomials(&jc, *x, 5);
                        w * q[j] / norm(j) * q[k] / norm(k)
                    })
                    .sum();
                let want = if j == k { 1.0 } else { 0.0 };
                assert!((s - want).abs() < 1e-10, "{j} {k} {s}");
            }
        }
    }
}
