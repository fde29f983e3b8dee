use crate::error::{Error, Result};
use crate::linalg::Matrix;

const MAX_SWEEPS: usize = 100;

/// `A = U diag(values) Uᵀ`; `vectors` holds the eigenvectors as rows
/// (row `j` is `U[.., j]`).
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl SymmetricEigen {
    /// `‖A U - U Λ‖_max`.
    pub fn residual(&self, a: &Matrix) -> f64 {
        let n = a.rows();
        let mut worst = 0.0f64;
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            for i in 0..n {
                let av: f64 = a.row(i).iter().zip(v).map(|(x, y)| x * y).sum();
                worst = worst.max((av - lambda * v[i]).abs());
            }
        }
        worst
    }

    /// `‖U Uᵀ - I‖_max`.
    pub fn orthogonality_defect(&self) -> f64 {
        let n = self.values.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let dot: f64 = self.vectors[i].iter().zip(&self.vectors[j]).map(|(x, y)| x * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - want).abs());
            }
        }
        worst
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is below
/// `1e-15` of the total.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigen(a: &Matrix) -> Result<SymmetricEigen> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "matrix must be square");
    let mut m: Vec<Vec<f64>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let total: f64 = m.iter().flatten().map(|x| x * x).sum();
    let target = total * 1e-30;
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                let (app, aqq) = (m[p][p], m[q][q]);
                for k in 0..n {
                    let (x, y) = (m[p][k], m[q][k]);
                    m[p][k] = c * x - s * y;
                    m[q][k] = s * x + c * y;
                }
                m[p][p] = app - t * apq;
                m[q][q] = aqq + t * apq;
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for k in 0..n {
                    if k != p && k != q {
                        m[k][p] = m[p][k];
                        m[k][q] = m[q][k];
                    }
                }
                let (vp, vq) = (std::mem::take(&mut v[p]), std::mem::take(&mut v[q]));
                v[p] = vp.iter().zip(&vq).map(|(x, y)| c * x - s * y).collect();
                v[q] = vp.iter().zip(&vq).map(|(x, y)| s * x + c * y).collect();
            }
        }
    }
    if !converged {
        return Err(Error::EigensolverNoConvergence(MAX_SWEEPS));
    }
    Ok(SymmetricEigen {
        values: (0..n).map(|i| m[i][i]).collect(),
        vectors: v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrix() {
        let a = Matrix::from_rows(&[vec![2.0, 1.0, 0.0], vec![1.0, 2.0, 1.0], vec![0.0, 1.0, 2.0]]);
        let e = jacobi_eigen(&a).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        let r2 = 2f64.sqrt();
        for (g, w) in vals.iter().zip([2.0 - r2, 2.0, 2.0 + r2]) {
            assert!((g - w).abs() < 1e-13);
        }
        assert!(e.residual(&a) < 1e-12);
        assert!(e.orthogonality_defect() < 1e-13);
    }

    #[test]
    fn degenerate_spectrum() {
        // K_6: eigenvalues 5 and -1 (five times)
        let a = Matrix::from_fn(6, 6, |i, j| if i == j { 0.0 } else { 1.0 });
        let e = jacobi_eigen(&a).unwrap();
        assert!(e.residual(&a) < 1e-12);
        assert!(e.orthogonality_defect() < 1e-12);
        assert_eq!(e.values.iter().filter(|v| (**v + 1.0).abs() < 1e-12).count(), 5);
    }
}
