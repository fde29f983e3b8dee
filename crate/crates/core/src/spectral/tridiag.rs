use crate::error::{Error, Result};

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector (same order, unsorted).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalEigen {
    pub values: Vec<f64>,
    pub first_components: Vec<f64>,
}

/// Implicit QL with Wilkinson shifts on the matrix with diagonal `diag` and
/// off-diagonal `off` (`off.len() + 1 == diag.len()`).
///
/// Only the first row of the eigenvector matrix is accumulated, which is all
/// Gauss quadrature needs.
pub fn tridiagonal_eigen(diag: &[f64], off: &[f64]) -> Result<TridiagonalEigen> {
    let n = diag.len();
    assert!(n >= 1 && off.len() + 1 == n, "tridiagonal shape mismatch");
    let mut d = diag.to_vec();
    let mut e: Vec<f64> = off.iter().copied().chain(std::iter::once(0.0)).collect();
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    let norm = d.iter().chain(off.iter()).fold(0.0f64, |acc, v| acc.max(v.abs()));
    // keeps a pair of zero diagonal entries from stalling the deflation test
    let floor = norm * f64::EPSILON * 1e-2;
    let cap = 100 * n;
    let mut iterations = 0;

    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let scale = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= 1e-14 * scale || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > cap {
                return Err(Error::EigensolverNoConvergence(cap));
            }
            // Wilkinson shift from the leading 2x2 block
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(TridiagonalEigen {
        values: d,
        first_components: z,
    })
}
