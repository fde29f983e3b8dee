use crate::error::{Error, Result};
use crate::scheme::{derive_stratum_sizes, IntersectionArray};

/// Szegő–Jacobi coefficients: `omega = [ω_1, ..., ω_d]` and
/// `alpha = [α_1, ..., α_{d+1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiCoefficients {
    pub omega: Vec<f64>,
    pub alpha: Vec<f64>,
}

impl JacobiCoefficients {
    pub fn new(omega: Vec<f64>, alpha: Vec<f64>) -> Result<Self> {
        if alpha.len() != omega.len() + 1 {
            return Err(Error::InconsistentInputs(format!(
                "{} alpha entries for {} omega entries",
                alpha.len(),
                omega.len()
            )));
        }
        if let Some(w) = omega.iter().find(|w| w.is_nan() || **w <= 0.0) {
            return Err(Error::BadParameter(format!("omega entry {w} is not positive")));
        }
        Ok(JacobiCoefficients { omega, alpha })
    }

    pub fn diameter(&self) -> usize {
        self.omega.len()
    }

    /// Diagonal and off-diagonal of the symmetric Jacobi matrix.
    pub fn tridiagonal(&self) -> (Vec<f64>, Vec<f64>) {
        (self.alpha.clone(), self.omega.iter().map(|w| w.sqrt()).collect())
    }
}

/// `ω_k = c_{k-1} b_k` and `α_k = a_1 - b_{k-1} - c_{k-1}`.
pub fn jacobi_from_intersection(ia: &IntersectionArray) -> Result<JacobiCoefficients> {
    let a1 = derive_stratum_sizes(ia)?.a[1] as f64;
    let d = ia.diameter();
    let omega = (1..=d).map(|k| (ia.c(k - 1) * ia.b(k)) as f64).collect();
    let alpha = (1..=d + 1)
        .map(|k| a1 - ia.b(k - 1) as f64 - ia.c(k - 1) as f64)
        .collect();
    JacobiCoefficients::new(omega, alpha)
}

/// Monic orthogonal polynomials `Q_0(x), ..., Q_up_to(x)` from the
/// three-term recurrence `x Q_n = Q_{n+1} + α_{n+1} Q_n + ω_n Q_{n-1}`.
///
/// `up_to` may not exceed the number of recurrence coefficients available
/// (`d` for a diameter-`d` sequence).
pub fn evaluate_polynomials(jc: &JacobiCoefficients, x: f64, up_to: usize) -> Vec<f64> {
    assert!(up_to <= jc.diameter(), "polynomial degree {up_to} beyond diameter");
    let mut q = Vec::with_capacity(up_to + 1);
    q.push(1.0);
    if up_to >= 1 {
        q.push(x - jc.alpha[0]);
    }
    for n in 1..up_to {
        let next = (x - jc.alpha[n]) * q[n] - jc.omega[n - 1] * q[n - 1];
        q.push(next);
    }
    q
}

/// `P_k(x) = Q_k(x) / (b_1 ... b_k)`, so that `A_k = P_k(A_1)`.
pub fn normalized_polynomials(jc: &JacobiCoefficients, ia: &IntersectionArray, x: f64, up_to: usize) -> Vec<f64> {
    let mut q = evaluate_polynomials(jc, x, up_to);
    let mut scale = 1.0;
    for (k, qk) in q.iter_mut().enumerate().skip(1) {
        scale *= ia.b(k) as f64;
        *qk /= scale;
    }
    q
}
