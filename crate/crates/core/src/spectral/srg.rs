use super::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::scheme::IntersectionArray;

fn check_feasible(n: u64, k: u64, lambda: u64, mu: u64) -> Result<()> {
    let fail = |why: &str| {
        Err(Error::InfeasibleParameters(format!(
            "srg({n},{k},{lambda},{mu}): {why}"
        )))
    };
    if n < 3 || k == 0 || mu == 0 || k >= n {
        return fail("need 0 < k < n and mu > 0");
    }
    if lambda >= k {
        return fail("lambda must be below k");
    }
    if k * (k - lambda - 1) != (n - k - 1) * mu {
        return fail("k(k - lambda - 1) differs from (n - k - 1) mu");
    }
    Ok(())
}

/// Diameter-2 array `c = [k, k - λ - 1]`, `b = [1, μ]`.
pub fn srg_intersection_array(n: u64, k: u64, lambda: u64, mu: u64) -> Result<IntersectionArray> {
    check_feasible(n, k, lambda, mu)?;
    IntersectionArray::new(vec![k, k - lambda - 1], vec![1, mu])
}

/// Closed-form three-atom distribution of a strongly regular graph.
pub fn srg_distribution(n: u64, k: u64, lambda: u64, mu: u64) -> Result<DiscreteDistribution> {
    check_feasible(n, k, lambda, mu)?;
    let (kf, l, m) = (k as f64, lambda as f64, mu as f64);
    let delta = (l - m) * (l - m) - 4.0 * (m - kf);
    if delta <= 0.0 {
        return Err(Error::InfeasibleParameters(format!(
            "srg({n},{k},{lambda},{mu}): discriminant {delta} is not positive"
        )));
    }
    let root = delta.sqrt();
    let atoms = [kf, 0.5 * (l - m + root), 0.5 * (l - m - root)];
    let b1 = m / (kf * kf - kf * (l - m) + (m - kf));
    let b2 = (-kf * root + kf * (l - m) + 2.0 * kf) / ((l - m - 2.0 * kf) * root + delta);
    let b3 = (kf * root + kf * (l - m) + 2.0 * kf) / ((-l + m + 2.0 * kf) * root + delta);
    let weights = [b1, b2, b3];
    if weights.iter().any(|w| !(*w > 0.0 && *w < 1.0)) {
        return Err(Error::InfeasibleParameters(format!(
            "srg({n},{k},{lambda},{mu}): weights {weights:?} outside (0, 1)"
        )));
    }
    DiscreteDistribution::new(atoms.to_vec(), weights.to_vec())
}
