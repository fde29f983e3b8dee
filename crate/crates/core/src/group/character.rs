use std::f64::consts::PI;

use num_complex::Complex64;

use super::GroupDescriptor;

/// Exact character value `Σ c · e^{2πi p/q}` over roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharValue {
    terms: Vec<(i64, i64, i64)>,
}

impl CharValue {
    pub fn integer(c: i64) -> Self {
        CharValue { terms: vec![(c, 0, 1)] }
    }

    /// `e^{2πi p/q}`.
    pub fn root(p: i64, q: i64) -> Self {
        CharValue {
            terms: vec![(1, p.rem_euclid(q), q)],
        }
    }

    /// `2 cos(2π p/q)`.
    pub fn two_cos(p: i64, q: i64) -> Self {
        CharValue {
            terms: vec![(1, p.rem_euclid(q), q), (1, (-p).rem_euclid(q), q)],
        }
    }

    pub fn eval(&self) -> Complex64 {
        self.terms
            .iter()
            .map(|&(c, p, q)| {
                let p = p.rem_euclid(q);
                // reduce to the angle closest to zero before scaling
                let p = if 2 * p > q { p - q } else { p };
                let theta = 2.0 * PI * p as f64 / q as f64;
                c as f64 * Complex64::new(theta.cos(), theta.sin())
            })
            .sum()
    }

    /// Whether the value is an integer by construction.
    pub fn is_integer(&self) -> bool {
        self.terms.iter().all(|&(_, p, q)| p.rem_euclid(q) == 0)
    }
}

/// Character table; rows are irreducible characters, columns are classes.
/// Class 0 is the identity and irrep 0 is the trivial character.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    pub group: GroupDescriptor,
    pub class_sizes: Vec<u64>,
    pub class_labels: Vec<String>,
    pub irrep_dims: Vec<u64>,
    pub irrep_labels: Vec<String>,
    pub values: Vec<Vec<CharValue>>,
    pub inverse_class: Vec<usize>,
}

/// Largest deviations from the orthogonality relations and from
/// `Σ d_i² = |G| = Σ κ_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalityReport {
    pub rows: f64,
    pub columns: f64,
    pub order_mismatch: bool,
    pub identity_column: bool,
}

impl OrthogonalityReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.rows < tol && self.columns < tol && !self.order_mismatch && self.identity_column
    }
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn value(&self, irrep: usize, class: usize) -> Complex64 {
        self.values[irrep][class].eval()
    }

    /// Whether every class is closed under inversion.
    pub fn is_real(&self) -> bool {
        self.inverse_class.iter().enumerate().all(|(k, &inv)| k == inv)
    }

    /// `{k, k⁻¹}` for each class, ordered by smallest member.
    pub fn inverse_pairs(&self) -> Vec<Vec<usize>> {
        let mut parts = Vec::new();
        for k in 0..self.classes() {
            let inv = self.inverse_class[k];
            if inv == k {
                parts.push(vec![k]);
            } else if k < inv {
                parts.push(vec![k, inv]);
            }
        }
        parts
    }

    pub fn check(&self) -> OrthogonalityReport {
        let order = self.order() as f64;
        let h = self.values.len();
        let c = self.classes();
        let mut rows = 0.0f64;
        for i in 0..h {
            for j in 0..h {
                let s: Complex64 = (0..c)
                    .map(|k| self.class_sizes[k] as f64 * self.value(i, k) * self.value(j, k).conj())
                    .sum();
                let want = if i == j { order } else { 0.0 };
                rows = rows.max((s - want).norm());
            }
        }
        let mut columns = 0.0f64;
        for k in 0..c {
            for l in 0..c {
                let s: Complex64 = (0..h).map(|i| self.value(i, k) * self.value(i, l).conj()).sum();
                let want = if k == l {
                    order / self.class_sizes[k] as f64
                } else {
                    0.0
                };
                columns = columns.max((s - want).norm());
            }
        }
        let dims: u64 = self.irrep_dims.iter().map(|d| d * d).sum();
        let identity_column = (0..h).all(|i| {
            self.values[i][0].is_integer() && self.value(i, 0) == Complex64::new(self.irrep_dims[i] as f64, 0.0)
        });
        OrthogonalityReport {
            rows,
            columns,
            order_mismatch: dims != self.order() || h != c,
            identity_column,
        }
    }

    /// CSV with irreps as rows and classes as columns, values as `re+imi`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("irrep");
        for label in &self.class_labels {
            out.push(',');
            out.push_str(label);
        }
        out.push('\n');
        for (i, label) in self.irrep_labels.iter().enumerate() {
            out.push_str(label);
            for k in 0..self.classes() {
                let v = self.value(i, k);
                let (re, im) = (clean(v.re), clean(v.im));
                out.push_str(&format!(
                    ",{re:.12}{}{:.12}i",
                    if im < 0.0 { '-' } else { '+' },
                    im.abs()
                ));
            }
            out.push('\n');
        }
        out
    }
}

fn clean(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_values() {
        assert!((CharValue::root(1, 4).eval() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((CharValue::root(2, 4).eval() + 1.0).norm() < 1e-15);
        assert!((CharValue::root(-1, 4).eval() - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        assert!((CharValue::two_cos(1, 6).eval() - 1.0).norm() < 1e-15);
        assert!(CharValue::integer(-3).is_integer());
        assert!(!CharValue::root(1, 3).is_integer());
    }
}
