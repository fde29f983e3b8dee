//! Named distance-regular graphs with their intersection arrays and, where a
//! reference closed form exists, the expected spectral distribution.

use super::distribution::{golub_welsch, DiscreteDistribution};
use super::jacobi::jacobi_from_intersection;
use crate::error::{Error, Result};
use crate::scheme::{validate_intersection_array, IntersectionArray};

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub param_names: Vec<&'static str>,
    pub params: Vec<i64>,
    pub array: IntersectionArray,
    /// Expected `(atom, weight)` pairs of the reference form, if any. For some
    /// families the reference form is known to disagree with the array; see
    /// [`compare_with_reference`].
    pub expected: Option<Vec<(f64, f64)>>,
}

struct Family {
    name: &'static str,
    param_names: &'static [&'static str],
    defaults: &'static [i64],
}

const FAMILIES: &[Family] = &[
    Family {
        name: "complete",
        param_names: &["n"],
        defaults: &[],
    },
    Family {
        name: "cycle",
        param_names: &["n"],
        defaults: &[],
    },
    Family {
        name: "petersen",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "hamming",
        param_names: &["d", "n"],
        defaults: &[],
    },
    Family {
        name: "johnson",
        param_names: &["v", "d"],
        defaults: &[],
    },
    Family {
        name: "generalized_octagon",
        param_names: &["s", "t"],
        defaults: &[2, 2],
    },
    Family {
        name: "generalized_dodecagon",
        param_names: &["s"],
        defaults: &[2],
    },
    Family {
        name: "m22",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "pg_incidence",
        param_names: &["k"],
        defaults: &[4],
    },
    Family {
        name: "golay_binary_doubly_truncated",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "golay_ternary_extended",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "wells",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "gq22_triple_cover",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "double_hoffman_singleton",
        param_names: &[],
        defaults: &[],
    },
    Family {
        name: "foster",
        param_names: &[],
        defaults: &[],
    },
];

pub fn catalog_names() -> Vec<&'static str> {
    FAMILIES.iter().map(|f| f.name).collect()
}

/// Parameter names and trailing defaults of a family.
pub fn catalog_parameters(name: &str) -> Result<(&'static [&'static str], &'static [i64])> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .map(|f| (f.param_names, f.defaults))
        .ok_or_else(|| Error::UnknownCatalogName(name.to_string()))
}

fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn array(c: Vec<u64>, b: Vec<u64>) -> Result<IntersectionArray> {
    IntersectionArray::new(c, b)
}

fn pairs(list: &[(f64, f64)]) -> Option<Vec<(f64, f64)>> {
    let mut v = list.to_vec();
    v.sort_by(|a, b| a.0.total_cmp(&b.0));
    Some(v)
}

/// Looks up a catalog entry. Missing trailing parameters take the family
/// defaults where the family has them.
pub fn catalog(name: &str, params: &[i64]) -> Result<CatalogEntry> {
    let family = FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownCatalogName(name.to_string()))?;
    let mut p: Vec<i64> = params.to_vec();
    if p.len() < family.param_names.len() && p.len() + family.defaults.len() >= family.param_names.len() {
        let skip = p.len();
        p.extend_from_slice(&family.defaults[skip..]);
    }
    if p.len() != family.param_names.len() {
        return Err(Error::BadParams(format!(
            "{name} takes parameters {:?}, got {params:?}",
            family.param_names
        )));
    }
    let bad = |why: String| Error::BadParams(format!("{name}{p:?}: {why}"));
    let at_least = |i: usize, lo: i64| -> Result<u64> {
        if p[i] < lo {
            Err(bad(format!("{} must be at least {lo}", family.param_names[i])))
        } else {
            Ok(p[i] as u64)
        }
    };

    let (ia, expected) = match name {
        "complete" => {
            let n = at_least(0, 2)?;
            let nf = n as f64;
            (
                array(vec![n - 1], vec![1])?,
                pairs(&[(-1.0, (nf - 1.0) / nf), (nf - 1.0, 1.0 / nf)]),
            )
        }
        "cycle" => {
            let n = at_least(0, 3)?;
            let d = (n / 2) as usize;
            let mut c = vec![1; d];
            c[0] = 2;
            let mut b = vec![1; d];
            if n % 2 == 0 {
                b[d - 1] = 2;
            }
            let nf = n as f64;
            let expected: Vec<(f64, f64)> = (0..=d)
                .map(|l| {
                    let x = 2.0 * (2.0 * std::f64::consts::PI * l as f64 / nf).cos();
                    let w = if l == 0 || 2 * l as u64 == n {
                        1.0 / nf
                    } else {
                        2.0 / nf
                    };
                    (x, w)
                })
                .collect();
            (array(c, b)?, pairs(&expected))
        }
        "petersen" => (
            array(vec![3, 2], vec![1, 1])?,
            pairs(&[(3.0, 0.1), (1.0, 0.5), (-2.0, 0.4)]),
        ),
        "hamming" => {
            let d = at_least(0, 1)?;
            let n = at_least(1, 2)?;
            let c = (0..d).map(|i| (d - i) * (n - 1)).collect();
            let b = (1..=d).collect();
            let nf = n as f64;
            let expected: Vec<(f64, f64)> = (0..=d)
                .map(|l| {
                    let w = binomial(d, l) * (nf - 1.0).powi((d - l) as i32) / nf.powi(d as i32);
                    ((n * l) as f64 - d as f64, w)
                })
                .collect();
            (array(c, b)?, pairs(&expected))
        }
        "johnson" => {
            let v = at_least(0, 2)?;
            let d = at_least(1, 1)?;
            if 2 * d > v {
                return Err(bad("need 2d <= v".into()));
            }
            let c = (0..d).map(|i| (d - i) * (v - d - i)).collect();
            let b = (1..=d).map(|i| i * i).collect();
            let total = binomial(v, d);
            let expected: Vec<(f64, f64)> = (0..=d)
                .map(|j| {
                    let x = ((d - j) * (v - d - j)) as f64 - j as f64;
                    let mult = binomial(v, j) - if j > 0 { binomial(v, j - 1) } else { 0.0 };
                    (x, mult / total)
                })
                .collect();
            (array(c, b)?, pairs(&expected))
        }
        "generalized_octagon" => {
            let s = at_least(0, 1)?;
            let t = at_least(1, 1)?;
            let (sf, tf) = (s as f64, t as f64);
            let r = (2.0 * sf * tf).sqrt();
            let side = sf * tf * (tf + 1.0) / (4.0 * (sf * tf + 1.0 - r) * (sf + tf + r));
            let expected = [
                (
                    sf * (tf + 1.0),
                    1.0 / ((sf + 1.0) * (sf * tf + 1.0) * (sf * sf * tf * tf + 1.0)),
                ),
                (sf - 1.0 + r, side),
                (sf - 1.0, sf * tf * (tf + 1.0) / (2.0 * (sf * tf + 1.0) * (sf + tf))),
                (sf - 1.0 - r, side),
                (-tf - 1.0, sf.powi(4) / ((sf + 1.0) * (sf + tf) * (sf * sf + tf * tf))),
            ];
            (
                array(vec![s * (t + 1), s * t, s * t, s * t], vec![1, 1, 1, t + 1])?,
                pairs(&expected),
            )
        }
        "generalized_dodecagon" => {
            let s = at_least(0, 1)?;
            let sf = s as f64;
            let (r3, r1) = ((3.0 * sf).sqrt(), sf.sqrt());
            let u = (sf + 1.0).powi(2) - 3.0 * sf;
            let v = (sf + 1.0).powi(2) - sf;
            let ends = u * v * (sf + 1.0).powi(2);
            // the reference form repeats the atom s - 1 - √s
            let expected = [
                (2.0 * sf, 1.0 / ends),
                (sf - 1.0 + r3, (sf - 1.0 + r3) / (12.0 * u)),
                (sf - 1.0 - r3, (sf - 1.0 - r3) / (12.0 * u)),
                (sf - 1.0 - r1, (sf - 1.0 + r1) / (4.0 * v)),
                (sf - 1.0 - r1, (sf - 1.0 - r1) / (4.0 * v)),
                (-2.0, sf.powi(5) / ends),
            ];
            (
                array(vec![2 * s, s, s, s, s, s], vec![1, 1, 1, 1, 1, 2])?,
                pairs(&expected),
            )
        }
        "m22" => (
            array(vec![7, 6, 4, 4], vec![1, 1, 1, 6])?,
            pairs(&[
                (-4.0, 7.0 / 110.0),
                (-3.0, 0.3),
                (1.0, 7.0 / 15.0),
                (4.0, 1.0 / 6.0),
                (7.0, 1.0 / 330.0),
            ]),
        ),
        "pg_incidence" => {
            let k = at_least(0, 2)?;
            let kf = k as f64;
            let r = kf.sqrt();
            let expected = [
                (kf, 0.5 / (kf * kf)),
                (-kf, 0.5 / (kf * kf)),
                (0.0, (kf - 1.0) / (kf * kf)),
                (r, (kf - 1.0) / (2.0 * kf)),
                (-r, (kf - 1.0) / (2.0 * kf)),
            ];
            (array(vec![k, k - 1, k - 1, 1], vec![1, 1, k - 1, k])?, pairs(&expected))
        }
        "golay_binary_doubly_truncated" => (
            array(vec![21, 20, 16], vec![1, 2, 12])?,
            pairs(&[
                (-11.0, 21.0 / 512.0),
                (-3.0, 35.0 / 64.0),
                (5.0, 105.0 / 256.0),
                (21.0, 1.0 / 512.0),
            ]),
        ),
        "golay_ternary_extended" => (
            array(vec![24, 22, 20], vec![1, 2, 12])?,
            pairs(&[
                (-12.0, 8.0 / 243.0),
                (-3.0, 440.0 / 729.0),
                (6.0, 88.0 / 243.0),
                (24.0, 1.0 / 729.0),
            ]),
        ),
        "wells" => {
            let r5 = 5f64.sqrt();
            (
                array(vec![5, 4, 1, 1], vec![1, 1, 4, 5])?,
                pairs(&[
                    (-3.0, 1.0 / 16.0),
                    (-r5, 0.25),
                    (r5, 0.25),
                    (1.0, 0.25),
                    (5.0, 3.0 / 16.0),
                ]),
            )
        }
        "gq22_triple_cover" => (
            array(vec![6, 4, 2, 1], vec![1, 1, 4, 6])?,
            pairs(&[
                (-3.0, 1.0 / 9.0),
                (-2.0, 0.4),
                (3.0, 4.0 / 15.0),
                (1.0, 0.2),
                (6.0, 1.0 / 45.0),
            ]),
        ),
        "double_hoffman_singleton" => (
            array(vec![7, 6, 6, 1, 1], vec![1, 1, 6, 6, 7])?,
            pairs(&[
                (-2.0, 0.28),
                (2.0, 0.28),
                (-3.0, 0.21),
                (3.0, 0.21),
                (-7.0, 0.01),
                (7.0, 0.01),
            ]),
        ),
        "foster" => {
            let r6 = 6f64.sqrt();
            (
                array(vec![3, 2, 2, 2, 2, 1, 1, 1], vec![1, 1, 1, 1, 2, 2, 2, 3])?,
                pairs(&[
                    (0.0, 1.0 / 9.0),
                    (-1.0, 0.2),
                    (1.0, 0.2),
                    (-2.0, 0.1),
                    (2.0, 0.1),
                    (-3.0, 1.0 / 90.0),
                    (3.0, 1.0 / 90.0),
                    (-r6, 2.0 / 15.0),
                    (r6, 2.0 / 15.0),
                ]),
            )
        }
        _ => unreachable!("family table and match arms out of sync"),
    };

    let report = validate_intersection_array(&ia);
    if !report.passed() {
        return Err(bad(format!("infeasible array: {:?}", report.violations)));
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        param_names: family.param_names.to_vec(),
        params: p,
        array: ia,
        expected,
    })
}

/// Computed distribution next to the expected reference one.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceComparison {
    pub computed: DiscreteDistribution,
    pub reference: Vec<(f64, f64)>,
    /// Largest atom and weight deviation over aligned pairs; infinite when
    /// the atom counts differ.
    pub atom_deviation: f64,
    pub weight_deviation: f64,
    /// Human-readable description of every disagreement above `tol`.
    pub mismatches: Vec<String>,
}

impl ReferenceComparison {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn compare_with_reference(entry: &CatalogEntry, tol: f64) -> Result<Option<ReferenceComparison>> {
    let Some(reference) = entry.expected.clone() else {
        return Ok(None);
    };
    let computed = golub_welsch(&jacobi_from_intersection(&entry.array)?)?;
    let mut mismatches = Vec::new();
    let (mut atom_deviation, mut weight_deviation) = (0.0f64, 0.0f64);
    if reference.len() != computed.len() {
        mismatches.push(format!(
            "{} reference atoms, {} computed",
            reference.len(),
            computed.len()
        ));
        atom_deviation = f64::INFINITY;
        weight_deviation = f64::INFINITY;
    }
    let mut used = vec![false; reference.len()];
    for (x, w) in computed.atoms.iter().zip(&computed.weights) {
        let nearest = reference
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|a, b| (a.1 .0 - x).abs().total_cmp(&(b.1 .0 - x).abs()));
        match nearest {
            Some((i, (px, pw))) if (px - x).abs() <= tol => {
                used[i] = true;
                weight_deviation = weight_deviation.max((pw - w).abs());
                atom_deviation = atom_deviation.max((px - x).abs());
                if (pw - w).abs() > tol {
                    mismatches.push(format!("atom {x:.6}: weight {w:.9} computed, {pw:.9} in the reference"));
                }
            }
            _ => {
                atom_deviation = f64::INFINITY;
                mismatches.push(format!("atom {x:.6} (weight {w:.9}) missing from the reference form"));
            }
        }
    }
    for (i, (px, pw)) in reference.iter().enumerate() {
        if !used[i] {
            mismatches.push(format!(
                "reference atom {px:.6} (weight {pw:.9}) not in the computed spectrum"
            ));
        }
    }
    Ok(Some(ReferenceComparison {
        computed,
        reference,
        atom_deviation,
        weight_deviation,
        mismatches,
    }))
}
