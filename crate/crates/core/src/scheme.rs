//! Combinatorial data of P-polynomial association schemes: intersection
//! arrays, valencies and the eigenvalue/dual-eigenvalue matrices `P` and `Q`.
//!
//! Intersection numbers use the outward/backward orientation throughout:
//! `c_i` counts neighbours of a stratum-`i` vertex in stratum `i + 1` and
//! `b_i` counts those in stratum `i - 1`. The conventions `b_0 = 0` and
//! `c_d = 0` are implicit and never stored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupDescriptor;
use crate::linalg::Matrix;
use crate::spectral::{golub_welsch, jacobi_from_intersection, normalized_polynomials};

/// Tolerance for every algebraic identity on `P`, `Q` and multiplicities.
pub const IDENTITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionArray {
    d: usize,
    #[serde(rename = "c_forward")]
    c: Vec<u64>,
    #[serde(rename = "b_backward")]
    b: Vec<u64>,
}

impl IntersectionArray {
    /// `c_forward = [c_0, ..., c_{d-1}]`, `b_backward = [b_1, ..., b_d]`.
    ///
    /// Only the shape is checked here; feasibility is the job of
    /// [`validate_intersection_array`] and [`derive_stratum_sizes`].
    pub fn new(c_forward: Vec<u64>, b_backward: Vec<u64>) -> Result<Self> {
        let ia = IntersectionArray {
            d: c_forward.len(),
            c: c_forward,
            b: b_backward,
        };
        ia.check_shape()?;
        Ok(ia)
    }

    fn check_shape(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidIntersectionArray("diameter must be positive".into()));
        }
        if self.c.len() != self.d || self.b.len() != self.d {
            return Err(Error::InvalidIntersectionArray(format!(
                "d = {} but c_forward has {} entries and b_backward has {}",
                self.d,
                self.c.len(),
                self.b.len()
            )));
        }
        Ok(())
    }

    /// Parses the `{"d", "c_forward", "b_backward"}` JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let ia: IntersectionArray = serde_json::from_str(text).map_err(|e| Error::SchemaError {
            pointer: String::new(),
            message: e.to_string(),
        })?;
        ia.check_shape()?;
        Ok(ia)
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    /// `c_i` for `0 <= i <= d`, with `c_d = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i < self.d {
            self.c[i]
        } else {
            0
        }
    }

    /// `b_i` for `0 <= i <= d`, with `b_0 = 0`.
    pub fn b(&self, i: usize) -> u64 {
        if i == 0 || i > self.d {
            0
        } else {
            self.b[i - 1]
        }
    }

    pub fn c_forward(&self) -> &[u64] {
        &self.c
    }

    pub fn b_backward(&self) -> &[u64] {
        &self.b
    }

    /// Vertex degree `c_0`.
    pub fn degree(&self) -> u64 {
        self.c[0]
    }
}

/// Stratum sizes `a_0 = 1, a_1, ..., a_d` and the scheme order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValencyVector {
    pub a: Vec<u64>,
    pub n: u64,
}

impl ValencyVector {
    pub fn from_sizes(a: Vec<u64>) -> Self {
        let n = a.iter().sum();
        ValencyVector { a, n }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// `a_k = c_0 c_1 ... c_{k-1} / (b_1 b_2 ... b_k)`, each quotient exact.
pub fn derive_stratum_sizes(ia: &IntersectionArray) -> Result<ValencyVector> {
    let mut a = Vec::with_capacity(ia.d + 1);
    a.push(1u64);
    let mut prev: u128 = 1;
    for k in 1..=ia.d {
        let numerator = prev * ia.c(k - 1) as u128;
        let denominator = ia.b(k) as u128;
        if denominator == 0 || numerator == 0 || !numerator.is_multiple_of(denominator) {
            return Err(Error::NonIntegerValency {
                k,
                numerator,
                denominator,
            });
        }
        prev = numerator / denominator;
        let ak = u64::try_from(prev).map_err(|_| Error::InvalidIntersectionArray(format!("a_{k} overflows")))?;
        a.push(ak);
    }
    Ok(ValencyVector::from_sizes(a))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NonPositiveForward {
        index: usize,
    },
    NonPositiveBackward {
        index: usize,
    },
    NonIntegerValency {
        k: usize,
    },
    DegreeMismatch {
        a1: u64,
        c0: u64,
    },
    /// `a_1 - b_k - c_k` is negative: more neighbours outside the stratum
    /// than the degree allows.
    NegativeIntraStratum {
        k: usize,
    },
    /// Stratum `k` would need an odd number of intra-stratum edge ends.
    OddIntraStratumDegree {
        k: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_intersection_array(ia: &IntersectionArray) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, &c) in ia.c.iter().enumerate() {
        if c == 0 {
            violations.push(Violation::NonPositiveForward { index: i });
        }
    }
    for (i, &b) in ia.b.iter().enumerate() {
        if b == 0 {
            violations.push(Violation::NonPositiveBackward { index: i + 1 });
        }
    }
    if violations.is_empty() {
        match derive_stratum_sizes(ia) {
            Ok(vals) => {
                if vals.a[1] != ia.degree() {
                    violations.push(Violation::DegreeMismatch {
                        a1: vals.a[1],
                        c0: ia.degree(),
                    });
                }
                let degree = ia.degree();
                for k in 0..=ia.d {
                    let outside = ia.b(k) + ia.c(k);
                    if outside <= degree && (vals.a[k] * (degree - outside)) % 2 == 1 {
                        violations.push(Violation::OddIntraStratumDegree { k });
                    }
                }
            }
            Err(Error::NonIntegerValency { k, .. }) => violations.push(Violation::NonIntegerValency { k }),
            Err(_) => violations.push(Violation::NonIntegerValency { k: 0 }),
        }
        let degree = ia.degree();
        for k in 0..=ia.d {
            if ia.b(k) + ia.c(k) > degree {
                violations.push(Violation::NegativeIntraStratum { k });
            }
        }
    }
    ValidationReport { violations }
}

/// `P` (rows: eigenspaces, columns: relations), `Q`, multiplicities and
/// valencies of a commutative scheme.
///
/// Row 0 of `P` is the principal eigenspace. The walk Hamiltonian is the
/// relation in column `generator` (1 for every P-polynomial scheme).
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeEigenstructure {
    pub p: Matrix,
    pub q: Matrix,
    pub m: Vec<f64>,
    pub valencies: ValencyVector,
    pub generator: usize,
}

/// Maximum deviations of the identities every eigenstructure must satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenstructureCheck {
    pub pq: f64,
    pub qp: f64,
    pub first_row_col: f64,
    pub multiplicity_relation: f64,
    pub multiplicity_sum: f64,
}

impl EigenstructureCheck {
    pub fn max(&self) -> f64 {
        [
            self.pq,
            self.qp,
            self.first_row_col,
            self.multiplicity_relation,
            self.multiplicity_sum,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.max() < IDENTITY_TOL
    }
}

impl SchemeEigenstructure {
    pub fn order(&self) -> u64 {
        self.valencies.n
    }

    pub fn classes(&self) -> usize {
        self.m.len()
    }

    /// Eigenvalues of the generating relation, one per eigenspace.
    pub fn generator_eigenvalues(&self) -> Vec<f64> {
        self.p.column(self.generator)
    }

    pub fn check(&self) -> EigenstructureCheck {
        let n = self.order() as f64;
        let size = self.classes();
        let n_id = Matrix::identity(size).scaled(n);
        let pq = (&self.p * &self.q).max_abs_diff(&n_id);
        let qp = (&self.q * &self.p).max_abs_diff(&n_id);
        let mut first = 0.0f64;
        for i in 0..size {
            first = first
                .max((self.p[(i, 0)] - 1.0).abs())
                .max((self.q[(i, 0)] - 1.0).abs())
                .max((self.p[(0, i)] - self.valencies.a[i] as f64).abs())
                .max((self.q[(0, i)] - self.m[i]).abs());
        }
        let mut rel = 0.0f64;
        for i in 0..size {
            for j in 0..size {
                let lhs = self.m[j] * self.p[(j, i)];
                let rhs = self.valencies.a[i] as f64 * self.q[(i, j)];
                rel = rel.max((lhs - rhs).abs());
            }
        }
        let msum = (self.m.iter().sum::<f64>() - n).abs().max((self.m[0] - 1.0).abs());
        EigenstructureCheck {
            pq,
            qp,
            first_row_col: first,
            multiplicity_relation: rel,
            multiplicity_sum: msum,
        }
    }

    /// Multiplicities rounded to integers, failing if any is further than
    /// 1e-6 from an integer.
    pub fn integer_multiplicities(&self) -> Result<Vec<u64>> {
        self.m
            .iter()
            .map(|&m| {
                let r = m.round();
                if (m - r).abs() < 1e-6 && r >= 1.0 {
                    Ok(r as u64)
                } else {
                    Err(Error::NonIntegerResult(m))
                }
            })
            .collect()
    }
}

/// Eigenmatrices of the P-polynomial scheme with the given intersection
/// array, via the Gauss-quadrature atoms of its spectral distribution.
pub fn eigenstructure_from_array(ia: &IntersectionArray) -> Result<SchemeEigenstructure> {
    let report = validate_intersection_array(ia);
    if !report.passed() {
        return Err(Error::InvalidIntersectionArray(format!("{:?}", report.violations)));
    }
    let valencies = derive_stratum_sizes(ia)?;
    let jc = jacobi_from_intersection(ia)?;
    let dist = golub_welsch(&jc).map_err(|e| match e {
        Error::DegenerateAtoms(a, b) => Error::DuplicateAtoms(a, b),
        other => other,
    })?;
    let d = ia.diameter();
    let n = valencies.n as f64;

    // principal eigenvalue first
    let order: Vec<usize> = (0..=d).rev().collect();
    let atoms: Vec<f64> = order.iter().map(|&l| dist.atoms[l]).collect();
    let weights: Vec<f64> = order.iter().map(|&l| dist.weights[l]).collect();

    let mut p = Matrix::zeros(d + 1, d + 1);
    for (i, &x) in atoms.iter().enumerate() {
        let v = normalized_polynomials(&jc, ia, x, d);
        for (j, vj) in v.into_iter().enumerate() {
            p[(i, j)] = vj;
        }
    }
    let m: Vec<f64> = weights.iter().map(|b| n * b).collect();
    let q = Matrix::from_fn(d + 1, d + 1, |i, j| m[j] * p[(j, i)] / valencies.a[i] as f64);
    Ok(SchemeEigenstructure {
        p,
        q,
        m,
        valencies,
        generator: 1,
    })
}

/// Uniform entry point for every kind of scheme the library accepts.
#[derive(Debug, Clone, PartialEq)]
pub enum SchemeSpec {
    FromIntersectionArray(IntersectionArray),
    /// Conjugacy-class scheme; `class` overrides the default generating
    /// class (its inverse class is always added).
    FromGroup {
        group: GroupDescriptor,
        class: Option<usize>,
    },
    FromSrg {
        n: u64,
        k: u64,
        lambda: u64,
        mu: u64,
    },
    /// Symmetric product of `copies` complete graphs `K_n` (Hamming scheme).
    Product {
        n: u64,
        copies: u64,
    },
    Catalog {
        name: String,
        params: Vec<i64>,
    },
}

impl SchemeSpec {
    pub fn describe(&self) -> String {
        match self {
            SchemeSpec::FromIntersectionArray(ia) => {
                format!("intersection array {:?};{:?}", ia.c_forward(), ia.b_backward())
            }
            SchemeSpec::FromGroup { group, .. } => format!("group {group}"),
            SchemeSpec::FromSrg { n, k, lambda, mu } => format!("srg({n},{k},{lambda},{mu})"),
            SchemeSpec::Product { n, copies } => format!("product K_{n}^{copies}"),
            SchemeSpec::Catalog { name, params } => format!("catalog {name}{params:?}"),
        }
    }

    /// Intersection array of the distance-regular graph behind this spec,
    /// when it has one.
    pub fn intersection_array(&self) -> Result<IntersectionArray> {
        match self {
            SchemeSpec::FromIntersectionArray(ia) => Ok(ia.clone()),
            SchemeSpec::FromSrg { n, k, lambda, mu } => crate::spectral::srg_intersection_array(*n, *k, *lambda, *mu),
            SchemeSpec::Product { n, copies } => {
                crate::spectral::catalog("hamming", &[*copies as i64, *n as i64]).map(|e| e.array)
            }
            SchemeSpec::Catalog { name, params } => crate::spectral::catalog(name, params).map(|e| e.array),
            SchemeSpec::FromGroup { group, class } => match (group, class) {
                (GroupDescriptor::Cyclic(n), None | Some(1)) => {
                    crate::spectral::catalog("cycle", &[*n as i64]).map(|e| e.array)
                }
                (GroupDescriptor::Dihedral(m), None) => {
                    let m = *m as u64;
                    crate::spectral::srg_intersection_array(2 * m, m, 0, m)
                }
                _ => Err(Error::NotDistanceRegular(format!(
                    "{} is not distance-regular for the chosen class",
                    self.describe()
                ))),
            },
        }
    }
}
