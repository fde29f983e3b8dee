//! Eigenmatrices of conjugacy-class schemes and of their fusions.
//!
//! A fusion merges classes into parts (each closed under inversion). The
//! irreducible characters that take equal class-sum eigenvalues on every
//! part collapse into one eigenspace of the fused scheme.

use num_complex::Complex64;

use super::character::CharacterTable;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scheme::{SchemeEigenstructure, ValencyVector};

const FUSION_TOL: f64 = 1e-9;

/// Class scheme after merging classes into `parts`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizedScheme {
    pub merged_classes: Vec<Vec<usize>>,
    /// Irreps belonging to each eigenspace, eigenspace 0 being trivial.
    pub irrep_groups: Vec<Vec<usize>>,
    /// Number of parts that are single self-inverse classes, minus one.
    pub l: usize,
    pub p: Matrix,
    pub q: Matrix,
    pub m: Vec<f64>,
    pub valencies: ValencyVector,
}

impl SymmetrizedScheme {
    /// Fuses `table` along `parts`; `parts[0]` must be the identity class.
    pub fn fuse(table: &CharacterTable, parts: &[Vec<usize>]) -> Result<Self> {
        validate_parts(table, parts)?;
        let h = table.values.len();
        let eig = |i: usize, part: &[usize]| -> Complex64 {
            part.iter()
                .map(|&k| table.class_sizes[k] as f64 * table.value(i, k))
                .sum::<Complex64>()
                / table.irrep_dims[i] as f64
        };
        let signature: Vec<Vec<Complex64>> = (0..h)
            .map(|i| parts.iter().map(|part| eig(i, part)).collect())
            .collect();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in 0..h {
            let same = |g: &Vec<usize>| {
                signature[g[0]]
                    .iter()
                    .zip(&signature[i])
                    .all(|(a, b)| (a - b).norm() < FUSION_TOL)
            };
            match groups.iter_mut().find(|g| same(g)) {
                Some(g) => g.push(i),
                None => groups.push(vec![i]),
            }
        }
        if groups.len() != parts.len() {
            return Err(Error::InvalidFusion(format!(
                "{} parts but {} distinct eigenvalue patterns",
                parts.len(),
                groups.len()
            )));
        }
        let size = parts.len();
        let mut p = Matrix::zeros(size, size);
        for (gi, g) in groups.iter().enumerate() {
            for (k, v) in signature[g[0]].iter().enumerate() {
                if v.im.abs() > FUSION_TOL {
                    return Err(Error::InvalidFusion(format!("eigenvalue {v} of part {k} is not real")));
                }
                p[(gi, k)] = v.re;
            }
        }
        let mut q = Matrix::zeros(size, size);
        for (k, part) in parts.iter().enumerate() {
            for (gi, g) in groups.iter().enumerate() {
                let at = |class: usize| -> Complex64 {
                    g.iter()
                        .map(|&i| table.irrep_dims[i] as f64 * table.value(i, class).conj())
                        .sum()
                };
                let v = at(part[0]);
                if part.iter().any(|&c| (at(c) - v).norm() > FUSION_TOL) || v.im.abs() > FUSION_TOL {
                    return Err(Error::InvalidFusion(format!(
                        "dual eigenvalue of part {k} on eigenspace {gi} is not constant and real"
                    )));
                }
                q[(k, gi)] = v.re;
            }
        }
        let m = groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&i| (table.irrep_dims[i] * table.irrep_dims[i]) as f64)
                    .sum()
            })
            .collect();
        let sizes = parts
            .iter()
            .map(|part| part.iter().map(|&k| table.class_sizes[k]).sum())
            .collect();
        let real = parts
            .iter()
            .filter(|part| part.len() == 1 && table.inverse_class[part[0]] == part[0])
            .count();
        Ok(SymmetrizedScheme {
            merged_classes: parts.to_vec(),
            irrep_groups: groups,
            l: real.saturating_sub(1),
            p,
            q,
            m,
            valencies: ValencyVector::from_sizes(sizes),
        })
    }

    /// Merges every complex class with its inverse.
    pub fn symmetrize(table: &CharacterTable) -> Result<Self> {
        Self::fuse(table, &table.inverse_pairs())
    }

    pub fn eigenstructure(&self) -> SchemeEigenstructure {
        SchemeEigenstructure {
            p: self.p.clone(),
            q: self.q.clone(),
            m: self.m.clone(),
            valencies: self.valencies.clone(),
            generator: 1,
        }
    }
}

fn validate_parts(table: &CharacterTable, parts: &[Vec<usize>]) -> Result<()> {
    let c = table.classes();
    let mut seen = vec![false; c];
    for part in parts {
        if part.is_empty() {
            return Err(Error::InvalidFusion("empty part".into()));
        }
        for &k in part {
            if k >= c || seen[k] {
                return Err(Error::InvalidFusion(format!("class {k} missing or repeated")));
            }
            seen[k] = true;
        }
        if part.iter().any(|&k| !part.contains(&table.inverse_class[k])) {
            return Err(Error::InvalidFusion(format!(
                "part {part:?} is not closed under inversion"
            )));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidFusion("parts do not cover every class".into()));
    }
    if parts.first().map(|p| p.as_slice()) != Some(&[0][..]) {
        return Err(Error::InvalidFusion("first part must be the identity class".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupScheme {
    Real(SchemeEigenstructure),
    Symmetrized(SymmetrizedScheme),
}

impl GroupScheme {
    pub fn eigenstructure(&self) -> SchemeEigenstructure {
        match self {
            GroupScheme::Real(es) => es.clone(),
            GroupScheme::Symmetrized(s) => s.eigenstructure(),
        }
    }
}

/// `P_{ik} = κ_k χ_i(α_k) / d_i`, `Q_{ki} = d_i conj χ_i(α_k)`, `m_i = d_i²`.
///
/// With `need_symmetrization` the classes are first merged with their
/// inverses; without it a table with complex classes is rejected.
pub fn group_eigenstructure(table: &CharacterTable, need_symmetrization: bool) -> Result<GroupScheme> {
    if need_symmetrization {
        return SymmetrizedScheme::symmetrize(table).map(GroupScheme::Symmetrized);
    }
    if !table.is_real() {
        return Err(Error::ComplexClassesWithoutSymmetrization);
    }
    let c = table.classes();
    let p = Matrix::from_fn(c, c, |i, k| {
        table.class_sizes[k] as f64 * table.value(i, k).re / table.irrep_dims[i] as f64
    });
    let q = Matrix::from_fn(c, c, |k, i| table.irrep_dims[i] as f64 * table.value(i, k).re);
    Ok(GroupScheme::Real(SchemeEigenstructure {
        p,
        q,
        m: table.irrep_dims.iter().map(|d| (d * d) as f64).collect(),
        valencies: ValencyVector::from_sizes(table.class_sizes.clone()),
        generator: 1,
    }))
}

fn round_count(v: Complex64) -> Result<u64> {
    let r = v.re.round();
    if (v.re - r).abs() > 1e-6 || v.im.abs() > 1e-6 || r < 0.0 {
        return Err(Error::NonIntegerResult(v.re));
    }
    Ok(r as u64)
}

/// `p_{ij}^k = (κ_i κ_j / |G|) Σ_χ χ(α_i) χ(α_j) conj χ(α_k) / χ(1)`.
pub fn intersection_numbers_group(table: &CharacterTable, i: usize, j: usize, k: usize) -> Result<u64> {
    let c = table.classes();
    if i >= c || j >= c || k >= c {
        return Err(Error::BadParameter(format!("class index outside 0..{c}")));
    }
    let s: Complex64 = (0..table.values.len())
        .map(|x| table.value(x, i) * table.value(x, j) * table.value(x, k).conj() / table.irrep_dims[x] as f64)
        .sum();
    let scale = (table.class_sizes[i] * table.class_sizes[j]) as f64 / table.order() as f64;
    round_count(s * scale)
}

/// Intersection numbers of a fused scheme: `Σ_{i∈I, j∈J} p_{ij}^k` for any
/// `k ∈ K`.
pub fn intersection_numbers_fused(
    table: &CharacterTable,
    parts: &[Vec<usize>],
    i: usize,
    j: usize,
    k: usize,
) -> Result<u64> {
    if i >= parts.len() || j >= parts.len() || k >= parts.len() {
        return Err(Error::BadParameter(format!("part index outside 0..{}", parts.len())));
    }
    let mut total = 0;
    for &a in &parts[i] {
        for &b in &parts[j] {
            total += intersection_numbers_group(table, a, b, parts[k][0])?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{character_table_cyclic, character_table_dihedral, character_table_symmetric};
    use std::f64::consts::PI;

    #[test]
    fn symmetric_three() {
        let t = character_table_symmetric(3).unwrap();
        let es = group_eigenstructure(&t, false).unwrap().eigenstructure();
        assert_eq!(es.p.column(1), vec![3.0, 0.0, -3.0]);
        for k in 0..3 {
            assert_eq!(es.q[(0, k)], es.m[k]);
        }
        assert!(es.check().passed());
        assert_eq!(intersection_numbers_group(&t, 1, 1, 0).unwrap(), 3);
    }

    #[test]
    fn cyclic_symmetrized() {
        for n in 3..12u32 {
            let t = character_table_cyclic(n).unwrap();
            assert!(matches!(
                group_eigenstructure(&t, false),
                Err(Error::ComplexClassesWithoutSymmetrization)
            ));
            let GroupScheme::Symmetrized(s) = group_eigenstructure(&t, true).unwrap() else {
                panic!("expected symmetrized scheme");
            };
            let es = s.eigenstructure();
            assert!(es.check().passed(), "n = {n}: {:?}", es.check());
            for (j, g) in s.irrep_groups.iter().enumerate() {
                let jj = g[0] as f64;
                assert!((s.p[(j, 1)] - 2.0 * (2.0 * PI * jj / n as f64).cos()).abs() < 1e-12);
                for (k, part) in s.merged_classes.iter().enumerate() {
                    let kk = part[0] as f64;
                    let factor = if g.len() == 2 { 2.0 } else { 1.0 };
                    let want = factor * (2.0 * PI * jj * kk / n as f64).cos();
                    assert!((s.q[(k, j)] - want).abs() < 1e-12);
                }
            }
            assert_eq!(s.valencies.n, n as u64);
        }
        let t = character_table_cyclic(5).unwrap();
        let parts = t.inverse_pairs();
        assert_eq!(intersection_numbers_fused(&t, &parts, 1, 1, 2).unwrap(), 1);
        assert_eq!(intersection_numbers_fused(&t, &parts, 1, 1, 0).unwrap(), 2);
    }

    #[test]
    fn even_dihedral_reflection_merge() {
        for m in [4u32, 6, 8, 10] {
            let g = crate::group::GroupDescriptor::Dihedral(m);
            let t = character_table_dihedral(m).unwrap();
            let parts = g.strata(&t, None).unwrap();
            let s = SymmetrizedScheme::fuse(&t, &parts).unwrap();
            assert!(s.eigenstructure().check().passed());
            assert_eq!(s.valencies.a[1], m as u64);
        }
    }

    #[test]
    fn bad_fusions() {
        let t = character_table_symmetric(4).unwrap();
        // transpositions merged with 3-cycles: not a scheme
        let parts = vec![vec![0], vec![1, 3], vec![2], vec![4]];
        assert!(matches!(
            SymmetrizedScheme::fuse(&t, &parts),
            Err(Error::InvalidFusion(_))
        ));
        let t = character_table_cyclic(5).unwrap();
        let unpaired = vec![vec![0], vec![1], vec![4], vec![2, 3]];
        assert!(SymmetrizedScheme::fuse(&t, &unpaired).is_err());
    }

    #[test]
    fn intersection_number_sums() {
        for t in [
            character_table_symmetric(3).unwrap(),
            character_table_symmetric(4).unwrap(),
        ] {
            let c = t.classes();
            for i in 0..c {
                for j in 0..c {
                    let mut total = 0;
                    for k in 0..c {
                        let p = intersection_numbers_group(&t, i, j, k).unwrap();
                        assert_eq!(p, intersection_numbers_group(&t, j, i, k).unwrap());
                        total += p * t.class_sizes[k];
                    }
                    assert_eq!(total, t.class_sizes[i] * t.class_sizes[j]);
                    assert_eq!(intersection_numbers_group(&t, 0, j, i).unwrap(), (i == j) as u64);
                }
            }
        }
    }
}
