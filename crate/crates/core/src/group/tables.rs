use super::character::{CharValue, CharacterTable};
use super::GroupDescriptor;
use crate::error::{Error, Result};

/// `χ_j(g^k) = e^{2πi jk/n}`; class `k` is the single element `g^k`.
pub fn character_table_cyclic(n: u32) -> Result<CharacterTable> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    let n_us = n as usize;
    let q = n as i64;
    Ok(CharacterTable {
        group: GroupDescriptor::Cyclic(n),
        class_sizes: vec![1; n_us],
        class_labels: (0..n).map(|k| format!("g^{k}")).collect(),
        irrep_dims: vec![1; n_us],
        irrep_labels: (0..n).map(|j| format!("chi_{j}")).collect(),
        values: (0..q)
            .map(|j| (0..q).map(|k| CharValue::root(j * k, q)).collect())
            .collect(),
        inverse_class: (0..n_us).map(|k| (n_us - k) % n_us).collect(),
    })
}

/// Dihedral group of order `2m` generated by a rotation `a` and a
/// reflection `b`.
///
/// Odd `m`: classes `{1}`, all reflections, then `{a^j, a^-j}` for
/// `j = 1..(m-1)/2`. Even `m = 2l`: classes `{1}`, `{a^l}`, `{a^j, a^-j}` for
/// `j = 1..l-1`, then the reflections `a^{2j} b` and `a^{2j+1} b`.
pub fn character_table_dihedral(m: u32) -> Result<CharacterTable> {
    if m < 3 {
        return Err(Error::InvalidOrder(m));
    }
    let q = m as i64;
    let int = CharValue::integer;
    let mut t = CharacterTable {
        group: GroupDescriptor::Dihedral(m),
        class_sizes: vec![],
        class_labels: vec![],
        irrep_dims: vec![],
        irrep_labels: vec![],
        values: vec![],
        inverse_class: vec![],
    };
    if m % 2 == 1 {
        let r = (q - 1) / 2;
        t.class_sizes = [1, m as u64].into_iter().chain((0..r).map(|_| 2)).collect();
        t.class_labels = ["1".to_string(), "b".to_string()]
            .into_iter()
            .chain((1..=r).map(|j| format!("a^{j}")))
            .collect();
        t.irrep_dims = [1, 1].into_iter().chain((0..r).map(|_| 2)).collect();
        t.irrep_labels = ["trivial".to_string(), "sign".to_string()]
            .into_iter()
            .chain((1..=r).map(|h| format!("rho_{h}")))
            .collect();
        t.values.push((0..r + 2).map(|_| int(1)).collect());
        t.values
            .push([int(1), int(-1)].into_iter().chain((0..r).map(|_| int(1))).collect());
        for h in 1..=r {
            t.values.push(
                [int(2), int(0)]
                    .into_iter()
                    .chain((1..=r).map(|j| CharValue::two_cos(h * j, q)))
                    .collect(),
            );
        }
    } else {
        let l = q / 2;
        let half = l as u64;
        t.class_sizes = [1, 1]
            .into_iter()
            .chain((1..l).map(|_| 2))
            .chain([half, half])
            .collect();
        t.class_labels = ["1".to_string(), format!("a^{l}")]
            .into_iter()
            .chain((1..l).map(|j| format!("a^{j}")))
            .chain(["b".to_string(), "ab".to_string()])
            .collect();
        t.irrep_dims = [1, 1, 1, 1].into_iter().chain((1..l).map(|_| 2)).collect();
        t.irrep_labels = ["psi_1", "psi_2", "psi_3", "psi_4"]
            .iter()
            .map(|s| s.to_string())
            .chain((1..l).map(|h| format!("rho_{h}")))
            .collect();
        // one-dimensional characters from (χ(a), χ(b))
        for (ca, cb) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
            let rot = |j: i64| int(ca.pow(j as u32));
            t.values.push(
                [int(1), rot(l)]
                    .into_iter()
                    .chain((1..l).map(rot))
                    .chain([int(cb), int(cb * ca)])
                    .collect(),
            );
        }
        for h in 1..l {
            t.values.push(
                [int(2), CharValue::two_cos(h * l, q)]
                    .into_iter()
                    .chain((1..l).map(|j| CharValue::two_cos(h * j, q)))
                    .chain([int(0), int(0)])
                    .collect(),
            );
        }
    }
    t.inverse_class = (0..t.class_sizes.len()).collect();
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn cyclic_values() {
        let t = character_table_cyclic(4).unwrap();
        assert!((t.value(1, 1) - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((t.value(1, 2) + 1.0).norm() < 1e-15);
        assert!(t.values[0].iter().all(|v| v.eval() == Complex64::new(1.0, 0.0)));
        assert_eq!(t.inverse_class, vec![0, 3, 2, 1]);
        for n in 3..12 {
            assert!(character_table_cyclic(n).unwrap().check().passed(1e-12));
        }
        assert!(matches!(character_table_cyclic(2), Err(Error::InvalidOrder(2))));
    }

    #[test]
    fn dihedral_tables() {
        let t = character_table_dihedral(5).unwrap();
        assert_eq!(t.class_sizes, vec![1, 5, 2, 2]);
        let t = character_table_dihedral(3).unwrap();
        assert_eq!(t.irrep_dims, vec![1, 1, 2]);
        assert_eq!(t.order(), 6);
        for m in 3..14 {
            let t = character_table_dihedral(m).unwrap();
            assert!(t.check().passed(1e-9), "m = {m}: {:?}", t.check());
            assert_eq!(t.order(), 2 * m as u64);
            assert_eq!(
                t.classes(),
                if m % 2 == 1 {
                    (m as usize + 3) / 2
                } else {
                    m as usize / 2 + 3
                }
            );
        }
    }
}
