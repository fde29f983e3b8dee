//! Conjugacy-class schemes of cyclic, dihedral and symmetric groups.

mod character;
mod fusion;
mod symmetric;
mod tables;

use std::fmt;

pub use character::{CharValue, CharacterTable, OrthogonalityReport};
pub use fusion::{
    group_eigenstructure, intersection_numbers_fused, intersection_numbers_group, GroupScheme, SymmetrizedScheme,
};
pub use symmetric::{
    character_table_symmetric, class_size_symmetric, conjugate_partition, partitions, transposition_eigenvalue,
};
pub use tables::{character_table_cyclic, character_table_dihedral};

use crate::error::{Error, Result};

/// Largest symmetric group with a character table.
pub const MAX_SYMMETRIC_ORDER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
}

impl GroupDescriptor {
    /// Builds a descriptor from the `{"group": kind, "n": n}` fields.
    pub fn new(kind: &str, n: u32) -> Result<Self> {
        let g = match kind {
            "cyclic" => GroupDescriptor::Cyclic(n),
            "dihedral" => GroupDescriptor::Dihedral(n),
            "symmetric" => GroupDescriptor::Symmetric(n),
            other => return Err(Error::BadParams(format!("unknown group kind {other:?}"))),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupDescriptor::Cyclic(n) | GroupDescriptor::Dihedral(n) if n < 3 => Err(Error::InvalidOrder(n)),
            GroupDescriptor::Symmetric(n) if n < 2 => Err(Error::InvalidOrder(n)),
            GroupDescriptor::Symmetric(n) if n > MAX_SYMMETRIC_ORDER => Err(Error::UnsupportedOrder(n)),
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupDescriptor::Cyclic(_) => "cyclic",
            GroupDescriptor::Dihedral(_) => "dihedral",
            GroupDescriptor::Symmetric(_) => "symmetric",
        }
    }

    pub fn parameter(&self) -> u32 {
        match *self {
            GroupDescriptor::Cyclic(n) | GroupDescriptor::Dihedral(n) | GroupDescriptor::Symmetric(n) => n,
        }
    }

    pub fn character_table(&self) -> Result<CharacterTable> {
        match *self {
            GroupDescriptor::Cyclic(n) => character_table_cyclic(n),
            GroupDescriptor::Dihedral(m) => character_table_dihedral(m),
            GroupDescriptor::Symmetric(n) => character_table_symmetric(n),
        }
    }

    /// Class partition used as strata of the walk. `generator` picks the
    /// generating class of the raw table (its inverse is merged in); `None`
    /// selects the default: `{g, g⁻¹}` for cyclic groups, all reflections
    /// for dihedral groups and transpositions for symmetric groups.
    ///
    /// The returned parts start with the identity class and have the
    /// generating part at index 1.
    pub fn strata(&self, table: &CharacterTable, generator: Option<usize>) -> Result<Vec<Vec<usize>>> {
        let classes = table.classes();
        if let Some(g) = generator {
            if g == 0 || g >= classes {
                return Err(Error::BadParameter(format!(
                    "generating class {g} outside 1..{}",
                    classes - 1
                )));
            }
        }
        let mut parts = table.inverse_pairs();
        let gen_part = match (self, generator) {
            (GroupDescriptor::Dihedral(m), None) if m % 2 == 0 => {
                let l = (*m / 2) as usize;
                parts.retain(|p| p[0] != l + 1 && p[0] != l + 2);
                parts.insert(1, vec![l + 1, l + 2]);
                return Ok(parts);
            }
            (_, None) => 1,
            (_, Some(g)) => g,
        };
        let idx = parts
            .iter()
            .position(|p| p.contains(&gen_part))
            .expect("partition covers all classes");
        let part = parts.remove(idx);
        parts.insert(1, part);
        Ok(parts)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "Z_{n}"),
            GroupDescriptor::Dihedral(m) => write!(f, "D_{}", 2 * m),
            GroupDescriptor::Symmetric(n) => write!(f, "S_{n}"),
        }
    }
}
