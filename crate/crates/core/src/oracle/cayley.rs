//! Cayley graphs of the supported groups, realised as permutation groups.

use std::collections::HashMap;

use super::graph::VertexGraph;
use crate::error::{Error, Result};
use crate::group::{partitions, GroupDescriptor};

/// Largest symmetric group the oracle will build (720 vertices).
pub const MAX_CAYLEY_SYMMETRIC: u32 = 6;

type Perm = Vec<u16>;

/// `(p ∘ q)(i) = p(q(i))`.
fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn closure(generators: &[Perm]) -> Vec<Perm> {
    let identity: Perm = (0..generators[0].len() as u16).collect();
    let mut index: HashMap<Perm, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut next = 0;
    while next < elements.len() {
        for g in generators {
            let e = compose(&elements[next], g);
            if !index.contains_key(&e) {
                index.insert(e.clone(), elements.len());
                elements.push(e);
            }
        }
        next += 1;
    }
    elements
}

fn cycle_type(p: &Perm) -> Vec<u32> {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Elements of the group and the character-table class of each, in the
/// class order used by the tables.
fn elements_with_classes(group: GroupDescriptor) -> Result<(Vec<Perm>, Vec<usize>)> {
    match group {
        GroupDescriptor::Cyclic(n) => {
            let n = n as usize;
            let rot: Perm = (0..n).map(|i| ((i + 1) % n) as u16).collect();
            let elements = closure(&[rot]);
            let classes = elements.iter().map(|e| e[0] as usize).collect();
            Ok((elements, classes))
        }
        GroupDescriptor::Dihedral(m) => {
            let m = m as usize;
            let rot: Perm = (0..m).map(|i| ((i + 1) % m) as u16).collect();
            let refl: Perm = (0..m).map(|i| ((m - i) % m) as u16).collect();
            let elements = closure(&[rot, refl]);
            let l = m / 2;
            let classes = elements
                .iter()
                .map(|e| {
                    // rotation by j sends 0 to j; reflection i -> j - i sends 0 to j
                    let j = e[0] as usize;
                    let reflection = e[1] as usize != (j + 1) % m;
                    match (reflection, m % 2) {
                        (true, 1) => 1,
                        (true, _) => l + 1 + j % 2,
                        (false, _) if j == 0 => 0,
                        (false, 0) if j == l => 1,
                        (false, _) => 1 + j.min(m - j),
                    }
                })
                .collect();
            Ok((elements, classes))
        }
        GroupDescriptor::Symmetric(n) => {
            if n > MAX_CAYLEY_SYMMETRIC {
                return Err(Error::TooLarge((1..=n as usize).product()));
            }
            let n = n as usize;
            let mut swap: Perm = (0..n as u16).collect();
            swap.swap(0, 1);
            let long: Perm = (0..n).map(|i| ((i + 1) % n) as u16).collect();
            let elements = closure(&[swap, long]);
            let order = partitions(n as u32);
            let classes = elements
                .iter()
                .map(|e| {
                    order
                        .iter()
                        .position(|p| *p == cycle_type(e))
                        .expect("cycle type is a partition")
                })
                .collect();
            Ok((elements, classes))
        }
    }
}

/// Cayley graph with connection set `strata[1]` (a union of classes closed
/// under inversion), rooted at the identity. Each vertex records the index
/// of the part of `strata` containing its class.
pub fn cayley_graph(group: GroupDescriptor, strata: &[Vec<usize>]) -> Result<VertexGraph> {
    group.validate()?;
    let (elements, classes) = elements_with_classes(group)?;
    if elements.len() > super::graph::MAX_VERTICES {
        return Err(Error::TooLarge(elements.len()));
    }
    let mut part_of = HashMap::new();
    for (p, part) in strata.iter().enumerate() {
        for &k in part {
            part_of.insert(k, p);
        }
    }
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let connection: Vec<&Perm> = elements
        .iter()
        .zip(&classes)
        .filter(|(_, c)| part_of.get(c) == Some(&1))
        .map(|(e, _)| e)
        .collect();
    let neighbours = elements
        .iter()
        .map(|a| connection.iter().map(|s| index[&compose(a, s)]).collect())
        .collect();
    let labels = elements
        .iter()
        .map(|e| e.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let mut g = VertexGraph::from_neighbours(labels, neighbours)?;
    let levels = classes
        .iter()
        .map(|c| {
            part_of
                .get(c)
                .copied()
                .ok_or_else(|| Error::InvalidFusion(format!("class {c} in no part")))
        })
        .collect::<Result<Vec<_>>>()?;
    g.class_of = Some(levels);
    Ok(g)
}
