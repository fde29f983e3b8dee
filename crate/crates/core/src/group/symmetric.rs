use std::collections::HashMap;

use super::character::{CharValue, CharacterTable};
use super::{GroupDescriptor, MAX_SYMMETRIC_ORDER};
use crate::error::{Error, Result};

/// All partitions of `n`, parts in non-increasing order, sorted in ascending
/// lexicographic order (`[1, 1, ..., 1]` first, `[n]` last).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn conjugate_partition(lambda: &[u32]) -> Vec<u32> {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first)
        .map(|j| lambda.iter().filter(|&&p| p >= j).count() as u32)
        .collect()
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// `n! / Π_j (j^{ν_j} ν_j!)` for a cycle type with `ν_j` cycles of length `j`.
pub fn class_size_symmetric(cycle_type: &[u32], n: u32) -> Result<u64> {
    if cycle_type.contains(&0) || cycle_type.iter().sum::<u32>() != n {
        return Err(Error::InvalidCycleType(cycle_type.to_vec()));
    }
    if n > 20 {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in cycle_type {
        *counts.entry(p).or_default() += 1;
    }
    let centralizer: u64 = counts
        .iter()
        .map(|(&j, &nu)| (j as u64).pow(nu) * factorial(nu))
        .product();
    Ok(factorial(n) / centralizer)
}

/// Eigenvalue of the transposition class sum on the irrep `λ`:
/// `Σ_j [C(λ_j, 2) - C(λ'_j, 2)]`.
pub fn transposition_eigenvalue(lambda: &[u32]) -> i64 {
    let pairs = |parts: &[u32]| -> i64 { parts.iter().map(|&p| p as i64 * (p as i64 - 1) / 2).sum() };
    pairs(lambda) - pairs(&conjugate_partition(lambda))
}

/// Number of standard Young tableaux by the hook-length formula.
fn dimension(lambda: &[u32]) -> u64 {
    let conj = conjugate_partition(lambda);
    let n: u32 = lambda.iter().sum();
    let mut hooks: u64 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row as usize) {
            hooks *= (row as u64 - j as u64) + (col as u64 - i as u64) - 1;
        }
    }
    factorial(n) / hooks
}

fn to_beta(lambda: &[u32]) -> Vec<i64> {
    let len = lambda.len() as i64;
    lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + len - 1 - i as i64)
        .collect()
}

fn from_beta(beta: &[i64]) -> Vec<u32> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len() as i64;
    b.iter()
        .enumerate()
        .map(|(i, &x)| (x - (len - 1 - i as i64)) as u32)
        .filter(|&p| p > 0)
        .collect()
}

/// Murnaghan–Nakayama: strip rim hooks of the lengths in `cycles[from..]`,
/// largest first, via beta-numbers.
fn mn(lambda: &[u32], cycles: &[u32], from: usize, memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    if from == cycles.len() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), from);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = cycles[from] as i64;
    let beta = to_beta(lambda);
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&from_beta(&next), cycles, from + 1, memo);
    }
    memo.insert(key, total);
    total
}

fn label(parts: &[u32]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("[{}]", inner.join(" "))
}

/// Classes are cycle types in ascending lexicographic order, so class 1 is
/// the transpositions; irreps are partitions in descending order, so irrep 0
/// is the trivial character.
pub fn character_table_symmetric(n: u32) -> Result<CharacterTable> {
    if n > MAX_SYMMETRIC_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let classes = partitions(n);
    let mut irreps = classes.clone();
    irreps.reverse();
    let mut values = Vec::with_capacity(irreps.len());
    for lambda in &irreps {
        let mut memo = HashMap::new();
        let row = classes
            .iter()
            .map(|mu| {
                let mut cycles = mu.clone();
                cycles.sort_unstable_by(|a, b| b.cmp(a));
                memo.clear();
                CharValue::integer(mn(lambda, &cycles, 0, &mut memo))
            })
            .collect();
        values.push(row);
    }
    Ok(CharacterTable {
        group: GroupDescriptor::Symmetric(n),
        class_sizes: classes
            .iter()
            .map(|mu| class_size_symmetric(mu, n))
            .collect::<Result<_>>()?,
        class_labels: classes.iter().map(|c| label(c)).collect(),
        irrep_dims: irreps.iter().map(|l| dimension(l)).collect(),
        irrep_labels: irreps.iter().map(|l| label(l)).collect(),
        values,
        inverse_class: (0..classes.len()).collect(),
    })
}
