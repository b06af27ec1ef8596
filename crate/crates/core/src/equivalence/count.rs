//! Counting classes of linear configurations.
//!
//! Small cases hash the canonical key of every configuration. Larger cases
//! use the orbit-counting lemma: the class count is the average, over the
//! group, of the number of configurations each element fixes. That number
//! factors over the cycles of the axis permutation. Following a cycle of
//! length `c` returns an axis ordering `L` to `L ∘ π^{-c}` (even number of
//! reversals along the cycle) or to its reversal (odd number). The first
//! has `n!` solutions when `π^c` is the identity and none otherwise; the
//! second has `2^m m!` solutions (`m = n / 2`) when `π^c` has the cycle type
//! of the order-reversing involution and none otherwise. Summing over cycle
//! types with their conjugacy class sizes gives an exact count without
//! touching a single configuration.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{canonicalize_chains, Error, Result};

/// Largest label count accepted by [`count_classes`].
pub const MAX_COUNT_LABELS: usize = 6;
/// Largest label count counted by exhaustive enumeration.
pub const MAX_ENUMERATED_COUNT_LABELS: usize = 4;

fn check_range(n: usize, max: usize) -> Result<()> {
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "label count",
            detail: format!("class counting supports 2..={max}, got {n}"),
        })
    }
}

/// Number of equivalence classes of linear configurations with `n` labels.
pub fn count_classes(n: usize) -> Result<BigUint> {
    check_range(n, MAX_COUNT_LABELS)?;
    if n <= MAX_ENUMERATED_COUNT_LABELS {
        count_classes_by_enumeration(n).map(BigUint::from)
    } else {
        Ok(count_classes_by_burnside(n))
    }
}

/// Hashes the canonical key of every configuration.
pub fn count_classes_by_enumeration(n: usize) -> Result<u64> {
    check_range(n, MAX_ENUMERATED_COUNT_LABELS)?;
    let d = n - 1;
    let perms: Vec<Vec<usize>> = itertools::Itertools::permutations(0..n, n).collect();
    let total = perms.len().pow(d as u32);
    let mut seen = HashSet::new();
    let mut chains = vec![Vec::new(); d];
    for mut index in 0..total {
        for chain in chains.iter_mut() {
            *chain = perms[index % perms.len()].clone();
            index /= perms.len();
        }
        seen.insert(canonicalize_chains(&chains, n).0);
    }
    Ok(seen.len() as u64)
}

/// Integer partitions of `n`, largest part first.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of permutations of `sum(cycle_type)` elements with this cycle type.
fn class_size(cycle_type: &[usize]) -> BigUint {
    let n: usize = cycle_type.iter().sum();
    let mut denom = BigUint::one();
    let mut i = 0;
    while i < cycle_type.len() {
        let len = cycle_type[i];
        let mult = cycle_type[i..].iter().take_while(|&&l| l == len).count();
        denom *= BigUint::from(len).pow(mult as u32) * factorial(mult);
        i += mult;
    }
    factorial(n) / denom
}

/// Cycle type (sorted descending) of `π^power` for `π` of the given type.
fn power_type(cycle_type: &[usize], power: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &len in cycle_type {
        let g = len.gcd(&power);
        out.extend(std::iter::repeat_n(len / g, g));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Cycle type of the order-reversing involution on `n` points.
fn reversal_type(n: usize) -> Vec<usize> {
    let mut t = vec![2; n / 2];
    t.extend(std::iter::repeat_n(1, n % 2));
    t
}

/// Orbit-counting evaluation; exact for every `n >= 2`.
pub fn count_classes_by_burnside(n: usize) -> BigUint {
    let d = n - 1;
    let identity_type = vec![1; n];
    let involution = reversal_type(n);
    let fixed_same = factorial(n);
    let fixed_reversed = BigUint::from(2u32).pow((n / 2) as u32) * factorial(n / 2);
    let label_types = partitions(n);
    let mut total = BigUint::zero();
    for axis_type in partitions(d) {
        let axis_class = class_size(&axis_type);
        for label_type in &label_types {
            let mut fixed = BigUint::one();
            for &c in &axis_type {
                let pt = power_type(label_type, c);
                let mut per_cycle = BigUint::zero();
                if pt == identity_type {
                    per_cycle += &fixed_same;
                }
                if pt == involution {
                    per_cycle += &fixed_reversed;
                }
                fixed *= per_cycle * BigUint::from(2u32).pow((c - 1) as u32);
                if fixed.is_zero() {
                    break;
                }
            }
            total += fixed * &axis_class * class_size(label_type);
        }
    }
    let order = factorial(d) * factorial(n) * BigUint::from(2u32).pow(d as u32);
    debug_assert!((&total % &order).is_zero());
    total / order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_small_numbers() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=6 {
            let total: BigUint = partitions(n).iter().map(|t| class_size(t)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn powers_split_cycles() {
        assert_eq!(power_type(&[4], 2), vec![2, 2]);
        assert_eq!(power_type(&[3, 2], 2), vec![3, 1, 1]);
        assert_eq!(power_type(&[5], 5), vec![1; 5]);
    }

    #[test]
    fn burnside_matches_enumeration() {
        for n in 2..=4 {
            assert_eq!(
                count_classes_by_burnside(n),
                BigUint::from(count_classes_by_enumeration(n).unwrap()),
                "n = {n}"
            );
        }
    }

    #[test]
    fn range_is_checked() {
        assert!(count_classes(1).is_err());
        assert!(count_classes(7).is_err());
    }
}
