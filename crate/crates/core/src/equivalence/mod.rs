//! The symmetry group of linear configurations and canonical forms.
//!
//! Two configurations are equivalent when one turns into the other by
//! permuting axes, relabelling points and reversing some orderings. In
//! matrix terms these are row permutations, column permutations and row
//! negations, so fixity is preserved and the determinant sign changes by
//! [`GroupElement::sign_parity`].

mod count;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::order::{AxisSet, Configuration, LabelSet, Ordering};
use crate::sign::FormalSign;

pub use count::{count_classes, count_classes_by_burnside, count_classes_by_enumeration};

/// Largest label count for which classes may be enumerated.
pub const MAX_ENUMERATION_LABELS: usize = 5;
/// Enumerating at this many labels or more is gated behind `allow_long`.
pub const LONG_ENUMERATION_LABELS: usize = 5;

/// Axis permutation, label permutation and per-axis reversal.
///
/// Acting on a configuration, old axis `k` moves to position
/// `axis_perm[k]`, label `e` is renamed to `label_perm[e]`, and the
/// ordering of old axis `k` is reversed when `reversed[k]` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct GroupElement {
    pub axis_perm: Vec<usize>,
    pub label_perm: Vec<usize>,
    pub reversed: Vec<bool>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Sign of a permutation by cycle counting.
pub(crate) fn permutation_parity(p: &[usize]) -> FormalSign {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    FormalSign::parity(transpositions)
}

impl GroupElement {
    pub fn new(axis_perm: Vec<usize>, label_perm: Vec<usize>, reversed: Vec<bool>) -> Result<Self> {
        if !is_permutation(&axis_perm) || !is_permutation(&label_perm) {
            return Err(Error::DimensionMismatch("not a permutation".into()));
        }
        if reversed.len() != axis_perm.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} reversal flags for {} axes",
                reversed.len(),
                axis_perm.len()
            )));
        }
        Ok(GroupElement {
            axis_perm,
            label_perm,
            reversed,
        })
    }

    pub fn identity(n: usize, d: usize) -> Self {
        GroupElement {
            axis_perm: (0..d).collect(),
            label_perm: (0..n).collect(),
            reversed: vec![false; d],
        }
    }

    pub fn n(&self) -> usize {
        self.label_perm.len()
    }

    pub fn dim(&self) -> usize {
        self.axis_perm.len()
    }

    /// New position of each axis.
    pub fn axis_perm(&self) -> &[usize] {
        &self.axis_perm
    }

    /// New index of each label.
    pub fn label_perm(&self) -> &[usize] {
        &self.label_perm
    }

    /// Reversal flag of each axis, indexed by its old position.
    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    /// Every element of the group for `n` labels and `d` axes.
    pub fn all(n: usize, d: usize) -> impl Iterator<Item = GroupElement> {
        (0..d).permutations(d).flat_map(move |axes| {
            (0..n).permutations(n).flat_map(move |labels| {
                let axes = axes.clone();
                (0u64..1 << d).map(move |mask| GroupElement {
                    axis_perm: axes.clone(),
                    label_perm: labels.clone(),
                    reversed: (0..d).map(|k| mask & (1 << k) != 0).collect(),
                })
            })
        })
    }

    /// Order of the group: `d! * n! * 2^d`.
    pub fn group_order(n: usize, d: usize) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        fact(d) * fact(n) * (1u128 << d)
    }

    fn check(&self, cfg: &Configuration) -> Result<()> {
        if self.n() != cfg.n() || self.dim() != cfg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "group element acts on {} labels and {} axes, configuration has {} and {}",
                self.n(),
                self.dim(),
                cfg.n(),
                cfg.dim()
            )));
        }
        Ok(())
    }

    /// Acts on `cfg`. Label and axis names stay in place; the orderings
    /// move between them.
    pub fn apply(&self, cfg: &Configuration) -> Result<Configuration> {
        self.check(cfg)?;
        let mut orders = vec![Ordering::empty(cfg.n()); cfg.dim()];
        for (k, ord) in cfg.orderings().iter().enumerate() {
            let moved = ord.relabel(&self.label_perm);
            orders[self.axis_perm[k]] = if self.reversed[k] { moved.reverse() } else { moved };
        }
        Configuration::new(cfg.labels().clone(), cfg.axes().clone(), orders)
    }

    /// `self ∘ other`: act with `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            axis_perm: other.axis_perm.iter().map(|&k| self.axis_perm[k]).collect(),
            label_perm: other.label_perm.iter().map(|&e| self.label_perm[e]).collect(),
            reversed: (0..other.dim())
                .map(|k| other.reversed[k] ^ self.reversed[other.axis_perm[k]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let axis_perm = invert(&self.axis_perm);
        let reversed = (0..self.dim()).map(|j| self.reversed[axis_perm[j]]).collect();
        GroupElement {
            axis_perm,
            label_perm: invert(&self.label_perm),
            reversed,
        }
    }

    /// Factor by which the determinant sign changes under this element.
    pub fn sign_parity(&self) -> FormalSign {
        let flips = self.reversed.iter().filter(|&&r| r).count();
        permutation_parity(&self.label_perm) * permutation_parity(&self.axis_perm) * FormalSign::parity(flips)
    }
}

/// Orbit invariant of a linear configuration: the Lehmer ranks of its
/// canonical per-axis chains. Equal keys mean equivalent configurations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct CanonicalKey {
    pub n: usize,
    pub ranks: Vec<u64>,
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}:{}", self.n, self.ranks.iter().join("."))
    }
}

/// Largest label count whose permutation ranks fit in a `u64`.
pub const MAX_CANONICAL_LABELS: usize = 20;

pub(crate) fn lehmer_rank(perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
    }
    rank
}

pub(crate) fn lehmer_unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (rank % base) as usize;
        rank /= base;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    digits.into_iter().map(|d| pool.remove(d)).collect()
}

/// Canonical key and a group element reaching the canonical chains, given
/// per-axis chains (smallest label first).
pub(crate) fn canonicalize_chains(chains: &[Vec<usize>], n: usize) -> (CanonicalKey, GroupElement) {
    let d = chains.len();
    if d == 0 {
        return (
            CanonicalKey { n, ranks: Vec::new() },
            GroupElement::identity(n, 0),
        );
    }
    let mut best: Option<(Vec<u64>, GroupElement)> = None;
    let mut relabel = vec![0usize; n];
    let mut mapped = vec![0usize; n];
    for lead in 0..d {
        for lead_rev in [false, true] {
            // Relabel so that the leading chain becomes 0 < 1 < ... < n-1.
            for (pos, &e) in chains[lead].iter().enumerate() {
                relabel[e] = if lead_rev { n - 1 - pos } else { pos };
            }
            let mut rest: Vec<(u64, usize, bool)> = Vec::with_capacity(d - 1);
            for (k, chain) in chains.iter().enumerate() {
                if k == lead {
                    continue;
                }
                for (pos, &e) in chain.iter().enumerate() {
                    mapped[pos] = relabel[e];
                }
                let forward = lehmer_rank(&mapped);
                mapped.reverse();
                let backward = lehmer_rank(&mapped);
                rest.push(if backward < forward {
                    (backward, k, true)
                } else {
                    (forward, k, false)
                });
            }
            rest.sort_unstable();
            let mut ranks = Vec::with_capacity(d);
            ranks.push(0);
            ranks.extend(rest.iter().map(|r| r.0));
            if best.as_ref().is_some_and(|(b, _)| *b <= ranks) {
                continue;
            }
            let mut axis_perm = vec![0; d];
            let mut reversed = vec![false; d];
            axis_perm[lead] = 0;
            reversed[lead] = lead_rev;
            for (pos, &(_, k, rev)) in rest.iter().enumerate() {
                axis_perm[k] = pos + 1;
                reversed[k] = rev;
            }
            let g = GroupElement {
                axis_perm,
                label_perm: relabel.clone(),
                reversed,
            };
            best = Some((ranks, g));
        }
    }
    let (ranks, g) = best.expect("at least one axis");
    (CanonicalKey { n, ranks }, g)
}

fn linear_chains(cfg: &Configuration) -> Result<Vec<Vec<usize>>> {
    cfg.require_linear()?;
    if cfg.n() > MAX_CANONICAL_LABELS {
        return Err(Error::OutOfRange {
            what: "label count",
            detail: format!("canonical forms support at most {MAX_CANONICAL_LABELS} labels"),
        });
    }
    Ok(cfg.chains().expect("linear"))
}

/// Canonical key of a linear configuration.
pub fn canonical_key(cfg: &Configuration) -> Result<CanonicalKey> {
    Ok(canonicalize_chains(&linear_chains(cfg)?, cfg.n()).0)
}

/// The orbit minimum of `cfg` (same label and axis names) and a group
/// element `g` with `g.apply(cfg) == canonical`.
pub fn canonical_form(cfg: &Configuration) -> Result<(Configuration, GroupElement)> {
    let (_, g) = canonicalize_chains(&linear_chains(cfg)?, cfg.n());
    let canon = g.apply(cfg)?;
    Ok((canon, g))
}

/// Linear configuration with the given canonical key, named with letters
/// and the standard axis names.
pub fn configuration_from_key(key: &CanonicalKey) -> Configuration {
    let chains: Vec<Vec<usize>> = key.ranks.iter().map(|&r| lehmer_unrank(key.n, r)).collect();
    Configuration::from_index_chains(LabelSet::letters(key.n), AxisSet::standard(chains.len()), &chains)
        .expect("well-formed chains")
}

pub fn are_equivalent(a: &Configuration, b: &Configuration) -> Result<bool> {
    if a.n() != b.n() || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot compare {} labels / {} axes with {} labels / {} axes",
            a.n(),
            a.dim(),
            b.n(),
            b.dim()
        )));
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

/// Canonical keys of all classes of linear configurations with `n` labels
/// and `n - 1` axes, sorted.
///
/// Candidates are generated directly in normal form (first chain the
/// identity, every other chain the smaller of itself and its reversal,
/// ranks non-decreasing) and kept when they are their own canonical key.
pub fn class_keys(n: usize, allow_long: bool) -> Result<Vec<CanonicalKey>> {
    if !(2..=MAX_ENUMERATION_LABELS).contains(&n) {
        return Err(Error::OutOfRange {
            what: "label count",
            detail: format!("class enumeration supports 2..={MAX_ENUMERATION_LABELS}, got {n}"),
        });
    }
    if n >= LONG_ENUMERATION_LABELS && !allow_long {
        return Err(Error::OutOfRange {
            what: "label count",
            detail: format!("enumerating classes for n = {n} is long-running; pass allow_long"),
        });
    }
    let d = n - 1;
    let total: u64 = (1..=n as u64).product();
    let half: Vec<u64> = (0..total)
        .filter(|&r| {
            let mut p = lehmer_unrank(n, r);
            p.reverse();
            r <= lehmer_rank(&p)
        })
        .collect();
    let candidates: Vec<Vec<u64>> = half.iter().copied().combinations_with_replacement(d - 1).collect();
    use rayon::prelude::*;
    let keys: BTreeSet<CanonicalKey> = candidates
        .into_par_iter()
        .filter_map(|rest| {
            let mut ranks = vec![0u64];
            ranks.extend(rest);
            let chains: Vec<Vec<usize>> = ranks.iter().map(|&r| lehmer_unrank(n, r)).collect();
            let (key, _) = canonicalize_chains(&chains, n);
            (key.ranks == ranks).then_some(key)
        })
        .collect();
    Ok(keys.into_iter().collect())
}

/// One representative per class, sorted by canonical key.
pub fn enumerate_classes(n: usize, allow_long: bool) -> Result<Vec<Configuration>> {
    Ok(class_keys(n, allow_long)?.iter().map(configuration_from_key).collect())
}

/// Number of distinct configurations equivalent to `cfg`.
pub fn orbit_size(cfg: &Configuration) -> Result<u64> {
    cfg.require_linear()?;
    let stabilizer = GroupElement::all(cfg.n(), cfg.dim())
        .filter(|g| g.apply(cfg).map(|c| &c == cfg).unwrap_or(false))
        .count() as u128;
    Ok((GroupElement::group_order(cfg.n(), cfg.dim()) / stabilizer) as u64)
}

/// Every linear configuration with `n` labels on the standard names.
pub fn all_linear_configurations(n: usize) -> impl Iterator<Item = Configuration> {
    let d = n.saturating_sub(1);
    let labels = LabelSet::letters(n);
    let axes = AxisSet::standard(d);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    (0..d)
        .map(|_| perms.clone())
        .multi_cartesian_product()
        .map(move |chains| {
            Configuration::from_index_chains(labels.clone(), axes.clone(), &chains).expect("valid chains")
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> Configuration {
        text.parse().unwrap()
    }

    #[test]
    fn lehmer_round_trip() {
        for r in 0..120 {
            assert_eq!(lehmer_rank(&lehmer_unrank(5, r)), r);
        }
        assert_eq!(lehmer_rank(&[0, 1, 2]), 0);
        assert_eq!(lehmer_rank(&[2, 1, 0]), 5);
    }

    #[test]
    fn identity_acts_trivially() {
        let c = cfg("x: A<B<C<D\ny: B<D<A<C\nz: D<C<B<A");
        assert_eq!(GroupElement::identity(4, 3).apply(&c).unwrap(), c);
    }

    #[test]
    fn parities() {
        assert_eq!(GroupElement::identity(3, 2).sign_parity(), FormalSign::Plus);
        let rev = GroupElement::new(vec![0, 1], vec![0, 1, 2], vec![true, false]).unwrap();
        assert_eq!(rev.sign_parity(), FormalSign::Minus);
        let swap = GroupElement::new(vec![0, 1], vec![1, 0, 2], vec![false, false]).unwrap();
        assert_eq!(swap.sign_parity(), FormalSign::Minus);
    }

    #[test]
    fn full_reversal_is_an_involution() {
        let c = cfg("x: A<B<C<D\ny: B<D<A<C\nz: D<C<B<A");
        let g = GroupElement::new(vec![0, 1, 2], vec![0, 1, 2, 3], vec![true; 3]).unwrap();
        assert_eq!(g.compose(&g), GroupElement::identity(4, 3));
        assert_eq!(g.apply(&g.apply(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn canonical_form_reaches_the_minimum() {
        let c = cfg("x: A<B<C<D\ny: B<D<A<C\nz: D<C<B<A");
        let (canon, g) = canonical_form(&c).unwrap();
        assert_eq!(g.apply(&c).unwrap(), canon);
        assert_eq!(canonical_form(&canon).unwrap().0, canon);
        assert_eq!(canonical_key(&canon).unwrap(), canonical_key(&c).unwrap());
    }

    #[test]
    fn canonical_key_is_orbit_minimum() {
        let c = cfg("x: A<C<B<D\ny: B<D<A<C\nz: D<C<A<B");
        let key = canonical_key(&c).unwrap();
        let brute = GroupElement::all(4, 3)
            .map(|g| {
                let img = g.apply(&c).unwrap();
                img.chains().unwrap().iter().map(|ch| lehmer_rank(ch)).collect::<Vec<_>>()
            })
            .min()
            .unwrap();
        assert_eq!(key.ranks, brute);
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(class_keys(2, false).unwrap().len(), 1);
        assert_eq!(class_keys(3, false).unwrap().len(), 2);
        assert_eq!(class_keys(4, false).unwrap().len(), 21);
        assert!(class_keys(5, false).is_err());
        assert!(class_keys(1, false).is_err());
    }

    #[test]
    fn two_dimensional_representatives_differ() {
        let equal = cfg("x: A<B<C\ny: A<B<C");
        let cyclic = cfg("x: A<B<C\ny: B<C<A");
        assert!(!are_equivalent(&equal, &cyclic).unwrap());
        assert!(are_equivalent(&equal, &cfg("x: A<B<C\ny: C<B<A")).unwrap());
    }
}
