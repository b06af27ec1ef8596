//! Labels, axes, strict orderings and ordering configurations.
//!
//! An [`Ordering`] is a strict partial order on the label indices `0..n`,
//! stored transitively closed as one bitset row per label, so comparability
//! queries are a single bit test. A [`Configuration`] pairs an ordered
//! [`LabelSet`] (matrix columns) with an ordered [`AxisSet`] (matrix rows)
//! and holds one ordering per axis. Determinant signs are always taken with
//! respect to these two orders.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;
use crate::sign::DetSign;

/// Largest label set an [`Ordering`] can hold.
pub const MAX_LABELS: usize = 64;

fn check_distinct(names: &[String]) -> Result<()> {
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(Error::Duplicate(name.clone()));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct LabelSet {
    names: Vec<String>,
}

impl LabelSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        check_distinct(&names)?;
        if names.len() > MAX_LABELS {
            return Err(Error::TooManyLabels {
                max: MAX_LABELS,
                got: names.len(),
            });
        }
        Ok(LabelSet { names })
    }

    /// `A, B, C, ...` for up to 26 labels, `e1, e2, ...` beyond.
    pub fn letters(n: usize) -> Self {
        let names = (0..n)
            .map(|i| {
                if n <= 26 {
                    char::from(b'A' + i as u8).to_string()
                } else {
                    format!("e{}", i + 1)
                }
            })
            .collect();
        LabelSet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    fn subset(&self, keep: &[usize]) -> LabelSet {
        LabelSet {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }
}

impl TryFrom<Vec<String>> for LabelSet {
    type Error = Error;
    fn try_from(names: Vec<String>) -> Result<Self> {
        LabelSet::new(names)
    }
}

impl From<LabelSet> for Vec<String> {
    fn from(set: LabelSet) -> Vec<String> {
        set.names
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct AxisSet {
    names: Vec<String>,
}

impl AxisSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        check_distinct(&names)?;
        Ok(AxisSet { names })
    }

    /// `x, y, z, axis4, axis5, ...`
    pub fn standard(d: usize) -> Self {
        let names = (0..d)
            .map(|i| match i {
                0 => "x".to_string(),
                1 => "y".to_string(),
                2 => "z".to_string(),
                _ => format!("axis{}", i + 1),
            })
            .collect();
        AxisSet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownAxis(name.to_string()))
    }

    fn subset(&self, keep: &[usize]) -> AxisSet {
        AxisSet {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }
}

impl TryFrom<Vec<String>> for AxisSet {
    type Error = Error;
    fn try_from(names: Vec<String>) -> Result<Self> {
        AxisSet::new(names)
    }
}

impl From<AxisSet> for Vec<String> {
    fn from(set: AxisSet) -> Vec<String> {
        set.names
    }
}

/// Strict partial order on label indices `0..n`.
///
/// Bit `f` of `below[e]` is set iff `e < f`. The relation is always
/// irreflexive and transitively closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordering {
    n: usize,
    below: Vec<u64>,
}

impl Ordering {
    /// The empty relation on `n` labels.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_LABELS, "at most {MAX_LABELS} labels");
        Ordering {
            n,
            below: vec![0; n],
        }
    }

    /// Transitive closure of `pairs` (`(e, f)` meaning `e < f`).
    ///
    /// On a cycle, returns the index of a label lying on it.
    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> std::result::Result<Self, usize> {
        let mut ord = Ordering::empty(n);
        for (e, f) in pairs {
            assert!(e < n && f < n, "label index out of range");
            ord.below[e] |= 1 << f;
        }
        for k in 0..n {
            let row_k = ord.below[k];
            for i in 0..n {
                if ord.below[i] & (1 << k) != 0 {
                    ord.below[i] |= row_k;
                }
            }
        }
        match (0..n).find(|&i| ord.below[i] & (1 << i) != 0) {
            Some(i) => Err(i),
            None => Ok(ord),
        }
    }

    /// Chain `chain[0] < chain[1] < ...`; labels not in the chain stay
    /// incomparable. Panics on repeated labels.
    pub fn from_chain(n: usize, chain: &[usize]) -> Self {
        let mut ord = Ordering::empty(n);
        for (i, &e) in chain.iter().enumerate() {
            assert!(e < n, "label index out of range");
            for &f in &chain[i + 1..] {
                assert!(e != f, "repeated label in chain");
                ord.below[e] |= 1 << f;
            }
        }
        ord
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `e < f`.
    #[inline]
    pub fn less(&self, e: usize, f: usize) -> bool {
        self.below[e] & (1 << f) != 0
    }

    pub fn comparable(&self, e: usize, f: usize) -> bool {
        self.less(e, f) || self.less(f, e)
    }

    /// All pairs `(e, f)` with `e < f`, in index order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |e| {
            (0..self.n)
                .filter(move |&f| self.less(e, f))
                .map(move |f| (e, f))
        })
    }

    /// Covering pairs of the relation (its transitive reduction).
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .filter(|&(e, f)| !(0..self.n).any(|m| self.less(e, m) && self.less(m, f)))
            .collect()
    }

    pub fn is_linear(&self) -> bool {
        (0..self.n).all(|e| (e + 1..self.n).all(|f| self.comparable(e, f)))
    }

    /// Number of labels strictly below `e`.
    pub fn rank(&self, e: usize) -> usize {
        (0..self.n).filter(|&f| self.less(f, e)).count()
    }

    /// Labels from smallest to greatest, if the ordering is linear.
    pub fn chain(&self) -> Option<Vec<usize>> {
        if !self.is_linear() {
            return None;
        }
        let mut chain: Vec<usize> = (0..self.n).collect();
        chain.sort_by_key(|&e| self.rank(e));
        Some(chain)
    }

    pub fn reverse(&self) -> Ordering {
        let mut rev = Ordering::empty(self.n);
        for (e, f) in self.pairs() {
            rev.below[f] |= 1 << e;
        }
        rev
    }

    /// `(min, max)` of a linear ordering.
    pub fn extreme_labels(&self) -> Option<(usize, usize)> {
        let chain = self.chain()?;
        Some((*chain.first()?, *chain.last()?))
    }

    /// Whether `e` is the minimum or the maximum of a linear ordering.
    pub fn is_extreme(&self, e: usize) -> bool {
        let below = self.below[e].count_ones() as usize;
        let above = (0..self.n).filter(|&f| self.less(f, e)).count();
        (below == self.n - 1 && above == 0) || (above == self.n - 1 && below == 0)
    }

    /// Whether every relation of `self` also holds in `other`.
    pub fn is_subrelation_of(&self, other: &Ordering) -> bool {
        self.n == other.n
            && self
                .below
                .iter()
                .zip(&other.below)
                .all(|(a, b)| a & !b == 0)
    }

    /// Restriction to the labels `keep` (re-indexed in the given order).
    pub fn restrict(&self, keep: &[usize]) -> Ordering {
        let mut ord = Ordering::empty(keep.len());
        for (i, &e) in keep.iter().enumerate() {
            for (j, &f) in keep.iter().enumerate() {
                if self.less(e, f) {
                    ord.below[i] |= 1 << j;
                }
            }
        }
        ord
    }

    /// Renames label `e` to `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Ordering {
        let mut ord = Ordering::empty(self.n);
        for (e, f) in self.pairs() {
            ord.below[perm[e]] |= 1 << perm[f];
        }
        ord
    }

    /// Every linear ordering containing `self`, each once, lexicographically
    /// ordered by label sequence.
    pub fn linear_extensions(&self) -> Vec<Ordering> {
        let mut out = Vec::new();
        let mut chain = Vec::with_capacity(self.n);
        self.extend_chains(&mut chain, 0, &mut |c| {
            out.push(Ordering::from_chain(c.len(), c))
        });
        out
    }

    /// Number of linear extensions, by dynamic programming over down-sets
    /// for up to 20 labels and by enumeration beyond.
    pub fn linear_extension_count(&self) -> u64 {
        if self.n <= 20 {
            return self.count_by_downsets();
        }
        let mut count = 0u64;
        let mut chain = Vec::with_capacity(self.n);
        self.extend_chains(&mut chain, 0, &mut |_| count += 1);
        count
    }

    fn count_by_downsets(&self) -> u64 {
        let n = self.n;
        // `pred[e]`: labels below `e`.
        let pred: Vec<u64> = (0..n)
            .map(|e| (0..n).filter(|&f| self.less(f, e)).fold(0, |m, f| m | 1 << f))
            .collect();
        let mut ways = vec![0u64; 1 << n];
        ways[0] = 1;
        for set in 0..(1usize << n) {
            let w = ways[set];
            if w == 0 {
                continue;
            }
            for (e, &p) in pred.iter().enumerate() {
                if set & (1 << e) == 0 && p & !(set as u64) == 0 {
                    ways[set | 1 << e] = ways[set | 1 << e].saturating_add(w);
                }
            }
        }
        ways[(1 << n) - 1]
    }

    fn extend_chains(&self, chain: &mut Vec<usize>, placed: u64, emit: &mut dyn FnMut(&[usize])) {
        if chain.len() == self.n {
            emit(chain);
            return;
        }
        for e in 0..self.n {
            if placed & (1 << e) != 0 {
                continue;
            }
            // `e` is minimal among the unplaced labels.
            let blocked = (0..self.n).any(|f| placed & (1 << f) == 0 && self.less(f, e));
            if blocked {
                continue;
            }
            chain.push(e);
            self.extend_chains(chain, placed | (1 << e), emit);
            chain.pop();
        }
    }

    /// A linear extension in which the incomparable labels `e` and `f` are
    /// adjacent (`e` immediately before `f`).
    pub(crate) fn extension_with_adjacent(&self, e: usize, f: usize) -> Option<Vec<usize>> {
        if self.comparable(e, f) || e == f {
            return None;
        }
        let down: Vec<usize> = (0..self.n)
            .filter(|&g| g != e && g != f && (self.less(g, e) || self.less(g, f)))
            .collect();
        let up: Vec<usize> = (0..self.n)
            .filter(|&g| g != e && g != f && !(self.less(g, e) || self.less(g, f)))
            .collect();
        let mut chain = self.restrict(&down).first_extension(&down);
        chain.push(e);
        chain.push(f);
        chain.extend(self.restrict(&up).first_extension(&up));
        Some(chain)
    }

    fn first_extension(&self, names: &[usize]) -> Vec<usize> {
        let mut placed = 0u64;
        let mut chain = Vec::with_capacity(self.n);
        while chain.len() < self.n {
            let e = (0..self.n)
                .find(|&e| {
                    placed & (1 << e) == 0
                        && !(0..self.n).any(|f| placed & (1 << f) == 0 && self.less(f, e))
                })
                .expect("a strict partial order always has a minimal element");
            placed |= 1 << e;
            chain.push(names[e]);
        }
        chain
    }
}

/// One strict ordering of a common label set per axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    labels: LabelSet,
    axes: AxisSet,
    orders: Vec<Ordering>,
}

impl Configuration {
    pub fn new(labels: LabelSet, axes: AxisSet, orders: Vec<Ordering>) -> Result<Self> {
        if orders.len() != axes.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} axes but {} orderings",
                axes.len(),
                orders.len()
            )));
        }
        if let Some(bad) = orders.iter().position(|o| o.len() != labels.len()) {
            return Err(Error::DimensionMismatch(format!(
                "ordering on axis `{}` ranges over {} labels, expected {}",
                axes.name(bad),
                orders[bad].len(),
                labels.len()
            )));
        }
        Ok(Configuration {
            labels,
            axes,
            orders,
        })
    }

    /// Builds a configuration from named chains, e.g.
    /// `from_chains(&["A","B","C"], &[("x", &["A","B","C"]), ("y", &["B","C","A"])])`.
    /// Chains may omit labels, which then stay incomparable to the others.
    pub fn from_chains(labels: &[&str], chains: &[(&str, &[&str])]) -> Result<Self> {
        let labels = LabelSet::new(labels.iter().copied())?;
        let axes = AxisSet::new(chains.iter().map(|(a, _)| *a))?;
        let n = labels.len();
        let mut orders = Vec::with_capacity(chains.len());
        for (axis, chain) in chains {
            let idx = chain
                .iter()
                .map(|l| labels.index_of(l))
                .collect::<Result<Vec<_>>>()?;
            let pairs = idx.windows(2).map(|w| (w[0], w[1]));
            let ord = Ordering::from_pairs(n, pairs).map_err(|i| Error::Cycle {
                axis: axis.to_string(),
                label: labels.name(i).to_string(),
            })?;
            orders.push(ord);
        }
        Configuration::new(labels, axes, orders)
    }

    /// Linear configuration on `labels`/`axes` from per-axis chains of label
    /// indices.
    pub fn from_index_chains(labels: LabelSet, axes: AxisSet, chains: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        let orders = chains.iter().map(|c| Ordering::from_chain(n, c)).collect();
        Configuration::new(labels, axes, orders)
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn axes(&self) -> &AxisSet {
        &self.axes
    }

    /// Number of labels.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of axes.
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn ordering(&self, axis: usize) -> &Ordering {
        &self.orders[axis]
    }

    pub fn orderings(&self) -> &[Ordering] {
        &self.orders
    }

    pub fn ordering_named(&self, axis: &str) -> Result<&Ordering> {
        Ok(&self.orders[self.axes.index_of(axis)?])
    }

    pub fn is_linear(&self) -> bool {
        self.orders.iter().all(Ordering::is_linear)
    }

    /// Whether the configuration has one axis fewer than labels.
    pub fn is_square(&self) -> bool {
        self.axes.len() + 1 == self.labels.len()
    }

    pub(crate) fn require_linear(&self) -> Result<()> {
        match self.orders.iter().position(|o| !o.is_linear()) {
            Some(i) => Err(Error::NotLinear(self.axes.name(i).to_string())),
            None => Ok(()),
        }
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{} labels need {} axes, got {}",
                self.n(),
                self.n().saturating_sub(1),
                self.dim()
            )))
        }
    }

    /// Per-axis chains, if every ordering is linear.
    pub fn chains(&self) -> Option<Vec<Vec<usize>>> {
        self.orders.iter().map(Ordering::chain).collect()
    }

    /// The configuration induced on the named labels and axes; original
    /// label and axis order is preserved.
    pub fn induced<S: AsRef<str>>(&self, keep_labels: &[S], keep_axes: &[S]) -> Result<Configuration> {
        let mut labels = keep_labels
            .iter()
            .map(|l| self.labels.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut axes = keep_axes
            .iter()
            .map(|a| self.axes.index_of(a.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        labels.sort_unstable();
        labels.dedup();
        axes.sort_unstable();
        axes.dedup();
        Ok(self.induced_idx(&labels, &axes))
    }

    /// Induced configuration on label and axis index lists (kept in the
    /// given order).
    pub fn induced_idx(&self, labels: &[usize], axes: &[usize]) -> Configuration {
        Configuration {
            labels: self.labels.subset(labels),
            axes: self.axes.subset(axes),
            orders: axes.iter().map(|&b| self.orders[b].restrict(labels)).collect(),
        }
    }

    /// Induced configuration after deleting label `e` and axis `b`.
    pub fn without(&self, e: usize, b: usize) -> Configuration {
        let labels: Vec<usize> = (0..self.n()).filter(|&i| i != e).collect();
        let axes: Vec<usize> = (0..self.dim()).filter(|&k| k != b).collect();
        self.induced_idx(&labels, &axes)
    }

    /// Same labels and axes, different orderings.
    pub(crate) fn with_orders(&self, orders: Vec<Ordering>) -> Configuration {
        debug_assert_eq!(orders.len(), self.orders.len());
        Configuration {
            labels: self.labels.clone(),
            axes: self.axes.clone(),
            orders,
        }
    }

    /// Every ordering reversed.
    pub fn reversed(&self) -> Configuration {
        self.with_orders(self.orders.iter().map(Ordering::reverse).collect())
    }

    /// Number of linear extensions (product of per-axis counts).
    pub fn extension_count(&self) -> u64 {
        self.orders
            .iter()
            .map(Ordering::linear_extension_count)
            .product()
    }

    /// All linear extensions: the Cartesian product of per-axis extensions,
    /// with the last axis varying fastest.
    pub fn extensions(&self) -> Extensions<'_> {
        let per_axis: Vec<Vec<Ordering>> =
            self.orders.iter().map(Ordering::linear_extensions).collect();
        let done = per_axis.iter().any(Vec::is_empty);
        Extensions {
            base: self,
            cursor: vec![0; per_axis.len()],
            per_axis,
            done,
        }
    }

    /// Whether every relation of `self` also holds in `other` (same labels
    /// and axes).
    pub fn is_subconfiguration_of(&self, other: &Configuration) -> bool {
        self.labels == other.labels
            && self.axes == other.axes
            && self
                .orders
                .iter()
                .zip(&other.orders)
                .all(|(a, b)| a.is_subrelation_of(b))
    }
}

/// Iterator over the linear extensions of a configuration.
pub struct Extensions<'a> {
    base: &'a Configuration,
    per_axis: Vec<Vec<Ordering>>,
    cursor: Vec<usize>,
    done: bool,
}

impl Iterator for Extensions<'_> {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        if self.done {
            return None;
        }
        let orders = self
            .cursor
            .iter()
            .zip(&self.per_axis)
            .map(|(&i, exts)| exts[i].clone())
            .collect();
        let item = self.base.with_orders(orders);
        // Advance the odometer.
        let mut k = self.cursor.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.cursor[k] += 1;
            if self.cursor[k] < self.per_axis[k].len() {
                break;
            }
            self.cursor[k] = 0;
        }
        Some(item)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::to_text(self))
    }
}

/// Real (rational) coordinates for every (label, axis) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointAssignment {
    labels: LabelSet,
    axes: AxisSet,
    /// `values[label][axis]`
    values: Vec<Vec<BigRational>>,
}

impl PointAssignment {
    pub fn new(labels: LabelSet, axes: AxisSet, values: Vec<Vec<BigRational>>) -> Result<Self> {
        if values.len() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels but {} points",
                labels.len(),
                values.len()
            )));
        }
        for (i, point) in values.iter().enumerate() {
            if point.len() != axes.len() {
                let missing = axes.name(point.len().min(axes.len().saturating_sub(1)));
                return Err(Error::MissingValue {
                    label: labels.name(i).to_string(),
                    axis: missing.to_string(),
                });
            }
        }
        Ok(PointAssignment {
            labels,
            axes,
            values,
        })
    }

    /// Integer coordinates, `points[label][axis]`.
    pub fn from_integers(labels: LabelSet, axes: AxisSet, points: &[Vec<i64>]) -> Result<Self> {
        let values = points
            .iter()
            .map(|p| p.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        PointAssignment::new(labels, axes, values)
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn axes(&self) -> &AxisSet {
        &self.axes
    }

    pub fn value(&self, label: usize, axis: usize) -> &BigRational {
        &self.values[label][axis]
    }

    pub fn values(&self) -> &[Vec<BigRational>] {
        &self.values
    }

    /// The 1-padded matrix `M(P)`: a row of ones, then one row per axis.
    pub fn matrix(&self) -> Vec<Vec<BigRational>> {
        let one = BigRational::from_integer(1.into());
        let mut rows = vec![vec![one; self.labels.len()]];
        for b in 0..self.axes.len() {
            rows.push(self.values.iter().map(|p| p[b].clone()).collect());
        }
        rows
    }

    fn require_square(&self) -> Result<()> {
        if self.axes.len() + 1 == self.labels.len() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "determinant needs {} axes for {} labels, got {}",
                self.labels.len().saturating_sub(1),
                self.labels.len(),
                self.axes.len()
            )))
        }
    }

    /// Exact value of `det(M(P))`.
    pub fn det(&self) -> Result<BigRational> {
        self.require_square()?;
        Ok(exact::det_rational(&self.matrix()))
    }

    /// Exact sign of `det(M(P))`.
    pub fn det_sign(&self) -> Result<DetSign> {
        self.require_square()?;
        Ok(exact::det_sign_rational(&self.matrix()))
    }

    /// Whether every strict relation of `cfg` holds on these values.
    pub fn satisfies(&self, cfg: &Configuration) -> Result<bool> {
        let label_map = cfg
            .labels()
            .names()
            .iter()
            .map(|l| {
                self.labels.position(l).ok_or_else(|| Error::MissingValue {
                    label: l.clone(),
                    axis: cfg.axes().names().first().cloned().unwrap_or_default(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        for (b, axis) in cfg.axes().names().iter().enumerate() {
            let pb = self.axes.position(axis).ok_or_else(|| Error::MissingValue {
                label: cfg.labels().names().first().cloned().unwrap_or_default(),
                axis: axis.clone(),
            })?;
            for (e, f) in cfg.ordering(b).pairs() {
                if self.values[label_map[e]][pb] >= self.values[label_map[f]][pb] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Free-function form of [`PointAssignment::satisfies`].
pub fn satisfies(p: &PointAssignment, cfg: &Configuration) -> Result<bool> {
    p.satisfies(cfg)
}

/// Free-function form of [`PointAssignment::det_sign`].
pub fn det_sign(p: &PointAssignment) -> Result<DetSign> {
    p.det_sign()
}
