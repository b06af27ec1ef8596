//! Randomized realizations as an independent numeric check.
//!
//! Each draw picks, per axis, a random linear extension of that axis's
//! ordering (a uniformly random minimal element at each step) and assigns it
//! sorted distinct random integers. Draw `t` uses its own ChaCha stream
//! derived from `(seed, t)`, so results do not depend on thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::exact::det_sign_i64;
use crate::order::{Configuration, Ordering};
use crate::sign::DetSign;

use super::certificate::Histogram;

const VALUE_RANGE: i64 = 1 << 24;

fn random_extension(ord: &Ordering, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = ord.len();
    let mut placed = vec![false; n];
    let mut chain = Vec::with_capacity(n);
    let mut minimal = Vec::with_capacity(n);
    while chain.len() < n {
        minimal.clear();
        minimal.extend(
            (0..n).filter(|&e| !placed[e] && !(0..n).any(|f| !placed[f] && ord.less(f, e))),
        );
        let e = minimal[rng.random_range(0..minimal.len())];
        placed[e] = true;
        chain.push(e);
    }
    chain
}

fn distinct_sorted(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut values = Vec::with_capacity(n);
    while values.len() < n {
        let v = rng.random_range(0..VALUE_RANGE);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    values.sort_unstable();
    values
}

/// One integer realization of `cfg`, `values[label][axis]`.
pub(crate) fn sample_point(cfg: &Configuration, seed: u64, index: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let (n, d) = (cfg.n(), cfg.dim());
    let mut values = vec![vec![0i64; d]; n];
    for b in 0..d {
        let chain = random_extension(cfg.ordering(b), &mut rng);
        for (&e, v) in chain.iter().zip(distinct_sorted(n, &mut rng)) {
            values[e][b] = v;
        }
    }
    values
}

fn det_sign_of(values: &[Vec<i64>]) -> DetSign {
    let n = values.len();
    let d = values.first().map_or(0, Vec::len);
    let mut matrix = vec![vec![1i64; n]];
    for b in 0..d {
        matrix.push(values.iter().map(|p| p[b]).collect());
    }
    det_sign_i64(&matrix)
}

/// Histogram of determinant signs over `count` random realizations.
pub fn sample_signs(cfg: &Configuration, seed: u64, count: u64) -> Result<Histogram> {
    cfg.require_square()?;
    Ok((0..count)
        .into_par_iter()
        .map(|t| match det_sign_of(&sample_point(cfg, seed, t)) {
            DetSign::Pos => Histogram { pos: 1, ..Default::default() },
            DetSign::Neg => Histogram { neg: 1, ..Default::default() },
            DetSign::Zero => Histogram { zero: 1, ..Default::default() },
        })
        .reduce(Histogram::default, Histogram::merge))
}
