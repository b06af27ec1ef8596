//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the decision engine: determinants are expanded
//! over permutations in `i128` and realizations come from a plain random
//! topological sort.

#![allow(dead_code)]

use orderfix::{AxisSet, Configuration, LabelSet};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Leibniz expansion; exact for the small integer matrices used here.
pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let term: i128 = (0..n).map(|r| m[r][p[r]]).product();
        total += if inversions % 2 == 0 { term } else { -term };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Random integer point set satisfying `cfg`, `values[label][axis]`.
pub fn realize(cfg: &Configuration, rng: &mut ChaCha8Rng) -> Vec<Vec<i128>> {
    let (n, d) = (cfg.n(), cfg.dim());
    let mut values = vec![vec![0i128; d]; n];
    for b in 0..d {
        let ord = cfg.ordering(b);
        let mut placed = vec![false; n];
        let mut level = 0i128;
        for _ in 0..n {
            let free: Vec<usize> = (0..n)
                .filter(|&e| !placed[e] && (0..n).all(|f| placed[f] || !ord.less(f, e)))
                .collect();
            let e = *free.choose(rng).expect("acyclic");
            placed[e] = true;
            level += rng.random_range(1..1_000_000);
            values[e][b] = level;
        }
    }
    values
}

pub fn padded(values: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = values.len();
    let d = values.first().map_or(0, Vec::len);
    let mut m = vec![vec![1i128; n]];
    for b in 0..d {
        m.push(values.iter().map(|p| p[b]).collect());
    }
    m
}

/// Signs seen over `count` random realizations: (positive, negative, zero).
pub fn sampled_signs(cfg: &Configuration, seed: u64, count: usize) -> (usize, usize, usize) {
    let mut rng = rng(seed);
    let mut seen = (0, 0, 0);
    for _ in 0..count {
        match det_i128(&padded(&realize(cfg, &mut rng))).signum() {
            1 => seen.0 += 1,
            -1 => seen.1 += 1,
            _ => seen.2 += 1,
        }
    }
    seen
}

/// Uniformly random linear configuration on the standard names.
pub fn random_linear(n: usize, rng: &mut ChaCha8Rng) -> Configuration {
    let chains: Vec<Vec<usize>> = (0..n - 1)
        .map(|_| {
            let mut c: Vec<usize> = (0..n).collect();
            c.shuffle(rng);
            c
        })
        .collect();
    Configuration::from_index_chains(LabelSet::letters(n), AxisSet::standard(n - 1), &chains).unwrap()
}
