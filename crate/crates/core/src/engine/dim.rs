//! Exact deciders for two, three and four labels.

use crate::error::{Error, Result};
use crate::order::Configuration;
use crate::sign::{ConfigSign, FormalSign};

use super::certificate::{Certificate, FixityVerdict, NonFixedCertificate};
use super::expansion::pivot_sign;

fn require(cfg: &Configuration, n: usize) -> Result<()> {
    if cfg.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected {n} labels, got {}",
            cfg.n()
        )));
    }
    cfg.require_square()?;
    cfg.require_linear()
}

/// Two labels, one axis: always fixed, `+` iff the first label is smaller.
pub fn decide_dim1(cfg: &Configuration) -> Result<FixityVerdict> {
    require(cfg, 2)?;
    Ok(FixityVerdict::Fixed {
        sign: dim1_sign(cfg),
        certificate: dim1_certificate(cfg),
    })
}

pub(crate) fn dim1_sign(cfg: &Configuration) -> ConfigSign {
    if cfg.ordering(0).less(0, 1) {
        ConfigSign::Plus
    } else {
        ConfigSign::Minus
    }
}

pub(crate) fn dim1_certificate(cfg: &Configuration) -> Certificate {
    let (low, high) = cfg.ordering(0).extreme_labels().expect("linear");
    Certificate::Linear {
        low: cfg.labels().name(low).to_string(),
        high: cfg.labels().name(high).to_string(),
    }
}

/// Whether the orderings on axes `i` and `j`, restricted to `triple`, are
/// equal or reversed.
pub fn is_conformal(cfg: &Configuration, triple: [usize; 3], i: usize, j: usize) -> bool {
    conformal_orientation(cfg, triple, i, j).is_some()
}

/// `Some(false)` if the restrictions are equal, `Some(true)` if reversed.
pub(crate) fn conformal_orientation(
    cfg: &Configuration,
    triple: [usize; 3],
    i: usize,
    j: usize,
) -> Option<bool> {
    let (oi, oj) = (cfg.ordering(i), cfg.ordering(j));
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let same = pairs.iter().all(|&(a, b)| {
        let (e, f) = (triple[a], triple[b]);
        oi.less(e, f) == oj.less(e, f) && oi.less(f, e) == oj.less(f, e)
    });
    let reversed = pairs.iter().all(|&(a, b)| {
        let (e, f) = (triple[a], triple[b]);
        oi.less(e, f) == oj.less(f, e) && oi.less(f, e) == oj.less(e, f)
    });
    if same {
        Some(false)
    } else if reversed {
        Some(true)
    } else {
        None
    }
}

/// Three labels, two axes: not fixed iff the orderings are equal or
/// reversed.
pub fn decide_dim2(cfg: &Configuration) -> Result<FixityVerdict> {
    require(cfg, 3)?;
    Ok(match conformal_orientation(cfg, [0, 1, 2], 0, 1) {
        Some(reversed) => FixityVerdict::NonFixed {
            certificate: NonFixedCertificate::Conformal { reversed },
        },
        None => {
            let (sign, middle) = planar_sign(cfg).expect("non-conformal triples are fixed");
            FixityVerdict::Fixed {
                sign,
                certificate: Certificate::Planar {
                    middle: cfg.labels().name(middle).to_string(),
                },
            }
        }
    })
}

/// Sign of a linear three-label configuration and the middle label of its
/// first axis, or `None` when the orderings are conformal.
///
/// Subtracting the middle column `m` (at label index `i`) from the others
/// and expanding along the row of ones gives
/// `det = (-1)^i [(x_p - x_m)(y_q - y_m) - (x_q - x_m)(y_p - y_m)]`
/// for the remaining labels `p < q`. The two `x` differences have opposite
/// signs, so the bracket is definite exactly when `m` is extreme on `y`.
pub(crate) fn planar_sign(cfg: &Configuration) -> Option<(ConfigSign, usize)> {
    let (ox, oy) = (cfg.ordering(0), cfg.ordering(1));
    let m = (0..3).find(|&e| ox.rank(e) == 1)?;
    let others: Vec<usize> = (0..3).filter(|&e| e != m).collect();
    let (p, q) = (others[0], others[1]);
    let diff = |less: bool| if less { FormalSign::Minus } else { FormalSign::Plus };
    let xp = diff(ox.less(p, m));
    let yq = diff(oy.less(q, m));
    let yp = diff(oy.less(p, m));
    if yq != yp {
        return None;
    }
    let sign = FormalSign::parity(m) * xp * yq;
    sign.to_config().map(|s| (s, m))
}

/// The three orderings of the reference pattern on labels `A, B, C`
/// (indices 0, 1, 2): `B < C < A`, `C < A < B`, `A < B < C`.
const PATTERN: [[usize; 3]; 3] = [[1, 2, 0], [2, 0, 1], [0, 1, 2]];

const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// A match of the four-label fixity pattern: the excluded label, the triple
/// label uniformly on one side of it, and the direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct PatternMatch {
    pub excluded: usize,
    pub anchor: usize,
}

fn ranks(cfg: &Configuration) -> Vec<[usize; 4]> {
    (0..3)
        .map(|k| {
            let ord = cfg.ordering(k);
            [ord.rank(0), ord.rank(1), ord.rank(2), ord.rank(3)]
        })
        .collect()
}

/// Every (axis permutation, reversal mask) under which some relabelling of
/// the triple left after removing `excluded` shows the reference pattern.
fn pattern_transforms(rank: &[[usize; 4]], excluded: usize) -> Vec<([usize; 3], u8)> {
    let triple: Vec<usize> = (0..4).filter(|&e| e != excluded).collect();
    let mut out = Vec::new();
    for relabel in PERMS3 {
        let name = |p: usize| triple[relabel[p]];
        for axes in PERMS3 {
            'mask: for mask in 0u8..8 {
                for (pa, chain) in PATTERN.iter().enumerate() {
                    let r = &rank[axes[pa]];
                    let rev = mask & (1 << pa) != 0;
                    let (a, b, c) = (r[name(chain[0])], r[name(chain[1])], r[name(chain[2])]);
                    let ok = if rev { a > b && b > c } else { a < b && b < c };
                    if !ok {
                        continue 'mask;
                    }
                }
                out.push((axes, mask));
            }
        }
    }
    out
}

/// Whether the triple left after removing `excluded` is equivalent to the
/// reference pattern.
pub(crate) fn triple_in_pattern(cfg: &Configuration, excluded: usize) -> bool {
    !pattern_transforms(&ranks(cfg), excluded).is_empty()
}

/// Searches every choice of excluded label, relabelling of the remaining
/// triple, axis permutation and reversal mask for the reference pattern
/// with one triple label uniformly below or above the excluded label.
pub(crate) fn find_pattern(cfg: &Configuration) -> Option<PatternMatch> {
    let rank = ranks(cfg);
    for excluded in 0..4 {
        for (axes, mask) in pattern_transforms(&rank, excluded) {
            for anchor in (0..4).filter(|&e| e != excluded) {
                let below: Vec<bool> = (0..3)
                    .map(|pa| {
                        let r = &rank[axes[pa]];
                        (r[anchor] < r[excluded]) ^ (mask & (1 << pa) != 0)
                    })
                    .collect();
                if below.iter().all(|&b| b == below[0]) {
                    return Some(PatternMatch { excluded, anchor });
                }
            }
        }
    }
    None
}

/// Four labels, three axes: fixed iff the configuration is equivalent to
/// the reference pattern with a triple label uniformly below or above the
/// fourth. The sign and certificate come from the expansion with respect
/// to (fourth label, that triple label).
///
/// Non-fixed verdicts carry an extreme-element certificate, which always
/// exists for four labels.
pub fn decide_dim3(cfg: &Configuration) -> Result<FixityVerdict> {
    require(cfg, 4)?;
    match find_pattern(cfg) {
        Some(PatternMatch { excluded, anchor }) => {
            let (sign, terms) = pivot_sign(cfg, excluded, anchor, &mut |child| {
                super::expansion::small_child_sign(child)
            });
            let sign = sign.to_config().ok_or_else(|| {
                Error::Internal(format!(
                    "pattern match with pivot ({}, {}) has no definite expansion sign",
                    cfg.labels().name(excluded),
                    cfg.labels().name(anchor)
                ))
            })?;
            let certificate = super::expansion::certificate_for_pivot(cfg, excluded, anchor, &terms, &mut |c| {
                super::expansion::small_child_certificate(c)
            });
            Ok(FixityVerdict::Fixed { sign, certificate })
        }
        None => {
            let certificate = super::lemma::extreme_certificate(cfg).ok_or_else(|| {
                Error::Internal("non-fixed four-label configuration without extreme-element certificate".into())
            })?;
            Ok(FixityVerdict::NonFixed { certificate })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::certificate::Status;

    fn cfg(text: &str) -> Configuration {
        text.parse().unwrap()
    }

    #[test]
    fn one_dimension() {
        assert_eq!(decide_dim1(&cfg("x: A<B")).unwrap().sign(), Some(ConfigSign::Plus));
        let c = cfg("labels = A, B\nx: B<A");
        assert_eq!(decide_dim1(&c).unwrap().sign(), Some(ConfigSign::Minus));
        assert!(decide_dim1(&cfg("labels = A, B\nx:")).is_err());
    }

    #[test]
    fn two_dimensions() {
        let equal = decide_dim2(&cfg("x: A<B<C\ny: A<B<C")).unwrap();
        assert_eq!(equal.status(), Status::NonFixed);
        let reversed = decide_dim2(&cfg("x: A<B<C\ny: C<B<A")).unwrap();
        assert_eq!(reversed.status(), Status::NonFixed);
        let cyclic = decide_dim2(&cfg("x: A<B<C\ny: B<C<A")).unwrap();
        assert_eq!(cyclic.sign(), Some(ConfigSign::Plus));
    }

    #[test]
    fn conformal_triples() {
        let c = cfg("x: A<B<C\ny: A<B<C\nz: C<B<A\nw: B<C<A");
        assert!(is_conformal(&c, [0, 1, 2], 0, 1));
        assert!(is_conformal(&c, [0, 1, 2], 0, 2));
        assert!(!is_conformal(&c, [0, 1, 2], 0, 3));
    }

    #[test]
    fn reference_configurations_are_fixed() {
        for text in [
            "x: B<C<A<D\ny: C<A<B<D\nz: A<B<C<D",
            "x: B<C<D<A\ny: C<D<A<B\nz: A<B<C<D",
        ] {
            let v = decide_dim3(&cfg(&format!("labels = A, B, C, D\n{text}"))).unwrap();
            assert_eq!(v.status(), Status::Fixed, "{text}");
        }
    }

    #[test]
    fn identical_axes_are_not_fixed() {
        let v = decide_dim3(&cfg("x: A<B<C<D\ny: A<B<C<D\nz: A<B<C<D")).unwrap();
        assert_eq!(v.status(), Status::NonFixed);
    }
}
