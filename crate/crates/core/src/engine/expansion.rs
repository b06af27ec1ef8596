//! Cofactor expansion in the formal sign calculus.
//!
//! Subtracting column `e_j` from column `e_i` and expanding along it gives
//!
//! ```text
//! det M = sum_k (-1)^(i+k+1) (x_{e_i,b_k} - x_{e_j,b_k}) det M_{E-e_i, B-b_k}
//! ```
//!
//! with 1-based `i`, `k`. Each minor is the matrix of the configuration
//! induced on the remaining labels and axes, so its sign is that
//! configuration's sign. When every summand has the same definite formal
//! sign, the configuration is fixed with that sign.

use crate::error::{Error, Result};
use crate::order::Configuration;
use crate::sign::{diff_sign_idx, ConfigSign, FormalSign};

use super::certificate::{Certificate, ExpansionTerm, FixityVerdict};
use super::dim::{dim1_certificate, dim1_sign, planar_sign};
use super::Engine;

/// One evaluated summand of an expansion.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Term {
    pub axis: usize,
    pub parity: FormalSign,
    pub difference: FormalSign,
    /// `None` when the child's sign is undetermined.
    pub child_sign: Option<ConfigSign>,
}

impl Term {
    fn value(&self) -> FormalSign {
        match self.child_sign {
            Some(s) => self.parity * self.difference * s,
            None => FormalSign::Unknown,
        }
    }
}

/// Formal sign of the expansion with respect to `(i, j)` given the sign of
/// every child `induced(E - i, B - k)`, indexed by `k`.
pub(crate) fn combine(
    cfg: &Configuration,
    i: usize,
    j: usize,
    child_signs: &[Option<ConfigSign>],
) -> (FormalSign, Vec<Term>) {
    let terms: Vec<Term> = child_signs
        .iter()
        .enumerate()
        .map(|(k, &child_sign)| Term {
            axis: k,
            parity: FormalSign::parity(i + k + 1),
            difference: diff_sign_idx(cfg, i, j, k),
            child_sign,
        })
        .collect();
    let total = terms
        .iter()
        .map(Term::value)
        .reduce(|a, b| a + b)
        .unwrap_or(FormalSign::Unknown);
    (total, terms)
}

/// Evaluates the expansion for one pivot, computing child signs on demand.
pub(crate) fn pivot_sign(
    cfg: &Configuration,
    i: usize,
    j: usize,
    child_sign: &mut dyn FnMut(&Configuration) -> Option<ConfigSign>,
) -> (FormalSign, Vec<Term>) {
    let signs: Vec<Option<ConfigSign>> = (0..cfg.dim()).map(|k| child_sign(&cfg.without(i, k))).collect();
    combine(cfg, i, j, &signs)
}

/// Exact sign of a linear configuration with two or three labels (`+-` when
/// not fixed).
pub(crate) fn small_child_sign(child: &Configuration) -> Option<ConfigSign> {
    match child.n() {
        2 => Some(dim1_sign(child)),
        3 => Some(planar_sign(child).map_or(ConfigSign::Both, |(s, _)| s)),
        _ => None,
    }
}

/// Certificate of a fixed linear configuration with two or three labels.
pub(crate) fn small_child_certificate(child: &Configuration) -> Certificate {
    match child.n() {
        2 => dim1_certificate(child),
        3 => {
            let (_, middle) = planar_sign(child).expect("fixed child");
            Certificate::Planar {
                middle: child.labels().name(middle).to_string(),
            }
        }
        n => unreachable!("no direct certificate for {n} labels"),
    }
}

pub(crate) fn certificate_for_pivot(
    cfg: &Configuration,
    i: usize,
    j: usize,
    terms: &[Term],
    child_certificate: &mut dyn FnMut(&Configuration) -> Certificate,
) -> Certificate {
    let terms = terms
        .iter()
        .map(|t| ExpansionTerm {
            axis: cfg.axes().name(t.axis).to_string(),
            parity: t.parity,
            difference: t.difference,
            child_sign: t.child_sign.expect("definite expansion has decided children"),
            child: child_certificate(&cfg.without(i, t.axis)),
        })
        .collect();
    Certificate::Expansion {
        pivot: [cfg.labels().name(i).to_string(), cfg.labels().name(j).to_string()],
        terms,
    }
}

fn verdict_sign(v: &FixityVerdict) -> Option<ConfigSign> {
    v.sign()
}

/// Formal sign of the expansion of `cfg` with respect to `(e_i, e_j)`,
/// given the verdict of `induced(E - e_i, B - b_k)` for every axis `b_k`.
pub fn expansion_formal_sign(
    cfg: &Configuration,
    e_i: &str,
    e_j: &str,
    child_verdicts: &[FixityVerdict],
) -> Result<FormalSign> {
    let i = cfg.labels().index_of(e_i)?;
    let j = cfg.labels().index_of(e_j)?;
    if i == j {
        return Err(Error::DimensionMismatch("pivot labels must differ".into()));
    }
    cfg.require_square()?;
    if child_verdicts.len() != cfg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} child verdicts for {} axes",
            child_verdicts.len(),
            cfg.dim()
        )));
    }
    let signs: Vec<Option<ConfigSign>> = child_verdicts.iter().map(verdict_sign).collect();
    Ok(combine(cfg, i, j, &signs).0)
}

/// A successful pivot: labels, sign and the evaluated summands.
pub(crate) struct Pivot {
    pub i: usize,
    pub j: usize,
    pub sign: ConfigSign,
    pub terms: Vec<Term>,
}

impl Engine {
    /// Sign of a child in an expansion: exact for two or three labels,
    /// formal (memoized) beyond.
    fn child_sign(&self, child: &Configuration) -> Option<ConfigSign> {
        if child.n() <= 3 {
            small_child_sign(child)
        } else {
            self.formal_sign(child)
        }
    }

    /// First pivot, in label order, whose expansion has a definite formal
    /// sign.
    pub(crate) fn find_pivot(&self, cfg: &Configuration) -> Option<Pivot> {
        let (n, d) = (cfg.n(), cfg.dim());
        for i in 0..n {
            // Every term needs a decided child; one undecided child rules out
            // every pivot starting with `i`.
            let mut signs = Vec::with_capacity(d);
            for k in 0..d {
                match self.child_sign(&cfg.without(i, k)) {
                    Some(s) if s.is_definite() => signs.push(Some(s)),
                    _ => break,
                }
            }
            if signs.len() < d {
                continue;
            }
            for j in (0..n).filter(|&j| j != i) {
                let (total, terms) = combine(cfg, i, j, &signs);
                if let Some(sign) = total.to_config() {
                    return Some(Pivot { i, j, sign, terms });
                }
            }
        }
        None
    }

    /// Sign of `cfg` if it is formally fixed by expansion (with exact
    /// two- and three-label children), memoized by canonical form.
    pub(crate) fn formal_sign(&self, cfg: &Configuration) -> Option<ConfigSign> {
        if cfg.n() <= 3 {
            return small_child_sign(cfg).filter(|s| s.is_definite());
        }
        let keyed = self.memo_key(cfg);
        if let Some((key, parity)) = &keyed {
            if let Some(hit) = self.memo_get(key) {
                return hit.map(|s| s.times(*parity));
            }
        }
        let sign = self.find_pivot(cfg).map(|p| p.sign);
        if let Some((key, parity)) = keyed {
            self.memo_put(key, sign.map(|s| s.times(parity)));
        }
        sign
    }

    /// Certificate of a configuration already known to be formally fixed.
    pub(crate) fn fixed_certificate(&self, cfg: &Configuration) -> Certificate {
        if cfg.n() <= 3 {
            return small_child_certificate(cfg);
        }
        let pivot = self.find_pivot(cfg).expect("formally fixed configuration has a pivot");
        certificate_for_pivot(cfg, pivot.i, pivot.j, &pivot.terms, &mut |c| self.fixed_certificate(c))
    }

    /// Fixed with a certificate if some pivot's expansion has a definite
    /// formal sign, unknown otherwise.
    pub fn formally_fixed_by_expansion(&self, cfg: &Configuration) -> Result<FixityVerdict> {
        cfg.require_square()?;
        cfg.require_linear()?;
        if cfg.n() < 3 {
            return Err(Error::DimensionMismatch(
                "expansion needs at least three labels".into(),
            ));
        }
        Ok(match self.find_pivot(cfg) {
            Some(p) => FixityVerdict::Fixed {
                sign: p.sign,
                certificate: certificate_for_pivot(cfg, p.i, p.j, &p.terms, &mut |c| self.fixed_certificate(c)),
            },
            None => FixityVerdict::Unknown {
                conjecture_frontier: cfg.n() >= 5,
                samples: None,
            },
        })
    }
}
