//! Fixity decisions with certificates.
//!
//! Linear configurations are decided exactly up to four labels. From five
//! labels on, two sound procedures are tried: cofactor expansion in the
//! formal sign calculus (proves fixity) and extreme-label removal (proves
//! non-fixity). When neither applies the verdict is [`FixityVerdict::Unknown`]
//! with sampling statistics attached. Partial configurations are reduced to
//! their linear extensions.

mod certificate;
mod dim;
mod expansion;
mod lemma;
mod sampling;
mod witness;

use std::collections::HashMap;
use std::sync::RwLock;

use crate::equivalence::{canonicalize_chains, CanonicalKey, MAX_CANONICAL_LABELS};
use crate::error::{Error, Result};
use crate::order::Configuration;
use crate::sign::{diff_sign_idx, ConfigSign, FormalSign};

pub use certificate::{Certificate, ExpansionTerm, FixityVerdict, Histogram, NonFixedCertificate, Status};
pub use dim::{decide_dim1, decide_dim2, decide_dim3, is_conformal};
pub use expansion::expansion_formal_sign;
pub use lemma::non_fixed_by_extreme_lemma;
pub use sampling::sample_signs;
pub use witness::{build_witness, WitnessPair};

/// Largest label count [`Engine::decide`] accepts.
pub const MAX_DECIDE_LABELS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineOptions {
    /// At four labels, re-derive every verdict with the expansion search,
    /// the extreme-label lemma and the triple characterization, and fail on
    /// any disagreement.
    pub debug_crosscheck: bool,
    /// Seed for the sampling attached to unknown verdicts.
    pub seed: u64,
    /// Samples drawn for unknown verdicts (0 disables sampling).
    pub frontier_samples: u64,
    /// Refuse partial inputs with more linear extensions than this.
    pub max_extensions: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            debug_crosscheck: false,
            seed: 0,
            frontier_samples: 1000,
            max_extensions: 1 << 22,
        }
    }
}

/// Decision engine holding a memo of formal signs keyed by canonical form.
///
/// The memo is shared behind a lock; entries are canonical, so concurrent
/// writers always store the same value.
#[derive(Debug, Default)]
pub struct Engine {
    options: EngineOptions,
    memo: RwLock<HashMap<CanonicalKey, Option<ConfigSign>>>,
}

impl Engine {
    pub fn new(options: EngineOptions) -> Self {
        Engine {
            options,
            memo: RwLock::default(),
        }
    }

    pub fn options(&self) -> &EngineOptions {
        &self.options
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// Canonical key of `cfg` and the factor transporting signs between
    /// `cfg` and its canonical form.
    fn memo_key(&self, cfg: &Configuration) -> Option<(CanonicalKey, FormalSign)> {
        if cfg.n() > MAX_CANONICAL_LABELS {
            return None;
        }
        let chains = cfg.chains()?;
        let (key, g) = canonicalize_chains(&chains, cfg.n());
        Some((key, g.sign_parity()))
    }

    fn memo_get(&self, key: &CanonicalKey) -> Option<Option<ConfigSign>> {
        self.memo.read().expect("memo lock").get(key).copied()
    }

    fn memo_put(&self, key: CanonicalKey, sign: Option<ConfigSign>) {
        self.memo.write().expect("memo lock").insert(key, sign);
    }

    /// Decides a configuration (partial or linear, two or more labels, one
    /// axis fewer than labels).
    pub fn decide(&self, cfg: &Configuration) -> Result<FixityVerdict> {
        if cfg.n() < 2 {
            return Err(Error::DimensionMismatch("at least two labels are needed".into()));
        }
        cfg.require_square()?;
        if cfg.n() > MAX_DECIDE_LABELS {
            return Err(Error::OutOfRange {
                what: "label count",
                detail: format!("deciding supports at most {MAX_DECIDE_LABELS} labels, got {}", cfg.n()),
            });
        }
        if cfg.is_linear() {
            return self.decide_linear(cfg);
        }
        self.decide_partial(cfg)
    }

    fn decide_partial(&self, cfg: &Configuration) -> Result<FixityVerdict> {
        // A pair comparable on no axis can usually be made to coincide.
        for e in 0..cfg.n() {
            for f in e + 1..cfg.n() {
                if cfg.orderings().iter().any(|o| o.comparable(e, f)) {
                    continue;
                }
                if witness::coincident_witness(cfg, e, f)?.is_some() {
                    return Ok(FixityVerdict::NonFixed {
                        certificate: NonFixedCertificate::CoincidentPair {
                            first: cfg.labels().name(e).to_string(),
                            second: cfg.labels().name(f).to_string(),
                        },
                    });
                }
            }
        }
        let count = cfg.extension_count();
        if count > self.options.max_extensions {
            return Err(Error::OutOfRange {
                what: "linear extension count",
                detail: format!("{count} extensions exceed the limit of {}", self.options.max_extensions),
            });
        }
        let mut common: Option<ConfigSign> = None;
        let mut undecided = false;
        let mut conflict = false;
        for ext in cfg.extensions() {
            match self.decide_linear(&ext)? {
                FixityVerdict::NonFixed { certificate } => {
                    let chains = ext
                        .chains()
                        .expect("linear extension")
                        .iter()
                        .map(|c| c.iter().map(|&e| cfg.labels().name(e).to_string()).collect())
                        .collect();
                    return Ok(FixityVerdict::NonFixed {
                        certificate: NonFixedCertificate::Extension {
                            chains,
                            certificate: Box::new(certificate),
                        },
                    });
                }
                FixityVerdict::Unknown { .. } => undecided = true,
                FixityVerdict::Fixed { sign, .. } => match common {
                    None => common = Some(sign),
                    Some(s) if s == sign => {}
                    // Keep scanning: a non-fixed extension settles it.
                    Some(_) => conflict = true,
                },
            }
        }
        if conflict {
            return Err(Error::Internal(
                "linear extensions are fixed with different signs and none is non-fixed".into(),
            ));
        }
        if undecided {
            return Ok(self.unknown(cfg));
        }
        let sign = common.ok_or_else(|| Error::Internal("configuration without linear extensions".into()))?;
        Ok(FixityVerdict::Fixed {
            sign,
            certificate: Certificate::Extensions { count },
        })
    }

    fn unknown(&self, cfg: &Configuration) -> FixityVerdict {
        let samples = (self.options.frontier_samples > 0)
            .then(|| sample_signs(cfg, self.options.seed, self.options.frontier_samples).ok())
            .flatten();
        FixityVerdict::Unknown {
            conjecture_frontier: cfg.n() >= 5,
            samples,
        }
    }

    fn decide_linear(&self, cfg: &Configuration) -> Result<FixityVerdict> {
        match cfg.n() {
            2 => decide_dim1(cfg),
            3 => decide_dim2(cfg),
            4 => {
                let verdict = decide_dim3(cfg)?;
                if self.options.debug_crosscheck {
                    self.crosscheck(cfg, &verdict)?;
                }
                Ok(verdict)
            }
            _ => {
                if let Some(v) = self.formally_fixed_by_expansion(cfg).ok().filter(FixityVerdict::is_fixed) {
                    return Ok(v);
                }
                if let Some(certificate) = lemma::extreme_certificate(cfg) {
                    return Ok(FixityVerdict::NonFixed { certificate });
                }
                Ok(self.unknown(cfg))
            }
        }
    }

    /// Re-derives a four-label verdict three independent ways.
    fn crosscheck(&self, cfg: &Configuration, verdict: &FixityVerdict) -> Result<()> {
        let expansion = self.formally_fixed_by_expansion(cfg)?;
        if expansion.sign() != verdict.sign().filter(|s| s.is_definite()) {
            return Err(Error::CrosscheckMismatch(format!(
                "pattern search says {}, expansion search says {}\n{cfg}",
                verdict.summary(),
                expansion.summary()
            )));
        }
        let lemma = non_fixed_by_extreme_lemma(cfg)?;
        if (lemma.status() == Status::NonFixed) != (verdict.status() == Status::NonFixed) {
            return Err(Error::CrosscheckMismatch(format!(
                "pattern search says {}, extreme-label lemma says {}\n{cfg}",
                verdict.summary(),
                lemma.summary()
            )));
        }
        for excluded in 0..4 {
            let triple: Vec<usize> = (0..4).filter(|&e| e != excluded).collect();
            let all_fixed = (0..3).all(|b| {
                let axes: Vec<usize> = (0..3).filter(|&k| k != b).collect();
                dim::planar_sign(&cfg.induced_idx(&triple, &axes)).is_some()
            });
            if all_fixed != dim::triple_in_pattern(cfg, excluded) {
                return Err(Error::CrosscheckMismatch(format!(
                    "triple without `{}`: induced fixity {all_fixed} disagrees with the cyclic pattern\n{cfg}",
                    cfg.labels().name(excluded)
                )));
            }
        }
        Ok(())
    }

    /// Decides `cfg` and, when it is not fixed, builds a verified witness.
    pub fn witness(&self, cfg: &Configuration) -> Result<(FixityVerdict, Option<WitnessPair>)> {
        let verdict = self.decide(cfg)?;
        let pair = match &verdict {
            FixityVerdict::NonFixed { certificate } => Some(build_witness(cfg, certificate)?),
            _ => None,
        };
        Ok((verdict, pair))
    }

    /// Replays a verdict's certificate against `cfg`.
    pub fn verify(&self, cfg: &Configuration, verdict: &FixityVerdict) -> Result<()> {
        match verdict {
            FixityVerdict::Fixed { sign, certificate } => self.verify_fixed(cfg, *sign, certificate),
            FixityVerdict::NonFixed { certificate } => build_witness(cfg, certificate).map(|_| ()),
            FixityVerdict::Unknown { .. } => Ok(()),
        }
    }

    fn verify_fixed(&self, cfg: &Configuration, sign: ConfigSign, certificate: &Certificate) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        if !sign.is_definite() {
            return fail("fixed sign must be + or -".into());
        }
        cfg.require_square()?;
        match certificate {
            Certificate::Linear { low, high } => {
                cfg.require_linear()?;
                let (lo, hi) = (cfg.labels().index_of(low)?, cfg.labels().index_of(high)?);
                if cfg.n() != 2 || !cfg.ordering(0).less(lo, hi) || dim::dim1_sign(cfg) != sign {
                    return fail(format!("`{low} < {high}` does not give sign {sign}"));
                }
            }
            Certificate::Planar { middle } => {
                cfg.require_linear()?;
                let m = cfg.labels().index_of(middle)?;
                if cfg.n() != 3 || dim::planar_sign(cfg) != Some((sign, m)) {
                    return fail(format!("planar certificate with middle `{middle}` does not give sign {sign}"));
                }
            }
            Certificate::Expansion { pivot, terms } => {
                cfg.require_linear()?;
                let i = cfg.labels().index_of(&pivot[0])?;
                let j = cfg.labels().index_of(&pivot[1])?;
                if i == j || terms.len() != cfg.dim() {
                    return fail("malformed expansion".into());
                }
                let mut total: Option<FormalSign> = None;
                for (k, term) in terms.iter().enumerate() {
                    if term.axis != cfg.axes().name(k)
                        || term.parity != FormalSign::parity(i + k + 1)
                        || term.difference != diff_sign_idx(cfg, i, j, k)
                    {
                        return fail(format!("expansion term for axis `{}` is inconsistent", term.axis));
                    }
                    self.verify_fixed(&cfg.without(i, k), term.child_sign, &term.child)?;
                    let value = term.parity * term.difference * term.child_sign;
                    total = Some(total.map_or(value, |t| t + value));
                }
                if total.and_then(FormalSign::to_config) != Some(sign) {
                    return fail(format!("expansion does not evaluate to {sign}"));
                }
            }
            Certificate::Extensions { count } => {
                if *count != cfg.extension_count() {
                    return fail("extension count mismatch".into());
                }
                for ext in cfg.extensions() {
                    if self.decide_linear(&ext)?.sign() != Some(sign) {
                        return fail(format!("an extension is not fixed with sign {sign}\n{ext}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// [`Engine::decide`] with default options.
pub fn decide(cfg: &Configuration) -> Result<FixityVerdict> {
    Engine::default().decide(cfg)
}

/// [`Engine::formally_fixed_by_expansion`] with default options.
pub fn formally_fixed_by_expansion(cfg: &Configuration) -> Result<FixityVerdict> {
    Engine::default().formally_fixed_by_expansion(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> Configuration {
        text.parse().unwrap()
    }

    #[test]
    fn empty_pair_is_not_fixed() {
        let c = cfg("labels = A, B\nx:");
        let v = decide(&c).unwrap();
        assert_eq!(v.status(), Status::NonFixed);
        Engine::default().verify(&c, &v).unwrap();
    }

    #[test]
    fn partial_configuration_through_extensions() {
        // x: A<B<C fixed, y: B<C<A with A's position relative to C open.
        let c = cfg("labels = A, B, C\nx: A<B<C\ny: B<C, B<A");
        let v = decide(&c).unwrap();
        // extensions: B<C<A (fixed) and B<A<C (conformal? no: middle A vs B)
        Engine::default().verify(&c, &v).unwrap();
    }

    #[test]
    fn certificates_replay() {
        let engine = Engine::default();
        for text in [
            "x: A<B<C\ny: B<C<A",
            "labels = A, B, C, D\nx: B<C<A<D\ny: C<A<B<D\nz: A<B<C<D",
            "labels = A, B, C, D\nx: A<B<C<D\ny: A<B<C<D\nz: D<A<C<B",
        ] {
            let c = cfg(text);
            let v = engine.decide(&c).unwrap();
            engine.verify(&c, &v).unwrap();
        }
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let engine = Engine::default();
        let c = cfg("x: A<B<C\ny: B<C<A");
        let v = engine.decide(&c).unwrap();
        let FixityVerdict::Fixed { sign, certificate } = v else { panic!() };
        let flipped = FixityVerdict::Fixed {
            sign: sign.times(FormalSign::Minus),
            certificate,
        };
        assert!(engine.verify(&c, &flipped).is_err());
    }

    #[test]
    fn verdict_json_round_trip() {
        let engine = Engine::default();
        for text in ["x: A<B<C\ny: B<C<A", "x: A<B<C\ny: A<B<C"] {
            let v = engine.decide(&cfg(text)).unwrap();
            let json = serde_json::to_string(&v).unwrap();
            let back: FixityVerdict = serde_json::from_str(&json).unwrap();
            assert_eq!(back, v);
        }
        let unknown = FixityVerdict::Unknown {
            conjecture_frontier: true,
            samples: Some(Histogram { pos: 3, neg: 0, zero: 0 }),
        };
        let json = serde_json::to_value(&unknown).unwrap();
        assert_eq!(json["status"], "unknown");
        assert_eq!(serde_json::from_value::<FixityVerdict>(json).unwrap(), unknown);
    }

    #[test]
    fn square_shape_is_required() {
        assert!(decide(&cfg("x: A<B<C")).is_err());
    }
}
