//! Non-fixity by removing an extreme label.
//!
//! If `e` is the minimum or maximum of the ordering on axis `b` and the
//! configuration left after deleting `e` and `b` is not fixed, then neither
//! is the original: the child's two opposite realizations lift by pushing
//! `x_{e,b}` far enough out that its term dominates the determinant.

use crate::error::Result;
use crate::order::Configuration;

use super::certificate::{FixityVerdict, NonFixedCertificate};
use super::dim::conformal_orientation;

/// Extreme-element chain down to a conformal three-label configuration, if
/// one exists. Requires a square linear configuration.
pub(crate) fn extreme_certificate(cfg: &Configuration) -> Option<NonFixedCertificate> {
    match cfg.n() {
        0..=2 => None,
        3 => conformal_orientation(cfg, [0, 1, 2], 0, 1)
            .map(|reversed| NonFixedCertificate::Conformal { reversed }),
        _ => {
            for b in 0..cfg.dim() {
                let (min, max) = cfg.ordering(b).extreme_labels()?;
                for (e, at_min) in [(min, true), (max, false)] {
                    if let Some(child) = extreme_certificate(&cfg.without(e, b)) {
                        return Some(NonFixedCertificate::Extreme {
                            label: cfg.labels().name(e).to_string(),
                            axis: cfg.axes().name(b).to_string(),
                            at_min,
                            child: Box::new(child),
                        });
                    }
                }
            }
            None
        }
    }
}

/// Non-fixed with an extreme-element certificate, or unknown.
pub fn non_fixed_by_extreme_lemma(cfg: &Configuration) -> Result<FixityVerdict> {
    cfg.require_square()?;
    cfg.require_linear()?;
    Ok(match extreme_certificate(cfg) {
        Some(certificate) => FixityVerdict::NonFixed { certificate },
        None => FixityVerdict::Unknown {
            conjecture_frontier: cfg.n() >= 5,
            samples: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::certificate::Status;

    #[test]
    fn extreme_label_over_a_conformal_triple() {
        let c: Configuration = "labels = A, B, C, D\nx: A<B<C<D\ny: A<B<C<D\nz: D<A<C<B".parse().unwrap();
        let v = non_fixed_by_extreme_lemma(&c).unwrap();
        assert_eq!(v.status(), Status::NonFixed);
    }

    #[test]
    fn reference_pattern_is_out_of_reach() {
        let c: Configuration = "labels = A, B, C, D\nx: B<C<A<D\ny: C<A<B<D\nz: A<B<C<D".parse().unwrap();
        assert_eq!(non_fixed_by_extreme_lemma(&c).unwrap().status(), Status::Unknown);
    }
}
