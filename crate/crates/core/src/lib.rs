//! Decides whether per-axis orderings of labelled points force a fixed
//! simplex orientation.
//!
//! A [`Configuration`] gives, for each of the `n - 1` coordinate axes, a
//! strict ordering of `n` point labels. It is *fixed* when every point set
//! satisfying all orderings spans a simplex of one orientation, that is, the
//! determinant of the 1-padded coordinate matrix always has the same nonzero
//! sign. The [`engine`] decides this exactly for `n <= 4` and soundly (with
//! an explicit unknown outcome) beyond; [`equivalence`] canonicalizes and
//! counts configurations up to axis permutation, relabelling and axis
//! reversal; [`landmark`] applies the decider to point clouds.

pub mod engine;
pub mod equivalence;
pub mod error;
pub mod exact;
pub mod format;
pub mod landmark;
pub mod order;
pub mod sign;

pub use engine::{
    Certificate, Engine, EngineOptions, FixityVerdict, Histogram, NonFixedCertificate, Status,
    WitnessPair,
};
pub use equivalence::{CanonicalKey, GroupElement};
pub use error::{Error, Result};
pub use order::{AxisSet, Configuration, LabelSet, Ordering, PointAssignment};
pub use sign::{ConfigSign, DetSign, FormalSign};
