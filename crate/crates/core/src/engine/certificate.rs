//! Verdicts and the proof traces that back them.

use serde::{Deserialize, Serialize};

use crate::sign::{ConfigSign, FormalSign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Fixed,
    NonFixed,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Fixed => "fixed",
            Status::NonFixed => "non_fixed",
            Status::Unknown => "unknown",
        })
    }
}

/// Counts of sampled determinant signs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub pos: u64,
    pub neg: u64,
    pub zero: u64,
}

impl Histogram {
    pub fn total(&self) -> u64 {
        self.pos + self.neg + self.zero
    }

    pub(crate) fn merge(self, other: Histogram) -> Histogram {
        Histogram {
            pos: self.pos + other.pos,
            neg: self.neg + other.neg,
            zero: self.zero + other.zero,
        }
    }
}

/// Why a configuration is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Two labels on one axis: the determinant is `x_second - x_first`.
    Linear { low: String, high: String },
    /// Three labels whose two orderings are neither equal nor reversed.
    /// `middle` is the middle label on the first axis; subtracting its
    /// column leaves a 2x2 determinant of definite sign.
    Planar { middle: String },
    /// Cofactor expansion with respect to a pivot pair whose formal sign is
    /// definite; one term per axis.
    Expansion { pivot: [String; 2], terms: Vec<ExpansionTerm> },
    /// Partial input: every linear extension is fixed with the same sign.
    Extensions { count: u64 },
}

/// One summand `(-1)^(i+k+1) (x_{e_i,b_k} - x_{e_j,b_k}) det(M_{E-e_i, B-b_k})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub axis: String,
    pub parity: FormalSign,
    pub difference: FormalSign,
    pub child_sign: ConfigSign,
    pub child: Certificate,
}

/// Why a configuration is not fixed. Every variant can be turned into an
/// explicit pair of realizations with opposite orientations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonFixedCertificate {
    /// Three labels whose two orderings are equal (or reversed): collinear
    /// realizations exist and can be tipped either way.
    Conformal { reversed: bool },
    /// `label` is extreme in the ordering of `axis`, and the configuration
    /// left after deleting both is not fixed.
    Extreme {
        label: String,
        axis: String,
        at_min: bool,
        child: Box<NonFixedCertificate>,
    },
    /// Two labels comparable on no axis: they can share coordinates.
    CoincidentPair { first: String, second: String },
    /// A linear extension (per-axis chains, smallest first) that is not
    /// fixed.
    Extension {
        chains: Vec<Vec<String>>,
        certificate: Box<NonFixedCertificate>,
    },
}

/// Outcome of a fixity decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictJson", try_from = "VerdictJson")]
pub enum FixityVerdict {
    Fixed {
        sign: ConfigSign,
        certificate: Certificate,
    },
    NonFixed {
        certificate: NonFixedCertificate,
    },
    /// Neither sound procedure concluded. Only reachable with five or more
    /// labels, where completeness of the procedures is an open conjecture.
    Unknown {
        conjecture_frontier: bool,
        samples: Option<Histogram>,
    },
}

impl FixityVerdict {
    pub fn status(&self) -> Status {
        match self {
            FixityVerdict::Fixed { .. } => Status::Fixed,
            FixityVerdict::NonFixed { .. } => Status::NonFixed,
            FixityVerdict::Unknown { .. } => Status::Unknown,
        }
    }

    /// `+`/`-` when fixed, `+-` when not fixed, nothing when unknown.
    pub fn sign(&self) -> Option<ConfigSign> {
        match self {
            FixityVerdict::Fixed { sign, .. } => Some(*sign),
            FixityVerdict::NonFixed { .. } => Some(ConfigSign::Both),
            FixityVerdict::Unknown { .. } => None,
        }
    }

    pub fn is_fixed(&self) -> bool {
        self.status() == Status::Fixed
    }

    /// One-line summary: `fixed +`, `non_fixed` or `unknown`.
    pub fn summary(&self) -> String {
        match self {
            FixityVerdict::Fixed { sign, .. } => format!("fixed {sign}"),
            other => other.status().to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AnyCertificate {
    Fixed(Certificate),
    NonFixed(NonFixedCertificate),
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sign: Option<ConfigSign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificate: Option<AnyCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conjecture_frontier: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    samples: Option<Histogram>,
}

impl From<FixityVerdict> for VerdictJson {
    fn from(v: FixityVerdict) -> Self {
        let status = v.status();
        let sign = v.sign();
        match v {
            FixityVerdict::Fixed { certificate, .. } => VerdictJson {
                status,
                sign,
                certificate: Some(AnyCertificate::Fixed(certificate)),
                conjecture_frontier: None,
                samples: None,
            },
            FixityVerdict::NonFixed { certificate } => VerdictJson {
                status,
                sign,
                certificate: Some(AnyCertificate::NonFixed(certificate)),
                conjecture_frontier: None,
                samples: None,
            },
            FixityVerdict::Unknown {
                conjecture_frontier,
                samples,
            } => VerdictJson {
                status,
                sign,
                certificate: None,
                conjecture_frontier: Some(conjecture_frontier),
                samples,
            },
        }
    }
}

impl TryFrom<VerdictJson> for FixityVerdict {
    type Error = String;

    fn try_from(j: VerdictJson) -> Result<Self, String> {
        match (j.status, j.certificate) {
            (Status::Fixed, Some(AnyCertificate::Fixed(certificate))) => {
                let sign = j.sign.ok_or("fixed verdict without sign")?;
                if !sign.is_definite() {
                    return Err("fixed verdict with sign +-".into());
                }
                Ok(FixityVerdict::Fixed { sign, certificate })
            }
            (Status::NonFixed, Some(AnyCertificate::NonFixed(certificate))) => {
                Ok(FixityVerdict::NonFixed { certificate })
            }
            (Status::Unknown, None) => Ok(FixityVerdict::Unknown {
                conjecture_frontier: j.conjecture_frontier.unwrap_or(false),
                samples: j.samples,
            }),
            (status, _) => Err(format!("certificate does not match status `{status}`")),
        }
    }
}
