//! The three sign alphabets and the formal sign calculus.
//!
//! * [`FormalSign`] is the sign of a formal expression: `+`, `-`, or `?` when
//!   the calculus cannot conclude. Mixed-sign sums are `?` and `?` absorbs
//!   every operation.
//! * [`ConfigSign`] is the sign of a configuration's determinant: `+`, `-`,
//!   or `+-` when both orientations are realizable.
//! * [`DetSign`] is the sign of one real evaluation: `+`, `-` or `0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::order::Configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormalSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "?")]
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+-")]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DetSign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
    #[serde(rename = "0")]
    Zero,
}

impl FormalSign {
    pub const ALL: [FormalSign; 3] = [FormalSign::Plus, FormalSign::Minus, FormalSign::Unknown];

    pub fn is_definite(self) -> bool {
        self != FormalSign::Unknown
    }

    /// `(-1)^exponent`.
    pub fn parity(exponent: usize) -> Self {
        if exponent.is_multiple_of(2) {
            FormalSign::Plus
        } else {
            FormalSign::Minus
        }
    }

    pub fn to_config(self) -> Option<ConfigSign> {
        match self {
            FormalSign::Plus => Some(ConfigSign::Plus),
            FormalSign::Minus => Some(ConfigSign::Minus),
            FormalSign::Unknown => None,
        }
    }
}

/// Sign product; `?` absorbs.
pub fn fmul(a: FormalSign, b: FormalSign) -> FormalSign {
    use FormalSign::*;
    match (a, b) {
        (Unknown, _) | (_, Unknown) => Unknown,
        (Plus, Plus) | (Minus, Minus) => Plus,
        (Plus, Minus) | (Minus, Plus) => Minus,
    }
}

/// Sign sum; equal signs are kept, mixed signs give `?`, `?` absorbs.
pub fn fadd(a: FormalSign, b: FormalSign) -> FormalSign {
    use FormalSign::*;
    match (a, b) {
        (Plus, Plus) => Plus,
        (Minus, Minus) => Minus,
        _ => Unknown,
    }
}

pub fn fsub(a: FormalSign, b: FormalSign) -> FormalSign {
    fadd(a, -b)
}

/// Product of a formal sign with a configuration sign; `+-` turns any
/// factor into `?`.
pub fn fmul_config(a: FormalSign, b: ConfigSign) -> FormalSign {
    match b {
        ConfigSign::Plus => fmul(a, FormalSign::Plus),
        ConfigSign::Minus => fmul(a, FormalSign::Minus),
        ConfigSign::Both => FormalSign::Unknown,
    }
}

impl Neg for FormalSign {
    type Output = FormalSign;
    fn neg(self) -> FormalSign {
        fmul(self, FormalSign::Minus)
    }
}

impl Mul for FormalSign {
    type Output = FormalSign;
    fn mul(self, rhs: FormalSign) -> FormalSign {
        fmul(self, rhs)
    }
}

impl Mul<ConfigSign> for FormalSign {
    type Output = FormalSign;
    fn mul(self, rhs: ConfigSign) -> FormalSign {
        fmul_config(self, rhs)
    }
}

impl Add for FormalSign {
    type Output = FormalSign;
    fn add(self, rhs: FormalSign) -> FormalSign {
        fadd(self, rhs)
    }
}

impl Sub for FormalSign {
    type Output = FormalSign;
    fn sub(self, rhs: FormalSign) -> FormalSign {
        fsub(self, rhs)
    }
}

impl ConfigSign {
    pub fn is_definite(self) -> bool {
        self != ConfigSign::Both
    }

    pub fn to_formal(self) -> FormalSign {
        match self {
            ConfigSign::Plus => FormalSign::Plus,
            ConfigSign::Minus => FormalSign::Minus,
            ConfigSign::Both => FormalSign::Unknown,
        }
    }

    /// Transports a sign through a `+`/`-` factor (`+-` stays `+-`).
    pub fn times(self, factor: FormalSign) -> ConfigSign {
        match (self, factor) {
            (ConfigSign::Both, _) | (_, FormalSign::Unknown) => ConfigSign::Both,
            (s, FormalSign::Plus) => s,
            (ConfigSign::Plus, FormalSign::Minus) => ConfigSign::Minus,
            (ConfigSign::Minus, FormalSign::Minus) => ConfigSign::Plus,
        }
    }

    pub fn matches(self, det: DetSign) -> bool {
        matches!(
            (self, det),
            (ConfigSign::Plus, DetSign::Pos) | (ConfigSign::Minus, DetSign::Neg)
        )
    }
}

impl DetSign {
    pub fn opposite(self) -> DetSign {
        match self {
            DetSign::Pos => DetSign::Neg,
            DetSign::Neg => DetSign::Pos,
            DetSign::Zero => DetSign::Zero,
        }
    }
}

impl fmt::Display for FormalSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormalSign::Plus => "+",
            FormalSign::Minus => "-",
            FormalSign::Unknown => "?",
        })
    }
}

impl fmt::Display for ConfigSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigSign::Plus => "+",
            ConfigSign::Minus => "-",
            ConfigSign::Both => "+-",
        })
    }
}

impl fmt::Display for DetSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DetSign::Pos => "+",
            DetSign::Neg => "-",
            DetSign::Zero => "0",
        })
    }
}

/// Formal sign of `x_{e,b} - x_{f,b}` under `cfg`: `+` if `f <_b e`, `-` if
/// `e <_b f`, `?` when the pair is incomparable on `b`.
pub fn diff_sign(cfg: &Configuration, e: &str, f: &str, axis: &str) -> Result<FormalSign> {
    let e = cfg.labels().index_of(e)?;
    let f = cfg.labels().index_of(f)?;
    let b = cfg.axes().index_of(axis)?;
    Ok(diff_sign_idx(cfg, e, f, b))
}

pub(crate) fn diff_sign_idx(cfg: &Configuration, e: usize, f: usize, axis: usize) -> FormalSign {
    let ord = cfg.ordering(axis);
    if ord.less(f, e) {
        FormalSign::Plus
    } else if ord.less(e, f) {
        FormalSign::Minus
    } else {
        FormalSign::Unknown
    }
}

/// Formal determinant of a square sign grid by cofactor expansion along the
/// first row.
pub fn formal_det_sign(grid: &[Vec<FormalSign>]) -> FormalSign {
    let n = grid.len();
    match n {
        0 => FormalSign::Plus,
        1 => grid[0][0],
        _ => {
            let mut total: Option<FormalSign> = None;
            for col in 0..n {
                let minor: Vec<Vec<FormalSign>> = grid[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, &s)| s)
                            .collect()
                    })
                    .collect();
                let term = FormalSign::parity(col) * grid[0][col] * formal_det_sign(&minor);
                total = Some(match total {
                    None => term,
                    Some(acc) => acc + term,
                });
            }
            total.unwrap_or(FormalSign::Plus)
        }
    }
}

pub fn formal_det_sign_3x3(grid: &[[FormalSign; 3]; 3]) -> FormalSign {
    let rows: Vec<Vec<FormalSign>> = grid.iter().map(|r| r.to_vec()).collect();
    formal_det_sign(&rows)
}
