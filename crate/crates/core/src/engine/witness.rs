//! Explicit realizations with opposite orientations.
//!
//! Every non-fixity certificate is turned into two rational point
//! assignments that satisfy the configuration and whose determinants have
//! strictly opposite signs. Each construction is checked exactly before it
//! is returned.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::format_rational;
use crate::order::{Configuration, Ordering, PointAssignment};
use crate::sign::DetSign;

use super::certificate::NonFixedCertificate;
use super::dim::conformal_orientation;

/// Two realizations of one configuration with positive and negative
/// determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub plus: PointAssignment,
    pub minus: PointAssignment,
}

impl WitnessPair {
    /// Checks both assignments against `cfg` exactly.
    pub fn verify(&self, cfg: &Configuration) -> Result<()> {
        for (p, want) in [(&self.plus, DetSign::Pos), (&self.minus, DetSign::Neg)] {
            if !p.satisfies(cfg)? {
                return Err(Error::InvalidCertificate(format!(
                    "the {want} witness violates the configuration"
                )));
            }
            let got = p.det_sign()?;
            if got != want {
                return Err(Error::InvalidCertificate(format!(
                    "witness meant to be {want} has determinant sign {got}"
                )));
            }
        }
        Ok(())
    }

    /// `{"plus": {"A": ["0", "1/2"], ...}, "minus": {...}}` with axis values
    /// in axis order.
    pub fn to_json(&self) -> Value {
        let points = |p: &PointAssignment| {
            let mut map = Map::new();
            for (e, name) in p.labels().names().iter().enumerate() {
                let coords: Vec<Value> = (0..p.axes().len())
                    .map(|b| Value::String(format_rational(p.value(e, b))))
                    .collect();
                map.insert(name.clone(), Value::Array(coords));
            }
            Value::Object(map)
        };
        json!({
            "axes": self.plus.axes().names(),
            "plus": points(&self.plus),
            "minus": points(&self.minus),
        })
    }

    /// One line per label and sign: `+ A: 0 1/2`.
    pub fn to_text(&self) -> String {
        let mut out = format!("axes: {}\n", self.plus.axes().names().join(" "));
        for (tag, p) in [("+", &self.plus), ("-", &self.minus)] {
            for (e, name) in p.labels().names().iter().enumerate() {
                let coords: Vec<String> = (0..p.axes().len()).map(|b| format_rational(p.value(e, b))).collect();
                out.push_str(&format!("{tag} {name}: {}\n", coords.join(" ")));
            }
        }
        out
    }
}

type Values = Vec<Vec<BigRational>>;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn assignment(cfg: &Configuration, values: Values) -> PointAssignment {
    PointAssignment::new(cfg.labels().clone(), cfg.axes().clone(), values).expect("shape matches")
}

/// Tries moving one coordinate at a time by `±1/2` from a degenerate
/// realization until both orientations appear.
fn tip(cfg: &Configuration, base: &Values, movable: &[(usize, usize)]) -> Result<Option<WitnessPair>> {
    let mut plus = None;
    let mut minus = None;
    for &(e, b) in movable {
        for step in [half(), -half()] {
            let mut values = base.clone();
            values[e][b] += step;
            let p = assignment(cfg, values);
            if !p.satisfies(cfg)? {
                continue;
            }
            match p.det_sign()? {
                DetSign::Pos if plus.is_none() => plus = Some(p),
                DetSign::Neg if minus.is_none() => minus = Some(p),
                _ => {}
            }
            if let (Some(plus), Some(minus)) = (&plus, &minus) {
                return Ok(Some(WitnessPair {
                    plus: plus.clone(),
                    minus: minus.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Three labels with equal or reversed orderings: place the points on a
/// line using their ranks, then tip one of them off it.
fn conformal_witness(cfg: &Configuration) -> Result<WitnessPair> {
    if cfg.n() != 3 || !cfg.is_square() || !cfg.is_linear() || conformal_orientation(cfg, [0, 1, 2], 0, 1).is_none() {
        return Err(Error::InvalidCertificate(
            "conformal certificate needs three labels with equal or reversed orderings".into(),
        ));
    }
    let base: Values = (0..3)
        .map(|e| (0..2).map(|b| int(cfg.ordering(b).rank(e) as i64)).collect())
        .collect();
    let movable: Vec<(usize, usize)> = (0..3).flat_map(|e| (0..2).map(move |b| (e, b))).collect();
    tip(cfg, &base, &movable)?
        .ok_or_else(|| Error::Internal("collinear realization could not be tipped".into()))
}

/// Two labels comparable on no axis: give them equal coordinates inside a
/// linear extension where they are adjacent, then move one of them.
pub(crate) fn coincident_witness(cfg: &Configuration, e: usize, f: usize) -> Result<Option<WitnessPair>> {
    if !cfg.is_square() || e == f || cfg.orderings().iter().any(|o| o.comparable(e, f)) {
        return Ok(None);
    }
    let chains: Vec<Vec<usize>> = cfg
        .orderings()
        .iter()
        .map(|o| o.extension_with_adjacent(e, f).expect("incomparable pair"))
        .collect();
    let (n, d) = (cfg.n(), cfg.dim());
    let movable: Vec<(usize, usize)> = [f, e].iter().flat_map(|&g| (0..d).map(move |b| (g, b))).collect();
    // Rank positions first; if every relevant cofactor vanishes there, retry
    // with generic offsets that keep the same orders.
    for attempt in 0..8u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt);
        let mut base: Values = vec![vec![BigRational::zero(); d]; n];
        for (b, chain) in chains.iter().enumerate() {
            for (pos, &g) in chain.iter().enumerate() {
                let offset = if attempt == 0 { 0 } else { rng.random_range(0..32) };
                base[g][b] = int(pos as i64 * 64 + offset);
            }
            base[f][b] = base[e][b].clone();
        }
        if let Some(pair) = tip(cfg, &base, &movable)? {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

/// Lifts a witness of `cfg.without(e, b)` to `cfg`, where `e` is extreme on
/// axis `b`.
fn lift(cfg: &Configuration, e: usize, b: usize, child: &WitnessPair) -> Result<WitnessPair> {
    let (n, d) = (cfg.n(), cfg.dim());
    let order_b: &Ordering = cfg.ordering(b);
    let at_min = order_b.rank(e) == 0;
    let rest: Vec<usize> = (0..n).filter(|&g| g != e).collect();
    let axes_rest: Vec<usize> = (0..d).filter(|&k| k != b).collect();

    let mut lifted = Vec::with_capacity(2);
    for small in [&child.plus, &child.minus] {
        let mut values: Values = vec![vec![BigRational::zero(); d]; n];
        for (ci, &g) in rest.iter().enumerate() {
            for (ck, &k) in axes_rest.iter().enumerate() {
                values[g][k] = small.value(ci, ck).clone();
            }
            values[g][b] = int(order_b.rank(g) as i64);
        }
        // `e` on the other axes: between its neighbours.
        for &k in &axes_rest {
            let ord = cfg.ordering(k);
            let below = rest
                .iter()
                .filter(|&&g| ord.less(g, e))
                .map(|&g| values[g][k].clone())
                .max();
            let above = rest
                .iter()
                .filter(|&&g| ord.less(e, g))
                .map(|&g| values[g][k].clone())
                .min();
            values[e][k] = match (below, above) {
                (Some(lo), Some(hi)) => (lo + hi) * half(),
                (Some(lo), None) => lo + BigRational::one(),
                (None, Some(hi)) => hi - BigRational::one(),
                (None, None) => BigRational::zero(),
            };
        }
        // The determinant is affine in x_{e,b}: alpha * x + beta.
        values[e][b] = BigRational::zero();
        let beta = assignment(cfg, values.clone()).det()?;
        values[e][b] = BigRational::one();
        let alpha = assignment(cfg, values.clone()).det()? - &beta;
        if alpha.is_zero() {
            return Err(Error::Internal("lifted cofactor vanished".into()));
        }
        let reach = rest
            .iter()
            .map(|&g| values[g][b].abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        let magnitude = beta.abs() / alpha.abs() + BigRational::one() + reach;
        values[e][b] = if at_min { -magnitude } else { magnitude };
        lifted.push(assignment(cfg, values));
    }
    let second = lifted.pop().expect("two lifts");
    let first = lifted.pop().expect("two lifts");
    if first.det_sign()? == DetSign::Pos {
        Ok(WitnessPair { plus: first, minus: second })
    } else {
        Ok(WitnessPair { plus: second, minus: first })
    }
}

fn build(cfg: &Configuration, certificate: &NonFixedCertificate) -> Result<WitnessPair> {
    match certificate {
        NonFixedCertificate::Conformal { .. } => conformal_witness(cfg),
        NonFixedCertificate::Extreme {
            label,
            axis,
            at_min,
            child,
        } => {
            let e = cfg.labels().index_of(label)?;
            let b = cfg.axes().index_of(axis)?;
            cfg.require_linear()?;
            let ord = cfg.ordering(b);
            let rank = ord.rank(e);
            let extreme = if *at_min { rank == 0 } else { rank + 1 == cfg.n() };
            if !extreme {
                return Err(Error::InvalidCertificate(format!(
                    "`{label}` is not the {} on axis `{axis}`",
                    if *at_min { "minimum" } else { "maximum" }
                )));
            }
            let small = build(&cfg.without(e, b), child)?;
            lift(cfg, e, b, &small)
        }
        NonFixedCertificate::CoincidentPair { first, second } => {
            let e = cfg.labels().index_of(first)?;
            let f = cfg.labels().index_of(second)?;
            coincident_witness(cfg, e, f)?.ok_or_else(|| {
                Error::InvalidCertificate(format!("`{first}` and `{second}` cannot be made to coincide"))
            })
        }
        NonFixedCertificate::Extension { chains, certificate } => {
            if chains.len() != cfg.dim() {
                return Err(Error::InvalidCertificate("one chain per axis expected".into()));
            }
            let idx = chains
                .iter()
                .map(|c| c.iter().map(|l| cfg.labels().index_of(l)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if idx.iter().any(|c| c.len() != cfg.n()) {
                return Err(Error::InvalidCertificate("extension chains must list every label".into()));
            }
            let ext = Configuration::from_index_chains(cfg.labels().clone(), cfg.axes().clone(), &idx)?;
            if !ext.is_linear() || !cfg.is_subconfiguration_of(&ext) {
                return Err(Error::InvalidCertificate("chains do not extend the configuration".into()));
            }
            build(&ext, certificate)
        }
    }
}

/// Builds and checks a witness pair from a non-fixity certificate.
pub fn build_witness(cfg: &Configuration, certificate: &NonFixedCertificate) -> Result<WitnessPair> {
    cfg.require_square()?;
    let pair = build(cfg, certificate)?;
    pair.verify(cfg).map_err(|e| match e {
        Error::InvalidCertificate(msg) => Error::Internal(format!("witness construction failed: {msg}")),
        other => other,
    })?;
    Ok(pair)
}
