//! Point clouds and subset scans.
//!
//! Every `(d + 1)`-subset of a `d`-dimensional cloud induces a configuration
//! from the coordinate order on each axis. Equal coordinates leave the pair
//! incomparable on that axis, so ties never invent an order the data does
//! not show.

use std::path::Path;

use itertools::Itertools;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{Engine, FixityVerdict, Status};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational};
use crate::order::{AxisSet, Configuration, LabelSet, Ordering, PointAssignment};
use crate::sign::ConfigSign;

/// Labelled points with exact rational coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    labels: LabelSet,
    axes: AxisSet,
    coords: Vec<Vec<BigRational>>,
    exact: bool,
}

impl PointCloud {
    pub fn new(labels: LabelSet, axes: AxisSet, coords: Vec<Vec<BigRational>>) -> Result<Self> {
        if coords.len() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels but {} points",
                labels.len(),
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().position(|p| p.len() != axes.len()) {
            return Err(Error::DimensionMismatch(format!(
                "point `{}` has {} coordinates, expected {}",
                labels.name(bad),
                coords[bad].len(),
                axes.len()
            )));
        }
        Ok(PointCloud {
            labels,
            axes,
            coords,
            exact: true,
        })
    }

    /// Parses CSV with a `label,<axis>,...` header and one row per point.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header = reader
            .headers()
            .map_err(|e| csv_error(&e, 1))?
            .clone();
        if header.len() < 2 {
            return Err(Error::parse(1, 1, "header must be `label,<axis>,...`"));
        }
        let axes = AxisSet::new(header.iter().skip(1))?;
        let mut names = Vec::new();
        let mut coords = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| csv_error(&e, 0))?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            if record.len() != header.len() {
                return Err(Error::parse(
                    line,
                    1,
                    format!("expected {} fields, found {}", header.len(), record.len()),
                ));
            }
            names.push(record[0].to_string());
            let mut point = Vec::with_capacity(axes.len());
            for (i, field) in record.iter().enumerate().skip(1) {
                let value = parse_rational(field).ok_or_else(|| {
                    Error::parse(line, i + 1, format!("`{field}` is not a number"))
                })?;
                point.push(value);
            }
            coords.push(point);
        }
        PointCloud::new(LabelSet::new(names)?, axes, coords)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            column: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        PointCloud::from_csv(&text)
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn axes(&self) -> &AxisSet {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn coords(&self) -> &[Vec<BigRational>] {
        &self.coords
    }

    /// False once [`jitter`](Self::jitter) has perturbed the coordinates.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Restriction to `subset` (indices into the cloud) as a point assignment.
    pub fn assignment(&self, subset: &[usize]) -> Result<PointAssignment> {
        let labels = LabelSet::new(subset.iter().map(|&i| self.labels.name(i)))?;
        let values = subset.iter().map(|&i| self.coords[i].clone()).collect();
        PointAssignment::new(labels, self.axes.clone(), values)
    }

    /// Adds to every coordinate a random offset smaller than a quarter of the
    /// smallest gap between distinct values on its axis. Strict orders are
    /// kept and ties are broken at random; the result is marked inexact.
    pub fn jitter(&self, seed: u64) -> PointCloud {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coords = self.coords.clone();
        for b in 0..self.dim() {
            let mut values: Vec<&BigRational> = self.coords.iter().map(|p| &p[b]).collect();
            values.sort();
            values.dedup();
            let gap = values
                .windows(2)
                .map(|w| w[1] - w[0])
                .min()
                .unwrap_or_else(|| BigRational::from_integer(1.into()));
            let step = gap / BigRational::from_integer(4.into());
            for point in coords.iter_mut() {
                let t: u32 = rng.random_range(1..1 << 20);
                let offset = &step * BigRational::new(t.into(), (1u32 << 20).into());
                point[b] += offset;
            }
        }
        PointCloud {
            labels: self.labels.clone(),
            axes: self.axes.clone(),
            coords,
            exact: false,
        }
    }

    /// Configuration induced on `subset` (label names, kept in the given
    /// order) by the coordinate order on each axis.
    pub fn derive_configuration<S: AsRef<str>>(&self, subset: &[S]) -> Result<Configuration> {
        let idx = subset
            .iter()
            .map(|s| self.labels.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.derive_idx(&idx)
    }

    fn derive_idx(&self, idx: &[usize]) -> Result<Configuration> {
        let labels = LabelSet::new(idx.iter().map(|&i| self.labels.name(i)))?;
        let m = idx.len();
        let orders = (0..self.dim())
            .map(|b| {
                let pairs = (0..m)
                    .flat_map(|e| (0..m).map(move |f| (e, f)))
                    .filter(|&(e, f)| self.coords[idx[e]][b] < self.coords[idx[f]][b]);
                Ordering::from_pairs(m, pairs).expect("numeric orders are acyclic")
            })
            .collect();
        Configuration::new(labels, self.axes.clone(), orders)
    }
}

fn csv_error(e: &csv::Error, fallback_line: usize) -> Error {
    let line = e.position().map_or(fallback_line, |p| p.line() as usize);
    Error::parse(line, 1, e.to_string())
}

/// Configuration induced on `subset` by `cloud`.
pub fn derive_configuration<S: AsRef<str>>(cloud: &PointCloud, subset: &[S]) -> Result<Configuration> {
    cloud.derive_configuration(subset)
}

/// One scanned subset.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub subset: Vec<String>,
    pub configuration: Configuration,
    pub verdict: FixityVerdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub fixed: u64,
    pub non_fixed: u64,
    pub unknown: u64,
    pub total: u64,
    pub exact: bool,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
    pub summary: ScanSummary,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    subset: &'a [String],
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<ConfigSign>,
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    summary: &'a ScanSummary,
}

impl ScanReport {
    pub fn entry(&self, subset: &[&str]) -> Option<&ScanEntry> {
        self.entries.iter().find(|e| e.subset.iter().map(String::as_str).eq(subset.iter().copied()))
    }

    /// One JSON object per subset, then `{"summary": ...}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let line = EntryJson {
                subset: &e.subset,
                status: e.verdict.status(),
                sign: e.verdict.sign().filter(|s| *s != ConfigSign::Both),
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        let summary = SummaryJson { summary: &self.summary };
        out.push_str(&serde_json::to_string(&summary).expect("serializable"));
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|e| e.subset.join(",").len())
            .max()
            .unwrap_or(0)
            .max("subset".len());
        let mut out = format!("{:<width$}  verdict\n", "subset");
        for e in &self.entries {
            out.push_str(&format!("{:<width$}  {}\n", e.subset.join(","), e.verdict.summary()));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} subsets: {} fixed, {} non_fixed, {} unknown{}\n",
            s.total,
            s.fixed,
            s.non_fixed,
            s.unknown,
            if s.exact { "" } else { " (jittered, not exact)" }
        ));
        out
    }
}

/// Decides every `(d + 1)`-subset of `cloud`, in lexicographic order of
/// point positions in the cloud.
pub fn scan(cloud: &PointCloud, engine: &Engine) -> Result<ScanReport> {
    let k = cloud.dim() + 1;
    if cloud.dim() == 0 {
        return Err(Error::DimensionMismatch("a cloud needs at least one axis".into()));
    }
    if cloud.len() < k {
        return Err(Error::DimensionMismatch(format!(
            "{} points in dimension {} give no subset of {k}",
            cloud.len(),
            cloud.dim()
        )));
    }
    let subsets: Vec<Vec<usize>> = (0..cloud.len()).combinations(k).collect();
    let entries = subsets
        .par_iter()
        .map(|idx| {
            let configuration = cloud.derive_idx(idx)?;
            let verdict = engine.decide(&configuration)?;
            Ok(ScanEntry {
                subset: configuration.labels().names().to_vec(),
                configuration,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut summary = ScanSummary {
        total: entries.len() as u64,
        exact: cloud.is_exact(),
        ..Default::default()
    };
    for e in &entries {
        match e.verdict.status() {
            Status::Fixed => summary.fixed += 1,
            Status::NonFixed => summary.non_fixed += 1,
            Status::Unknown => summary.unknown += 1,
        }
    }
    Ok(ScanReport { entries, summary })
}

/// Renders a cloud back to CSV with exact rationals.
pub fn to_csv(cloud: &PointCloud) -> String {
    let mut out = format!("label,{}\n", cloud.axes.names().join(","));
    for (i, p) in cloud.coords.iter().enumerate() {
        let values: Vec<String> = p.iter().map(format_rational).collect();
        out.push_str(&format!("{},{}\n", cloud.labels.name(i), values.join(",")));
    }
    out
}

/// Whether no two points share a coordinate on any axis.
pub fn has_distinct_values(cloud: &PointCloud) -> bool {
    (0..cloud.dim()).all(|b| {
        let mut v: Vec<&BigRational> = cloud.coords.iter().map(|p| &p[b]).collect();
        v.sort();
        v.windows(2).all(|w| w[0] != w[1])
    })
}
