//! Text and JSON encodings of configurations.
//!
//! The text format has one line per axis, each a comma-separated list of
//! chains:
//!
//! ```text
//! # comments run to the end of the line
//! labels = A, B, C, D     # optional; fixes the label (column) order
//! axes = x, y, z          # optional; fixes the axis (row) order
//! x: A < B < C < D
//! y: B < D, C < D, A < D  # partial orders list covering pairs or chains
//! z: A < B
//! z: C < D                # repeated axis lines are merged
//! ```
//!
//! Without directives, labels and axes are ordered by first appearance.
//! Relations are closed transitively on input; cycles are rejected.
//!
//! The JSON mirror is
//! `{"labels": [...], "axes": [...], "orders": {"x": [["A","B"], ...]}}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{AxisSet, Configuration, LabelSet, Ordering, MAX_LABELS};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Splits `s` on `sep`, trimming each piece and tracking 1-based columns
/// relative to `base` (the column of `s[0]`).
fn split_tokens<'a>(s: &'a str, sep: char, base: usize) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), sep))) {
        if c == sep {
            let piece = &s[start..i];
            let lead = piece.len() - piece.trim_start().len();
            out.push(Token {
                text: piece.trim(),
                column: base + s[..start + lead].chars().count(),
            });
            start = i + c.len_utf8();
        }
    }
    out
}

fn check_identifier(tok: &Token<'_>, line: usize, what: &str) -> Result<()> {
    if tok.text.is_empty() {
        return Err(Error::parse(line, tok.column, format!("missing {what}")));
    }
    if let Some((off, c)) = tok
        .text
        .char_indices()
        .find(|&(_, c)| c.is_whitespace() || "<>,:=#".contains(c))
    {
        return Err(Error::parse(
            line,
            tok.column + tok.text[..off].chars().count(),
            format!("unexpected `{c}` in {what}"),
        ));
    }
    Ok(())
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    labels_fixed: bool,
    axes: Vec<String>,
    axes_fixed: bool,
    /// Per axis: `(from, to)` label pairs.
    pairs: Vec<Vec<(usize, usize)>>,
}

impl Builder {
    fn label(&mut self, tok: &Token<'_>, line: usize) -> Result<usize> {
        check_identifier(tok, line, "label")?;
        if let Some(i) = self.labels.iter().position(|l| l == tok.text) {
            return Ok(i);
        }
        if self.labels_fixed {
            return Err(Error::parse(
                line,
                tok.column,
                format!("label `{}` is not declared in `labels`", tok.text),
            ));
        }
        if self.labels.len() == MAX_LABELS {
            return Err(Error::TooManyLabels {
                max: MAX_LABELS,
                got: MAX_LABELS + 1,
            });
        }
        self.labels.push(tok.text.to_string());
        Ok(self.labels.len() - 1)
    }

    fn axis(&mut self, tok: &Token<'_>, line: usize) -> Result<usize> {
        check_identifier(tok, line, "axis name")?;
        if let Some(i) = self.axes.iter().position(|a| a == tok.text) {
            return Ok(i);
        }
        if self.axes_fixed {
            return Err(Error::parse(
                line,
                tok.column,
                format!("axis `{}` is not declared in `axes`", tok.text),
            ));
        }
        self.axes.push(tok.text.to_string());
        self.pairs.push(Vec::new());
        Ok(self.axes.len() - 1)
    }

    fn directive(&mut self, key: &Token<'_>, value: &str, value_col: usize, line: usize) -> Result<()> {
        let names = split_tokens(value, ',', value_col);
        let (list, fixed, what) = match key.text {
            "labels" => (&mut self.labels, &mut self.labels_fixed, "label"),
            "axes" => (&mut self.axes, &mut self.axes_fixed, "axis name"),
            other => {
                return Err(Error::parse(
                    line,
                    key.column,
                    format!("unknown directive `{other}` (expected `labels` or `axes`)"),
                ))
            }
        };
        if *fixed || !list.is_empty() {
            return Err(Error::parse(
                line,
                key.column,
                format!("`{}` must come first and appear once", key.text),
            ));
        }
        for tok in &names {
            check_identifier(tok, line, what)?;
            if list.iter().any(|l| l == tok.text) {
                return Err(Error::Duplicate(tok.text.to_string()));
            }
            list.push(tok.text.to_string());
        }
        *fixed = true;
        if key.text == "axes" {
            self.pairs = vec![Vec::new(); self.axes.len()];
        } else if self.labels.len() > MAX_LABELS {
            return Err(Error::TooManyLabels {
                max: MAX_LABELS,
                got: self.labels.len(),
            });
        }
        Ok(())
    }

    fn relation_line(&mut self, axis: &Token<'_>, body: &str, body_col: usize, line: usize) -> Result<()> {
        let b = self.axis(axis, line)?;
        if body.trim().is_empty() {
            return Ok(());
        }
        for chain in split_tokens(body, ',', body_col) {
            let mut prev = None;
            for tok in split_tokens(chain.text, '<', chain.column) {
                let e = self.label(&tok, line)?;
                if let Some(p) = prev {
                    if p == e {
                        return Err(Error::parse(
                            line,
                            tok.column,
                            format!("`{}` cannot be below itself", tok.text),
                        ));
                    }
                    self.pairs[b].push((p, e));
                }
                prev = Some(e);
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<Configuration> {
        let labels = LabelSet::new(self.labels)?;
        let axes = AxisSet::new(self.axes)?;
        let n = labels.len();
        let mut orders = Vec::with_capacity(axes.len());
        for (b, pairs) in self.pairs.into_iter().enumerate() {
            let ord = Ordering::from_pairs(n, pairs).map_err(|e| Error::Cycle {
                axis: axes.name(b).to_string(),
                label: labels.name(e).to_string(),
            })?;
            orders.push(ord);
        }
        Configuration::new(labels, axes, orders)
    }
}

/// Parses the line-oriented text format.
pub fn parse_text(input: &str) -> Result<Configuration> {
    let mut builder = Builder::default();
    let mut saw_content = false;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        saw_content = true;
        let colon = content.find(':');
        let equals = content.find('=');
        match (colon, equals) {
            (Some(c), e) if e.is_none_or(|e| c < e) => {
                let head = split_tokens(&content[..c], '\u{0}', 1).remove(0);
                let body_col = content[..c + 1].chars().count() + 1;
                builder.relation_line(&head, &content[c + 1..], body_col, line)?;
            }
            (_, Some(e)) => {
                let head = split_tokens(&content[..e], '\u{0}', 1).remove(0);
                let value_col = content[..e + 1].chars().count() + 1;
                builder.directive(&head, &content[e + 1..], value_col, line)?;
            }
            _ => {
                let col = raw.len() - raw.trim_start().len() + 1;
                return Err(Error::parse(
                    line,
                    col,
                    "expected `axis: a < b ...` or `labels = ...`",
                ));
            }
        }
    }
    if !saw_content {
        return Err(Error::parse(1, 1, "empty configuration"));
    }
    builder.finish()
}

/// JSON mirror of a configuration. Orders list relation pairs; the
/// transitive closure is taken on input and covering pairs are written on
/// output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axes: Option<Vec<String>>,
    pub orders: BTreeMap<String, Vec<[String; 2]>>,
}

impl From<&Configuration> for ConfigurationJson {
    fn from(cfg: &Configuration) -> Self {
        let orders = (0..cfg.dim())
            .map(|b| {
                let pairs = cfg
                    .ordering(b)
                    .covering_pairs()
                    .into_iter()
                    .map(|(e, f)| {
                        [
                            cfg.labels().name(e).to_string(),
                            cfg.labels().name(f).to_string(),
                        ]
                    })
                    .collect();
                (cfg.axes().name(b).to_string(), pairs)
            })
            .collect();
        ConfigurationJson {
            labels: Some(cfg.labels().names().to_vec()),
            axes: Some(cfg.axes().names().to_vec()),
            orders,
        }
    }
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = Error;

    fn try_from(json: ConfigurationJson) -> Result<Configuration> {
        let labels = match json.labels {
            Some(l) => l,
            None => {
                let mut seen: Vec<String> = Vec::new();
                for pairs in json.orders.values() {
                    for name in pairs.iter().flatten() {
                        if !seen.contains(name) {
                            seen.push(name.clone());
                        }
                    }
                }
                seen
            }
        };
        let labels = LabelSet::new(labels)?;
        let axes = AxisSet::new(json.axes.unwrap_or_else(|| json.orders.keys().cloned().collect()))?;
        if let Some(extra) = json.orders.keys().find(|k| axes.position(k).is_none()) {
            return Err(Error::UnknownAxis(extra.clone()));
        }
        let n = labels.len();
        let mut orders = Vec::with_capacity(axes.len());
        for axis in axes.names() {
            let pairs = json
                .orders
                .get(axis)
                .map(|p| {
                    p.iter()
                        .map(|[e, f]| Ok((labels.index_of(e)?, labels.index_of(f)?)))
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?
                .unwrap_or_default();
            let ord = Ordering::from_pairs(n, pairs).map_err(|e| Error::Cycle {
                axis: axis.clone(),
                label: labels.name(e).to_string(),
            })?;
            orders.push(ord);
        }
        Configuration::new(labels, axes, orders)
    }
}

pub fn parse_json(input: &str) -> Result<Configuration> {
    let json: ConfigurationJson = serde_json::from_str(input)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    Configuration::try_from(json)
}

/// Parses either encoding, picking JSON when the input starts with `{`.
pub fn parse(input: &str) -> Result<Configuration> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn to_json(cfg: &Configuration) -> serde_json::Value {
    serde_json::to_value(ConfigurationJson::from(cfg)).expect("configuration JSON is always valid")
}

/// Renders the text format: a `labels` line, then one line per axis with a
/// single chain for linear orders and covering pairs otherwise.
pub fn to_text(cfg: &Configuration) -> String {
    let name = |e: usize| cfg.labels().name(e);
    let mut out = format!("labels = {}\n", cfg.labels().names().join(", "));
    for b in 0..cfg.dim() {
        let ord = cfg.ordering(b);
        let body = match ord.chain() {
            Some(chain) => chain.iter().map(|&e| name(e)).collect::<Vec<_>>().join(" < "),
            None => ord
                .covering_pairs()
                .iter()
                .map(|&(e, f)| format!("{} < {}", name(e), name(f)))
                .collect::<Vec<_>>()
                .join(", "),
        };
        if body.is_empty() {
            out.push_str(&format!("{}:\n", cfg.axes().name(b)));
        } else {
            out.push_str(&format!("{}: {}\n", cfg.axes().name(b), body));
        }
    }
    out
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_first_appearance_order() {
        let c = parse_text("x: A < B < C\ny: B<C<A\n").unwrap();
        assert_eq!(c.labels().names(), ["A", "B", "C"]);
        assert_eq!(c.axes().names(), ["x", "y"]);
        assert!(c.ordering(1).less(1, 0));
        assert!(c.is_linear());
    }

    #[test]
    fn partial_orders_and_merging() {
        let c = parse_text("# poset\nz: 2<8, 5<8\nz: 8<9\n").unwrap();
        let ord = c.ordering(0);
        assert_eq!(c.labels().names(), ["2", "8", "5", "9"]);
        assert!(ord.less(0, 1) && ord.less(2, 1) && ord.less(1, 3));
        assert!(!ord.comparable(0, 2));
        assert_eq!(ord.linear_extension_count(), 2);
    }

    #[test]
    fn directives_fix_order() {
        let c = parse_text("labels = C, B, A\nx: A < B < C\ny: A<B<C").unwrap();
        assert_eq!(c.labels().names(), ["C", "B", "A"]);
        let empty = parse_text("labels = A, B\nx:\n").unwrap();
        assert_eq!(empty.ordering(0).pairs().count(), 0);
        let axes = parse_text("axes = y, x\nx: A<B<C\ny: A<B<C").unwrap();
        assert_eq!(axes.axes().names(), ["y", "x"]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_text("x: A < B\ny: A < < C") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 8);
            }
            other => panic!("{other:?}"),
        }
        match parse_text("labels = A, B\nx: A < Q") {
            Err(Error::Parse { line: 2, column: 8, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_text("x A B"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_text("x: A < B < A"),
            Err(Error::Parse { .. }) | Err(Error::Cycle { .. })
        ));
        assert!(matches!(parse_text("x: A < B\nx: B < A"), Err(Error::Cycle { .. })));
        assert!(parse_text("  \n# nothing\n").is_err());
    }

    #[test]
    fn text_round_trip() {
        let src = "labels = A, B, C, D\nx: A < B < C < D\ny: A < D, C < D\nz:\n";
        let c = parse_text(src).unwrap();
        let again = parse_text(&to_text(&c)).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn json_round_trip() {
        let c = parse_text("x: A < B < C\ny: B < C, B < A").unwrap();
        let json = to_json(&c).to_string();
        assert_eq!(parse(&json).unwrap(), c);
        let handwritten = r#"{"labels":["A","B"],"axes":["x"],"orders":{"x":[["B","A"]]}}"#;
        let h = parse(handwritten).unwrap();
        assert!(h.ordering(0).less(1, 0));
        assert!(matches!(parse("{ not json"), Err(Error::Parse { .. })));
    }
}
