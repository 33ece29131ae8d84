//! Sequence tables and tree listings in the output formats the CLI speaks.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::oracle::Enumerator;
use crate::trees::{series_for, TreeFamily};
use crate::{Coefficient, Series};

/// Which engine produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Series,
    Oracle,
}

impl Generator {
    pub fn tag(self) -> &'static str {
        match self {
            Generator::Series => "series",
            Generator::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFormat {
    BFile,
    Json,
    Csv,
}

impl FromStr for SeriesFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfile" => Ok(SeriesFormat::BFile),
            "json" => Ok(SeriesFormat::Json),
            "csv" => Ok(SeriesFormat::Csv),
            other => Err(Error::Unsupported(format!(
                "unknown format `{other}` (expected bfile, json or csv)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Text,
    Dot,
}

impl FromStr for TreeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TreeFormat::Text),
            "dot" => Ok(TreeFormat::Dot),
            other => Err(Error::Unsupported(format!(
                "unknown format `{other}` (expected text or dot)"
            ))),
        }
    }
}

/// Counts for one family at `n = 1, 2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub family: TreeFamily,
    pub entries: Vec<(usize, Coefficient)>,
    pub generator: Generator,
}

impl SequenceReport {
    /// Counts for `n = 1..=terms` from the series engine.
    pub fn from_series(family: TreeFamily, terms: usize) -> Result<Self> {
        let series: Series = series_for(family, terms)?;
        Ok(Self::from_coefficients(family, &series, terms))
    }

    /// Counts for `n = 1..=terms` read off an already computed series.
    pub fn from_coefficients(family: TreeFamily, series: &Series, terms: usize) -> Self {
        Self {
            family,
            entries: (1..=terms).map(|n| (n, series.coeff(n))).collect(),
            generator: Generator::Series,
        }
    }

    /// Counts for `n = 1..=terms` by explicit enumeration.
    pub fn from_oracle(
        family: TreeFamily,
        terms: usize,
        enumerator: &mut Enumerator,
    ) -> Result<Self> {
        let entries = (1..=terms)
            .map(|n| Ok((n, enumerator.count(family, n)?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            family,
            entries,
            generator: Generator::Oracle,
        })
    }

    pub fn render(&self, format: SeriesFormat) -> String {
        match format {
            SeriesFormat::BFile => self.to_bfile(),
            SeriesFormat::Json => self.to_json(),
            SeriesFormat::Csv => self.to_csv(),
        }
    }

    /// OEIS b-file: `n count` per line, no header.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (n, c) in &self.entries {
            let _ = writeln!(out, "{n} {c}");
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in &self.entries {
            let _ = writeln!(out, "{n},{c}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let counts: Vec<Value> = self
            .entries
            .iter()
            .map(|(_, c)| {
                Value::Number(
                    c.to_string()
                        .parse::<Number>()
                        .expect("integers are JSON numbers"),
                )
            })
            .collect();
        let value = json!({
            "family": self.family.tag(),
            "generator": self.generator.tag(),
            "counts": counts,
        });
        format!("{value}\n")
    }

    /// Parse a b-file back into a report. Blank lines and `#` comments are skipped.
    pub fn parse_bfile(family: TreeFamily, generator: Generator, text: &str) -> Result<Self> {
        let mut entries: Vec<(usize, Coefficient)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| Error::MalformedBFile {
                line: line_no,
                reason: reason.to_string(),
            };
            let mut parts = line.split_whitespace();
            let (Some(n), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad("expected `<n> <count>`"));
            };
            let n: usize = n
                .parse()
                .map_err(|_| bad("index is not a non-negative integer"))?;
            let c: Coefficient = c.parse().map_err(|_| bad("count is not an integer"))?;
            if entries.last().is_some_and(|(prev, _)| *prev >= n) {
                return Err(bad("indices must be strictly increasing"));
            }
            entries.push((n, c));
        }
        Ok(Self {
            family,
            entries,
            generator,
        })
    }
}

/// Every tree of `family` on `n` vertices, one per isomorphism class.
///
/// Text output is one canonical encoding per line, sorted. Dot output holds
/// one `graph` per tree, `t0..`, in the same order.
pub fn enumerate(
    family: TreeFamily,
    n: usize,
    format: TreeFormat,
    enumerator: &mut Enumerator,
) -> Result<String> {
    let mut trees: Vec<(String, crate::oracle::LabeledTree)> = match family {
        TreeFamily::Rooted | TreeFamily::STree => enumerator
            .rooted(n)?
            .iter()
            .filter(|t| family == TreeFamily::Rooted || t.is_stree())
            .map(|t| (t.encoding(), t.to_labeled()))
            .collect(),
        TreeFamily::Unrooted | TreeFamily::Hit => enumerator
            .free(n)?
            .into_iter()
            .filter(|f| family == TreeFamily::Unrooted || f.is_hit())
            .map(|f| (f.encoding(), f.to_labeled()))
            .collect(),
        other => {
            return Err(Error::Unsupported(format!(
                "enumerate supports rooted, unrooted, stree and hit, not {other}"
            )))
        }
    };
    trees.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = String::new();
    for (i, (encoding, labeled)) in trees.iter().enumerate() {
        match format {
            TreeFormat::Text => {
                out.push_str(encoding);
                out.push('\n');
            }
            TreeFormat::Dot => out.push_str(&labeled.to_dot(&format!("t{i}"))),
        }
    }
    Ok(out)
}
