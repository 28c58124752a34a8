//! Delimited matrix input, JSON/CSV reports and plot series.
//!
//! Input grammar (comma separated, UTF-8, quoted fields allowed):
//!
//! ```text
//! document  := header NEWLINE row (NEWLINE row)*
//! header    := ("" | "alternative") ("," criterion)+
//! criterion := name (":" flag)*          flag := "benefit" | "cost" | "reverse"
//! row       := label ("," cell)+         cell := number | grade
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Surrounding
//! whitespace is trimmed from every field. A `grade` is any cell that does
//! not parse as a number; it is resolved through a [`LikertMap`], reflected
//! when the column carries the `reverse` flag.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::compare::{rank_desc, ComparisonReport};
use crate::dwm::DispersionBreakdown;
use crate::entropy::EntropyBreakdown;
use crate::error::{Error, Result};
use crate::matrix::{apply_likert, CriterionSpec, DecisionMatrix, Direction, LikertMap, WeightVector};

pub const TOOL_NAME: &str = "mcdm-weights";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Grade(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRow {
    /// 1-based source line.
    pub line: usize,
    pub label: String,
    pub cells: Vec<Cell>,
}

/// A tokenized matrix file, before grades are resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDocument {
    pub criteria: Vec<CriterionSpec>,
    pub rows: Vec<MatrixRow>,
}

fn parse_err(line: usize, col: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        reason: reason.into(),
    }
}

fn parse_criterion(field: &str, line: usize, col: usize) -> Result<CriterionSpec> {
    let mut parts = field.split(':').map(str::trim);
    let name = parts.next().unwrap_or_default();
    if name.is_empty() {
        return Err(parse_err(line, col, "empty criterion name"));
    }
    let mut spec = CriterionSpec::benefit(name);
    for flag in parts {
        match flag.to_ascii_lowercase().as_str() {
            "benefit" => spec.direction = Direction::Benefit,
            "cost" => spec.direction = Direction::Cost,
            "reverse" => spec.likert_reverse = true,
            other => return Err(parse_err(line, col, format!("unknown criterion flag {other:?}"))),
        }
    }
    Ok(spec)
}

impl MatrixDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut records = reader.records();

        let header = match records.next() {
            Some(r) => r.map_err(|e| csv_err(&e))?,
            None => return Err(parse_err(1, 1, "empty document")),
        };
        let header_line = header.position().map_or(1, |p| p.line() as usize);
        let corner = header.get(0).unwrap_or_default();
        if !(corner.is_empty() || corner.eq_ignore_ascii_case("alternative")) {
            return Err(parse_err(
                header_line,
                1,
                format!("header must start with an empty cell or \"alternative\", found {corner:?}"),
            ));
        }
        let criteria = header
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, f)| parse_criterion(f, header_line, i + 1))
            .collect::<Result<Vec<_>>>()?;
        if criteria.is_empty() {
            return Err(parse_err(header_line, 2, "header names no criteria"));
        }

        let mut rows = Vec::new();
        for record in records {
            let record = record.map_err(|e| csv_err(&e))?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            if record.len() != criteria.len() + 1 {
                return Err(parse_err(
                    line,
                    record.len(),
                    format!(
                        "expected a label and {} cells, found {} fields",
                        criteria.len(),
                        record.len()
                    ),
                ));
            }
            let label = record[0].to_owned();
            if label.is_empty() {
                return Err(parse_err(line, 1, "empty alternative label"));
            }
            let cells = record
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, f)| {
                    if f.is_empty() {
                        Err(parse_err(line, i + 1, "empty cell"))
                    } else {
                        Ok(f64::from_str(f).map_or_else(|_| Cell::Grade(f.to_owned()), Cell::Number))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(MatrixRow { line, label, cells });
        }
        Ok(Self { criteria, rows })
    }

    /// Resolves grades and validates the resulting grid.
    pub fn resolve(&self, map: &LikertMap) -> Result<DecisionMatrix> {
        let grid = self
            .rows
            .iter()
            .map(|row| {
                row.cells
                    .iter()
                    .zip(&self.criteria)
                    .enumerate()
                    .map(|(j, (cell, spec))| match cell {
                        Cell::Number(v) => Ok(*v),
                        Cell::Grade(g) => apply_likert(g, map, spec.likert_reverse).map_err(|_| {
                            Error::UnknownGradeAt {
                                line: row.line,
                                col: j + 2,
                                grade: g.clone(),
                            }
                        }),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        DecisionMatrix::new(
            self.rows.iter().map(|r| r.label.clone()).collect(),
            self.criteria.clone(),
            grid,
        )
    }
}

fn csv_err(e: &csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    parse_err(line, 0, e.to_string())
}

pub fn parse_matrix(text: &str, map: &LikertMap) -> Result<DecisionMatrix> {
    MatrixDocument::parse(text)?.resolve(map)
}

/// Writes a matrix in the input format. Values use Rust's shortest
/// round-trip representation, so `parse_matrix` recovers them exactly.
pub fn write_matrix(m: &DecisionMatrix) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut header = vec!["alternative".to_owned()];
    header.extend(m.criteria().iter().map(|c| {
        let mut s = c.name.clone();
        if c.direction == Direction::Cost {
            s.push_str(":cost");
        }
        if c.likert_reverse {
            s.push_str(":reverse");
        }
        s
    }));
    w.write_record(&header).expect("write to Vec");
    for (i, label) in m.alternatives().iter().enumerate() {
        let mut rec = vec![label.clone()];
        rec.extend(m.row(i).iter().map(|v| v.to_string()));
        w.write_record(&rec).expect("write to Vec");
    }
    String::from_utf8(w.into_inner().expect("flush Vec")).expect("csv output is utf-8")
}

/// A number printed with exactly six decimals.
///
/// The stored value is already rounded, so a report survives
/// emit/parse unchanged.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Fixed6(f64);

impl Fixed6 {
    pub fn new(v: f64) -> Self {
        let q: f64 = format!("{v:.6}").parse().unwrap_or(v);
        // no "-0.000000"
        Self(if q == 0.0 { 0.0 } else { q })
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for Fixed6 {
    fn from(v: f64) -> Self {
        Self::new(v)
    }
}

impl fmt::Display for Fixed6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}", self.0)
    }
}

impl Serialize for Fixed6 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = serde_json::value::RawValue::from_string(self.to_string())
            .map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fixed6 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(d).map(Fixed6::new)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub name: String,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyRow {
    pub name: String,
    pub entropy: Fixed6,
    pub divergence: Fixed6,
    pub weight: Fixed6,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropySection {
    pub k: Fixed6,
    pub criteria: Vec<EntropyRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DwmRow {
    pub name: String,
    pub mean: Fixed6,
    pub std: Fixed6,
    pub cv: Fixed6,
    pub weight: Fixed6,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DwmSection {
    pub criteria: Vec<DwmRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonSection {
    /// Omitted when a weight vector is constant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pearson: Option<Fixed6>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spearman: Option<Fixed6>,
    pub rank_agreements: usize,
    pub top_criterion_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Machine-readable output of one `weigh` or `compare` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dwm: Option<DwmSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonSection>,
    pub provenance: Provenance,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl ReportDocument {
    pub fn new(m: &DecisionMatrix, input: &[u8], notes: Vec<String>) -> Self {
        Self {
            alternatives: m.alternatives().to_vec(),
            criteria: m
                .criteria()
                .iter()
                .map(|c| CriterionEntry {
                    name: c.name.clone(),
                    direction: c.direction,
                })
                .collect(),
            entropy: None,
            dwm: None,
            comparison: None,
            provenance: Provenance {
                tool: TOOL_NAME.to_owned(),
                version: TOOL_VERSION.to_owned(),
                input_sha256: sha256_hex(input),
                notes,
            },
        }
    }

    pub fn with_entropy(mut self, w: &WeightVector, b: &EntropyBreakdown) -> Self {
        let ranks = rank_desc(w.as_slice());
        let criteria = self
            .criteria
            .iter()
            .enumerate()
            .map(|(j, c)| EntropyRow {
                name: c.name.clone(),
                entropy: b.entropy[j].into(),
                divergence: b.divergence[j].into(),
                weight: w.get(j).into(),
                rank: ranks[j],
            })
            .collect();
        self.entropy = Some(EntropySection {
            k: b.k.into(),
            criteria,
        });
        self
    }

    pub fn with_dwm(mut self, w: &WeightVector, b: &DispersionBreakdown) -> Self {
        let ranks = rank_desc(w.as_slice());
        let criteria = self
            .criteria
            .iter()
            .enumerate()
            .map(|(j, c)| DwmRow {
                name: c.name.clone(),
                mean: b.mean[j].into(),
                std: b.std[j].into(),
                cv: b.cv[j].into(),
                weight: w.get(j).into(),
                rank: ranks[j],
            })
            .collect();
        self.dwm = Some(DwmSection { criteria });
        self
    }

    /// Fills both method sections and the comparison block.
    pub fn with_comparison(self, r: &ComparisonReport) -> Self {
        let mut doc = self
            .with_entropy(&r.entropy, &r.entropy_breakdown)
            .with_dwm(&r.dwm, &r.dwm_breakdown);
        doc.comparison = Some(ComparisonSection {
            pearson: r.pearson.map(Fixed6::new),
            spearman: r.spearman.map(Fixed6::new),
            rank_agreements: r.rank_agreements,
            top_criterion_agrees: r.entropy.argmax() == r.dwm.argmax(),
        });
        doc
    }

    pub fn entropy_weights(&self) -> Option<Vec<f64>> {
        self.entropy
            .as_ref()
            .map(|s| s.criteria.iter().map(|r| r.weight.value()).collect())
    }

    pub fn dwm_weights(&self) -> Option<Vec<f64>> {
        self.dwm
            .as_ref()
            .map(|s| s.criteria.iter().map(|r| r.weight.value()).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub fn emit_report(r: &ReportDocument, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => emit_report_csv(r),
    }
}

// Long format: one `section,criterion,field,value` row per quantity.
fn emit_report_csv(r: &ReportDocument) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut row = |section: &str, criterion: &str, field: &str, value: String| {
        w.write_record([section, criterion, field, value.as_str()])
            .expect("write to Vec");
    };
    row("section", "criterion", "field", "value".into());
    if let Some(e) = &r.entropy {
        row("entropy", "", "k", e.k.to_string());
        for c in &e.criteria {
            row("entropy", &c.name, "entropy", c.entropy.to_string());
            row("entropy", &c.name, "divergence", c.divergence.to_string());
            row("entropy", &c.name, "weight", c.weight.to_string());
            row("entropy", &c.name, "rank", c.rank.to_string());
        }
    }
    if let Some(d) = &r.dwm {
        for c in &d.criteria {
            row("dwm", &c.name, "mean", c.mean.to_string());
            row("dwm", &c.name, "std", c.std.to_string());
            row("dwm", &c.name, "cv", c.cv.to_string());
            row("dwm", &c.name, "weight", c.weight.to_string());
            row("dwm", &c.name, "rank", c.rank.to_string());
        }
    }
    if let Some(c) = &r.comparison {
        if let Some(p) = c.pearson {
            row("comparison", "", "pearson", p.to_string());
        }
        if let Some(s) = c.spearman {
            row("comparison", "", "spearman", s.to_string());
        }
        row("comparison", "", "rank_agreements", c.rank_agreements.to_string());
        row("comparison", "", "top_criterion_agrees", c.top_criterion_agrees.to_string());
    }
    let p = &r.provenance;
    row("provenance", "", "tool", p.tool.clone());
    row("provenance", "", "version", p.version.clone());
    row("provenance", "", "input_sha256", p.input_sha256.clone());
    for n in &p.notes {
        row("provenance", "", "note", n.clone());
    }
    String::from_utf8(w.into_inner().expect("flush Vec")).expect("csv output is utf-8")
}

/// Parses a JSON report produced by [`emit_report`].
pub fn parse_report(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
}

/// `criterion,weight_entropy,weight_dwm` table for grouped bar charts.
pub fn emit_plot_series(criteria: &[String], entropy: &WeightVector, dwm: &WeightVector) -> Result<String> {
    for w in [entropy, dwm] {
        if w.len() != criteria.len() {
            return Err(Error::DimensionMismatch {
                expected: criteria.len(),
                actual: w.len(),
            });
        }
    }
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(["criterion", "weight_entropy", "weight_dwm"])
        .expect("write to Vec");
    for (j, name) in criteria.iter().enumerate() {
        w.write_record([
            name.as_str(),
            &Fixed6::new(entropy.get(j)).to_string(),
            &Fixed6::new(dwm.get(j)).to_string(),
        ])
        .expect("write to Vec");
    }
    Ok(String::from_utf8(w.into_inner().expect("flush Vec")).expect("csv output is utf-8"))
}
