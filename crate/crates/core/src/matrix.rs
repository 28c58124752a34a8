//! Decision-matrix data model.
//!
//! A [`DecisionMatrix`] holds one row per alternative and one column per
//! criterion. Construction goes through [`DecisionMatrix::new`], which
//! enforces the invariants every weighting method relies on: a rectangular
//! grid, finite values, at least two alternatives and unique criterion names.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    #[default]
    Benefit,
    Cost,
}

/// Column metadata. Neither weighting method reads `direction`; it is carried
/// through to reports so downstream tools can apply it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub direction: Direction,
    /// Verbal grades in this column are reflected about the scale midpoint
    /// before entry.
    pub likert_reverse: bool,
}

impl CriterionSpec {
    pub fn benefit(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            direction: Direction::Benefit,
            likert_reverse: false,
        }
    }

    pub fn reversed(mut self) -> Self {
        self.likert_reverse = true;
        self
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    // row-major, alternatives x criteria
    values: Vec<f64>,
}

impl DecisionMatrix {
    /// Validates a raw grid and its labels.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if rows.len() != alternatives.len() {
            return Err(Error::NonRectangular(format!(
                "{} alternative labels but {} rows",
                alternatives.len(),
                rows.len()
            )));
        }
        if criteria.is_empty() {
            return Err(Error::NoCriteria);
        }
        let cols = criteria.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::NonRectangular(format!(
                "row {i} has {} values, expected {cols}",
                row.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue { row: i, col: j });
            }
        }
        if alternatives.len() < 2 {
            return Err(Error::TooFewAlternatives(alternatives.len()));
        }
        let mut seen = HashSet::new();
        for c in &criteria {
            if !seen.insert(c.name.as_str()) {
                return Err(Error::DuplicateCriterionName(c.name.clone()));
            }
        }
        Ok(Self {
            alternatives,
            criteria,
            values: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor with plain benefit criteria.
    pub fn from_rows<S: AsRef<str>>(
        alternatives: &[S],
        criteria: &[S],
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        Self::new(
            alternatives.iter().map(|s| s.as_ref().to_owned()).collect(),
            criteria.iter().map(|s| CriterionSpec::benefit(s.as_ref())).collect(),
            rows,
        )
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn criterion_names(&self) -> Vec<String> {
        self.criteria.iter().map(|c| c.name.clone()).collect()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.criteria.len() + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        let c = self.criteria.len();
        &self.values[row * c..(row + 1) * c]
    }

    pub fn column(&self, col: usize) -> Vec<f64> {
        self.values
            .iter()
            .skip(col)
            .step_by(self.criteria.len())
            .copied()
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.values
            .chunks(self.criteria.len())
            .map(<[f64]>::to_vec)
            .collect()
    }
}

/// Ordered verbal grades with strictly increasing positive scores.
#[derive(Debug, Clone, PartialEq)]
pub struct LikertMap {
    grades: Vec<(String, f64)>,
}

impl LikertMap {
    pub fn new<S: Into<String>>(grades: impl IntoIterator<Item = (S, f64)>) -> Result<Self> {
        let grades: Vec<(String, f64)> = grades.into_iter().map(|(g, s)| (g.into(), s)).collect();
        if grades.is_empty() {
            return Err(Error::InvalidLikertMap("no grades".into()));
        }
        if let Some((g, s)) = grades.iter().find(|(_, s)| !(s.is_finite() && *s > 0.0)) {
            return Err(Error::InvalidLikertMap(format!(
                "grade {g:?} has non-positive score {s}"
            )));
        }
        if grades.windows(2).any(|w| w[1].1 <= w[0].1) {
            return Err(Error::InvalidLikertMap(
                "scores must be strictly increasing".into(),
            ));
        }
        let mut seen = HashSet::new();
        for (g, _) in &grades {
            if !seen.insert(normalize_grade(g)) {
                return Err(Error::InvalidLikertMap(format!("duplicate grade {g:?}")));
            }
        }
        Ok(Self { grades })
    }

    /// The seven-point scale from "Extremely low" (1) to "Extremely high" (7).
    pub fn seven_point() -> Self {
        Self::new([
            ("Extremely low", 1.0),
            ("Low", 2.0),
            ("Relatively low", 3.0),
            ("Medium", 4.0),
            ("Relatively high", 5.0),
            ("High", 6.0),
            ("Extremely high", 7.0),
        ])
        .expect("built-in scale is valid")
    }

    pub fn grades(&self) -> &[(String, f64)] {
        &self.grades
    }

    pub fn min_score(&self) -> f64 {
        self.grades[0].1
    }

    pub fn max_score(&self) -> f64 {
        self.grades[self.grades.len() - 1].1
    }

    /// Matching ignores case and surrounding/repeated whitespace.
    pub fn score(&self, grade: &str) -> Option<f64> {
        let key = normalize_grade(grade);
        self.grades
            .iter()
            .find(|(g, _)| normalize_grade(g) == key)
            .map(|&(_, s)| s)
    }

    /// Reflects a score about the scale midpoint: `(max + min) - score`.
    pub fn reverse(&self, score: f64) -> f64 {
        self.max_score() + self.min_score() - score
    }
}

impl Default for LikertMap {
    fn default() -> Self {
        Self::seven_point()
    }
}

fn normalize_grade(g: &str) -> String {
    g.split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

/// Converts a verbal grade to its numeric score, reverse-coded on request.
pub fn apply_likert(grade: &str, map: &LikertMap, reverse: bool) -> Result<f64> {
    let score = map
        .score(grade)
        .ok_or_else(|| Error::UnknownGrade(grade.trim().to_owned()))?;
    Ok(if reverse { map.reverse(score) } else { score })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Entropy,
    Dwm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Entropy => "entropy",
            Method::Dwm => "dwm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Criterion weights on the simplex: every entry nonnegative, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    method: Method,
    weights: Vec<f64>,
}

impl WeightVector {
    /// Normalizes nonnegative scores by their sum. Returns `None` when the
    /// scores sum to zero or any score is negative or non-finite.
    pub fn from_scores(method: Method, scores: &[f64]) -> Option<Self> {
        if scores.iter().any(|s| !s.is_finite() || *s < 0.0) {
            return None;
        }
        let total: f64 = scores.iter().sum();
        if total <= 0.0 {
            return None;
        }
        Some(Self {
            method,
            weights: scores.iter().map(|s| s / total).collect(),
        })
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, j: usize) -> f64 {
        self.weights[j]
    }

    /// Index of the heaviest criterion, lowest index on ties.
    pub fn argmax(&self) -> usize {
        crate::compare::argmax(&self.weights)
    }
}

/// Uniform random matrix from a seeded ChaCha8 stream.
///
/// Alternatives are labelled `A1..`, criteria `C1..`. Output depends only on
/// the arguments.
pub fn generate_matrix(seed: u64, dims: (usize, usize), range: (f64, f64)) -> Result<DecisionMatrix> {
    let (rows, cols) = dims;
    let (lo, hi) = range;
    if rows < 2 || cols < 1 {
        return Err(Error::BadDims { rows, cols });
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::BadRange { lo, hi });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(lo..=hi)).collect())
        .collect();
    let alternatives = (1..=rows).map(|i| format!("A{i}")).collect();
    let criteria = (1..=cols)
        .map(|j| CriterionSpec::benefit(format!("C{j}")))
        .collect();
    DecisionMatrix::new(alternatives, criteria, grid)
}
