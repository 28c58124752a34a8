//! Shannon entropy weighting.
//!
//! Each column is scaled to a probability profile `p_ij = x_ij / Σ_i x_ij`,
//! its entropy is normalized by `ln A` into `[0, 1]`, and criteria are
//! weighted by their divergence `1 - E_j`. A column whose entries are all
//! equal carries no information and gets `E_j = 1`, hence zero weight.

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Method, WeightVector};

/// Column-stochastic matrix derived from a [`DecisionMatrix`].
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    criteria: Vec<String>,
    rows: usize,
    // row-major
    values: Vec<f64>,
}

impl NormalizedMatrix {
    /// Builds a normalized matrix from precomputed proportions, e.g. a
    /// published table. Each column must already sum to one.
    pub fn from_rows(criteria: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let cols = criteria.len();
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                actual: r.len(),
            });
        }
        Ok(Self {
            criteria,
            rows: rows.len(),
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.criteria.len()
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
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyBreakdown {
    /// `1 / ln A`.
    pub k: f64,
    pub entropy: Vec<f64>,
    pub divergence: Vec<f64>,
}

/// Divides each entry by its column total.
pub fn normalize_columns(m: &DecisionMatrix) -> Result<NormalizedMatrix> {
    let (rows, cols) = (m.n_alternatives(), m.n_criteria());
    for i in 0..rows {
        if let Some(j) = m.row(i).iter().position(|&v| v < 0.0) {
            return Err(Error::NegativeEntry { row: i, col: j });
        }
    }
    let totals: Vec<f64> = (0..cols).map(|j| m.column(j).iter().sum()).collect();
    if let Some(j) = totals.iter().position(|&t| t <= 0.0) {
        return Err(Error::ZeroColumn(j));
    }
    let values = (0..rows)
        .flat_map(|i| m.row(i).iter().zip(&totals).map(|(x, t)| x / t))
        .collect();
    Ok(NormalizedMatrix {
        criteria: m.criterion_names(),
        rows,
        values,
    })
}

/// Normalized Shannon entropy `-(1/ln A) Σ p ln p` of one probability
/// column, with `0 ln 0 = 0`. `A` is the column length and must be at least 2.
pub fn column_entropy(p: &[f64]) -> f64 {
    debug_assert!(p.len() >= 2, "entropy needs at least two alternatives");
    let k = 1.0 / (p.len() as f64).ln();
    let sum: f64 = p.iter().filter(|&&v| v > 0.0).map(|&v| v * v.ln()).sum();
    // -0.0 -> 0.0 for one-hot columns
    -k * sum + 0.0
}

/// Entropy weights and the intermediate per-criterion quantities.
pub fn entropy_weights(m: &DecisionMatrix) -> Result<(WeightVector, EntropyBreakdown)> {
    let p = normalize_columns(m)?;
    let a = m.n_alternatives();
    let entropy: Vec<f64> = (0..m.n_criteria())
        .map(|j| {
            let raw = m.column(j);
            if raw.iter().all(|&v| v == raw[0]) {
                1.0
            } else {
                column_entropy(&p.column(j)).clamp(0.0, 1.0)
            }
        })
        .collect();
    let divergence: Vec<f64> = entropy.iter().map(|e| 1.0 - e).collect();
    let weights =
        WeightVector::from_scores(Method::Entropy, &divergence).ok_or(Error::AllColumnsUniform)?;
    Ok((
        weights,
        EntropyBreakdown {
            k: 1.0 / (a as f64).ln(),
            entropy,
            divergence,
        },
    ))
}
