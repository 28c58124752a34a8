//! Dispersion-based weighting (DWM).
//!
//! Criteria are weighted in proportion to their coefficient of variation
//! `s_j / |μ_j|`, computed straight from the raw matrix. There is no
//! normalization step, so negative data is fine as long as a column's mean
//! stays away from zero.

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Method, WeightVector};

#[derive(Debug, Clone, PartialEq)]
pub struct DispersionBreakdown {
    pub mean: Vec<f64>,
    /// Population standard deviation (divisor `A`).
    pub std: Vec<f64>,
    pub cv: Vec<f64>,
}

/// Arithmetic mean, accumulated as offsets from the first entry so that a
/// constant column returns that constant exactly.
pub fn column_mean(col: &[f64]) -> f64 {
    let Some(&first) = col.first() else {
        return f64::NAN;
    };
    first + col.iter().map(|x| x - first).sum::<f64>() / col.len() as f64
}

/// Population standard deviation, `sqrt(Σ (x - μ)² / A)`.
pub fn column_std(col: &[f64]) -> f64 {
    let mean = column_mean(col);
    let ss: f64 = col.iter().map(|x| (x - mean).powi(2)).sum();
    (ss / col.len() as f64).sqrt()
}

/// Smallest admissible `|μ|` for a column: `1e-9 · max(1, max |x|)`.
pub fn mean_floor(col: &[f64]) -> f64 {
    1e-9 * col.iter().fold(1.0_f64, |acc, x| acc.max(x.abs()))
}

/// `s / |μ|`, or `None` when `|μ| <= floor`.
pub fn coefficient_of_variation(mean: f64, std: f64, floor: f64) -> Option<f64> {
    (mean.abs() > floor).then(|| std / mean.abs())
}

pub fn dwm_weights(m: &DecisionMatrix) -> Result<(WeightVector, DispersionBreakdown)> {
    let n = m.n_criteria();
    let mut breakdown = DispersionBreakdown {
        mean: Vec::with_capacity(n),
        std: Vec::with_capacity(n),
        cv: Vec::with_capacity(n),
    };
    for j in 0..n {
        let col = m.column(j);
        let mean = column_mean(&col);
        let std = column_std(&col);
        let cv = coefficient_of_variation(mean, std, mean_floor(&col))
            .ok_or(Error::DegenerateMean(j))?;
        breakdown.mean.push(mean);
        breakdown.std.push(std);
        breakdown.cv.push(cv);
    }
    let weights =
        WeightVector::from_scores(Method::Dwm, &breakdown.cv).ok_or(Error::AllColumnsConstant)?;
    Ok((weights, breakdown))
}
