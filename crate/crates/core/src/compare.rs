//! Additive scoring, ranking and method comparison.

use crate::dwm::{dwm_weights, DispersionBreakdown};
use crate::entropy::{entropy_weights, EntropyBreakdown, NormalizedMatrix};
use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Method, WeightVector};

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub method: Method,
    pub scores: Vec<f64>,
}

impl ScoreVector {
    pub fn best(&self) -> usize {
        argmax(&self.scores)
    }
}

/// Simple additive weighting: `v_i = Σ_j w_j p_ij`.
pub fn saw_scores(p: &NormalizedMatrix, w: &WeightVector) -> Result<ScoreVector> {
    if w.len() != p.n_cols() {
        return Err(Error::DimensionMismatch {
            expected: p.n_cols(),
            actual: w.len(),
        });
    }
    let scores = (0..p.n_rows())
        .map(|i| p.row(i).iter().zip(w.as_slice()).map(|(x, w)| x * w).sum())
        .collect();
    Ok(ScoreVector {
        method: w.method(),
        scores,
    })
}

pub(crate) fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

/// 1-based descending ranks; ties go to the lower index first.
pub fn rank_desc(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut ranks = vec![0; values.len()];
    for (r, &i) in order.iter().enumerate() {
        ranks[i] = r + 1;
    }
    ranks
}

/// Product-moment correlation, clamped to `[-1, 1]`.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(Error::TooFewObservations(x.len()));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ConstantVector);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

// Average ranks for ties, as Spearman's coefficient expects.
fn fractional_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

/// Spearman's rank correlation: Pearson over average ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    pearson(&fractional_ranks(x), &fractional_ranks(y))
}

/// Both methods run on one matrix, side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub entropy: WeightVector,
    pub entropy_breakdown: EntropyBreakdown,
    pub dwm: WeightVector,
    pub dwm_breakdown: DispersionBreakdown,
    /// `None` when either weight vector is constant.
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    pub entropy_ranks: Vec<usize>,
    pub dwm_ranks: Vec<usize>,
    /// Criteria holding the same rank under both methods.
    pub rank_agreements: usize,
}

impl ComparisonReport {
    pub fn from_weights(
        (entropy, entropy_breakdown): (WeightVector, EntropyBreakdown),
        (dwm, dwm_breakdown): (WeightVector, DispersionBreakdown),
    ) -> Result<Self> {
        let not_applicable = |r: Result<f64>| match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::ConstantVector) => Ok(None),
            Err(e) => Err(e),
        };
        let pearson = not_applicable(pearson(entropy.as_slice(), dwm.as_slice()))?;
        let spearman = not_applicable(spearman(entropy.as_slice(), dwm.as_slice()))?;
        let entropy_ranks = rank_desc(entropy.as_slice());
        let dwm_ranks = rank_desc(dwm.as_slice());
        let rank_agreements = entropy_ranks
            .iter()
            .zip(&dwm_ranks)
            .filter(|(a, b)| a == b)
            .count();
        Ok(Self {
            entropy,
            entropy_breakdown,
            dwm,
            dwm_breakdown,
            pearson,
            spearman,
            entropy_ranks,
            dwm_ranks,
            rank_agreements,
        })
    }

    /// Criterion indices ordered by entropy rank, first `n`.
    pub fn top_entropy(&self, n: usize) -> Vec<usize> {
        top_by_rank(&self.entropy_ranks, n)
    }

    pub fn top_dwm(&self, n: usize) -> Vec<usize> {
        top_by_rank(&self.dwm_ranks, n)
    }
}

fn top_by_rank(ranks: &[usize], n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..ranks.len()).collect();
    idx.sort_by_key(|&i| ranks[i]);
    idx.truncate(n);
    idx
}

/// Runs both weighers (concurrently) and compares their output.
pub fn compare_methods(m: &DecisionMatrix) -> Result<ComparisonReport> {
    let (entropy, dwm) = rayon::join(|| entropy_weights(m), || dwm_weights(m));
    ComparisonReport::from_weights(entropy?, dwm?)
}
