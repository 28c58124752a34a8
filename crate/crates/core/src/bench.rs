//! Seeded Monte Carlo agreement benchmark between the two weighting methods.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compare::compare_methods;
use crate::dwm::dwm_weights;
use crate::entropy::entropy_weights;
use crate::error::Result;
use crate::io::Fixed6;
use crate::matrix::generate_matrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchConfig {
    pub trials: usize,
    pub seed: u64,
    pub rows: usize,
    pub cols: usize,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PearsonSummary {
    pub min: Fixed6,
    pub max: Fixed6,
    pub mean: Fixed6,
    pub median: Fixed6,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub trials: usize,
    pub seed: u64,
    pub rows: usize,
    pub cols: usize,
    pub lo: Fixed6,
    pub hi: Fixed6,
    /// Trials where both methods produced weights.
    pub compared_trials: usize,
    /// Compared trials where a weight vector was constant.
    pub pearson_undefined_trials: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pearson: Option<PearsonSummary>,
    /// Share of compared trials whose heaviest criterion is the same.
    pub rank1_agreement_rate: Fixed6,
    pub entropy_failures: usize,
    pub dwm_failures: usize,
    /// DWM succeeded where entropy failed (the negative-data regime).
    pub dwm_only_trials: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Outcome {
    Both { pearson: Option<f64>, top_agrees: bool },
    EntropyOnly,
    DwmOnly,
    Neither,
}

fn run_trial(cfg: &BenchConfig, seed: u64) -> Result<Outcome> {
    let m = generate_matrix(seed, (cfg.rows, cfg.cols), (cfg.lo, cfg.hi))?;
    Ok(match compare_methods(&m) {
        Ok(r) => Outcome::Both {
            pearson: r.pearson,
            top_agrees: r.entropy.argmax() == r.dwm.argmax(),
        },
        Err(e) if e.is_method_error() => {
            match (entropy_weights(&m).is_ok(), dwm_weights(&m).is_ok()) {
                (true, false) => Outcome::EntropyOnly,
                (false, true) => Outcome::DwmOnly,
                _ => Outcome::Neither,
            }
        }
        Err(e) => return Err(e),
    })
}

/// Per-trial seeds, drawn serially from one stream so the set of matrices
/// does not depend on scheduling.
fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.next_u64()).collect()
}

pub fn run_bench(cfg: &BenchConfig, parallel: bool) -> Result<BenchSummary> {
    // validate up front so a bad config fails even with zero trials
    generate_matrix(cfg.seed, (cfg.rows, cfg.cols), (cfg.lo, cfg.hi))?;
    let seeds = trial_seeds(cfg.seed, cfg.trials);
    let outcomes: Vec<Outcome> = if parallel {
        seeds.par_iter().map(|&s| run_trial(cfg, s)).collect::<Result<_>>()?
    } else {
        seeds.iter().map(|&s| run_trial(cfg, s)).collect::<Result<_>>()?
    };
    Ok(summarize(cfg, &outcomes))
}

// Aggregates in trial-index order.
fn summarize(cfg: &BenchConfig, outcomes: &[Outcome]) -> BenchSummary {
    let mut rs = Vec::new();
    let (mut compared, mut undefined, mut agree) = (0, 0, 0);
    let (mut entropy_failures, mut dwm_failures, mut dwm_only) = (0, 0, 0);
    for o in outcomes {
        match *o {
            Outcome::Both { pearson, top_agrees } => {
                compared += 1;
                agree += usize::from(top_agrees);
                match pearson {
                    Some(r) => rs.push(r),
                    None => undefined += 1,
                }
            }
            Outcome::EntropyOnly => dwm_failures += 1,
            Outcome::DwmOnly => {
                entropy_failures += 1;
                dwm_only += 1;
            }
            Outcome::Neither => {
                entropy_failures += 1;
                dwm_failures += 1;
            }
        }
    }
    let pearson = (!rs.is_empty()).then(|| {
        let mean = rs.iter().sum::<f64>() / rs.len() as f64;
        let mut sorted = rs.clone();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        let median = if n % 2 == 1 {
            sorted[n / 2]
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
        };
        PearsonSummary {
            min: sorted[0].into(),
            max: sorted[n - 1].into(),
            mean: mean.into(),
            median: median.into(),
        }
    });
    let rate = if compared == 0 {
        0.0
    } else {
        agree as f64 / compared as f64
    };
    BenchSummary {
        trials: cfg.trials,
        seed: cfg.seed,
        rows: cfg.rows,
        cols: cfg.cols,
        lo: cfg.lo.into(),
        hi: cfg.hi.into(),
        compared_trials: compared,
        pearson_undefined_trials: undefined,
        pearson,
        rank1_agreement_rate: rate.into(),
        entropy_failures,
        dwm_failures,
        dwm_only_trials: dwm_only,
    }
}

pub fn summary_json(s: &BenchSummary) -> String {
    let mut out = serde_json::to_string_pretty(s).expect("summary serializes");
    out.push('\n');
    out
}
