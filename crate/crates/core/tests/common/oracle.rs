//! Brute-force reference implementations, written straight from the
//! textbook formulas with naive loops over a plain `Vec<Vec<f64>>`. They
//! share no code with the library.

/// Entropy weights: p = x / column sum, E = -(1/ln A) Σ p ln p, d = 1 - E,
/// w = d / Σ d. Returns (E, w).
pub fn entropy(grid: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let a = grid.len();
    let c = grid[0].len();
    let mut e = vec![0.0; c];
    for j in 0..c {
        let mut total = 0.0;
        for row in grid {
            total += row[j];
        }
        let mut acc = 0.0;
        for row in grid {
            let p = row[j] / total;
            if p > 0.0 {
                acc += p * p.ln();
            }
        }
        e[j] = -acc / (a as f64).ln();
    }
    let d: Vec<f64> = e.iter().map(|v| 1.0 - v).collect();
    let sum: f64 = d.iter().sum();
    (e, d.iter().map(|v| v / sum).collect())
}

/// Dispersion weights: μ = Σx / A, s = sqrt(Σ(x-μ)² / A), cv = s / |μ|,
/// w = cv / Σ cv. Returns (μ, s, cv, w).
pub fn dwm(grid: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) {
    let a = grid.len() as f64;
    let c = grid[0].len();
    let (mut mu, mut s, mut cv) = (vec![0.0; c], vec![0.0; c], vec![0.0; c]);
    for j in 0..c {
        let mut total = 0.0;
        for row in grid {
            total += row[j];
        }
        mu[j] = total / a;
        let mut ss = 0.0;
        for row in grid {
            ss += (row[j] - mu[j]) * (row[j] - mu[j]);
        }
        s[j] = (ss / a).sqrt();
        cv[j] = s[j] / mu[j].abs();
    }
    let sum: f64 = cv.iter().sum();
    let w = cv.iter().map(|v| v / sum).collect();
    (mu, s, cv, w)
}

/// Pearson r from the raw-moment formula.
pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for i in 0..x.len() {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    (n * sxy - sx * sy) / ((n * sxx - sx * sx).sqrt() * (n * syy - sy * sy).sqrt())
}

/// Rank by counting strictly larger entries plus earlier equal ones.
pub fn ranks(v: &[f64]) -> Vec<usize> {
    (0..v.len())
        .map(|i| {
            1 + (0..v.len())
                .filter(|&k| v[k] > v[i] || (v[k] == v[i] && k < i))
                .count()
        })
        .collect()
}
