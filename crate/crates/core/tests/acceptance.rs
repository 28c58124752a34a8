//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line per
//! criterion (run with `--nocapture` to see them) and fails if any check
//! inside it misses its tolerance.

mod common;

use std::process::Command;

use common::{max_abs_diff, oracle, tables::*};
use mcdm_weights::{
    compare_methods, dwm_weights, entropy_weights, fixtures, generate_matrix, rank_desc, DecisionMatrix, Error,
    WeightVector,
};

/// Collects named checks for one criterion.
struct Criterion {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Self {
            id,
            title,
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, label: &str, actual: &[f64], expected: &[f64], tol: f64) {
        let diff = max_abs_diff(actual, expected);
        self.check(diff <= tol, || {
            format!("{label}: max |diff| {diff:.3e} > {tol:.0e} (got {actual:?}, want {expected:?})")
        });
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("[PASS] criterion {}: {} ({} checks)", self.id, self.title, self.checks);
        } else {
            println!(
                "[FAIL] criterion {}: {} ({} of {} checks failed)",
                self.id,
                self.title,
                self.failures.len(),
                self.checks
            );
            for f in &self.failures {
                println!("       - {f}");
            }
            panic!("criterion {} failed", self.id);
        }
    }
}

#[test]
fn criterion_1_example1_entropy() {
    let mut c = Criterion::new(1, "example 1 entropy weights and entropies");
    let (w, b) = entropy_weights(&fixtures::example1()).unwrap();
    c.within("weights", w.as_slice(), &EX1_ENTROPY_W, 5e-4);
    c.within("entropy", &b.entropy, &EX1_ENTROPY_E, 5e-4);
    c.finish();
}

#[test]
fn criterion_2_example1_dwm() {
    let mut c = Criterion::new(2, "example 1 DWM weights, means, deviations, CVs");
    let (w, b) = dwm_weights(&fixtures::example1()).unwrap();
    c.within("weights", w.as_slice(), &EX1_DWM_W, 5e-4);
    c.within("mean", &b.mean, &EX1_DWM_MEAN, 1e-4);
    c.within("std", &b.std, &EX1_DWM_STD, 1e-4);
    c.within("cv", &b.cv, &EX1_DWM_CV, 1e-4);
    c.finish();
}

#[test]
fn criterion_3_example1_rank_agreement() {
    let mut c = Criterion::new(3, "example 1 ranks (5,4,3,1,2) under both methods");
    let r = compare_methods(&fixtures::example1()).unwrap();
    c.check(r.entropy_ranks == EX1_RANKS, || format!("entropy ranks {:?}", r.entropy_ranks));
    c.check(r.dwm_ranks == EX1_RANKS, || format!("dwm ranks {:?}", r.dwm_ranks));
    c.finish();
}

fn index_of(m: &DecisionMatrix, name: &str) -> usize {
    m.criterion_names().iter().position(|n| n == name).unwrap()
}

#[test]
fn criterion_4_example2_entropy() {
    let mut c = Criterion::new(4, "example 2 entropy weights and rank order");
    let m = fixtures::example2();
    let (w, _) = entropy_weights(&m).unwrap();
    c.within("weights", w.as_slice(), &EX2_ENTROPY_W, 2e-3);
    for (name, want) in [("F20", 0.2355), ("F25", 0.0824), ("F1", 0.0065)] {
        let got = w.get(index_of(&m, name));
        c.within(name, &[got], &[want], 2e-3);
    }
    let ranks = rank_desc(w.as_slice());
    c.check(ranks == EX2_ENTROPY_RANKS, || format!("entropy ranks {ranks:?}"));
    c.finish();
}

#[test]
fn criterion_5_example2_dwm() {
    let mut c = Criterion::new(5, "example 2 DWM weights and shared top three");
    let m = fixtures::example2();
    let (w, _) = dwm_weights(&m).unwrap();
    c.within("weights", w.as_slice(), &EX2_DWM_W, 2e-3);
    for (name, want) in [("F20", 0.1276), ("F25", 0.0716), ("F5", 0.0261)] {
        let got = w.get(index_of(&m, name));
        c.within(name, &[got], &[want], 2e-3);
    }
    let r = compare_methods(&m).unwrap();
    let want: Vec<usize> = ["F20", "F25", "F21"].iter().map(|n| index_of(&m, n)).collect();
    c.check(r.top_entropy(3) == want, || format!("entropy top 3 {:?}", r.top_entropy(3)));
    c.check(r.top_dwm(3) == want, || format!("dwm top 3 {:?}", r.top_dwm(3)));
    c.finish();
}

#[test]
fn criterion_6_correlation() {
    let mut c = Criterion::new(6, "Pearson(entropy, DWM) = 0.997 / 0.980 within 2e-3");
    let r1 = compare_methods(&fixtures::example1()).unwrap().pearson.unwrap();
    let r2 = compare_methods(&fixtures::example2()).unwrap().pearson.unwrap();
    println!("       example 1: r = {r1:.6}, example 2: r = {r2:.6}");
    c.within("example 1 pearson", &[r1], &[EX1_PEARSON], 2e-3);
    c.within("example 2 pearson", &[r2], &[EX2_PEARSON], 2e-3);
    c.finish();
}

fn on_simplex(w: &WeightVector) -> bool {
    (w.as_slice().iter().sum::<f64>() - 1.0).abs() <= 1e-12 && w.as_slice().iter().all(|v| *v >= 0.0)
}

fn with_rows(m: &DecisionMatrix, rows: Vec<Vec<f64>>) -> DecisionMatrix {
    DecisionMatrix::new(m.alternatives().to_vec(), m.criteria().to_vec(), rows).unwrap()
}

const PROPERTY_TRIALS: u64 = 256;

#[test]
fn criterion_7_property_suite() {
    let mut c = Criterion::new(7, "property suite on 256 seeded matrices");
    for seed in 0..PROPERTY_TRIALS {
        let dims = (2 + (seed % 7) as usize, 1 + (seed % 6) as usize + usize::from(seed % 6 == 0));
        let m = generate_matrix(seed, dims, (1.0, 100.0)).unwrap();
        let rows = m.rows();
        let (we, be) = entropy_weights(&m).unwrap();
        let (wd, _) = dwm_weights(&m).unwrap();

        c.check(on_simplex(&we), || format!("seed {seed}: entropy off simplex {:?}", we.as_slice()));
        c.check(on_simplex(&wd), || format!("seed {seed}: dwm off simplex {:?}", wd.as_slice()));
        c.check(be.entropy.iter().all(|e| (0.0..=1.0 + 1e-12).contains(e)), || {
            format!("seed {seed}: entropy out of range {:?}", be.entropy)
        });

        // rotate rows by one and reverse
        let mut permuted = rows.clone();
        permuted.rotate_left(1);
        permuted.reverse();
        let p = with_rows(&m, permuted);
        c.within(&format!("seed {seed} row perm entropy"), entropy_weights(&p).unwrap().0.as_slice(), we.as_slice(), 1e-12);
        c.within(&format!("seed {seed} row perm dwm"), dwm_weights(&p).unwrap().0.as_slice(), wd.as_slice(), 1e-12);

        let j = (seed as usize) % dims.1;
        let factor = 0.01 * 1.37f64.powi((seed % 30) as i32);
        let scaled = with_rows(
            &m,
            rows.iter()
                .map(|r| {
                    let mut r = r.clone();
                    r[j] *= factor;
                    r
                })
                .collect(),
        );
        c.within(&format!("seed {seed} scale entropy"), entropy_weights(&scaled).unwrap().0.as_slice(), we.as_slice(), 1e-12);
        c.within(&format!("seed {seed} scale dwm"), dwm_weights(&scaled).unwrap().0.as_slice(), wd.as_slice(), 1e-12);

        let constant = 1.0 + (seed % 97) as f64 * 0.731;
        let widened = DecisionMatrix::from_rows(
            m.alternatives(),
            &(0..=dims.1).map(|k| format!("C{k}")).collect::<Vec<_>>(),
            rows.iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.push(constant);
                    r
                })
                .collect(),
        )
        .unwrap();
        let last = dims.1;
        let ew = entropy_weights(&widened).unwrap().0.get(last);
        let dw = dwm_weights(&widened).unwrap().0.get(last);
        c.check(ew == 0.0 && dw == 0.0, || format!("seed {seed}: constant column weights {ew}, {dw}"));

        let (oe, ow) = oracle::entropy(&rows);
        c.within(&format!("seed {seed} entropy oracle E"), &be.entropy, &oe, 1e-12);
        c.within(&format!("seed {seed} entropy oracle w"), we.as_slice(), &ow, 1e-12);
        let (_, _, _, odw) = oracle::dwm(&rows);
        c.within(&format!("seed {seed} dwm oracle"), wd.as_slice(), &odw, 1e-12);

        let neg = generate_matrix(seed, dims, (-100.0, -1.0)).unwrap();
        let (_, _, _, onw) = oracle::dwm(&neg.rows());
        c.within(&format!("seed {seed} dwm oracle (negative)"), dwm_weights(&neg).unwrap().0.as_slice(), &onw, 1e-12);
    }
    c.finish();
}

#[test]
fn criterion_8_negative_data_regime() {
    let mut c = Criterion::new(8, "entropy rejects, DWM weighs, 256 all-negative matrices");
    for seed in 0..PROPERTY_TRIALS {
        let m = generate_matrix(seed, (4, 5), (-50.0, -1.0)).unwrap();
        let e = entropy_weights(&m);
        c.check(matches!(e, Err(Error::NegativeEntry { .. })), || format!("seed {seed}: entropy gave {e:?}"));
        match dwm_weights(&m) {
            Ok((w, _)) => c.check(on_simplex(&w), || format!("seed {seed}: dwm off simplex {:?}", w.as_slice())),
            Err(err) => c.check(false, || format!("seed {seed}: dwm failed with {err}")),
        }
    }
    c.finish();
}

fn cli(args: &[&str], plot: Option<&std::path::Path>) -> (Option<i32>, Vec<u8>, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mcdm-weights"));
    cmd.args(args).env_remove("MCDM_FIXTURES");
    if let Some(p) = plot {
        cmd.arg("--plot").arg(p);
    }
    let o = cmd.output().unwrap();
    let plot_bytes = plot.map(|p| std::fs::read(p).unwrap()).unwrap_or_default();
    (o.status.code(), o.stdout, plot_bytes)
}

#[test]
fn criterion_9_cli_determinism() {
    let mut c = Criterion::new(9, "byte-identical CLI output across repeated runs");
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<&str>> = vec![
        vec!["weigh", "--input", "example1.csv"],
        vec!["weigh", "--input", "example2.csv", "--format", "csv"],
        vec!["weigh", "--input", "negatives.csv", "--method", "dwm"],
        vec!["weigh", "--input", "negatives.csv", "--method", "entropy"],
        vec!["compare", "--input", "example1.csv"],
        vec!["compare", "--input", "example2.csv", "--format", "csv"],
        vec!["bench", "--trials", "500", "--seed", "9"],
        vec!["bench", "--trials", "300", "--seed", "9", "--lo", "-50", "--hi", "-1"],
    ];
    for args in &runs {
        let first = cli(args, None);
        let second = cli(args, None);
        c.check(first == second, || format!("{args:?} differs between runs"));
    }

    for (i, name) in ["example1.csv", "example2.csv"].iter().enumerate() {
        let a = dir.path().join(format!("a{i}.csv"));
        let b = dir.path().join(format!("b{i}.csv"));
        let first = cli(&["compare", "--input", name], Some(&a));
        let second = cli(&["compare", "--input", name], Some(&b));
        c.check(first == second && !first.2.is_empty(), || format!("compare {name} plot output differs"));
    }

    let base = ["bench", "--trials", "1000", "--seed", "42", "--rows", "4", "--cols", "5"];
    let serial = cli(&[&base[..], &["--threads", "1"]].concat(), None);
    for threads in ["2", "4", "0"] {
        let parallel = cli(&[&base[..], &["--threads", threads]].concat(), None);
        c.check(parallel == serial, || format!("bench with --threads {threads} differs from serial"));
    }
    c.check(serial.0 == Some(0), || format!("bench exit {:?}", serial.0));
    c.finish();
}
