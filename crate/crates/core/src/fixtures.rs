//! Bundled example matrices.
//!
//! The CSV files under `fixtures/` are compiled into the crate. Setting
//! `MCDM_FIXTURES` points lookups at a directory on disk instead.

use std::path::{Path, PathBuf};

use crate::io::parse_matrix;
use crate::matrix::{DecisionMatrix, LikertMap};

pub const FIXTURES_ENV: &str = "MCDM_FIXTURES";

pub const EXAMPLE1_CSV: &str = include_str!("../fixtures/example1.csv");
pub const EXAMPLE2_CSV: &str = include_str!("../fixtures/example2.csv");
pub const NEGATIVES_CSV: &str = include_str!("../fixtures/negatives.csv");

const BUNDLED: [(&str, &str); 3] = [
    ("example1.csv", EXAMPLE1_CSV),
    ("example2.csv", EXAMPLE2_CSV),
    ("negatives.csv", NEGATIVES_CSV),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Data repairs applied to a bundled fixture, recorded in report provenance.
pub fn notes(name: &str) -> Vec<String> {
    let notes: &[&str] = match name {
        "example1.csv" => &[
            "Security resolves to (2,1,4,6) via reverse coding; the published numeric table prints (6,7,4,2)",
            "Hard work reverse-coded as 8 - score",
        ],
        "example2.csv" => &[
            "F15 HMM = 1.14 (raw table prints 1.10; normalized and dispersion tables use 1.14)",
            "published SUM column ignored; totals recomputed",
        ],
        _ => &[],
    };
    notes.iter().map(|s| s.to_string()).collect()
}

pub fn fixture_dir() -> Option<PathBuf> {
    std::env::var_os(FIXTURES_ENV).map(PathBuf::from)
}

/// Where an input came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Bundled(&'static str),
}

/// Resolves an `--input` argument: an existing path wins, then
/// `$MCDM_FIXTURES/<name>`, then a bundled fixture with that file name.
pub fn locate(input: &Path) -> Option<Source> {
    if input.is_file() {
        return Some(Source::File(input.to_path_buf()));
    }
    let name = input.file_name()?.to_str()?;
    if let Some(dir) = fixture_dir() {
        let p = dir.join(name);
        if p.is_file() {
            return Some(Source::File(p));
        }
    }
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, _)| Source::Bundled(n))
}

fn load(text: &str) -> DecisionMatrix {
    parse_matrix(text, &LikertMap::default()).expect("bundled fixture parses")
}

/// Job-choice matrix, 4 alternatives x 5 criteria.
pub fn example1() -> DecisionMatrix {
    load(EXAMPLE1_CSV)
}

/// Shipping-company ratios, 4 alternatives x 21 criteria.
pub fn example2() -> DecisionMatrix {
    load(EXAMPLE2_CSV)
}

pub fn negatives() -> DecisionMatrix {
    load(NEGATIVES_CSV)
}
