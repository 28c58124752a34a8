//! Criterion weighting for multi-attribute decision matrices.
//!
//! Two data-driven weighting methods are provided side by side:
//!
//! * [`entropy::entropy_weights`]: Shannon entropy of each column's
//!   probability profile; low entropy means high weight.
//! * [`dwm::dwm_weights`]: dispersion-based weighting, proportional to each
//!   column's coefficient of variation. Works on raw data, including
//!   negative values.
//!
//! [`compare`] scores alternatives by simple additive weighting, ranks
//! criteria and correlates the two weight vectors. [`io`] reads matrices
//! from delimited text and writes reports; [`fixtures`] bundles the two
//! reference examples.
//!
//! ```
//! use mcdm_weights::{compare_methods, fixtures};
//!
//! let report = compare_methods(&fixtures::example1()).unwrap();
//! assert_eq!(report.entropy_ranks, vec![5, 4, 3, 1, 2]);
//! assert_eq!(report.entropy_ranks, report.dwm_ranks);
//! ```

pub mod bench;
pub mod compare;
pub mod dwm;
pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod matrix;

pub use compare::{compare_methods, pearson, rank_desc, saw_scores, spearman, ComparisonReport, ScoreVector};
pub use dwm::{dwm_weights, DispersionBreakdown};
pub use entropy::{entropy_weights, normalize_columns, EntropyBreakdown, NormalizedMatrix};
pub use error::{Error, Result};
pub use io::{emit_plot_series, emit_report, parse_matrix, parse_report, ReportDocument, ReportFormat};
pub use matrix::{apply_likert, generate_matrix, CriterionSpec, DecisionMatrix, Direction, LikertMap, Method, WeightVector};
