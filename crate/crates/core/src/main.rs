use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mcdm_weights::bench::{run_bench, summary_json, BenchConfig};
use mcdm_weights::fixtures::{self, Source};
use mcdm_weights::io::{emit_plot_series, emit_report, parse_matrix, ReportDocument, ReportFormat};
use mcdm_weights::{compare_methods, dwm_weights, entropy_weights, DecisionMatrix, Error, LikertMap, WeightVector};

const EXIT_INPUT: u8 = 2;
const EXIT_METHOD: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "mcdm-weights", version, about = "Entropy and dispersion-based criterion weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weigh the criteria of one decision matrix.
    Weigh {
        /// Matrix CSV, or the name of a bundled fixture.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Run both methods and compare their weights.
    Compare {
        /// Matrix CSV, or the name of a bundled fixture.
        #[arg(long)]
        input: PathBuf,
        /// Write a criterion,weight_entropy,weight_dwm table here.
        #[arg(long)]
        plot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Monte Carlo agreement benchmark on random matrices.
    Bench {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 5)]
        cols: usize,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = 100.0, allow_hyphen_values = true)]
        hi: f64,
        /// Worker threads; 1 runs serially, 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Entropy,
    Dwm,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_method_error() { EXIT_METHOD } else { EXIT_INPUT },
            message: format!("{}: {e}", e.kind()),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

struct Loaded {
    matrix: DecisionMatrix,
    text: String,
    notes: Vec<String>,
}

fn load(input: &Path) -> Result<Loaded, Failure> {
    let source = fixtures::locate(input)
        .ok_or_else(|| input_failure(format!("input not found: {}", input.display())))?;
    let text = match &source {
        Source::File(p) => fs::read_to_string(p)
            .map_err(|e| input_failure(format!("cannot read {}: {e}", p.display())))?,
        Source::Bundled(name) => fixtures::bundled(name).unwrap_or_default().to_owned(),
    };
    let name = input.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    let notes = match fixtures::bundled(name) {
        Some(bundled) if bundled == text => fixtures::notes(name),
        _ => Vec::new(),
    };
    let matrix = parse_matrix(&text, &LikertMap::default())?;
    Ok(Loaded {
        matrix,
        text,
        notes,
    })
}

fn check_simplex(w: &WeightVector) -> Result<(), Failure> {
    let total: f64 = w.as_slice().iter().sum();
    if (total - 1.0).abs() > 1e-12 || w.as_slice().iter().any(|v| *v < 0.0) {
        return Err(Failure {
            code: EXIT_INTERNAL,
            message: format!("internal: {} weights leave the simplex (sum {total})", w.method()),
        });
    }
    Ok(())
}

fn weigh(input: &Path, method: MethodArg, format: FormatArg) -> Result<String, Failure> {
    let loaded = load(input)?;
    let m = &loaded.matrix;
    let mut doc = ReportDocument::new(m, loaded.text.as_bytes(), loaded.notes.clone());
    if matches!(method, MethodArg::Entropy | MethodArg::Both) {
        let (w, b) = entropy_weights(m)?;
        check_simplex(&w)?;
        doc = doc.with_entropy(&w, &b);
    }
    if matches!(method, MethodArg::Dwm | MethodArg::Both) {
        let (w, b) = dwm_weights(m)?;
        check_simplex(&w)?;
        doc = doc.with_dwm(&w, &b);
    }
    Ok(emit_report(&doc, format.into()))
}

fn compare(input: &Path, plot: Option<&Path>, format: FormatArg) -> Result<String, Failure> {
    let loaded = load(input)?;
    let m = &loaded.matrix;
    let report = compare_methods(m)?;
    check_simplex(&report.entropy)?;
    check_simplex(&report.dwm)?;
    if let Some(path) = plot {
        let series = emit_plot_series(&m.criterion_names(), &report.entropy, &report.dwm)?;
        fs::write(path, series)
            .map_err(|e| input_failure(format!("cannot write {}: {e}", path.display())))?;
    }
    let doc = ReportDocument::new(m, loaded.text.as_bytes(), loaded.notes).with_comparison(&report);
    Ok(emit_report(&doc, format.into()))
}

fn bench(cfg: BenchConfig, threads: usize) -> Result<String, Failure> {
    let summary = if threads == 1 {
        run_bench(&cfg, false)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure {
                code: EXIT_INTERNAL,
                message: format!("internal: thread pool: {e}"),
            })?;
        pool.install(|| run_bench(&cfg, true))?
    };
    Ok(summary_json(&summary))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Weigh {
            input,
            method,
            format,
        } => weigh(&input, method, format),
        Command::Compare {
            input,
            plot,
            format,
        } => compare(&input, plot.as_deref(), format),
        Command::Bench {
            trials,
            seed,
            rows,
            cols,
            lo,
            hi,
            threads,
        } => bench(
            BenchConfig {
                trials,
                seed,
                rows,
                cols,
                lo,
                hi,
            },
            threads,
        ),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("mcdm-weights: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
