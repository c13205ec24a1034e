mod document;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diskpos_core::radius::{bessel_j1_first_zero, maximal_radius, RadiusResult, DEFAULT_PRECISION};
use diskpos_core::scale::DEFAULT_SCALE_TOLERANCE;
use diskpos_core::triangle::{phi, triangle_collection, triangle_minors, triangle_positive, TriangleRadii};
use diskpos_core::verify::{run_all, run_suite, Suite, SuiteReport, DEFAULT_SEED};
use diskpos_core::{
    build_q_matrix, collection_positivity, is_admissible, is_positive_definite_by_eigenvalues,
    is_positive_definite_exact, max_uniform_scale_with, overlap_measure, Certificate, PositivityReport,
};
use serde::Serialize;

use document::CollectionDocument;

#[derive(Parser)]
#[command(
    name = "diskpos",
    version,
    about = "Positivity of disk collections and maximal radii of regular n-gon collections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide positive definiteness of a collection read from a JSON document.
    Check(CheckArgs),
    /// Maximal radii rho_n with bounds and beta_n.
    Rho(RhoArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Three disks centered at the cube roots of unity.
    Triangle(TriangleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Floating,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Input document; reads stdin when absent or "-".
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "floating")]
    mode: Mode,
    /// Relative pivot tolerance for floating mode.
    #[arg(long, default_value_t = diskpos_core::positivity::DEFAULT_TOLERANCE)]
    tol: f64,
    /// Also report the largest uniform radius scale keeping the collection positive.
    #[arg(long)]
    scale: bool,
    /// Decide from the spectrum and report eigenvalues (floating mode).
    #[arg(long)]
    eigen: bool,
    /// Reject inadmissible collections with exit code 3.
    #[arg(long)]
    strict_admissible: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(clap::Args)]
struct RhoArgs {
    /// A single n or an inclusive range such as 2..16.
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: f64,
    /// Shorthand for --format csv.
    #[arg(long)]
    csv: bool,
    /// Append the limits of n rho_n and beta_n.
    #[arg(long)]
    limits: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// core, symmetric, orthopoly, radius, triangle or all.
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: SuiteChoice,
    /// Largest n exercised; defaults per suite.
    #[arg(long)]
    nmax: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(clap::Args)]
struct TriangleArgs {
    r1: f64,
    r2: f64,
    r3: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy)]
enum SuiteChoice {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        Ok(SuiteChoice::All)
    } else {
        s.parse().map(SuiteChoice::One)
    }
}

enum Failure {
    Verification,
    Usage(String),
    Inadmissible(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Inadmissible(_) => 3,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// `x` rounded to 12 significant digits, printed in the shortest form.
fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap();
    format!("{rounded}")
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

#[derive(Serialize)]
struct CheckReport {
    mode: &'static str,
    disks: usize,
    admissible: bool,
    beta: Option<f64>,
    #[serde(flatten)]
    positivity: PositivityReport,
    scale: Option<f64>,
    metadata: std::collections::BTreeMap<String, String>,
}

fn describe_certificate(c: &Certificate) -> String {
    let list = |v: &[f64]| v.iter().map(|x| sig12(*x)).collect::<Vec<_>>().join(", ");
    match c {
        Certificate::Pivots { order, values } => {
            format!("pivots order {order:?} values [{}]", list(values))
        }
        Certificate::FailingPivot { step, index, value } => {
            format!("pivot {} at step {step} on disk {index}", sig12(*value))
        }
        Certificate::NegativeMinor { step, rows, value } => {
            format!("2x2 minor {} on disks {rows:?} at step {step}", sig12(*value))
        }
        Certificate::LeadingMinors(m) => format!("leading minors [{}]", list(m)),
        Certificate::Eigenvalues(e) => format!("eigenvalues [{}]", list(e)),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(usage)?;
        }
    }
    Ok(text)
}

fn cmd_check(args: &CheckArgs) -> Result<String, Failure> {
    if args.format == Format::Csv {
        return Err(usage("check supports --format text or json"));
    }
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(usage(format!("--tol must be positive and finite, got {}", args.tol)));
    }
    let doc = CollectionDocument::parse(&read_input(&args.input)?).map_err(usage)?;
    let floating = doc.floating().map_err(usage)?;
    let (mode, admissible, positivity) = match args.mode {
        Mode::Floating => {
            let report = if args.eigen {
                is_positive_definite_by_eigenvalues(&build_q_matrix(&floating), args.tol)
            } else {
                collection_positivity(&floating, args.tol)
            };
            ("floating", is_admissible(&floating), report.map_err(usage)?)
        }
        Mode::Exact => {
            if args.eigen {
                return Err(usage("--eigen applies to floating mode only"));
            }
            let exact = doc.exact().map_err(usage)?;
            ("exact", exact.is_admissible(), is_positive_definite_exact(&exact))
        }
    };
    if args.strict_admissible && !admissible {
        return Err(Failure::Inadmissible("collection is not admissible: some disk contains another center".into()));
    }
    let beta = if floating.len() > 1 { Some(overlap_measure(&floating).map_err(usage)?) } else { None };
    let scale = if args.scale {
        Some(max_uniform_scale_with(&floating, DEFAULT_SCALE_TOLERANCE, args.tol).map_err(usage)?)
    } else {
        None
    };
    let report =
        CheckReport { mode, disks: floating.len(), admissible, beta, positivity, scale, metadata: doc.metadata };
    if args.format == Format::Json {
        return Ok(to_json(&report) + "\n");
    }
    let mut out = String::new();
    for (k, v) in &report.metadata {
        writeln!(out, "{k}: {v}").unwrap();
    }
    writeln!(out, "mode: {}", report.mode).unwrap();
    writeln!(out, "disks: {}", report.disks).unwrap();
    writeln!(out, "admissible: {}", report.admissible).unwrap();
    writeln!(out, "beta: {}", report.beta.map_or("n/a".into(), sig12)).unwrap();
    writeln!(out, "verdict: {:?}", report.positivity.verdict).unwrap();
    writeln!(out, "certificate: {}", describe_certificate(&report.positivity.certificate)).unwrap();
    writeln!(out, "tolerance: {:e}", report.positivity.tolerance_used).unwrap();
    if let Some(s) = report.scale {
        writeln!(out, "scale: {}", sig12(s)).unwrap();
    }
    Ok(out)
}

fn parse_n_range(s: &str) -> Result<(u64, u64), Failure> {
    let bad = || usage(format!("--n expects N or A..B with 2 <= A <= B, got '{s}'"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if a < 2 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

const RHO_COLUMNS: [&str; 7] = ["n", "rho", "mu", "lower_bound", "upper_bound", "beta", "n_rho"];

fn rho_cells(r: &RadiusResult) -> Vec<String> {
    let opt = |v: Option<f64>| v.map_or(String::new(), sig12);
    vec![
        r.n.to_string(),
        sig12(r.rho),
        sig12(r.mu),
        opt(r.lower_bound),
        opt(r.upper_bound),
        sig12(r.beta),
        sig12(r.n as f64 * r.rho),
    ]
}

#[derive(Serialize)]
struct RhoRow<'a> {
    #[serde(flatten)]
    result: &'a RadiusResult,
    n_rho: f64,
}

#[derive(Serialize)]
struct Limits {
    j11: f64,
    j11_over_pi: f64,
}

#[derive(Serialize)]
struct RhoTable<'a> {
    rows: Vec<RhoRow<'a>>,
    limits: Option<Limits>,
}

fn cmd_rho(args: &RhoArgs) -> Result<String, Failure> {
    let (a, b) = parse_n_range(&args.n)?;
    if !(args.precision > 0.0 && args.precision.is_finite()) {
        return Err(usage(format!("--precision must be positive and finite, got {}", args.precision)));
    }
    let format = if args.csv { Format::Csv } else { args.format };
    let results = (a..=b).map(|n| maximal_radius(n, args.precision)).collect::<Result<Vec<_>, _>>().map_err(usage)?;
    let limits = if args.limits {
        let j11 = bessel_j1_first_zero(1e-15).map_err(usage)?;
        Some(Limits { j11, j11_over_pi: j11 / std::f64::consts::PI })
    } else {
        None
    };

    let mut rows: Vec<Vec<String>> = results.iter().map(rho_cells).collect();
    if let Some(l) = &limits {
        rows.push(vec![
            "limit".into(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            sig12(l.j11_over_pi),
            sig12(l.j11),
        ]);
    }
    match format {
        Format::Json => {
            let rows = results.iter().map(|r| RhoRow { result: r, n_rho: r.n as f64 * r.rho }).collect();
            Ok(to_json(&RhoTable { rows, limits }) + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(RHO_COLUMNS).map_err(usage)?;
            for row in &rows {
                w.write_record(row).map_err(usage)?;
            }
            Ok(String::from_utf8(w.into_inner().map_err(usage)?).expect("csv output is UTF-8"))
        }
        Format::Text => {
            let widths: Vec<usize> = (0..RHO_COLUMNS.len())
                .map(|i| rows.iter().map(|r| r[i].len()).chain([RHO_COLUMNS[i].len()]).max().unwrap())
                .collect();
            let mut out = String::new();
            let header: Vec<String> = RHO_COLUMNS.iter().map(|s| s.to_string()).collect();
            for row in std::iter::once(&header).chain(rows.iter()) {
                let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
            }
            Ok(out)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<String, Failure> {
    if args.format == Format::Csv {
        return Err(usage("verify supports --format text or json"));
    }
    let reports: Vec<SuiteReport> = match args.suite {
        SuiteChoice::All => run_all(args.nmax, args.seed),
        SuiteChoice::One(s) => vec![run_suite(s, args.nmax, args.seed).map_err(usage)?],
    };
    let out = if args.format == Format::Json {
        to_json(&reports) + "\n"
    } else {
        let mut out = String::new();
        for r in &reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{}: {status} ({} checks, {} failures, nmax {}, seed {})",
                r.suite, r.checks, r.failures, r.nmax, r.seed
            )
            .unwrap();
            if let Some(c) = &r.first_counterexample {
                writeln!(out, "  first counterexample: {c}").unwrap();
            }
            for note in &r.notes {
                writeln!(out, "  note: {note}").unwrap();
            }
        }
        out
    };
    if reports.iter().all(SuiteReport::passed) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct TriangleReport {
    radii: [f64; 3],
    squares: TriangleRadii,
    sum_of_squares: f64,
    positive: bool,
    near_boundary: bool,
    phi: f64,
    minors: [f64; 3],
    matrix_verdict: diskpos_core::Verdict,
}

fn cmd_triangle(args: &TriangleArgs) -> Result<String, Failure> {
    if args.format == Format::Csv {
        return Err(usage("triangle supports --format text or json"));
    }
    let (r1, r2, r3) = (args.r1, args.r2, args.r3);
    let squares = TriangleRadii::from_radii(r1, r2, r3).map_err(usage)?;
    let verdict = triangle_positive(r1, r2, r3).map_err(usage)?;
    let (d1, d2, d3) = triangle_minors(squares.x1, squares.x2, squares.x3).map_err(usage)?;
    let generic = collection_positivity(
        &triangle_collection(r1, r2, r3).map_err(usage)?,
        diskpos_core::positivity::DEFAULT_TOLERANCE,
    )
    .map_err(usage)?;
    let report = TriangleReport {
        radii: [r1, r2, r3],
        squares,
        sum_of_squares: squares.sum(),
        positive: verdict.positive,
        near_boundary: verdict.near_boundary,
        phi: phi(squares.x1, squares.x2, squares.x3),
        minors: [d1, d2, d3],
        matrix_verdict: generic.verdict,
    };
    if args.format == Format::Json {
        return Ok(to_json(&report) + "\n");
    }
    let mut out = String::new();
    writeln!(out, "sum of squares: {}", sig12(report.sum_of_squares)).unwrap();
    writeln!(out, "positive: {}", report.positive).unwrap();
    if report.near_boundary {
        writeln!(out, "warning: within rounding of the boundary R1^2 + R2^2 + R3^2 = 3").unwrap();
    }
    writeln!(out, "phi: {}", sig12(report.phi)).unwrap();
    writeln!(out, "minors: {} {} {}", sig12(d1), sig12(d2), sig12(d3)).unwrap();
    writeln!(out, "matrix verdict: {:?}", report.matrix_verdict).unwrap();
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Rho(a) => cmd_rho(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Triangle(a) => cmd_triangle(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Inadmissible(m) => eprintln!("error: {m}"),
                Failure::Verification => eprintln!("error: verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
