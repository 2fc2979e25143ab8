//! Command-line harness: runs verification suites and emits tables.
//!
//! Exit status contract: 0 when every relation passes, 1 when any relation
//! fails, 2 on configuration or I/O errors (clap usage errors also exit
//! with 2).

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use qweyl::harness::{
    self, CaseKind, ExperimentConfig, NumberConvention, TableKind, TableRequest,
};
use qweyl::report::VerificationReport;
use qweyl::{QParam, Statistics};

#[derive(Parser)]
#[command(
    name = "qweyl",
    version,
    about = "Verification laboratory for q-deformed oscillator algebras on truncated Fock spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify(VerifyArgs),
    /// Evaluate a scalar or spectral table and write CSV.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    #[value(name = "one-dim")]
    OneDim,
    #[value(name = "sl2-weyl")]
    Sl2Weyl,
    #[value(name = "sl2-clifford")]
    Sl2Clifford,
    #[value(name = "uv-tables")]
    UvTables,
    #[value(name = "covariance")]
    Covariance,
    #[value(name = "invariants")]
    Invariants,
    #[value(name = "all")]
    All,
}

impl From<CaseArg> for CaseKind {
    fn from(value: CaseArg) -> Self {
        match value {
            CaseArg::OneDim => CaseKind::OneDim,
            CaseArg::Sl2Weyl => CaseKind::Sl2Weyl,
            CaseArg::Sl2Clifford => CaseKind::Sl2Clifford,
            CaseArg::UvTables => CaseKind::UvTables,
            CaseArg::Covariance => CaseKind::Covariance,
            CaseArg::Invariants => CaseKind::Invariants,
            CaseArg::All => CaseKind::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    #[value(name = "a+a")]
    AdagA,
    #[value(name = "aa+")]
    AAdag,
}

impl From<ConventionArg> for NumberConvention {
    fn from(value: ConventionArg) -> Self {
        match value {
            ConventionArg::AdagA => NumberConvention::AdagA,
            ConventionArg::AAdag => NumberConvention::AAdag,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "qnumber")]
    QNumber,
    #[value(name = "uv-slN")]
    UvSl,
    #[value(name = "uv-soN")]
    UvSo,
    #[value(name = "spectrum")]
    Spectrum,
}

impl From<KindArg> for TableKind {
    fn from(value: KindArg) -> Self {
        match value {
            KindArg::QNumber => TableKind::QNumber,
            KindArg::UvSl => TableKind::UvSl,
            KindArg::UvSo => TableKind::UvSo,
            KindArg::Spectrum => TableKind::Spectrum,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StatisticsArg {
    Bose,
    Fermi,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON configuration file; command-line flags win on conflict.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Verification case to run.
    #[arg(long, value_enum)]
    case: Option<CaseArg>,

    /// Deformation parameter as q = e^h (exactly one of --q/--h).
    #[arg(long, conflicts_with = "h")]
    q: Option<f64>,

    /// Deformation parameter h (exactly one of --q/--h).
    #[arg(long)]
    h: Option<f64>,

    /// Per-mode occupation cutoff of the bosonic spaces.
    #[arg(long)]
    cutoff: Option<u32>,

    /// Override every relation's default tolerance (must lie in (0, 1)).
    #[arg(long)]
    tolerance: Option<f64>,

    /// Override every guarded residual's guard degree.
    #[arg(long)]
    guard_override: Option<u32>,

    /// Occupation-number reading for the u·v⁻¹ tables.
    #[arg(long, value_enum)]
    number_convention: Option<ConventionArg>,

    /// Report destination; "-" writes to stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// Table kind.
    #[arg(long, value_enum)]
    kind: KindArg,

    /// Deformation parameter as q = e^h (exactly one of --q/--h).
    #[arg(long, conflicts_with = "h")]
    q: Option<f64>,

    /// Deformation parameter h (exactly one of --q/--h).
    #[arg(long)]
    h: Option<f64>,

    /// Grid start (x for qnumber, n for the u·v⁻¹ kinds).
    #[arg(long, default_value_t = 0.0)]
    min: f64,

    /// Grid end, inclusive.
    #[arg(long, default_value_t = 10.0)]
    max: f64,

    /// Grid step.
    #[arg(long, default_value_t = 1.0)]
    step: f64,

    /// Casimir square root l (uv-soN only).
    #[arg(long, default_value_t = 0.5)]
    l: f64,

    /// Fundamental dimension N >= 3 (uv-soN only).
    #[arg(long, default_value_t = 3)]
    dim_n: u32,

    /// Per-mode cutoff (spectrum only).
    #[arg(long, default_value_t = 6)]
    cutoff: u32,

    /// Statistics of the spectrum table.
    #[arg(long, value_enum, default_value_t = StatisticsArg::Bose)]
    statistics: StatisticsArg,

    /// Occupation-number reading for the u·v⁻¹ tables.
    #[arg(long, value_enum, default_value_t = ConventionArg::AdagA)]
    number_convention: ConventionArg,

    /// CSV destination; "-" writes to stdout.
    #[arg(long, default_value = "-")]
    output: String,
}

/// On-disk configuration; every field optional so flags can fill the gaps.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    case: Option<CaseKind>,
    q: Option<f64>,
    h: Option<f64>,
    cutoff: Option<u32>,
    tolerance: Option<f64>,
    guard_override: Option<u32>,
    number_convention: Option<NumberConvention>,
    output_path: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Table(args) => run_table(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_file_config(path: &PathBuf) -> Result<FileConfig, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("config: cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("config: invalid JSON: {e}"))
}

/// Resolves the deformation parameter from file and flags; flags win as a
/// pair, and exactly one of h/q must remain.
fn resolve_parameter(
    flag_q: Option<f64>,
    flag_h: Option<f64>,
    file: &FileConfig,
) -> Result<QParam, String> {
    let (q, h) = if flag_q.is_some() || flag_h.is_some() {
        (flag_q, flag_h)
    } else {
        (file.q, file.h)
    };
    match (q, h) {
        (Some(q), None) => QParam::from_q(q).map_err(|e| format!("q: {e}")),
        (None, Some(h)) => QParam::from_h(h).map_err(|e| format!("h: {e}")),
        (Some(_), Some(_)) => Err("config: exactly one of q and h may be given".to_string()),
        (None, None) => Err("config: one of q and h is required".to_string()),
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let file = match &args.config {
        Some(path) => load_file_config(path)?,
        None => FileConfig::default(),
    };
    let p = resolve_parameter(args.q, args.h, &file)?;
    let case = args
        .case
        .map(CaseKind::from)
        .or(file.case)
        .ok_or_else(|| "config: a case is required".to_string())?;
    let mut config = ExperimentConfig::new(case, p);
    if let Some(cutoff) = args.cutoff.or(file.cutoff) {
        config.cutoff = cutoff;
    }
    config.tolerance = args.tolerance.or(file.tolerance);
    config.guard_override = args.guard_override.or(file.guard_override);
    if let Some(convention) = args
        .number_convention
        .map(NumberConvention::from)
        .or(file.number_convention)
    {
        config.number_convention = convention;
    }
    let output = args.output.or(file.output_path).unwrap_or_else(|| "-".to_string());

    let report = harness::run(&config).map_err(|e| e.to_string())?;
    summarize(&report);
    let body = serde_json::to_string_pretty(&report)
        .map_err(|e| format!("report serialization: {e}"))?;
    write_output(&output, body.as_bytes())?;
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn summarize(report: &VerificationReport) {
    for relation in &report.relations {
        eprintln!(
            "{} {:<44} residual {:>10.3e}  tolerance {:>8.1e}",
            if relation.pass { "PASS" } else { "FAIL" },
            relation.name,
            relation.residual,
            relation.tolerance
        );
    }
    let passed = report.relations.iter().filter(|r| r.pass).count();
    eprintln!(
        "case {}: {passed}/{} relations pass (q = {}, h = {}, cutoff = {})",
        report.case,
        report.relations.len(),
        report.q,
        report.h,
        report.cutoff
    );
}

fn run_table(args: TableArgs) -> Result<ExitCode, String> {
    let p = resolve_parameter(args.q, args.h, &FileConfig::default())?;
    let mut request = TableRequest::new(args.kind.into(), p);
    request.min = args.min;
    request.max = args.max;
    request.step = args.step;
    request.l = args.l;
    request.dim_n = args.dim_n;
    request.cutoff = args.cutoff;
    request.statistics = match args.statistics {
        StatisticsArg::Bose => Statistics::Bose,
        StatisticsArg::Fermi => Statistics::Fermi,
    };
    request.number_convention = args.number_convention.into();

    let table = harness::table(&request).map_err(|e| e.to_string())?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&table.header).map_err(|e| e.to_string())?;
    for row in &table.rows {
        writer.write_record(row).map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    write_output(&args.output, &bytes)?;
    Ok(ExitCode::SUCCESS)
}

fn write_output(target: &str, bytes: &[u8]) -> Result<(), String> {
    if target == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout
            .write_all(bytes)
            .and_then(|_| stdout.write_all(b"\n"))
            .map_err(|e| format!("stdout: {e}"))
    } else {
        fs::write(target, bytes).map_err(|e| format!("output {target}: {e}"))
    }
}
