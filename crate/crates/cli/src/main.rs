//! Suite-runner binary: elaborate definitions, run the requested
//! verification suite, and emit a deterministic JSON or CSV report.
//!
//! Exit codes: 0 when no check fails (inconclusive counts as failure only
//! under `--strict`), 1 when any check fails, 2 on usage, parse or I/O
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gutzmer::{Tolerances, Verdict};
use gutzmer_cli::elab::{elaborate, Value};
use gutzmer_cli::expr::parse_series_expr;
use gutzmer_cli::report;
use gutzmer_cli::suite::{run_suite, SuiteConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for report::Format {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => report::Format::Json,
            Format::Csv => report::Format::Csv,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "gutzmer",
    version,
    about = "Run numerical verification suites over series definitions"
)]
struct Cli {
    /// Definitions file (`name = expression` lines, `#` comments). The
    /// bundled corpus is used when omitted.
    input: Option<PathBuf>,

    /// Suite to run (or `all`).
    #[arg(long, default_value = "all")]
    suite: String,

    /// Truncation order for elaborated series.
    #[arg(long, default_value_t = 32)]
    order: usize,

    /// Relative tolerance overriding both the algebraic and sampled
    /// defaults.
    #[arg(long)]
    tolerance: Option<f64>,

    /// Circle sample count used by the sampling checks.
    #[arg(long, default_value_t = 1024)]
    samples: usize,

    /// Root seed; per-check seeds derive from it deterministically.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Comma-separated list of check radii, strictly increasing.
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0])]
    radii: Vec<f64>,

    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Treat inconclusive checks as failures for the exit code.
    #[arg(long)]
    strict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut tolerances = Tolerances::default();
    if let Some(t) = cli.tolerance {
        if !(t > 0.0) || !t.is_finite() {
            return Err(format!("tolerance must be positive and finite, got {t}"));
        }
        tolerances.algebraic = t;
        tolerances.sampled = t;
    }
    let config = SuiteConfig {
        suite: cli.suite,
        order: cli.order,
        samples: cli.samples,
        seed: cli.seed,
        radii: cli.radii,
        tolerances,
        ..SuiteConfig::default()
    };

    let definitions = match &cli.input {
        Some(path) => Some(
            std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))
                .and_then(|text| parse_definitions(&text, config.order))?,
        ),
        None => None,
    };

    let report = run_suite(&config, definitions.as_deref()).map_err(|e| e.to_string())?;

    for r in &report.results {
        let mut line = format!(
            "[{:<12}] {} (residual {:+.3e}, tolerance {:.3e})",
            r.verdict.as_str(),
            r.name,
            r.residual,
            r.tolerance
        );
        if r.verdict == Verdict::Inconclusive {
            if let Some(reason) = r.notes.first() {
                line.push_str(&format!(" - {reason}"));
            }
        }
        eprintln!("{line}");
    }
    let (pass, fail, inconclusive) = report.summary();
    eprintln!("summary: {pass} pass, {fail} fail, {inconclusive} inconclusive");

    report::emit_report(&report, cli.format.into(), cli.report.as_deref())
        .map_err(|e| format!("cannot write report: {e}"))?;

    if fail > 0 || (cli.strict && inconclusive > 0) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else { return false };
    (first.is_ascii_alphabetic() || first == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Parses `name = expression` lines into elaborated definitions. `#` starts
/// a comment anywhere; blank lines are skipped; names must be unique.
fn parse_definitions(text: &str, order: usize) -> Result<Vec<(String, Value)>, String> {
    let mut defs: Vec<(String, Value)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let lineno = index + 1;
        let stripped = raw.split('#').next().unwrap_or("");
        if stripped.trim().is_empty() {
            continue;
        }
        let Some(eq) = stripped.find('=') else {
            return Err(format!("line {lineno}: expected `name = expression`"));
        };
        let name = stripped[..eq].trim();
        if !valid_name(name) {
            return Err(format!("line {lineno}: `{name}` is not a valid definition name"));
        }
        if defs.iter().any(|(n, _)| n == name) {
            return Err(format!("line {lineno}: duplicate definition `{name}`"));
        }
        let expr_text = &stripped[eq + 1..];
        let expr = parse_series_expr(expr_text).map_err(|e| {
            let col = stripped[..=eq].chars().count() + e.col;
            format!("line {lineno}, column {col}: {}", e.message)
        })?;
        let value = elaborate(&expr, order)
            .map_err(|e| format!("line {lineno}: definition `{name}`: {e}"))?;
        defs.push((name.to_string(), value));
    }
    Ok(defs)
}
