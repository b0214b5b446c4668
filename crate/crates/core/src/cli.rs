//! Command-line front end: coefficient tables, identity verification and
//! certification, with CSV/JSON output.
//!
//! Exit codes: 0 everything passed, 1 a check or certificate failed,
//! 2 invalid invocation, 3 capacity exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use crate::derivpoly::{self, cvijovic_check, family_poly, special_values, transforms_check, Family};
use crate::error::{Error, Result};
use crate::eulerian::{eulerian_fast, verify_stembridge, CoxeterType, DEFAULT_BRUTE_CAP};
use crate::poly::Poly;
use crate::rational;
use crate::report::Report;
use crate::rootcert::{
    check_compatibility, compatibility_suite, derivative_interleaving_suite, type_d_real_rooted_suite,
    verify_zero_chains, Certificate, SuiteItem, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use crate::series::OrderKTable;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "eulercert", version, about = "Exact Eulerian and derivative polynomials with real-root certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "EULERCERT_FORMAT")]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true, env = "EULERCERT_OUT")]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "EULERCERT_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Coefficient table of one family for n = 0..=n_max.
    Table {
        /// A, B, D, P (Ptilde), Q (Qtilde), a, b or d
        #[arg(long, env = "EULERCERT_FAMILY")]
        family: String,
        #[arg(long, env = "EULERCERT_N_MAX")]
        n_max: usize,
    },
    /// Run an identity suite and emit its report.
    Verify {
        #[arg(long, value_enum, env = "EULERCERT_SUITE")]
        suite: Suite,
        #[arg(long, env = "EULERCERT_N_MAX")]
        n_max: Option<usize>,
        /// Largest n enumerated by brute force.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP, env = "EULERCERT_BRUTE_CAP")]
        brute_cap: usize,
        #[arg(long, default_value_t = derivpoly::DEFAULT_SERIES_ORDER, env = "EULERCERT_SERIES_ORDER")]
        series_order: usize,
    },
    /// Produce certificates for a family of claims.
    Certify {
        #[arg(long, value_enum, env = "EULERCERT_CHECK")]
        check: CheckKind,
        /// A single index (overrides --n-max).
        #[arg(long, env = "EULERCERT_N")]
        n: Option<usize>,
        #[arg(long, env = "EULERCERT_N_MAX")]
        n_max: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED, env = "EULERCERT_SEED")]
        seed: u64,
        /// Random combinations per compatibility certificate.
        #[arg(long, default_value_t = DEFAULT_SAMPLES, env = "EULERCERT_SAMPLES")]
        samples: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Stembridge,
    SpecialValues,
    Cvijovic,
    Transforms,
    All,
}

impl Suite {
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Stembridge => 8,
            Suite::SpecialValues | Suite::Cvijovic | Suite::Transforms | Suite::All => 12,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// `D_n` real-rooted with negative roots
    Rz,
    /// interleaving of the derivative polynomials
    Interleave,
    /// zero chains of `a_n`, `b_n`, `d_n`
    Chains,
    /// compatibility of `{a_(n-1), b_n, d_n}` and `{A_(n-1), B_n, D_n}`
    Compat,
}

impl CheckKind {
    pub fn default_n_max(self) -> usize {
        match self {
            CheckKind::Rz => 30,
            CheckKind::Interleave => 20,
            CheckKind::Chains => 10,
            CheckKind::Compat => 15,
        }
    }
}

/// Either an Eulerian type or a derivative-polynomial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFamily {
    Eulerian(CoxeterType),
    Derivative(Family),
}

impl std::str::FromStr for TableFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "B" | "D" => Ok(TableFamily::Eulerian(s.parse()?)),
            _ => Ok(TableFamily::Derivative(s.parse()?)),
        }
    }
}

impl TableFamily {
    fn label(self) -> String {
        match self {
            TableFamily::Eulerian(t) => t.to_string(),
            TableFamily::Derivative(f) => f.to_string(),
        }
    }

    fn min_index(self) -> usize {
        match self {
            TableFamily::Eulerian(_) => 0,
            TableFamily::Derivative(f) => f.min_index(),
        }
    }

    fn poly(self, n: usize) -> Result<Poly> {
        match self {
            TableFamily::Eulerian(t) => eulerian_fast(t, n),
            TableFamily::Derivative(f) => family_poly(f, n),
        }
    }
}

/// Everything a command writes, plus whether it passed.
pub struct Outcome {
    pub body: String,
    pub passed: bool,
}

#[derive(Serialize)]
struct TableRow {
    family: String,
    n: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct CertifiedItem<'a> {
    label: &'a str,
    n: usize,
    certificate: &'a Certificate,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output always serializes");
    s.push('\n');
    s
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
}

pub fn cmd_table(family: &str, n_max: usize, format: Format) -> Result<Outcome> {
    let fam: TableFamily = family.parse()?;
    let polys: Vec<(usize, Poly)> = (fam.min_index()..=n_max)
        .map(|n| fam.poly(n).map(|p| (n, p)))
        .collect::<Result<_>>()?;
    let body = match format {
        Format::Json => to_json(
            &polys
                .iter()
                .map(|(n, p)| TableRow { family: fam.label(), n: *n, coeffs: p.to_strings() })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let width = polys.iter().map(|(_, p)| p.coeffs().len()).max().unwrap_or(0);
            let header = std::iter::once("n".to_string()).chain((0..width).map(|k| format!("k{k}"))).collect();
            let rows = polys.iter().map(|(n, p)| {
                std::iter::once(n.to_string()).chain(p.coeffs().iter().map(rational::to_cell)).collect()
            });
            csv_string(std::iter::once(header).chain(rows))
        }
    };
    Ok(Outcome { body, passed: true })
}

pub fn run_suite(suite: Suite, n_max: usize, brute_cap: usize, series_order: usize) -> Result<Report> {
    let mut report = Report::new();
    let all = suite == Suite::All;
    if suite == Suite::Stembridge {
        report.extend(verify_stembridge(n_max, brute_cap)?);
    } else if all {
        // enumeration cost grows like 2^n n!; keep the combined run short
        let brute_max = n_max.min(Suite::Stembridge.default_n_max()).min(brute_cap);
        report.extend(verify_stembridge(brute_max, brute_cap)?);
    }
    if all || suite == Suite::SpecialValues {
        report.extend(special_values(n_max, series_order)?);
    }
    if all || suite == Suite::Cvijovic {
        let table = OrderKTable::new(n_max + 1)?;
        for n in 1..=n_max {
            report.extend(cvijovic_check(n, &table)?);
        }
    }
    if all || suite == Suite::Transforms {
        report.extend(transforms_check(n_max)?);
    }
    Ok(report)
}

fn report_output(report: &Report, format: Format) -> Outcome {
    let body = match format {
        Format::Json => to_json(report),
        Format::Csv => csv_string(
            std::iter::once(["check", "n", "expected", "got", "pass"].map(String::from).to_vec()).chain(
                report
                    .entries
                    .iter()
                    .map(|e| vec![e.check.clone(), e.n.to_string(), e.expected.clone(), e.got.clone(), e.pass.to_string()]),
            ),
        ),
    };
    Outcome { body, passed: report.all_passed() }
}

pub fn cmd_verify(suite: Suite, n_max: usize, brute_cap: usize, series_order: usize, format: Format) -> Result<Outcome> {
    Ok(report_output(&run_suite(suite, n_max, brute_cap, series_order)?, format))
}

fn items_output(items: &[SuiteItem], format: Format) -> Outcome {
    let body = match format {
        Format::Json => to_json(
            &items
                .iter()
                .map(|i| CertifiedItem { label: &i.label, n: i.n, certificate: &i.certificate })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => csv_string(
            std::iter::once(["claim", "n", "label", "verdict"].map(String::from).to_vec()).chain(items.iter().map(|i| {
                let claim = serde_json::to_value(i.certificate.claim).expect("claim serializes");
                let verdict = serde_json::to_value(i.certificate.verdict).expect("verdict serializes");
                vec![
                    claim.as_str().unwrap_or_default().to_string(),
                    i.n.to_string(),
                    i.label.clone(),
                    verdict.as_str().unwrap_or_default().to_string(),
                ]
            })),
        ),
    };
    Outcome { body, passed: items.iter().all(|i| i.certificate.passed()) }
}

pub fn cmd_certify(
    check: CheckKind,
    n: Option<usize>,
    n_max: usize,
    seed: u64,
    samples: usize,
    format: Format,
) -> Result<Outcome> {
    let lo = if check == CheckKind::Chains { 1 } else { 2 };
    let range = match n {
        Some(n) => n..=n,
        None => lo..=n_max,
    };
    if range.start() < &lo {
        return Err(Error::Domain(format!("n must be at least {lo} for this check")));
    }
    let keep = |items: Vec<SuiteItem>| -> Vec<SuiteItem> { items.into_iter().filter(|i| range.contains(&i.n)).collect() };
    let end = *range.end();
    Ok(match check {
        CheckKind::Rz => items_output(&keep(type_d_real_rooted_suite(end)?), format),
        CheckKind::Interleave => items_output(&keep(derivative_interleaving_suite(end)?), format),
        CheckKind::Compat => match n {
            Some(n) => {
                let transformed = [
                    family_poly(Family::TransformedA, n - 1)?,
                    family_poly(Family::TransformedB, n)?,
                    family_poly(Family::TransformedD, n)?,
                ];
                let eulerian = [
                    eulerian_fast(CoxeterType::A, n - 1)?,
                    eulerian_fast(CoxeterType::B, n)?,
                    eulerian_fast(CoxeterType::D, n)?,
                ];
                let items = vec![
                    SuiteItem {
                        label: "{a_(n-1), b_n, d_n} compatible".into(),
                        n,
                        certificate: check_compatibility(&transformed, samples, seed)?,
                    },
                    SuiteItem {
                        label: "{A_(n-1), B_n, D_n} compatible".into(),
                        n,
                        certificate: check_compatibility(&eulerian, samples, seed)?,
                    },
                ];
                items_output(&items, format)
            }
            None => items_output(&compatibility_suite(end, samples, seed)?, format),
        },
        CheckKind::Chains => {
            let mut report = verify_zero_chains(end)?;
            report.entries.retain(|e| range.contains(&e.n));
            report_output(&report, format)
        }
    })
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let format = cli.common.format;
    match &cli.command {
        Command::Table { family, n_max } => cmd_table(family, *n_max, format),
        Command::Verify { suite, n_max, brute_cap, series_order } => {
            let n_max = n_max.unwrap_or(suite.default_n_max());
            cmd_verify(*suite, n_max, *brute_cap, *series_order, format)
        }
        Command::Certify { check, n, n_max, seed, samples } => {
            let n_max = n_max.unwrap_or(check.default_n_max());
            cmd_certify(*check, *n, n_max, *seed, *samples, format)
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn write_output(path: Option<&PathBuf>, body: &str) -> io::Result<()> {
    match path {
        Some(p) => File::create(p)?.write_all(body.as_bytes()),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

/// Parse arguments, run, write output and map the result to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS });
        }
    };
    if let Some(jobs) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("eulercert: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match execute(&cli) {
        Ok(outcome) => {
            if let Err(e) = write_output(cli.common.out.as_ref(), &outcome.body) {
                eprintln!("eulercert: cannot write output: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(if outcome.passed { EXIT_PASS } else { EXIT_FAILED })
        }
        Err(e) => {
            eprintln!("eulercert: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
