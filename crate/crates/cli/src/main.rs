//! `ptm`: compute the digit-sum weighted polynomial families exactly, run
//! the verification suites, emit Prouhet partitions and sweep the bounded
//! conjecture checks.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 usage or configuration
//! error, 3 brute-force budget exceeded.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ptm_core::algebra::{Cyclotomic, MultiPoly, Var};
use ptm_core::conjectures::{self, ConjReport, ConjStatus};
use ptm_core::digitseq::{DigitTuple, SeqSpec};
use ptm_core::error::Error;
use ptm_core::prouhet;
use ptm_core::ptm::{PtmContext, DEFAULT_BUDGET};
use ptm_core::report::VerificationReport;
use ptm_core::verify::{run_all, run_suite, suite_names, SuiteParams};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Budget override honored when no --budget flag is given.
const BUDGET_ENV: &str = "PTM_BUDGET";

#[derive(Parser)]
#[command(
    name = "ptm",
    version,
    about = "Exact computation and machine verification of digit-sum polynomial identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one of the families f (polynomial in x), F (its constant
    /// term) or H (the normalized family) at given indices
    Compute(ComputeArgs),
    /// Run named verification suites ("all" for the whole registry)
    Verify(VerifyArgs),
    /// Partition {0,..,k^n-1} by digit-count parity into halves with equal
    /// power sums below n
    Partition(PartitionArgs),
    /// Sweep one of the bounded conjecture verifiers
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Object to compute: "f", "F" or "H" (case-sensitive)
    object: String,
    /// Named sequence preset: "n", "s2" or "s2+n"
    #[arg(long, conflicts_with = "spec")]
    preset: Option<String>,
    /// JSON file with {"k":..,"dim":..,"P":[[..]],"q":[..]} (exact strings)
    #[arg(long)]
    spec: Option<std::path::PathBuf>,
    /// Base k (used with --preset; defaults to 2)
    #[arg(long)]
    k: Option<u32>,
    /// Root-of-unity order d with d | k, d > 1 (defaults to k)
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Emit every entry with indices up to (m, n) instead of the single cell
    #[arg(long)]
    table: bool,
    /// One JSON object {"m":..,"n":..,"poly":..} per entry
    #[arg(long)]
    json: bool,
    /// Keep basis variables symbolic even for one-dimensional sequences
    #[arg(long)]
    symbolic: bool,
    /// Brute-force term budget (default 2^20, env PTM_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all" for the whole registry
    suite: String,
    /// Restrict multi-base suites to this k
    #[arg(long)]
    k: Option<u32>,
    /// Exact n for suites that support it
    #[arg(long)]
    n: Option<u32>,
    /// Exact r for the r-indexed suites (cor2, cor3)
    #[arg(long)]
    r: Option<u32>,
    /// Upper bound of the swept n-range
    #[arg(long = "max-n")]
    max_n: Option<u32>,
    /// Seed for the pseudo-random sequence family
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of pseudo-random specs in the family suites
    #[arg(long)]
    specs: Option<u32>,
    /// Brute-force term budget (default 2^20, env PTM_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Emit a JSON array of reports (timing zeroed for reproducibility)
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PartitionArgs {
    /// Even base k = 2b
    #[arg(long)]
    k: u32,
    /// Number of base-k digits; power sums agree for exponents below n
    #[arg(long)]
    n: u32,
    /// Comma-separated choice of b distinct digits from 1..k-1, e.g. "1,3"
    #[arg(long)]
    v: String,
    /// Brute-force term budget (default 2^20, env PTM_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Which conjecture to sweep: 1, 2 or 3
    id: u8,
    /// Sweep bound: maximum exponent total (conjectures 1, 2) or maximum
    /// number of expansion terms (conjecture 3)
    #[arg(long = "max-total")]
    max_total: u64,
    /// Conjecture 2: base k (default 2). Conjecture 1: alias for
    /// --max-components
    #[arg(long)]
    k: Option<u32>,
    /// Conjecture 2: root-of-unity order d | k (default k)
    #[arg(long)]
    d: Option<u32>,
    /// Maximum number of exponent-tuple components (default: 3, or 2 for
    /// conjecture 2 with k > 2)
    #[arg(long = "max-components")]
    max_components: Option<u32>,
    /// Brute-force term budget (default 2^20, env PTM_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Accepted for uniformity; conjecture output is always a JSON array
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Partition(args) => cmd_partition(args),
        Command::Conjecture(args) => cmd_conjecture(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::from(EXIT_CONFIG),
            }
        }
    }
}

fn resolve_budget(flag: Option<u64>) -> u64 {
    let value = flag
        .or_else(|| {
            std::env::var(BUDGET_ENV)
                .ok()
                .and_then(|s| s.parse::<u64>().ok())
        })
        .unwrap_or(DEFAULT_BUDGET);
    if value > 1 << 24 {
        eprintln!(
            "warning: budget {value} exceeds 2^24 terms; exact expansion at this size may take very long"
        );
    }
    value
}

fn build_spec(
    preset: &Option<String>,
    path: &Option<std::path::PathBuf>,
    k: Option<u32>,
) -> Result<SeqSpec, Error> {
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
        return SeqSpec::from_json_str(&text);
    }
    let k = k.unwrap_or(2);
    match preset.as_deref().unwrap_or("n") {
        "n" => Ok(SeqSpec::preset_n(k)),
        "s2" => Ok(SeqSpec::preset_digit_sum(k)),
        "s2+n" => Ok(SeqSpec::preset_digit_sum_and_n(k)),
        other => Err(Error::InvalidSpec(format!(
            "unknown preset \"{other}\"; expected n, s2 or s2+n"
        ))),
    }
}

/// Substitute v_j := 1 so one-dimensional values print as plain scalars.
fn scalarize(poly: &MultiPoly) -> MultiPoly {
    let assign: BTreeMap<Var, Cyclotomic> = poly
        .vars()
        .into_iter()
        .filter(|v| matches!(v, Var::V(_)))
        .map(|v| (v, Cyclotomic::one(poly.order())))
        .collect();
    poly.eval_subst(&assign)
}

/// Canonical text with the field order annotated whenever a coefficient
/// lies outside Q, keeping the rendering lossless.
fn render_value(poly: &MultiPoly) -> String {
    let text = poly.render();
    if poly.terms().any(|(_, c)| c.as_rational().is_none()) {
        format!("{text} mod Phi_{}", poly.order())
    } else {
        text
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode, Error> {
    if !matches!(args.object.as_str(), "f" | "F" | "H") {
        return Err(Error::InvalidParameter(format!(
            "unknown object \"{}\"; expected f, F or H",
            args.object
        )));
    }
    let spec = build_spec(&args.preset, &args.spec, args.k)?;
    let d = args.d.unwrap_or_else(|| spec.k());
    let ctx = PtmContext::new(spec, d)?.with_budget(resolve_budget(args.budget));
    let render = |poly: &MultiPoly| -> String {
        if ctx.spec().dim() == 1 && !args.symbolic {
            render_value(&scalarize(poly))
        } else {
            render_value(poly)
        }
    };
    let cells: Vec<(u32, u32)> = if args.table {
        (0..=args.n)
            .flat_map(|n| (0..=args.m).map(move |m| (m, n)))
            .collect()
    } else {
        vec![(args.m, args.n)]
    };
    let mut lines = Vec::new();
    for (m, n) in cells {
        let value = match args.object.as_str() {
            "f" => ctx.f_integrated(m, n),
            "F" => ctx.f_constant(m, n),
            _ => ctx.h_step(m, n),
        };
        let text = render(&value);
        if args.json {
            lines.push(serde_json::json!({"m": m, "n": n, "poly": text}).to_string());
        } else if args.table {
            lines.push(format!("{}[{m},{n}] = {text}", args.object));
        } else {
            lines.push(text);
        }
    }
    for line in lines {
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

// identical configurations must produce byte-identical stdout, so timings
// never appear in the report lines
fn format_report_line(report: &VerificationReport) -> String {
    match &report.first_failure {
        None => format!(
            "{}: verified ({} cases)",
            report.suite, report.cases_checked
        ),
        Some(failure) => {
            let params: Vec<String> = failure
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!(
                "{}: counterexample at {{{}}}: expected {}, got {} ({} cases)",
                report.suite,
                params.join(", "),
                failure.expected,
                failure.actual,
                report.cases_checked
            )
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut params = SuiteParams {
        max_n: args.max_n,
        n: args.n,
        r: args.r,
        k: args.k,
        seed: args.seed,
        budget: resolve_budget(args.budget),
        ..SuiteParams::default()
    };
    if let Some(specs) = args.specs {
        params.specs = specs;
    }
    let reports: Vec<VerificationReport> = if args.suite == "all" {
        run_all(&params)
    } else {
        if !suite_names().contains(&args.suite.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "unknown suite \"{}\"; known suites: all, {}",
                args.suite,
                suite_names().join(", ")
            )));
        }
        vec![run_suite(&args.suite, &params)?]
    };
    if args.json {
        let stripped: Vec<VerificationReport> =
            reports.iter().map(|r| r.without_timing()).collect();
        println!(
            "{}",
            serde_json::to_string(&stripped).expect("serializable")
        );
    } else {
        for report in &reports {
            println!("{}", format_report_line(report));
        }
    }
    if reports.iter().all(|r| r.is_verified()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_COUNTEREXAMPLE))
    }
}

fn cmd_partition(args: PartitionArgs) -> Result<ExitCode, Error> {
    let digits: Result<Vec<u32>, _> = args
        .v
        .split(',')
        .map(|part| part.trim().parse::<u32>())
        .collect();
    let digits = digits.map_err(|e| Error::InvalidDigitTuple(format!("cannot parse --v: {e}")))?;
    let tuple = DigitTuple::new(args.k, digits)?;
    let budget = resolve_budget(args.budget);
    let partition = prouhet::prouhet_partition(args.k, args.n, &tuple, budget)?;
    let mut all_equal = true;
    for m in 0..args.n {
        if !prouhet::power_sum_equal(&partition, m) {
            all_equal = false;
        }
    }
    let payload = serde_json::json!({
        "P": partition.set_p,
        "Q": partition.set_q,
        "verified_up_to_m": i64::from(args.n) - 1,
    });
    println!("{payload}");
    if all_equal {
        Ok(ExitCode::SUCCESS)
    } else {
        // a failed power sum would falsify the partition theorem
        eprintln!("error: power sums differ below n; this contradicts the partition theorem");
        Ok(ExitCode::from(EXIT_COUNTEREXAMPLE))
    }
}

fn cmd_conjecture(args: ConjectureArgs) -> Result<ExitCode, Error> {
    let budget = resolve_budget(args.budget);
    let reports: Vec<ConjReport> = match args.id {
        1 => {
            let components = args.max_components.or(args.k).unwrap_or(3);
            let max_total = u32::try_from(args.max_total)
                .map_err(|_| Error::InvalidParameter("--max-total too large".into()))?;
            conjectures::conj1_sweep(max_total, components, budget)
        }
        2 => {
            let k = args.k.unwrap_or(2);
            let d = args.d.unwrap_or(k);
            let components = args.max_components.unwrap_or(if k == 2 { 3 } else { 2 });
            let max_total = u32::try_from(args.max_total)
                .map_err(|_| Error::InvalidParameter("--max-total too large".into()))?;
            conjectures::conj2_sweep(k, d, max_total, components, budget)?
        }
        3 => conjectures::conj3_sweep(args.max_total, budget),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown conjecture {other}; expected 1, 2 or 3"
            )))
        }
    };
    println!("{}", serde_json::to_string(&reports).expect("serializable"));
    if reports
        .iter()
        .any(|r| r.status == ConjStatus::Counterexample)
    {
        Ok(ExitCode::from(EXIT_COUNTEREXAMPLE))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
