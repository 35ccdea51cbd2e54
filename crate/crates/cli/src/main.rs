//! Batch verification harness.
//!
//! `starreg verify` selects a context, a catalog and a suite, runs every
//! admissible instance, prints a summary, and optionally writes a JSON or
//! CSV report. Exit codes: 0 green, 1 any failing or erroring instance,
//! 2 usage or selection errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use starreg_core::catalog::CatalogSpec;
use starreg_core::star::IdealContext;
use starreg_core::suite::{
    emit_report, run_suite, InstanceStatus, ReportFormat, Suite, SuiteOptions, SuiteReport,
};

#[derive(Parser)]
#[command(name = "starreg", version, about = "Constructive isomorphism-theorem verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite over a catalog of small structures.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: star-regular, property-star, diamond, dqit, zassenhaus,
    /// saturation, good-theory, hopf-axioms, hopf-zassenhaus.
    #[arg(long)]
    suite: String,

    /// Ideal context: pointed (groups) or total (rings, or groups).
    #[arg(long, default_value = "pointed")]
    context: String,

    /// Largest group order in the catalog.
    #[arg(long, default_value_t = 8)]
    groups_max: usize,

    /// Largest ring size in the catalog.
    #[arg(long, default_value_t = 8)]
    rings_max: usize,

    /// Field characteristics for the Hopf suites, comma separated.
    #[arg(long, default_value = "2,3,5")]
    primes: String,

    /// Write the report to this path.
    #[arg(long)]
    report: Option<PathBuf>,

    /// Report format: json or csv.
    #[arg(long, default_value = "json")]
    format: String,

    /// Worker threads for independent instances.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Extra catalog constructors by name (e.g. "Q8,Z2xZ4").
    #[arg(long)]
    extras: Option<String>,

    /// Keep isomorphic duplicates in the catalog.
    #[arg(long)]
    no_dedup: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => match verify(&args) {
            Ok(report) => {
                print_summary(&report);
                if report.is_green() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
        },
    }
}

fn verify(args: &VerifyArgs) -> Result<SuiteReport, String> {
    let suite: Suite = args.suite.parse().map_err(|e| format!("{e}"))?;
    let context = match args.context.as_str() {
        "pointed" => IdealContext::Pointed,
        "total" => IdealContext::Total,
        other => return Err(format!("unknown context {other:?} (pointed|total)")),
    };
    let format: ReportFormat = args.format.parse().map_err(|e| format!("{e}"))?;
    let primes: Vec<u64> = args
        .primes
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad prime {t:?}")))
        .collect::<Result<_, _>>()?;
    if args.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }

    // the pointed and hopf suites sweep groups; the total context sweeps rings
    let mut catalog = if suite.is_hopf() || context == IdealContext::Pointed {
        CatalogSpec::groups(args.groups_max)
    } else {
        CatalogSpec::rings(args.rings_max)
    };
    if let Some(extras) = &args.extras {
        catalog.extras =
            extras.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    }
    catalog.dedup = !args.no_dedup;

    let options = SuiteOptions { primes, jobs: args.jobs };
    let report =
        run_suite(suite, context, &catalog, &options).map_err(|e| format!("{e}"))?;

    if let Some(path) = &args.report {
        emit_report(&report, path, format).map_err(|e| format!("{e}"))?;
    }
    Ok(report)
}

fn print_summary(report: &SuiteReport) {
    for (i, rec) in report.instances.iter().enumerate() {
        if rec.status != InstanceStatus::Pass {
            let kind = match rec.status {
                InstanceStatus::Fail => "FAIL",
                InstanceStatus::Error => "ERROR",
                InstanceStatus::Pass => unreachable!(),
            };
            // full construction trace for debuggability
            println!("{kind} #{i} {} [{}]: {}", rec.object, rec.inputs, rec.witness);
        }
    }
    println!(
        "suite={} context={} pass={} fail={} error={} total={}",
        report.suite,
        report.context,
        report.summary.pass,
        report.summary.fail,
        report.summary.error,
        report.summary.total
    );
}
