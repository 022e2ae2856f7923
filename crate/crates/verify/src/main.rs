use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{ArgGroup, Parser, Subcommand};
use torsion_verify::{emit_report, run_all, run_suite, Format, Params, SuiteError, SuiteReport, SUITES};

#[derive(Parser)]
#[command(name = "verify", version, about = "Run exact verification suites and report the results")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the available suite names.
    List,
    /// Run one suite, or every suite with --all.
    #[command(group(ArgGroup::new("target").required(true).args(["suite", "all"])))]
    Run(RunArgs),
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long)]
    suite: Option<String>,
    /// Characteristic or field size.
    #[arg(long, conflicts_with = "all")]
    p: Option<u32>,
    /// Level N of the congruence groups.
    #[arg(long = "N", conflicts_with = "all")]
    n: Option<u64>,
    /// The prime l.
    #[arg(long, conflicts_with = "all")]
    ell: Option<u64>,
    /// Randomized instances per property.
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the JSON report here; with --all, a JSON array of reports.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    all: bool,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(args: RunArgs) -> anyhow::Result<Result<Vec<SuiteReport>, SuiteError>> {
    let params = Params { p: args.p, n: args.n, ell: args.ell, cases: args.cases };
    let reports = match (&args.suite, args.all) {
        (_, true) => run_all(&params, args.seed),
        (Some(name), false) => run_suite(name, &params, args.seed).map(|r| vec![r]),
        (None, false) => unreachable!("clap requires --suite or --all"),
    };
    let Ok(reports) = reports else { return Ok(reports) };
    let mut out = std::io::stdout().lock();
    for r in &reports {
        out.write_all(&emit_report(r, Format::Text))?;
    }
    if let Some(path) = &args.json {
        let bytes = if args.all {
            let mut b = serde_json::to_vec_pretty(&reports)?;
            b.push(b'\n');
            b
        } else {
            emit_report(&reports[0], Format::Json)
        };
        fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Ok(reports))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::List => {
            for name in SUITES {
                println!("{name}");
            }
            ExitCode::SUCCESS
        }
        Command::Run(args) => match run(args) {
            Ok(Ok(reports)) if reports.iter().all(SuiteReport::passed) => ExitCode::SUCCESS,
            Ok(Ok(_)) => ExitCode::from(EXIT_FAIL),
            Ok(Err(e)) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            }
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_FAIL)
            }
        },
    }
}
