//! Command-line interface: indicator tables, oracle verification, the
//! zero audit, and resumable chunked runs for large n.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fsind_core::checkpoint::{chunked_indicator_matrix, CheckpointStore};
use fsind_core::equivalence::{reduce, zero_audit};
use fsind_core::hopf::verify_triple_agreement;
use fsind_core::indicator::{indicator_matrix, IndicatorMatrix};
use fsind_core::perm::GroupContext;
use fsind_core::report::{
    csv_report, json_report, json_to_string, latex_report, zeros_report, OutputFormat,
    ReportConfig,
};

#[derive(Parser)]
#[command(
    name = "fsind",
    about = "Higher Frobenius-Schur indicators of the Drinfel'd double D(S_n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// degree of the symmetric group (3..=10)
    #[arg(long)]
    n: usize,
    /// worker threads (defaults to the number of cores)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full indicator table, reduce it to I-equivalence
    /// classes, and emit a report
    Indicators {
        #[command(flatten)]
        common: Common,
        /// output format: latex | csv | json
        #[arg(long, default_value = "latex")]
        format: OutputFormat,
        /// comma-separated divisor-column counts per table block
        #[arg(long, value_delimiter = ',')]
        columns: Option<Vec<usize>>,
        /// reuse checkpoints from this directory (FSIND_STORE overrides)
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// Cross-check the engine against the brute-force Hopf-algebra oracle
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Audit every zero indicator and report the unexpected ones
    Zeros {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// Run (or resume) the computation one (class, m) task at a time,
    /// checkpointing each task to disk
    Chunked {
        #[command(flatten)]
        common: Common,
        /// checkpoint directory (FSIND_STORE overrides)
        #[arg(long)]
        store: Option<PathBuf>,
        /// skip verified-complete tasks instead of recomputing them
        #[arg(long)]
        resume: bool,
    },
}

fn store_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    std::env::var_os("FSIND_STORE")
        .map(PathBuf::from)
        .or(flag)
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
}

fn check_degree(n: usize, store: &Option<PathBuf>) -> Result<(), String> {
    if !(3..=10).contains(&n) {
        return Err(format!("n = {n} is out of range (3..=10)"));
    }
    if n >= 9 && store.is_none() {
        return Err(format!(
            "n = {n} takes hours to days; run `fsind chunked --n {n} --store DIR` \
             (or set FSIND_STORE) and re-run with --store to assemble reports"
        ));
    }
    Ok(())
}

fn compute_matrix(n: usize, store: &Option<PathBuf>) -> Result<IndicatorMatrix, String> {
    let ctx = GroupContext::new(n);
    match store {
        Some(dir) => {
            let mut store = CheckpointStore::open(dir, n).map_err(|e| e.to_string())?;
            chunked_indicator_matrix(&ctx, &mut store, false, |_, _, _| {})
                .map_err(|e| e.to_string())
        }
        None => indicator_matrix(&ctx).map_err(|e| e.to_string()),
    }
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Indicators {
            common,
            format,
            columns,
            store,
        } => {
            configure_jobs(common.jobs);
            let store = store_dir(store);
            check_degree(common.n, &store)?;
            let matrix = compute_matrix(common.n, &store)?;
            let classes = reduce(&matrix);
            match format {
                OutputFormat::Latex => {
                    let mut config = ReportConfig::new(format, matrix.divisors.len());
                    if let Some(columns) = columns {
                        config = config.with_columns(columns);
                    }
                    print!(
                        "{}",
                        latex_report(&matrix, &classes, &config).map_err(|e| e.to_string())?
                    );
                }
                OutputFormat::Csv => print!("{}", csv_report(&matrix)),
                OutputFormat::Json => {
                    let ctx = GroupContext::new(common.n);
                    let audit = zero_audit(&matrix, &ctx);
                    let report = json_report(&matrix, &classes, &audit);
                    println!("{}", json_to_string(&report).map_err(|e| e.to_string())?);
                }
            }
            Ok(())
        }
        Command::Verify { common } => {
            configure_jobs(common.jobs);
            if !(3..=4).contains(&common.n) {
                return Err(format!(
                    "verify runs the brute-force oracle and supports n = 3 or 4, got {}",
                    common.n
                ));
            }
            let ctx = GroupContext::new(common.n);
            let comparisons = verify_triple_agreement(&ctx)?;
            println!(
                "pass: engine, trace oracle, and counting formula agree on all \
                 {comparisons} (character, m) pairs for D(S_{})",
                common.n
            );
            Ok(())
        }
        Command::Zeros { common, store } => {
            configure_jobs(common.jobs);
            let store = store_dir(store);
            check_degree(common.n, &store)?;
            let matrix = compute_matrix(common.n, &store)?;
            let ctx = GroupContext::new(common.n);
            let audit = zero_audit(&matrix, &ctx);
            print!("{}", zeros_report(&audit));
            Ok(())
        }
        Command::Chunked {
            common,
            store,
            resume,
        } => {
            configure_jobs(common.jobs);
            if !(3..=10).contains(&common.n) {
                return Err(format!("n = {} is out of range (3..=10)", common.n));
            }
            let dir = store_dir(store)
                .ok_or("chunked mode needs --store DIR or FSIND_STORE".to_string())?;
            let ctx = GroupContext::new(common.n);
            let mut store = CheckpointStore::open(&dir, common.n).map_err(|e| e.to_string())?;
            let total = ctx.class_count() * ctx.divisors_of_exponent().len();
            let mut done = 0usize;
            let matrix = chunked_indicator_matrix(&ctx, &mut store, !resume, |i, m, skipped| {
                done += 1;
                let verb = if skipped { "skipped" } else { "computed" };
                eprintln!("[{done}/{total}] class {i}, m = {m}: {verb}");
            })
            .map_err(|e| e.to_string())?;
            println!(
                "complete: {} rows x {} divisors checkpointed in {}",
                matrix.rows.len(),
                matrix.divisors.len(),
                dir.display()
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
