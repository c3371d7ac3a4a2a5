//! `hecke`: exact character values of the type-A Iwahori-Hecke algebra.
//!
//! Subcommands: `value` (one character), `table` (full table as JSON, CSV or
//! LaTeX), `verify` (identity suites), `bench` (timing report).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

mod render;
mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hecke_core::{character_table, dual_mn, frobenius_oracle, CharCache, Method, Partition};

/// Default upper bound for table weights; HECKE_MAX_N overrides it.
const DEFAULT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Exact Iwahori-Hecke algebra characters in type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dual,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Dual => Method::Dual,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single character value chi^lambda_mu(q)
    Value {
        /// Upper partition, e.g. "3,2,1" ("-" for the empty partition)
        #[arg(long)]
        lambda: String,
        /// Class type, e.g. "4,2" (must have the same weight as lambda)
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = ValueFormat::Plain)]
        format: ValueFormat,
        /// Also run the Frobenius oracle and fail on mismatch
        #[arg(long)]
        check: bool,
    },
    /// Compute the full character table of weight n
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Dual)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Run identity verification suites
    Verify {
        /// One of: all, commutation, lemma, prop23, oracle, q1
        #[arg(long)]
        suite: String,
        /// Largest weight the suites sweep
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
    },
    /// Time full-table computation
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Dual)]
        method: MethodArg,
        /// Number of timed runs; the median is reported
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {}", msg);
            ExitCode::from(1)
        }
    }
}

enum CliError {
    /// Bad input: exit code 2.
    Usage(String),
    /// A computed identity failed: exit code 1.
    Verification(String),
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Value {
            lambda,
            mu,
            format,
            check,
        } => cmd_value(&lambda, &mu, format, check),
        Command::Table { n, method, format } => cmd_table(n, method.into(), format),
        Command::Verify { suite, max_n } => cmd_verify(&suite, max_n),
        Command::Bench { n, method, repeat } => cmd_bench(n, method.into(), repeat),
    }
}

/// Parse a partition argument, warning on stderr when the input was not in
/// canonical descending order.
fn parse_partition_arg(name: &str, input: &str) -> Result<Partition, CliError> {
    let partition: Partition = input
        .parse()
        .map_err(|e| CliError::Usage(format!("--{}: {}", name, e)))?;
    let trimmed = input.trim();
    if !trimmed.is_empty() && trimmed != "-" && partition.to_string() != trimmed {
        eprintln!(
            "warning: --{} {} reordered to canonical form {}",
            name, trimmed, partition
        );
    }
    Ok(partition)
}

fn max_n_guard() -> usize {
    match std::env::var("HECKE_MAX_N") {
        Ok(value) => value.parse().unwrap_or(DEFAULT_MAX_N),
        Err(_) => DEFAULT_MAX_N,
    }
}

fn check_n_bound(n: usize) -> Result<(), CliError> {
    let bound = max_n_guard();
    if n > bound {
        return Err(CliError::Usage(format!(
            "n = {} exceeds the configured maximum {} (override with HECKE_MAX_N)",
            n, bound
        )));
    }
    Ok(())
}

fn cmd_value(
    lambda_arg: &str,
    mu_arg: &str,
    format: ValueFormat,
    check: bool,
) -> Result<(), CliError> {
    let lambda = parse_partition_arg("lambda", lambda_arg)?;
    let mu = parse_partition_arg("mu", mu_arg)?;
    if lambda.weight() != mu.weight() {
        return Err(CliError::Usage(format!(
            "weight mismatch: |{}| = {} but |{}| = {}",
            lambda,
            lambda.weight(),
            mu,
            mu.weight()
        )));
    }
    let mut cache = CharCache::new();
    let value = dual_mn(&lambda, &mu, &mut cache);
    if check {
        let oracle = frobenius_oracle(&lambda, &mu)
            .to_int_poly()
            .map_err(|e| CliError::Verification(format!("oracle value not polynomial: {}", e)))?;
        if oracle != value {
            return Err(CliError::Verification(format!(
                "dual recursion gave {} but the oracle gave {} at ({}, {})",
                value, oracle, lambda, mu
            )));
        }
    }
    match format {
        ValueFormat::Plain => println!("{}", value),
        ValueFormat::Json => {
            #[derive(Serialize)]
            struct ValueJson {
                lambda: String,
                mu: String,
                value: String,
            }
            let out = ValueJson {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
                value: value.to_string(),
            };
            println!("{}", serde_json::to_string(&out).expect("serialization"));
        }
    }
    Ok(())
}

fn cmd_table(n: usize, method: Method, format: TableFormat) -> Result<(), CliError> {
    check_n_bound(n)?;
    let table = character_table(n, method);
    match format {
        TableFormat::Json => println!("{}", table.to_json_string()),
        TableFormat::Csv => print!("{}", render::table_to_csv(&table)),
        TableFormat::Latex => print!("{}", render::table_to_latex(&table)),
    }
    Ok(())
}

fn cmd_verify(suite: &str, max_n: usize) -> Result<(), CliError> {
    check_n_bound(max_n)?;
    let report = suites::run_suite(suite, max_n).map_err(CliError::Usage)?;
    print!("{}", report.text);
    if report.failed {
        Err(CliError::Verification(format!(
            "suite '{}' reported failures",
            suite
        )))
    } else {
        Ok(())
    }
}

fn cmd_bench(n: usize, method: Method, repeat: usize) -> Result<(), CliError> {
    check_n_bound(n)?;
    if repeat == 0 {
        return Err(CliError::Usage("--repeat must be at least 1".to_string()));
    }
    let mut runs_ms = Vec::with_capacity(repeat);
    let mut cells = 0usize;
    for _ in 0..repeat {
        let start = Instant::now();
        let table = character_table(n, method);
        runs_ms.push(start.elapsed().as_secs_f64() * 1e3);
        cells = table.cell_count();
    }
    let mut sorted = runs_ms.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    let median_ms = sorted[sorted.len() / 2];

    #[derive(Serialize)]
    struct BenchJson {
        method: &'static str,
        n: usize,
        cells: usize,
        repeat: usize,
        median_ms: f64,
        runs_ms: Vec<f64>,
    }
    let out = BenchJson {
        method: method.name(),
        n,
        cells,
        repeat,
        median_ms,
        runs_ms,
    };
    println!("{}", serde_json::to_string(&out).expect("serialization"));
    Ok(())
}
