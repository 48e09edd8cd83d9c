use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use equimult::groebner::Budget;
use equimult::report::{run, Check, Report, RunConfig};
use equimult::symgrp::Partition;
use equimult::Error;

#[derive(Parser)]
#[command(name = "equimult", version, about = "Exact verification harness for equivariant multiplicities of orbital varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Rank: partitions of d are checked (1..=5)
    #[arg(long, default_value_t = 3)]
    d: usize,
    /// Partition such as 2,1 (repeatable; default: all partitions of d)
    #[arg(long = "lambda", value_name = "PARTS")]
    lambdas: Vec<String>,
    /// RNG seed; reports are deterministic given the seed
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Cap on Groebner S-pair reductions before giving up
    #[arg(long = "groebner-pair-cap")]
    groebner_pair_cap: Option<usize>,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker thread cap for the (check, lambda) fan-out
    #[arg(long)]
    jobs: Option<usize>,
    /// Sample count for the lattice type check
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the fixed-point convolution identities for both families
    VerifyConvolution(Common),
    /// Verify operator relations and weight-zero specializations
    VerifyRelations(Common),
    /// Decompose orbital varieties and certify the component count
    Orbital(Common),
    /// Check injectivity, stability, Coxeter relations, and characters
    CheckHotta(Common),
    /// Check equivariance of the multiplicity map against the Specht model
    CheckConjecture(Common),
    /// Check that embedded lattice types recover Jordan types
    LatticeCheck(Common),
    /// Run every check
    VerifyAll {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of checks to run
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
}

fn parse_lambda(s: &str) -> Result<Partition, Error> {
    let parts: Result<Vec<usize>, _> =
        s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    match parts {
        Ok(v) if !v.is_empty() => Ok(Partition::new(v)),
        _ => Err(Error::Context(format!("cannot parse partition: {}", s))),
    }
}

fn build_config(common: &Common, checks: Vec<Check>) -> Result<RunConfig, Error> {
    let lambdas = common
        .lambdas
        .iter()
        .map(|s| parse_lambda(s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut budget = Budget::default();
    if let Some(cap) = common.groebner_pair_cap {
        budget.pair_cap = cap;
    }
    Ok(RunConfig {
        d: common.d,
        lambdas,
        checks,
        seed: common.seed,
        budget,
        lattice_samples: common.samples,
        jobs: common.jobs,
    })
}

fn emit(report: &Report, out: &Option<PathBuf>) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    match out {
        Some(path) => std::fs::write(path, text + "\n"),
        None => {
            println!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, checks) = match &cli.command {
        Command::VerifyConvolution(c) => (c, vec![Check::Convolution]),
        Command::VerifyRelations(c) => (c, vec![Check::Relations, Check::SchurweylMatch]),
        Command::Orbital(c) => (c, vec![Check::Orbital]),
        Command::CheckHotta(c) => (c, vec![Check::Hotta]),
        Command::CheckConjecture(c) => (c, vec![Check::Conjecture]),
        Command::LatticeCheck(c) => (c, vec![Check::Lattice]),
        Command::VerifyAll { common, checks } => {
            if checks.is_empty() {
                (common, Check::all())
            } else {
                match checks.iter().map(|s| Check::parse(s)).collect() {
                    Ok(list) => (common, list),
                    Err(e) => {
                        eprintln!("config error: {}", e);
                        return ExitCode::from(2);
                    }
                }
            }
        }
    };
    let config = match build_config(common, checks) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {}", e);
            return ExitCode::from(2);
        }
    };
    match run(&config) {
        Ok(report) => {
            if let Err(e) = emit(&report, &common.out) {
                eprintln!("cannot write report: {}", e);
                return ExitCode::from(2);
            }
            for r in &report.records {
                eprintln!(
                    "{:<16} {:<10} {} ({} ms)",
                    r.check,
                    r.lambda.as_deref().unwrap_or("-"),
                    r.verdict,
                    r.millis
                );
            }
            if report.all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Budget(msg)) => {
            eprintln!("budget exceeded: {}", msg);
            ExitCode::from(3)
        }
        Err(Error::Context(msg)) => {
            eprintln!("config error: {}", msg);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
