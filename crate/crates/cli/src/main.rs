use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use pgcover_cli::commands::{self, BenchPlan, Dist, MinsumMode, VerifyOptions};
use pgcover_cli::io::{to_json, InstanceFile, Problem};

/// Move points in a disk onto the vertices of a regular polygon on its boundary.
#[derive(Parser)]
#[command(name = "pgcover", version)]
struct Cli {
    /// Seed for instance generation and the randomized parts of the optimizer.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random instance.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "uniform-disk")]
        dist: Dist,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Can every sensor reach a distinct vertex while moving at most LAMBDA?
    /// Exits 0 if so, 1 if not, 2 on error.
    Decide {
        instance: PathBuf,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest possible maximum movement.
    Optimize {
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest total movement: exact for sensors on the circle, or a 3-approximation.
    Minsum {
        instance: PathBuf,
        #[arg(long, value_enum)]
        mode: MinsumMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the solvers with brute-force references. Exits 0 iff all agree.
    Verify {
        instance: PathBuf,
        /// Run the exhaustive min-max references up to this many sensors.
        #[arg(long, default_value_t = 10)]
        brute_max_n: usize,
        /// Placements for the min-sum grid bound (0 skips it).
        #[arg(long, default_value_t = 1000)]
        grid: usize,
    },
    /// Time the solvers on generated instances and write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        n: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', value_enum, default_value = "minmax-decision,minmax")]
        problems: Vec<Problem>,
        /// Movement cap for minmax-decision.
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, value_enum)]
        dist: Option<Dist>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ok = ExitCode::SUCCESS;
    match cli.command {
        Command::Gen { n, dist, out } => {
            emit(&to_json(&commands::generate(n as usize, cli.seed, dist)), out.as_deref())?;
            Ok(ok)
        }
        Command::Decide { instance, lambda, out } => {
            let sol = commands::decide(&InstanceFile::read(&instance)?, lambda)?;
            emit(&to_json(&sol), out.as_deref())?;
            Ok(if sol.feasible == Some(true) { ok } else { ExitCode::from(1) })
        }
        Command::Optimize { instance, out } => {
            emit(&to_json(&commands::optimize(&InstanceFile::read(&instance)?, cli.seed)?), out.as_deref())?;
            Ok(ok)
        }
        Command::Minsum { instance, mode, out } => {
            emit(&to_json(&commands::minsum(&InstanceFile::read(&instance)?, mode)?), out.as_deref())?;
            Ok(ok)
        }
        Command::Verify { instance, brute_max_n, grid } => {
            let opts = VerifyOptions { brute_max_n, grid, seed: cli.seed };
            let report = commands::verify(&InstanceFile::read(&instance)?, &opts)?;
            for c in report.checks.iter().filter(|c| !c.pass) {
                eprintln!("mismatch in {}: {}", c.name, c.detail);
            }
            emit(&to_json(&report), None)?;
            Ok(if report.pass { ok } else { ExitCode::from(1) })
        }
        Command::Bench { n, seeds, problems, lambda, dist, out } => {
            let plan = BenchPlan {
                ns: n.into_iter().map(|v| v as usize).collect(),
                seeds,
                problems,
                lambda,
                dist,
                pivot_seed: cli.seed,
            };
            let rows = commands::bench(&plan, commands::bench_threads()?)?;
            let mut csv = Vec::new();
            commands::write_csv(&rows, &mut csv)?;
            emit(std::str::from_utf8(&csv)?, out.as_deref())?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
