use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use strata_cli::{
    check_cache_dir, cmd_elliptic, cmd_strata, cmd_verify, parse_type, CliError, Format, Target,
    VerifyOptions, DEFAULT_SEED,
};
use weyl_strata::brute_force::DEFAULT_BUDGET;

/// Strata of Weyl groups: tables, fibers and verification suites.
#[derive(Debug, Parser)]
#[command(name = "strata", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Seed for sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,

    /// Maximum number of group elements to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,

    /// Allow enumerating W(E7).
    #[arg(long, global = true)]
    opt_in_e7: bool,

    /// Directory for cached group enumerations.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Strata of a classical Weyl group (types B, C, D).
    Strata {
        /// Type letter, optionally with the rank (C or C3).
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Elliptic classes with their unipotent data.
    Elliptic {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Run a verification suite: lengths:G2|F4|E6|E7, tables,
    /// classical-oracle:N, slodowy or all.
    Verify { target: String },
}

fn run(cli: &Cli) -> Result<strata_cli::Report, CliError> {
    match &cli.command {
        Command::Strata { ty, rank } => {
            let (kind, n) = parse_type(ty, *rank)?;
            cmd_strata(kind, n)
        }
        Command::Elliptic { ty, rank } => {
            let (kind, n) = parse_type(ty, *rank)?;
            cmd_elliptic(kind, n)
        }
        Command::Verify { target } => {
            if let Some(dir) = &cli.cache_dir {
                check_cache_dir(dir)?;
            }
            let opts = VerifyOptions {
                seed: cli.seed,
                budget: cli.budget,
                opt_in_e7: cli.opt_in_e7,
                cache_dir: cli.cache_dir.clone(),
            };
            cmd_verify(&target.parse::<Target>()?, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match report.render(cli.format) {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    eprintln!("runtime: {:.3} s", start.elapsed().as_secs_f64());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
