use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use g6_hurwitz::cache::{CACHE_ENV, DEFAULT_CACHE_DIR};
use g6_hurwitz::harness::{self, CoxeterChoice, Report, RunConfig};
use g6_hurwitz::hurwitz::DEFAULT_STATE_CAP;
use g6_hurwitz::{ClassSignature, Mat2};

#[derive(Parser, Debug)]
#[command(name = "g6", version, about = "Hurwitz orbits of reflection factorizations in G6")]
struct Cli {
    /// Worker threads for enumeration and orbit search.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest number of factorizations an orbit search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_CAP)]
    state_cap: usize,

    /// Which Coxeter elements to check.
    #[arg(long, global = true, value_enum, default_value_t = Coxeter::Ab)]
    coxeter: Coxeter,

    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Cache directory for group and base-path tables.
    #[arg(long, global = true, env = CACHE_ENV, default_value = DEFAULT_CACHE_DIR)]
    cache_dir: PathBuf,

    /// Do not read or write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Coxeter {
    /// C = A B only
    Ab,
    /// all four Coxeter elements
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group structure, reflection classes and sub-group checks.
    Facts {
        /// Change-of-basis matrix for the G(4,2,2) check, as [[a, b], [c, d]].
        #[arg(long)]
        conjugator: Option<String>,
    },
    /// Exhaustive orbit verification up to a length.
    Verify {
        #[arg(long)]
        max_len: usize,
    },
    /// Orbit of one standard factorization.
    Orbit {
        /// Class signature n,m,k.
        #[arg(long)]
        sig: ClassSignature,
        #[arg(long)]
        len: usize,
    },
    /// Moves from a factorization to its standard form.
    Normalize {
        /// Comma-separated reflections, e.g. "B,B*A*B" or "r0,r9".
        #[arg(long)]
        factorization: String,
    },
    /// Cache maintenance.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Remove all cache files.
    Clear,
}

fn config(cli: &Cli) -> RunConfig {
    RunConfig {
        cache_dir: (!cli.no_cache).then(|| cli.cache_dir.clone()),
        threads: cli.threads.unwrap_or_else(|| RunConfig::default().threads),
        state_cap: cli.state_cap,
        coxeter_choice: match cli.coxeter {
            Coxeter::Ab => CoxeterChoice::DefaultAb,
            Coxeter::All => CoxeterChoice::AllFour,
        },
        output: cli.output.clone(),
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let cfg = config(cli);
    let report = match &cli.command {
        Command::Facts { conjugator } => {
            let m = conjugator
                .as_deref()
                .map(str::parse::<Mat2>)
                .transpose()
                .context("bad --conjugator")?;
            harness::cmd_facts(&cfg, m.as_ref())?
        }
        Command::Verify { max_len } => harness::cmd_verify(&cfg, *max_len)?,
        Command::Orbit { sig, len } => harness::cmd_orbit(&cfg, *sig, *len)?,
        Command::Normalize { factorization } => harness::cmd_normalize(&cfg, factorization)?,
        Command::Cache {
            action: CacheAction::Clear,
        } => harness::cmd_cache_clear(&cfg)?,
    };
    report.write(&cfg)?;
    Ok(report)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) if report.pass => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
