//! `hillgaps`: band edges, gap residuals and verification reports for Hill
//! operators `-u'' + q(x)u` with 1-periodic real potentials.
//!
//! Exit codes: 0 success, 1 asserted invariant failed, 2 input error,
//! 3 numerical method failure. `HILLGAPS_THREADS` caps worker threads.

mod commands;
mod config;
mod error;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::config::{Cli, Command, RunConfig};
use crate::error::{CliError, CliResult};

fn init_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("HILLGAPS_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|n| *n >= 1).ok_or_else(|| {
        CliError::Input(format!(
            "HILLGAPS_THREADS=`{raw}` is not a positive integer"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> CliResult<()> {
    init_threads()?;
    match cli.command {
        Command::Spectrum(args) => commands::spectrum(&RunConfig::load(args, false)?),
        Command::Gaps(args) => commands::gaps(&RunConfig::load(args, false)?),
        Command::Verify(args) => commands::verify(&RunConfig::load(args, false)?),
        Command::Converge(args) => commands::converge(&RunConfig::load(args, true)?),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hillgaps: {e}");
            e.exit_code()
        }
    }
}
