//! Command-line front end for hierarchyrank.

mod args;
mod commands;
mod error;
mod manifest;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::CliError;
use crate::manifest::RunManifest;

const THREADS_VAR: &str = "HIERARCHYRANK_THREADS";

fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::usage(format!(
                "{THREADS_VAR} must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Compute(e.to_string()))
}

fn dispatch(cli: Cli, argv: &[String]) -> Result<(), CliError> {
    match &cli.command {
        Command::Rank(a) => commands::rank(a, argv),
        Command::Null(a) => commands::null(a, argv),
        Command::Metrics(a) => commands::metrics(a, argv),
        Command::Synth(a) => commands::synth(a, argv),
        Command::Oracle(a) => commands::oracle(a, argv),
        Command::Replay(a) => {
            let manifest = RunManifest::load(&a.manifest)?;
            let args = match &a.out {
                Some(out) => manifest.args_with_out(out),
                None => manifest.args.clone(),
            };
            let cli = Cli::try_parse_from(
                std::iter::once("hierarchyrank".to_string()).chain(args.clone()),
            )
            .map_err(|e| CliError::usage(format!("manifest arguments do not parse: {e}")))?;
            if matches!(cli.command, Command::Replay(_)) {
                return Err(CliError::usage("a manifest cannot record a replay"));
            }
            dispatch(cli, &args)
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match init_threads().and_then(|_| dispatch(cli, &argv)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
