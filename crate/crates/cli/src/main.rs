mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::verify::Suite;
use config::{Flags, RunConfig, UsageError};

/// Exact-discretization lattice operators and lattice SUSY quantum mechanics.
///
/// Exit status: 0 on success, 1 on a computational failure or tolerance
/// breach, 2 on a usage error.
#[derive(Debug, Parser)]
#[command(name = "lattice-susy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a property suite and report per-check residuals.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Algebraic spectrum from the shape-invariance rests.
    Spectrum,
    /// Series solution of the zero-mode equation and the sampled ground state.
    GroundState,
    /// Diagonalize the truncated Hamiltonian and compare with the algebraic spectrum.
    Diagonalize,
}

fn run(cli: &Cli) -> anyhow::Result<commands::Outcome> {
    let cfg = RunConfig::resolve(&cli.flags)?;
    let outcome = match cli.command {
        Command::Verify { suite } => commands::verify::run(suite, &cfg)?,
        Command::Spectrum => commands::spectrum::run(&cfg)?,
        Command::GroundState => commands::ground_state::run(&cfg)?,
        Command::Diagonalize => commands::diagonalize::run(&cfg)?,
    };
    print!("{}", outcome.report.render(cfg.format));
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) if outcome.pass => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
