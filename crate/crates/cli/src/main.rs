mod commands;
mod config;
mod error;
mod output;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::RunConfig;
use error::CliError;

/// Spectra and eigenstates of PT-symmetric potentials with imaginary
/// asymptotic saturation (units: hbar = 1, 2m = 1).
#[derive(Debug, Parser)]
#[command(name = "ptsat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues in a rectangle of the complex energy plane
    Spectrum(Common),
    /// Eigenfunction samples at one energy (CSV by default)
    Wavefunction(Common),
    /// Zero contours of Re f and Im f
    Contours(Common),
    /// Cross-check the characteristic-function spectrum against the shooting oracle
    Verify(Common),
}

#[derive(Debug, clap::Args)]
struct Common {
    /// TOML file with the same keys as the long flags (underscores for dashes)
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    run: RunConfig,
}

/// Sidecar next to `out`: psi.csv -> psi.meta.json.
fn sidecar_path(out: &Path) -> PathBuf {
    out.with_extension("meta.json")
}

type Handler = fn(&RunConfig) -> Result<commands::Output, CliError>;

fn run(cli: Cli) -> Result<Option<CliError>, CliError> {
    let (cmd, common): (Handler, Common) = match cli.command {
        Command::Spectrum(c) => (commands::spectrum, c),
        Command::Wavefunction(c) => (commands::wavefunction, c),
        Command::Contours(c) => (commands::contours, c),
        Command::Verify(c) => (commands::verify, c),
    };
    let cfg = match &common.config {
        Some(p) => RunConfig::from_file(p)?.overridden_by(&common.run),
        None => common.run.clone(),
    };
    let out = cmd(&cfg)?;
    match &cfg.out {
        Some(p) => {
            std::fs::write(p, &out.body).map_err(|e| CliError::Config(format!("{}: {e}", p.display())))?;
            if let Some(side) = &out.sidecar {
                let sp = sidecar_path(p);
                std::fs::write(&sp, side).map_err(|e| CliError::Config(format!("{}: {e}", sp.display())))?;
            }
        }
        None => {
            std::io::stdout().write_all(out.body.as_bytes())?;
        }
    }
    Ok(out.failure)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let fail = |e: CliError| {
        eprintln!("error: {e}");
        ExitCode::from(e.exit_code() as u8)
    };
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(e)) | Err(e) => fail(e),
    }
}
