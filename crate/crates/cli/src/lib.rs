// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `scqr-core`: reads a JSON configuration,
//! runs one experiment and writes CSV or JSON.
//!
//! Exit status is 0 on success, 1 for configuration errors, 2 for numerical
//! failures and 3 for I/O errors. Failures also print a one-line JSON record
//! on standard error.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use scqr_core::experiments::{ConfigLabel, DEFAULT_GRID_POINTS, GRID_MAX, GRID_MIN};

pub use commands::{run, Command, GridSpec, RunManifest};
pub use config::parse_config;
pub use error::{CliError, ConfigError};
pub use output::{emit_sweep_csv, fmt_g12, parse_sweep_csv, sweep_csv};

#[derive(Debug, Parser)]
#[command(
    name = "scqr",
    version,
    about = "Three-qubit absorption refrigerator simulations"
)]
pub struct Cli {
    /// JSON configuration; defaults to the reference parameters
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write data here instead of standard output
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Override a configuration value, e.g. `reservoirs.1.temperature=0.5`
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    pub overrides: Vec<String>,
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Explicit comma-separated hot temperatures
    #[arg(long, conflicts_with_all = ["points", "th_min", "th_max"])]
    pub grid: Option<String>,
    /// Number of log-spaced hot temperatures
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub points: usize,
    #[arg(long, default_value_t = GRID_MIN)]
    pub th_min: f64,
    #[arg(long, default_value_t = GRID_MAX)]
    pub th_max: f64,
}

impl GridArgs {
    fn spec(self) -> GridSpec {
        match self.grid {
            Some(list) => GridSpec::Explicit(list),
            None => GridSpec::LogSpaced {
                min: self.th_min,
                max: self.th_max,
                points: self.points,
            },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Steady state and qubit temperatures as JSON
    Steady,
    /// T1 against the hot temperature as CSV
    Sweep {
        /// Reservoir kinds, e.g. FBF; defaults to the configuration's
        #[arg(long)]
        label: Option<ConfigLabel>,
        /// Cold temperature; defaults to the configuration's
        #[arg(long)]
        t_c: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Comparison tables: 1-3 cooling percentages, 4 exchange rates
    Tables {
        #[arg(long)]
        which: u8,
        /// Also write every cell with its minimum rule and argmin as JSON
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Exchange rates of each qubit with its reservoir
    Rates,
    /// Cold temperature below which no hot temperature refrigerates
    Threshold {
        #[arg(long)]
        label: Option<ConfigLabel>,
        #[arg(long, default_value_t = 0.3)]
        low: f64,
        #[arg(long, default_value_t = 0.7)]
        high: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Closed-form T1 of a cold qubit decoupled from its bath
    Analytic {
        #[arg(long)]
        e1: f64,
        #[arg(long)]
        e3: f64,
        #[arg(long)]
        tc: f64,
        #[arg(long)]
        th: f64,
    },
}

impl Cli {
    pub fn into_manifest(self) -> Result<RunManifest, ConfigError> {
        let overrides = self
            .overrides
            .iter()
            .map(|s| config::parse_override(s))
            .collect::<Result<_, _>>()?;
        let command = match self.command {
            CliCommand::Steady => Command::Steady,
            CliCommand::Sweep { label, t_c, grid } => Command::Sweep {
                label,
                t_c,
                grid: grid.spec(),
            },
            CliCommand::Tables {
                which,
                report,
                grid,
            } => Command::Tables {
                which,
                grid: grid.spec(),
                report,
            },
            CliCommand::Rates => Command::Rates,
            CliCommand::Threshold {
                label,
                low,
                high,
                grid,
            } => Command::Threshold {
                label,
                low,
                high,
                grid: grid.spec(),
            },
            CliCommand::Analytic { e1, e3, tc, th } => Command::Analytic { e1, e3, tc, th },
        };
        Ok(RunManifest {
            command,
            config_path: self.config,
            output_path: self.output,
            overrides,
        })
    }
}

/// Parses `args` (program name first) and runs. Help and version output go
/// to `out` with status 0; argument errors are configuration errors.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            let e = CliError::Config(ConfigError::Invalid(e.kind().to_string()));
            let _ = writeln!(
                err,
                "{}",
                serde_json::to_string(&e.record()).expect("record")
            );
            return e.exit_code();
        }
    };
    match cli.into_manifest() {
        Ok(manifest) => run(&manifest, out, err),
        Err(e) => {
            let e = CliError::Config(e);
            let _ = writeln!(
                err,
                "{}",
                serde_json::to_string(&e.record()).expect("record")
            );
            e.exit_code()
        }
    }
}
