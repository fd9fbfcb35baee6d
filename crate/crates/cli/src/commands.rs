// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;

use scqr_core::dynamics::{build_liouvillian, steady_state, SystemConfig};
use scqr_core::experiments::{
    log_grid, refrigeration_threshold, sweep_th, ComparisonTable, ConfigLabel, DEFAULT_GRID_POINTS,
    GRID_MAX, GRID_MIN,
};
use scqr_core::hilbert::SiteIndex;
use scqr_core::thermometry::{analytic_isolated_t1, qubit_temperature, QubitThermometry};

use crate::config::{apply_override, config_from_value, default_document, parse_document};
use crate::error::{CliError, ConfigError};
use crate::output::{cooling_table_csv, fmt_g12, rate_table_csv, rates_csv, sweep_csv, write_file};

/// Hot-temperature grid requested on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    /// Comma-separated list, e.g. `1,10,100`.
    Explicit(String),
    LogSpaced {
        min: f64,
        max: f64,
        points: usize,
    },
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::LogSpaced {
            min: GRID_MIN,
            max: GRID_MAX,
            points: DEFAULT_GRID_POINTS,
        }
    }
}

impl GridSpec {
    pub fn resolve(&self) -> Result<Vec<f64>, CliError> {
        match self {
            GridSpec::Explicit(list) => {
                let values = list
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<f64>().map_err(|_| {
                            ConfigError::Invalid(format!("grid: `{s}` is not a number"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if values.is_empty() {
                    return Err(ConfigError::Invalid("grid is empty".into()).into());
                }
                Ok(values)
            }
            GridSpec::LogSpaced { min, max, points } => Ok(log_grid(*min, *max, *points)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    /// Steady state of the configuration as JSON.
    Steady,
    /// `T₁` against `T_h`.
    Sweep {
        label: Option<ConfigLabel>,
        t_c: Option<f64>,
        grid: GridSpec,
    },
    /// One of the four comparison tables.
    Tables {
        which: u8,
        grid: GridSpec,
        report: Option<PathBuf>,
    },
    /// Exchange rates of the configuration.
    Rates,
    /// Cold temperature below which refrigeration stops.
    Threshold {
        label: Option<ConfigLabel>,
        low: f64,
        high: f64,
        grid: GridSpec,
    },
    /// Closed-form `T₁` of an isolated cold qubit.
    Analytic { e1: f64, e3: f64, tc: f64, th: f64 },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Steady => "steady",
            Command::Sweep { .. } => "sweep",
            Command::Tables { .. } => "tables",
            Command::Rates => "rates",
            Command::Threshold { .. } => "threshold",
            Command::Analytic { .. } => "analytic",
        }
    }
}

/// Everything one invocation needs. Without `config_path` the reference
/// default parameters are used; without `output_path` data goes to standard
/// output.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: Command,
    pub config_path: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
    /// Dotted keys, e.g. `("reservoirs.1.temperature", "0.5")`.
    pub overrides: Vec<(String, String)>,
}

impl RunManifest {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            config_path: None,
            output_path: None,
            overrides: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        for (name, p) in [("config", &self.config_path), ("output", &self.output_path)] {
            if p.as_ref().is_some_and(|p| p.as_os_str().is_empty()) {
                return Err(ConfigError::Invalid(format!("{name} path is empty")).into());
            }
        }
        Ok(())
    }

    /// Reads the config file, applies overrides and validates.
    pub fn load_config(&self) -> Result<SystemConfig, CliError> {
        let mut doc = match &self.config_path {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                parse_document(&text)?
            }
            None => default_document(),
        };
        for (key, value) in &self.overrides {
            apply_override(&mut doc, key, value)?;
        }
        Ok(config_from_value(&doc)?)
    }
}

/// Runs `manifest`, writing data to the output file or `out` and warnings
/// and error records to `err`. Returns the process exit status.
pub fn run(manifest: &RunManifest, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(manifest, err) {
        Ok(text) => {
            let written = match &manifest.output_path {
                Some(path) => write_file(path, &text),
                None => out
                    .write_all(text.as_bytes())
                    .map_err(|e| CliError::io("<stdout>", e)),
            };
            match written {
                Ok(()) => 0,
                Err(e) => report(&e, err),
            }
        }
        Err(e) => report(&e, err),
    }
}

fn report(e: &CliError, err: &mut dyn Write) -> i32 {
    let record = serde_json::to_string(&e.record()).expect("record serializes");
    let _ = writeln!(err, "{record}");
    e.exit_code()
}

fn execute(manifest: &RunManifest, err: &mut dyn Write) -> Result<String, CliError> {
    manifest.validate()?;
    if let Command::Analytic { e1, e3, tc, th } = manifest.command {
        let t1 = analytic_isolated_t1(e1, e3, tc, th)?;
        return Ok(format!(
            "e1,e3,tc,th,t1\n{},{},{},{},{}\n",
            fmt_g12(e1),
            fmt_g12(e3),
            fmt_g12(tc),
            fmt_g12(th),
            fmt_g12(t1)
        ));
    }

    let config = manifest.load_config()?;
    for w in config.warnings() {
        let _ = writeln!(err, "warning: {w}");
    }

    match &manifest.command {
        Command::Steady => steady_json(&config),
        Command::Sweep { label, t_c, grid } => {
            let grid = grid.resolve()?;
            let label = label.unwrap_or_else(|| ConfigLabel::of(&config));
            let curve = sweep_th(&config, label, t_c.unwrap_or(config.t_cold()), &grid)?;
            Ok(sweep_csv(&curve))
        }
        Command::Tables {
            which,
            grid,
            report,
        } => {
            let table = ComparisonTable::from_number(*which).ok_or_else(|| {
                ConfigError::Invalid(format!("--which must be 1, 2, 3 or 4, got {which}"))
            })?;
            let grid = grid.resolve()?;
            let cells = table.compute(&config, &grid)?;
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&cells).expect("cells serialize");
                write_file(path, &(json + "\n"))?;
            }
            let labels = table.labels();
            Ok(match table {
                ComparisonTable::Rates => {
                    let rates: Vec<_> = cells.iter().map(|c| c.rates).collect();
                    rate_table_csv(&labels, &rates)
                }
                _ => cooling_table_csv(&table.t_c_values(), &labels, &cells),
            })
        }
        Command::Rates => Ok(rates_csv(&config, &config.exchange_rates()?)),
        Command::Threshold {
            label,
            low,
            high,
            grid,
        } => {
            let grid = grid.resolve()?;
            let label = label.unwrap_or_else(|| ConfigLabel::of(&config));
            let t = refrigeration_threshold(&config, label, (*low, *high), &grid)?;
            Ok(format!(
                "label,low,high,threshold\n{label},{},{},{}\n",
                fmt_g12(*low),
                fmt_g12(*high),
                fmt_g12(t)
            ))
        }
        Command::Analytic { .. } => unreachable!("handled above"),
    }
}

#[derive(Serialize)]
struct QubitReport {
    qubit: usize,
    #[serde(flatten)]
    thermometry: QubitThermometry,
}

#[derive(Serialize)]
struct SteadyReport {
    label: ConfigLabel,
    config: Value,
    t1: f64,
    delta: f64,
    refrigerates: bool,
    qubits: Vec<QubitReport>,
    residual: f64,
    kernel_gap: f64,
    trace_error: f64,
    min_eigenvalue: f64,
    hermiticity_error: f64,
}

fn steady_json(config: &SystemConfig) -> Result<String, CliError> {
    let state = steady_state(&build_liouvillian(config)?)?;
    let qubits = SiteIndex::all()
        .iter()
        .map(|&site| {
            let e = config.qubit(site).energy_gap;
            Ok(QubitReport {
                qubit: site.get(),
                thermometry: qubit_temperature(&state.rho, site, e)?,
            })
        })
        .collect::<Result<Vec<_>, scqr_core::Error>>()?;
    let t1 = qubits[0].thermometry.effective_temperature;
    let report = SteadyReport {
        label: ConfigLabel::of(config),
        config: crate::config::to_document(config),
        t1,
        delta: t1 - config.t_cold(),
        refrigerates: t1 < config.t_cold(),
        qubits,
        residual: state.residual,
        kernel_gap: state.kernel_gap,
        trace_error: state.trace_error,
        min_eigenvalue: state.min_eigenvalue,
        hermiticity_error: state.hermiticity_error,
    };
    Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n")
}
