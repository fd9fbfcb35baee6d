// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Cooling studies built on the steady-state solver: hot-temperature sweeps,
//! minimum-temperature tables over reservoir configurations, exchange-rate
//! reports and the refrigeration threshold.
//!
//! Sweep points and table cells are independent and run on the rayon pool.
//! Results are collected in input order, so output never depends on
//! scheduling.

mod sweep;
mod threshold;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use sweep::{
    default_grid, log_grid, min_t1, solve_t1, sweep_th, MinRule, SweepCurve, SweepPoint,
    DEFAULT_GRID_POINTS, GRID_MAX, GRID_MIN, MONOTONE_TOLERANCE, PLATEAU_TH,
};
pub use threshold::{refrigeration_threshold, THRESHOLD_TOLERANCE};

use crate::dynamics::SystemConfig;
use crate::error::{Error, Result};
use crate::hilbert::NUM_QUBITS;
use crate::reservoir::{ExchangeRates, ReservoirKind};
use crate::thermometry::cooling_percentage;

/// Reservoir kinds attached to qubits 1, 2, 3, written e.g. `FBF`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ConfigLabel([ReservoirKind; NUM_QUBITS]);

impl ConfigLabel {
    pub const fn new(kinds: [ReservoirKind; NUM_QUBITS]) -> Self {
        Self(kinds)
    }

    pub fn kinds(&self) -> [ReservoirKind; NUM_QUBITS] {
        self.0
    }

    pub fn of(config: &SystemConfig) -> Self {
        Self(config.kinds())
    }
}

impl fmt::Display for ConfigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in self.0 {
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for ConfigLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kinds: Option<Vec<ReservoirKind>> = s.chars().map(ReservoirKind::from_char).collect();
        match kinds.as_deref() {
            Some(&[a, b, c]) => Ok(Self([a, b, c])),
            _ => Err(Error::InvalidLabel(s.to_string())),
        }
    }
}

impl TryFrom<String> for ConfigLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ConfigLabel> for String {
    fn from(l: ConfigLabel) -> String {
        l.to_string()
    }
}

/// All eight labels, ordered as the columns of the configuration comparison
/// table: FBF, FFF, FBB, FFB, BBF, BFF, BBB, BFB.
pub fn enumerate_labels() -> Vec<ConfigLabel> {
    ["FBF", "FFF", "FBB", "FFB", "BBF", "BFF", "BBB", "BFB"]
        .iter()
        .map(|s| s.parse().expect("static labels are valid"))
        .collect()
}

/// One `(label, T_c)` cell of a cooling table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub label: ConfigLabel,
    pub t_c: f64,
    pub rule: MinRule,
    pub min_t1: f64,
    pub argmin_th: f64,
    pub cooling_pct: f64,
    /// `min_t1 < t_c`.
    pub refrigerates: bool,
    /// Curve never rises beyond `T_h = T_r`, up to [`MONOTONE_TOLERANCE`].
    pub monotone_decreasing: bool,
    /// Exchange rates of the three qubits at `argmin_th`.
    pub rates: [ExchangeRates; NUM_QUBITS],
}

/// Reads a table cell off an already computed sweep. Curves that never rise
/// beyond `T_h = T_r` are read at `T_h = 100`; all others at their refined
/// minimum.
pub fn cell_from_curve(base: &SystemConfig, curve: &SweepCurve) -> Result<CellReport> {
    let monotone_decreasing = curve.is_non_increasing_from(base.t_room(), MONOTONE_TOLERANCE);
    let covers_plateau = curve.points.first().is_some_and(|p| p.t_h <= PLATEAU_TH)
        && curve.points.last().is_some_and(|p| p.t_h >= PLATEAU_TH);
    let rule = if monotone_decreasing && covers_plateau {
        MinRule::AtTh100
    } else {
        MinRule::GridMinimumRefined
    };
    let (t1, argmin_th) = min_t1(curve, rule)?;
    let at_min = base
        .with_kinds(curve.label.kinds())
        .with_cold_temperature(curve.t_c)
        .with_hot_temperature(argmin_th);
    Ok(CellReport {
        label: curve.label,
        t_c: curve.t_c,
        rule,
        min_t1: t1,
        argmin_th,
        cooling_pct: cooling_percentage(t1, curve.t_c),
        refrigerates: t1 < curve.t_c,
        monotone_decreasing,
        rates: rate_report(&at_min)?,
    })
}

/// Sweeps and reads one table cell.
pub fn table_cell(
    base: &SystemConfig,
    label: ConfigLabel,
    t_c: f64,
    grid: &[f64],
) -> Result<CellReport> {
    cell_from_curve(base, &sweep_th(base, label, t_c, grid)?)
}

/// Every `(t_c, label)` cell, row-major in `t_c`.
pub fn table_cooling(
    base: &SystemConfig,
    t_c_values: &[f64],
    labels: &[ConfigLabel],
    grid: &[f64],
) -> Result<Vec<CellReport>> {
    let cells: Vec<(f64, ConfigLabel)> = t_c_values
        .iter()
        .flat_map(|&t_c| labels.iter().map(move |&l| (t_c, l)))
        .collect();
    cells
        .par_iter()
        .map(|&(t_c, label)| table_cell(base, label, t_c, grid))
        .collect()
}

/// `Γ↓`/`Γ↑` of each qubit with its reservoir.
pub fn rate_report(config: &SystemConfig) -> Result<[ExchangeRates; NUM_QUBITS]> {
    config.exchange_rates()
}

/// The four comparison tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonTable {
    /// All-bosonic vs all-fermionic at `T_c ∈ {1, 1.5, 2}`.
    Cooling,
    /// All-bosonic vs all-fermionic near the threshold.
    LowTemperature,
    /// All eight configurations.
    Configurations,
    /// Exchange rates at `T_c = 2` for all eight configurations.
    Rates,
}

impl ComparisonTable {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(ComparisonTable::Cooling),
            2 => Some(ComparisonTable::LowTemperature),
            3 => Some(ComparisonTable::Configurations),
            4 => Some(ComparisonTable::Rates),
            _ => None,
        }
    }

    pub fn t_c_values(self) -> Vec<f64> {
        match self {
            ComparisonTable::Cooling => vec![1.0, 1.5, 2.0],
            ComparisonTable::LowTemperature => vec![0.48, 0.60, 0.80],
            ComparisonTable::Configurations => vec![0.48, 0.8, 1.0, 1.5, 2.0],
            ComparisonTable::Rates => vec![2.0],
        }
    }

    pub fn labels(self) -> Vec<ConfigLabel> {
        match self {
            ComparisonTable::Cooling | ComparisonTable::LowTemperature => {
                vec!["BBB".parse().unwrap(), "FFF".parse().unwrap()]
            }
            ComparisonTable::Configurations | ComparisonTable::Rates => enumerate_labels(),
        }
    }

    pub fn compute(self, base: &SystemConfig, grid: &[f64]) -> Result<Vec<CellReport>> {
        table_cooling(base, &self.t_c_values(), &self.labels(), grid)
    }
}
