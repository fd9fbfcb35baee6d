// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Thermal occupations and Lindblad exchange rates for bosonic and
//! fermionic reservoirs.
//!
//! A qubit with gap `E` and bare dissipation rate `γ` attached to a reservoir
//! at temperature `T` decays at `Γ↓` and is excited at `Γ↑`:
//!
//! | kind      | Γ↓          | Γ↑     | occupation `n`       |
//! |-----------|-------------|--------|----------------------|
//! | bosonic   | `γ (1 + n)` | `γ n`  | `1 / (e^{E/T} - 1)`  |
//! | fermionic | `γ (1 - n)` | `γ n`  | `1 / (e^{E/T} + 1)`  |
//!
//! Both satisfy detailed balance `Γ↑ / Γ↓ = e^{-E/T}`. Units are natural
//! (`k_B = ħ = 1`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Above this `E/T` the occupation is below 1e-300 and is returned as zero.
pub const MAX_BOLTZMANN_EXPONENT: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReservoirKind {
    Bosonic,
    Fermionic,
}

impl ReservoirKind {
    pub fn as_char(self) -> char {
        match self {
            ReservoirKind::Bosonic => 'B',
            ReservoirKind::Fermionic => 'F',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'B' => Some(ReservoirKind::Bosonic),
            'F' => Some(ReservoirKind::Fermionic),
            _ => None,
        }
    }
}

impl fmt::Display for ReservoirKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for ReservoirKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (
            chars.next().and_then(ReservoirKind::from_char),
            chars.next(),
        ) {
            (Some(kind), None) => Ok(kind),
            _ => Err(Error::InvalidLabel(s.to_string())),
        }
    }
}

/// A thermal reservoir at positive temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReservoirSpec {
    pub kind: ReservoirKind,
    pub temperature: f64,
}

impl ReservoirSpec {
    pub fn new(kind: ReservoirKind, temperature: f64) -> Result<Self> {
        check_positive("temperature", temperature)?;
        Ok(Self { kind, temperature })
    }

    pub fn rates(&self, gamma: f64, energy: f64) -> Result<ExchangeRates> {
        exchange_rates(self.kind, gamma, energy, self.temperature)
    }
}

/// Decay (`Γ↓`) and excitation (`Γ↑`) rates of one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExchangeRates {
    pub gamma_down: f64,
    pub gamma_up: f64,
}

impl ExchangeRates {
    pub const ZERO: ExchangeRates = ExchangeRates {
        gamma_down: 0.0,
        gamma_up: 0.0,
    };

    /// Population relaxation rate `Γ↓ + Γ↑`.
    pub fn total(&self) -> f64 {
        self.gamma_down + self.gamma_up
    }
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

pub(crate) fn check_nonnegative(name: &'static str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            reason: "must be non-negative and finite",
        })
    }
}

/// Mean excitation number of a reservoir mode at `energy` and `temperature`.
pub fn occupation(kind: ReservoirKind, energy: f64, temperature: f64) -> Result<f64> {
    check_positive("energy", energy)?;
    check_positive("temperature", temperature)?;
    let x = energy / temperature;
    if x > MAX_BOLTZMANN_EXPONENT {
        return Ok(0.0);
    }
    Ok(match kind {
        ReservoirKind::Bosonic => 1.0 / x.exp_m1(),
        ReservoirKind::Fermionic => 1.0 / (x.exp() + 1.0),
    })
}

/// Lindblad rates for a qubit with gap `energy` and bare rate `gamma`.
///
/// `gamma = 0` is accepted and models a qubit isolated from its reservoir.
pub fn exchange_rates(
    kind: ReservoirKind,
    gamma: f64,
    energy: f64,
    temperature: f64,
) -> Result<ExchangeRates> {
    check_nonnegative("gamma", gamma)?;
    let n = occupation(kind, energy, temperature)?;
    let gamma_up = gamma * n;
    let gamma_down = match kind {
        ReservoirKind::Bosonic => gamma + gamma_up,
        // 1 - n_F written as 1 / (1 + e^{-x}) to keep full relative precision.
        ReservoirKind::Fermionic => gamma / (1.0 + (-energy / temperature).exp()),
    };
    Ok(ExchangeRates {
        gamma_down,
        gamma_up,
    })
}
