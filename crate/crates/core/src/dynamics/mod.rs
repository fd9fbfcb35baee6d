// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Master-equation generator for the three-qubit refrigerator and its
//! steady state.
//!
//! Qubit 1 is the one being cooled and talks to the cold reservoir, qubit 2
//! to the "room" reservoir and qubit 3 to the hot one. The three-body
//! exchange `|e g e⟩ ↔ |g e g⟩` is resonant when `E₃ = E₂ − E₁`.

mod hamiltonian;
mod liouvillian;
mod steady;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use hamiltonian::{build_h0, build_hint};
pub use liouvillian::{build_liouvillian, Liouvillian};
pub use steady::{steady_state, steady_state_lu, SteadyState, KERNEL_GAP_MIN, STEADY_RESIDUAL_MAX};

use crate::error::Result;
use crate::hilbert::{SiteIndex, NUM_QUBITS};
use crate::reservoir::{
    check_nonnegative, check_positive, ExchangeRates, ReservoirKind, ReservoirSpec,
};

/// Gap `E_k` and bare dissipation rate `γ_k` of one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitSpec {
    pub energy_gap: f64,
    /// Zero isolates the qubit from its reservoir.
    pub dissipation: f64,
}

impl QubitSpec {
    pub fn new(energy_gap: f64, dissipation: f64) -> Result<Self> {
        check_positive("energy_gap", energy_gap)?;
        check_nonnegative("dissipation", dissipation)?;
        Ok(Self {
            energy_gap,
            dissipation,
        })
    }
}

/// Full input of one steady-state computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemConfig {
    pub qubits: [QubitSpec; NUM_QUBITS],
    pub reservoirs: [ReservoirSpec; NUM_QUBITS],
    /// Three-body coupling `g`.
    pub coupling: f64,
}

/// Soft problems with a configuration. The model is still well defined but
/// the machine is not expected to refrigerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConfigWarning {
    OffResonance { mismatch: f64 },
    TemperatureOrder { t_c: f64, t_r: f64, t_h: f64 },
}

impl fmt::Display for ConfigWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigWarning::OffResonance { mismatch } => {
                write!(f, "gaps are off resonance: |E3 - (E2 - E1)| = {mismatch}")
            }
            ConfigWarning::TemperatureOrder { t_c, t_r, t_h } => write!(
                f,
                "reservoir temperatures not ordered T_c <= T_r <= T_h: ({t_c}, {t_r}, {t_h})"
            ),
        }
    }
}

/// Resonance mismatch above which [`SystemConfig::warnings`] reports it.
pub const RESONANCE_TOLERANCE: f64 = 1e-9;

impl SystemConfig {
    pub fn new(
        qubits: [QubitSpec; NUM_QUBITS],
        reservoirs: [ReservoirSpec; NUM_QUBITS],
        coupling: f64,
    ) -> Result<Self> {
        let config = Self {
            qubits,
            reservoirs,
            coupling,
        };
        config.validate()?;
        Ok(config)
    }

    /// Reference parameters of the cooling study: `E = (1, 5, 4)`,
    /// `γ_k = g = 0.01`, all-fermionic reservoirs at `T = (1, 2, 10)`.
    pub fn reference() -> Self {
        let q = |e| QubitSpec {
            energy_gap: e,
            dissipation: 0.01,
        };
        let r = |t| ReservoirSpec {
            kind: ReservoirKind::Fermionic,
            temperature: t,
        };
        Self {
            qubits: [q(1.0), q(5.0), q(4.0)],
            reservoirs: [r(1.0), r(2.0), r(10.0)],
            coupling: 0.01,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for q in &self.qubits {
            check_positive("energy_gap", q.energy_gap)?;
            check_nonnegative("dissipation", q.dissipation)?;
        }
        for r in &self.reservoirs {
            check_positive("temperature", r.temperature)?;
        }
        check_nonnegative("coupling", self.coupling)
    }

    pub fn qubit(&self, site: SiteIndex) -> &QubitSpec {
        &self.qubits[site.offset()]
    }

    pub fn reservoir(&self, site: SiteIndex) -> &ReservoirSpec {
        &self.reservoirs[site.offset()]
    }

    pub fn kinds(&self) -> [ReservoirKind; NUM_QUBITS] {
        self.reservoirs.map(|r| r.kind)
    }

    pub fn t_cold(&self) -> f64 {
        self.reservoirs[0].temperature
    }

    pub fn t_room(&self) -> f64 {
        self.reservoirs[1].temperature
    }

    pub fn t_hot(&self) -> f64 {
        self.reservoirs[2].temperature
    }

    /// `|E₃ − (E₂ − E₁)|`.
    pub fn resonance_mismatch(&self) -> f64 {
        let [e1, e2, e3] = self.qubits.map(|q| q.energy_gap);
        (e3 - (e2 - e1)).abs()
    }

    pub fn temperatures_ordered(&self) -> bool {
        self.t_cold() <= self.t_room() && self.t_room() <= self.t_hot()
    }

    pub fn warnings(&self) -> Vec<ConfigWarning> {
        let mut out = Vec::new();
        let mismatch = self.resonance_mismatch();
        if mismatch > RESONANCE_TOLERANCE {
            out.push(ConfigWarning::OffResonance { mismatch });
        }
        if !self.temperatures_ordered() {
            out.push(ConfigWarning::TemperatureOrder {
                t_c: self.t_cold(),
                t_r: self.t_room(),
                t_h: self.t_hot(),
            });
        }
        out
    }

    /// `Γ↓`/`Γ↑` of each qubit with its own reservoir.
    pub fn exchange_rates(&self) -> Result<[ExchangeRates; NUM_QUBITS]> {
        let mut out = [ExchangeRates::ZERO; NUM_QUBITS];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot =
                self.reservoirs[k].rates(self.qubits[k].dissipation, self.qubits[k].energy_gap)?;
        }
        Ok(out)
    }

    pub fn with_kinds(mut self, kinds: [ReservoirKind; NUM_QUBITS]) -> Self {
        for (r, kind) in self.reservoirs.iter_mut().zip(kinds) {
            r.kind = kind;
        }
        self
    }

    pub fn with_temperature(mut self, site: SiteIndex, temperature: f64) -> Self {
        self.reservoirs[site.offset()].temperature = temperature;
        self
    }

    pub fn with_cold_temperature(self, t_c: f64) -> Self {
        self.with_temperature(SiteIndex::ONE, t_c)
    }

    pub fn with_hot_temperature(self, t_h: f64) -> Self {
        self.with_temperature(SiteIndex::THREE, t_h)
    }

    pub fn with_dissipation(mut self, site: SiteIndex, gamma: f64) -> Self {
        self.qubits[site.offset()].dissipation = gamma;
        self
    }

    pub fn with_coupling(mut self, coupling: f64) -> Self {
        self.coupling = coupling;
        self
    }
}
