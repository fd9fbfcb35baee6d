// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Effective qubit temperatures and cooling figures of merit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{partial_trace, ComplexMatrix, SiteIndex};
use crate::reservoir::check_positive;

/// Reduced-state coherence above which a temperature readout is flagged as
/// non-thermal.
pub const NON_THERMAL_COHERENCE: f64 = 1e-6;

/// Gibbs readout of a single qubit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitThermometry {
    pub p_ground: f64,
    pub p_excited: f64,
    /// `|ρ₀₁|` of the reduced state.
    pub coherence_magnitude: f64,
    pub effective_temperature: f64,
    pub inverted: bool,
}

impl QubitThermometry {
    /// The reduced state carries coherence the temperature ignores.
    pub fn is_non_thermal(&self) -> bool {
        self.coherence_magnitude > NON_THERMAL_COHERENCE
    }
}

/// `T = E / ln(p_g / p_e)` from the populations of a 2x2 reduced state
/// (basis `{|e⟩, |g⟩}`).
pub fn effective_temperature(reduced: &ComplexMatrix, energy_gap: f64) -> Result<QubitThermometry> {
    if reduced.rows() != 2 || reduced.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: "2x2".into(),
            found: format!("{}x{}", reduced.rows(), reduced.cols()),
        });
    }
    check_positive("energy_gap", energy_gap)?;
    let p_excited = reduced[(0, 0)].re;
    let p_ground = reduced[(1, 1)].re;
    if p_excited.is_nan() || p_ground.is_nan() || p_excited >= p_ground {
        return Err(Error::InvertedPopulation {
            p_ground,
            p_excited,
        });
    }
    if p_excited <= 0.0 {
        return Err(Error::NumericalFailure(format!(
            "non-positive excited population {p_excited:e}"
        )));
    }
    Ok(QubitThermometry {
        p_ground,
        p_excited,
        coherence_magnitude: reduced[(0, 1)].norm(),
        effective_temperature: energy_gap / (p_ground / p_excited).ln(),
        inverted: false,
    })
}

/// Partial trace onto `site` followed by [`effective_temperature`].
pub fn qubit_temperature(
    rho: &ComplexMatrix,
    site: SiteIndex,
    energy_gap: f64,
) -> Result<QubitThermometry> {
    effective_temperature(&partial_trace(rho, site)?, energy_gap)
}

/// `100 |T₁ − T_c| / T_c`. The sign of `T₁ − T_c` decides whether the
/// machine refrigerates.
pub fn cooling_percentage(t1: f64, tc: f64) -> f64 {
    100.0 * (t1 - tc).abs() / tc
}

/// Closed-form temperature of a perfectly isolated qubit 1,
/// `T_c / (1 + (E₃/E₁)(1 − T_c/T_h))`.
pub fn analytic_isolated_t1(e1: f64, e3: f64, tc: f64, th: f64) -> Result<f64> {
    check_positive("e1", e1)?;
    check_positive("e3", e3)?;
    check_positive("tc", tc)?;
    check_positive("th", th)?;
    let denominator = 1.0 + (e3 / e1) * (1.0 - tc / th);
    if denominator.is_nan() || denominator <= 0.0 {
        return Err(Error::Domain {
            name: "1 + (e3/e1)(1 - tc/th)",
            value: denominator,
            reason: "must be positive",
        });
    }
    Ok(tc / denominator)
}
