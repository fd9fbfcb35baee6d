// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use crate::dynamics::SystemConfig;
use crate::error::{Error, Result};

use super::sweep::{min_t1, sweep_th, MinRule};
use super::ConfigLabel;

/// Width of the final bisection bracket.
pub const THRESHOLD_TOLERANCE: f64 = 1e-3;

/// Best achievable `T₁ − T_c` over the hot-temperature grid.
fn best_delta(base: &SystemConfig, label: ConfigLabel, t_c: f64, grid: &[f64]) -> Result<f64> {
    let curve = sweep_th(base, label, t_c, grid)?;
    let (t1, _) = min_t1(&curve, MinRule::GridMinimumRefined)?;
    Ok(t1 - t_c)
}

/// Cold temperature below which no hot temperature on `grid` refrigerates
/// qubit 1, found by bisection on `T_c`.
pub fn refrigeration_threshold(
    base: &SystemConfig,
    label: ConfigLabel,
    bracket: (f64, f64),
    grid: &[f64],
) -> Result<f64> {
    let (mut low, mut high) = bracket;
    if !(low > 0.0 && high > low) {
        return Err(Error::Domain {
            name: "bracket",
            value: low,
            reason: "need 0 < low < high",
        });
    }
    let f_low = best_delta(base, label, low, grid)?;
    let f_high = best_delta(base, label, high, grid)?;
    if f_low.signum() == f_high.signum() {
        return Err(Error::NoSignChange {
            low: bracket.0,
            high: bracket.1,
        });
    }
    let low_positive = f_low > 0.0;
    while high - low > THRESHOLD_TOLERANCE {
        let mid = 0.5 * (low + high);
        if (best_delta(base, label, mid, grid)? > 0.0) == low_positive {
            low = mid;
        } else {
            high = mid;
        }
    }
    Ok(0.5 * (low + high))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::log_grid;

    #[test]
    fn bracket_that_always_refrigerates_has_no_sign_change() {
        let grid = log_grid(1.0, 1000.0, 40).unwrap();
        let err = refrigeration_threshold(
            &SystemConfig::reference(),
            "BBB".parse().unwrap(),
            (1.0, 2.0),
            &grid,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn rejects_inverted_bracket() {
        let grid = [10.0];
        assert!(refrigeration_threshold(
            &SystemConfig::reference(),
            "FFF".parse().unwrap(),
            (0.7, 0.3),
            &grid,
        )
        .is_err());
    }
}
