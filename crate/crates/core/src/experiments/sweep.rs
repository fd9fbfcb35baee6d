// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{build_liouvillian, steady_state, SystemConfig};
use crate::error::{Error, Result};
use crate::hilbert::SiteIndex;
use crate::thermometry::qubit_temperature;

use super::ConfigLabel;

pub const GRID_MIN: f64 = 0.1;
pub const GRID_MAX: f64 = 1000.0;
pub const DEFAULT_GRID_POINTS: usize = 200;
/// Hot temperature at which plateauing curves are read off.
pub const PLATEAU_TH: f64 = 100.0;
/// Slack allowed when deciding that a curve never rises.
pub const MONOTONE_TOLERANCE: f64 = 1e-4;

/// `n` logarithmically spaced points from `min` to `max` inclusive.
pub fn log_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidGrid(
            "grid must have at least one point".into(),
        ));
    }
    if !(min > 0.0 && max >= min && max.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "bounds must satisfy 0 < min <= max, got [{min}, {max}]"
        )));
    }
    if n == 1 {
        return Ok(vec![min]);
    }
    let (a, b) = (min.log10(), max.log10());
    let step = (b - a) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| match i {
            0 => min,
            _ if i == n - 1 => max,
            _ => 10f64.powf(a + step * i as f64),
        })
        .collect())
}

/// 200 log-spaced points on `[0.1, 1000]`.
pub fn default_grid() -> Vec<f64> {
    log_grid(GRID_MIN, GRID_MAX, DEFAULT_GRID_POINTS).expect("static bounds are valid")
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty".into()));
    }
    if let Some(bad) = grid.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
        return Err(Error::InvalidGrid(format!(
            "non-positive temperature {bad}"
        )));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(
            "grid must be strictly increasing".into(),
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub t_h: f64,
    pub t1: f64,
    /// `t1 − t_c`; negative means qubit 1 is refrigerated.
    pub delta: f64,
}

/// `T₁ − T_c` against `T_h` for one configuration and cold temperature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepCurve {
    pub label: ConfigLabel,
    pub t_c: f64,
    pub points: Vec<SweepPoint>,
}

impl SweepCurve {
    /// Builds a curve from `(t_h, t1)` pairs, which must be sorted by `t_h`.
    pub fn from_samples(label: ConfigLabel, t_c: f64, samples: &[(f64, f64)]) -> Result<Self> {
        let grid: Vec<f64> = samples.iter().map(|s| s.0).collect();
        check_grid(&grid)?;
        let points = samples
            .iter()
            .map(|&(t_h, t1)| SweepPoint {
                t_h,
                t1,
                delta: t1 - t_c,
            })
            .collect();
        Ok(Self { label, t_c, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn argmin(&self) -> Option<usize> {
        self.points
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.t1.total_cmp(&b.1.t1))
            .map(|(i, _)| i)
    }

    /// For `t_h >= t_from`, `delta` never climbs more than `tol` above its
    /// running minimum. Slow drifts made of many small steps count.
    pub fn is_non_increasing_from(&self, t_from: f64, tol: f64) -> bool {
        let mut floor = f64::INFINITY;
        self.points.iter().filter(|p| p.t_h >= t_from).all(|p| {
            floor = floor.min(p.delta);
            p.delta - floor <= tol
        })
    }

    /// Index of the global minimum when it is not an endpoint.
    pub fn interior_minimum(&self) -> Option<usize> {
        self.argmin()
            .filter(|&i| i > 0 && i + 1 < self.points.len())
    }

    /// Largest increase of `delta` after the global minimum.
    pub fn rise_after_minimum(&self) -> f64 {
        match self.argmin() {
            Some(i) => {
                let floor = self.points[i].delta;
                self.points[i..]
                    .iter()
                    .map(|p| p.delta - floor)
                    .fold(0.0, f64::max)
            }
            None => 0.0,
        }
    }
}

/// `T₁` of the steady state of `config`.
pub fn solve_t1(config: &SystemConfig) -> Result<f64> {
    let state = steady_state(&build_liouvillian(config)?)?;
    let reading = qubit_temperature(&state.rho, SiteIndex::ONE, config.qubits[0].energy_gap)?;
    Ok(reading.effective_temperature)
}

/// One steady-state solve per hot temperature in `grid`, with the
/// reservoir kinds of `label` and the cold reservoir at `t_c`.
pub fn sweep_th(
    base: &SystemConfig,
    label: ConfigLabel,
    t_c: f64,
    grid: &[f64],
) -> Result<SweepCurve> {
    check_grid(grid)?;
    let config = base.with_kinds(label.kinds()).with_cold_temperature(t_c);
    config.validate()?;
    let samples = grid
        .par_iter()
        .map(|&t_h| {
            solve_t1(&config.with_hot_temperature(t_h))
                .map(|t1| (t_h, t1))
                .map_err(|e| Error::AtHotTemperature {
                    t_h,
                    source: Box::new(e),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    SweepCurve::from_samples(label, t_c, &samples)
}

/// How a single `T₁` is read off a sweep curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinRule {
    /// Lowest grid point, refined by a parabola through it and its two
    /// neighbours in `ln T_h`.
    GridMinimumRefined,
    /// Value interpolated at `T_h = 100`, for curves that plateau.
    AtTh100,
}

/// Vertex of the parabola through three points, clamped to their span.
/// Falls back to the middle point when the points are collinear or the
/// parabola opens downward.
fn parabola_vertex(x: [f64; 3], y: [f64; 3]) -> (f64, f64) {
    let (d1, d2) = (x[1] - x[0], x[1] - x[2]);
    let num = d1 * d1 * (y[1] - y[2]) - d2 * d2 * (y[1] - y[0]);
    let den = d1 * (y[1] - y[2]) - d2 * (y[1] - y[0]);
    if den == 0.0 || !den.is_finite() {
        return (x[1], y[1]);
    }
    let xv = (x[1] - 0.5 * num / den).clamp(x[0], x[2]);
    let yv = lagrange3(x, y, xv);
    if yv > y[1] {
        (x[1], y[1])
    } else {
        (xv, yv)
    }
}

fn lagrange3(x: [f64; 3], y: [f64; 3], at: f64) -> f64 {
    (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            y[i] * (at - x[j]) * (at - x[k]) / ((x[i] - x[j]) * (x[i] - x[k]))
        })
        .sum()
}

/// Value of `T₁` at `t_h` by quadratic interpolation in `ln T_h`.
fn interpolate_t1(curve: &SweepCurve, t_h: f64) -> Result<f64> {
    let pts = &curve.points;
    let (first, last) = (pts[0].t_h, pts[pts.len() - 1].t_h);
    if !(first <= t_h && t_h <= last) {
        return Err(Error::InvalidGrid(format!(
            "T_h = {t_h} lies outside the swept range [{first}, {last}]"
        )));
    }
    if let Some(p) = pts.iter().find(|p| p.t_h == t_h) {
        return Ok(p.t1);
    }
    let at = t_h.ln();
    // first index whose t_h exceeds the target; 1 <= hi <= len-1 here
    let hi = pts.partition_point(|p| p.t_h < t_h);
    if pts.len() == 2 {
        let (x0, x1) = (pts[0].t_h.ln(), pts[1].t_h.ln());
        return Ok(pts[0].t1 + (pts[1].t1 - pts[0].t1) * (at - x0) / (x1 - x0));
    }
    // Of the two candidate triples around the interval, take the one whose
    // outer point is closer in ln T_h.
    let start = if hi == 1 {
        0
    } else if hi + 1 >= pts.len() {
        pts.len() - 3
    } else if at - pts[hi - 2].t_h.ln() <= pts[hi + 1].t_h.ln() - at {
        hi - 2
    } else {
        hi - 1
    };
    let x = [0, 1, 2].map(|i| pts[start + i].t_h.ln());
    let y = [0, 1, 2].map(|i| pts[start + i].t1);
    Ok(lagrange3(x, y, at))
}

/// Extracts `(T₁, T_h)` from a curve under `rule`.
pub fn min_t1(curve: &SweepCurve, rule: MinRule) -> Result<(f64, f64)> {
    if curve.is_empty() {
        return Err(Error::InvalidGrid("curve has no points".into()));
    }
    match rule {
        MinRule::AtTh100 => Ok((interpolate_t1(curve, PLATEAU_TH)?, PLATEAU_TH)),
        MinRule::GridMinimumRefined => {
            let m = curve.argmin().expect("non-empty");
            let p = &curve.points;
            if m == 0 || m + 1 == p.len() {
                return Ok((p[m].t1, p[m].t_h));
            }
            let x = [p[m - 1].t_h.ln(), p[m].t_h.ln(), p[m + 1].t_h.ln()];
            let y = [p[m - 1].t1, p[m].t1, p[m + 1].t1];
            let (xv, yv) = parabola_vertex(x, y);
            Ok((yv, xv.exp()))
        }
    }
}
