// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! CSV artifacts. Floats are printed with 12 significant digits in the style
//! of C's `%.12g`, which keeps golden files stable and readable.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use scqr_core::dynamics::SystemConfig;
use scqr_core::experiments::{CellReport, ConfigLabel, SweepCurve, SweepPoint};
use scqr_core::reservoir::ExchangeRates;

use crate::error::CliError;

pub const SWEEP_HEADER: &str = "label,t_c,t_h,t1,delta";

/// `%.12g`: shortest of fixed or exponent form, trailing zeros removed.
pub fn fmt_g12(x: f64) -> String {
    const PRECISION: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (PRECISION - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// One row per grid point, ascending in `t_h`.
pub fn sweep_csv(curve: &SweepCurve) -> String {
    let mut points: Vec<&SweepPoint> = curve.points.iter().collect();
    points.sort_by(|a, b| a.t_h.total_cmp(&b.t_h));
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            curve.label,
            fmt_g12(curve.t_c),
            fmt_g12(p.t_h),
            fmt_g12(p.t1),
            fmt_g12(p.delta)
        );
    }
    out
}

pub fn emit_sweep_csv(curve: &SweepCurve, destination: &Path) -> Result<(), CliError> {
    write_file(destination, &sweep_csv(curve))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Reads back a sweep CSV written by [`sweep_csv`].
pub fn parse_sweep_csv(text: &str) -> Result<SweepCurve, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(SWEEP_HEADER) => {}
        other => return Err(format!("unexpected header {other:?}")),
    }
    let mut label = None;
    let mut t_c = None;
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(format!("row {}: expected 5 fields", i + 1));
        }
        let num = |s: &str| s.parse::<f64>().map_err(|e| format!("row {}: {e}", i + 1));
        let row_label: ConfigLabel = fields[0]
            .parse()
            .map_err(|e| format!("row {}: {e}", i + 1))?;
        label.get_or_insert(row_label);
        t_c.get_or_insert(num(fields[1])?);
        points.push(SweepPoint {
            t_h: num(fields[2])?,
            t1: num(fields[3])?,
            delta: num(fields[4])?,
        });
    }
    Ok(SweepCurve {
        label: label.ok_or("no rows")?,
        t_c: t_c.ok_or("no rows")?,
        points,
    })
}

/// `t_c,<labels...>` with one cooling percentage per cell. `cells` must be
/// row-major in `t_c` as returned by the table builders.
pub fn cooling_table_csv(
    t_c_values: &[f64],
    labels: &[ConfigLabel],
    cells: &[CellReport],
) -> String {
    let mut out = String::from("t_c");
    for l in labels {
        let _ = write!(out, ",{l}");
    }
    out.push('\n');
    for (row, &t_c) in cells.chunks(labels.len()).zip(t_c_values) {
        out.push_str(&fmt_g12(t_c));
        for cell in row {
            let _ = write!(out, ",{}", fmt_g12(cell.cooling_pct));
        }
        out.push('\n');
    }
    out
}

/// `rate,<labels...>` with rows `gamma_down_k` and `gamma_up_k` per qubit.
pub fn rate_table_csv(labels: &[ConfigLabel], rates: &[[ExchangeRates; 3]]) -> String {
    let mut out = String::from("rate");
    for l in labels {
        let _ = write!(out, ",{l}");
    }
    out.push('\n');
    for k in 0..3 {
        for (name, pick) in [
            (
                "gamma_down",
                (|r: &ExchangeRates| r.gamma_down) as fn(&ExchangeRates) -> f64,
            ),
            ("gamma_up", |r: &ExchangeRates| r.gamma_up),
        ] {
            let _ = write!(out, "{name}_{}", k + 1);
            for r in rates {
                let _ = write!(out, ",{}", fmt_g12(pick(&r[k])));
            }
            out.push('\n');
        }
    }
    out
}

/// Per-qubit reservoir parameters and rates of one configuration.
pub fn rates_csv(config: &SystemConfig, rates: &[ExchangeRates; 3]) -> String {
    let mut out = String::from("qubit,kind,energy,temperature,gamma,gamma_down,gamma_up\n");
    for (k, ((q, r), rate)) in config
        .qubits
        .iter()
        .zip(&config.reservoirs)
        .zip(rates)
        .enumerate()
    {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            k + 1,
            r.kind,
            fmt_g12(q.energy_gap),
            fmt_g12(r.temperature),
            fmt_g12(q.dissipation),
            fmt_g12(rate.gamma_down),
            fmt_g12(rate.gamma_up)
        );
    }
    out
}
