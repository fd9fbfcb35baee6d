// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("qubit site must be 1, 2 or 3, got {0}")]
    InvalidSite(usize),

    /// An argument fell outside the domain of a formula.
    #[error("{name} out of domain: {value} ({reason})")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("steady state is not unique: kernel gap {gap:.3e} < {threshold:.0e}")]
    DegenerateKernel { gap: f64, threshold: f64 },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("population inversion: p_excited = {p_excited:.6} >= p_ground = {p_ground:.6}")]
    InvertedPopulation { p_ground: f64, p_excited: f64 },

    #[error("at T_h = {t_h}: {source}")]
    AtHotTemperature { t_h: f64, source: Box<Error> },

    #[error("invalid sweep grid: {0}")]
    InvalidGrid(String),

    #[error("bracket [{low}, {high}] does not straddle the refrigeration threshold")]
    NoSignChange { low: f64, high: f64 },

    #[error("invalid configuration label {0:?}, expected three of B/F")]
    InvalidLabel(String),
}

impl Error {
    /// True for errors raised by the linear-algebra or readout stages rather
    /// than by bad input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::DegenerateKernel { .. }
            | Error::NumericalFailure(_)
            | Error::InvertedPopulation { .. } => true,
            Error::AtHotTemperature { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
