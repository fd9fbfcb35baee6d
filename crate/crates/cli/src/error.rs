// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

/// Problems with the configuration document or its overrides. Every variant
/// names the offending key.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("missing field `{0}`")]
    MissingField(String),
    #[error("`{key}`: expected {expected}")]
    WrongType { key: String, expected: &'static str },
    #[error("`{key}`: reservoir kind must be \"B\" or \"F\", got {found}")]
    BadKind { key: String, found: String },
    #[error("`{key}` must be positive, got {value}")]
    NonPositiveValue { key: String, value: f64 },
    #[error("`{key}` must be nonnegative, got {value}")]
    NegativeValue { key: String, value: f64 },
    #[error("`{key}`: expected {expected} entries, got {found}")]
    WrongLength {
        key: String,
        expected: usize,
        found: usize,
    },
    #[error("bad override `{0}`: {1}")]
    BadOverride(String, String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Model(#[from] scqr_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Machine-readable failure printed to standard error.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub error: &'static str,
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "config",
            2 => "numerical",
            _ => "io",
        }
    }

    /// 1 config, 2 numerical, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Model(e) if e.is_numerical() => 2,
            CliError::Model(scqr_core::Error::NoSignChange { .. }) => 2,
            CliError::Model(_) => 1,
            CliError::Io { .. } => 3,
        }
    }

    pub fn record(&self) -> ErrorRecord {
        ErrorRecord {
            error: self.kind(),
            exit_code: self.exit_code(),
            message: self.to_string(),
        }
    }
}
