// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! Steady states of a self-contained three-qubit absorption refrigerator
//! whose qubits are thermalized by any mix of bosonic and fermionic
//! reservoirs.
//!
//! Qubit 1 is cooled, qubit 2 dumps heat into a "room" reservoir and qubit 3
//! draws energy from a hot reservoir through the resonant exchange
//! `|e g e⟩ ↔ |g e g⟩`. The crate builds the Lindblad generator as a dense
//! 64x64 superoperator, solves for its kernel and reads off the effective
//! temperature of each qubit.
//!
//! ```
//! use scqr_core::dynamics::{build_liouvillian, steady_state, SystemConfig};
//! use scqr_core::hilbert::SiteIndex;
//! use scqr_core::thermometry::qubit_temperature;
//!
//! let config = SystemConfig::reference().with_cold_temperature(2.0);
//! let state = steady_state(&build_liouvillian(&config)?)?;
//! let t1 = qubit_temperature(&state.rho, SiteIndex::ONE, 1.0)?.effective_temperature;
//! assert!(t1 < 2.0);
//! # Ok::<(), scqr_core::Error>(())
//! ```

pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod hilbert;
pub mod reservoir;
pub mod thermometry;

pub use error::{Error, Result};
