// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::{embed, kron, sigma_minus, sigma_plus, ComplexMatrix, SiteIndex, DIM};

use super::{build_h0, build_hint, SystemConfig};

/// Superoperator dimension, `DIM²`.
pub const SUPER_DIM: usize = DIM * DIM;

/// Lindblad generator acting on column-stacked density matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Liouvillian {
    matrix: ComplexMatrix,
}

impl Liouvillian {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// `L(ρ)` as an 8x8 matrix.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != DIM || rho.cols() != DIM {
            return Err(Error::DimensionMismatch {
                expected: format!("{DIM}x{DIM}"),
                found: format!("{}x{}", rho.rows(), rho.cols()),
            });
        }
        ComplexMatrix::unvectorize(&self.matrix.apply(&rho.vectorize()), DIM)
    }

    /// Largest entry of `vec(I)† L`, zero for a trace-preserving generator.
    pub fn trace_preservation_error(&self) -> f64 {
        (0..SUPER_DIM)
            .map(|col| {
                (0..DIM)
                    .map(|i| self.matrix[(i * DIM + i, col)])
                    .sum::<Complex64>()
                    .norm()
            })
            .fold(0.0, f64::max)
    }

    /// All 64 eigenvalues, from a complex Schur decomposition.
    pub fn spectrum(&self) -> Result<Vec<Complex64>> {
        let schur = nalgebra::Schur::try_new(self.matrix.to_nalgebra(), f64::EPSILON, 10_000)
            .ok_or_else(|| Error::NumericalFailure("Schur iteration did not converge".into()))?;
        let (_, t) = schur.unpack();
        Ok((0..SUPER_DIM).map(|i| t[(i, i)]).collect())
    }
}

/// Column-stacked form of `−i[H, ρ] + Σ_k Γ↓_k D[σ₋,k](ρ) + Γ↑_k D[σ₊,k](ρ)`.
///
/// With `vec(AXB) = (Bᵀ ⊗ A) vec(X)`:
/// `−i[H, ·] → −i(I ⊗ H − Hᵀ ⊗ I)` and
/// `D[c] → c̄ ⊗ c − ½ I ⊗ c†c − ½ (c†c)ᵀ ⊗ I`.
pub fn build_liouvillian(config: &SystemConfig) -> Result<Liouvillian> {
    config.validate()?;
    let id = ComplexMatrix::identity(DIM);
    let h = &build_h0(config) + &build_hint(config);

    let coherent = &kron(&id, &h) - &kron(&h.transpose(), &id);
    let mut matrix = coherent.scale(Complex64::new(0.0, -1.0));

    let rates = config.exchange_rates()?;
    for site in SiteIndex::all() {
        let r = rates[site.offset()];
        for (rate, local) in [(r.gamma_down, sigma_minus()), (r.gamma_up, sigma_plus())] {
            if rate == 0.0 {
                continue;
            }
            let c = embed(&local, site)?;
            let cdc = &c.dagger() * &c;
            let jump = kron(&c.conj(), &c);
            let anti = &kron(&id, &cdc) + &kron(&cdc.transpose(), &id);
            let dissipator = &jump - &anti.scale_real(0.5);
            matrix = &matrix + &dissipator.scale_real(rate);
        }
    }
    Ok(Liouvillian { matrix })
}
