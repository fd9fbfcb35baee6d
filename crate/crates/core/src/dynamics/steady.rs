// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{ComplexMatrix, DIM};

use super::liouvillian::{Liouvillian, SUPER_DIM};

/// Smallest accepted ratio between the two smallest singular values of `L`.
pub const KERNEL_GAP_MIN: f64 = 1e3;
/// Largest accepted `‖L vec(ρ)‖₂` for a normalized steady state.
pub const STEADY_RESIDUAL_MAX: f64 = 1e-10;

/// Normalized kernel element of a Liouvillian, with diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct SteadyState {
    pub rho: ComplexMatrix,
    /// `‖L vec(ρ)‖₂`.
    pub residual: f64,
    /// `σ₆₃ / σ₆₄` (second-smallest over smallest singular value), with the
    /// smallest floored at `ε σ_max`.
    pub kernel_gap: f64,
    pub trace_error: f64,
    pub min_eigenvalue: f64,
    pub hermiticity_error: f64,
}

impl SteadyState {
    fn from_rho(liouvillian: &Liouvillian, rho: ComplexMatrix, kernel_gap: f64) -> Result<Self> {
        let residual = l2_norm(&liouvillian.matrix().apply(&rho.vectorize()));
        let trace_error = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
        let min_eigenvalue = min_hermitian_eigenvalue(&rho);
        let hermiticity_error = rho.hermiticity_error();
        Ok(Self {
            rho,
            residual,
            kernel_gap,
            trace_error,
            min_eigenvalue,
            hermiticity_error,
        })
    }
}

fn l2_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn min_hermitian_eigenvalue(rho: &ComplexMatrix) -> f64 {
    let eig = nalgebra::SymmetricEigen::new(rho.hermitian_part().to_nalgebra());
    eig.eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Reshapes a kernel vector into a Hermitian, unit-trace density matrix.
fn normalize_kernel_vector(v: &[Complex64]) -> Result<ComplexMatrix> {
    let rho = ComplexMatrix::unvectorize(v, DIM)?.hermitian_part();
    let trace = rho.trace();
    if trace.norm() < 1e-300 || !trace.re.is_finite() {
        return Err(Error::NumericalFailure(
            "kernel vector has vanishing trace".into(),
        ));
    }
    // Hermitian part has a real trace up to rounding.
    Ok(rho.scale_real(1.0 / trace.re))
}

/// Unique steady state from the right singular vector of the smallest
/// singular value of `L`.
pub fn steady_state(liouvillian: &Liouvillian) -> Result<SteadyState> {
    let svd = liouvillian.matrix().to_nalgebra().svd(false, true);
    let v_t = svd
        .v_t
        .as_ref()
        .ok_or_else(|| Error::NumericalFailure("SVD did not return V".into()))?;

    let sv = &svd.singular_values;
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&a, &b| sv[a].total_cmp(&sv[b]));
    let (smallest, second) = (sv[order[0]], sv[order[1]]);
    // Singular values below rounding level of the largest one count as zero.
    let largest = sv[order[sv.len() - 1]];
    let floor = (largest * f64::EPSILON).max(f64::MIN_POSITIVE);
    let kernel_gap = second / smallest.max(floor);
    if kernel_gap.is_nan() || kernel_gap < KERNEL_GAP_MIN {
        return Err(Error::DegenerateKernel {
            gap: kernel_gap,
            threshold: KERNEL_GAP_MIN,
        });
    }

    // Rows of Vᴴ are conjugated right singular vectors.
    let kernel: Vec<Complex64> = v_t.row(order[0]).iter().map(|z| z.conj()).collect();
    let rho = normalize_kernel_vector(&kernel)?;
    let state = SteadyState::from_rho(liouvillian, rho, kernel_gap)?;
    if state.residual.is_nan() || state.residual > STEADY_RESIDUAL_MAX {
        return Err(Error::NumericalFailure(format!(
            "steady-state residual {:.3e} exceeds {STEADY_RESIDUAL_MAX:.0e}",
            state.residual
        )));
    }
    Ok(state)
}

/// Steady state by replacing the first row of `L` with the trace
/// functional and LU-solving `L' vec(ρ) = e₀`.
///
/// Independent of [`steady_state`]; it does not compute a kernel gap, which
/// is reported as NaN.
pub fn steady_state_lu(liouvillian: &Liouvillian) -> Result<SteadyState> {
    let mut m: DMatrix<Complex64> = liouvillian.matrix().to_nalgebra();
    for col in 0..SUPER_DIM {
        m[(0, col)] = Complex64::new(0.0, 0.0);
    }
    for i in 0..DIM {
        m[(0, i * DIM + i)] = Complex64::new(1.0, 0.0);
    }
    let mut rhs = DVector::from_element(SUPER_DIM, Complex64::new(0.0, 0.0));
    rhs[0] = Complex64::new(1.0, 0.0);
    let solution = m
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::NumericalFailure("trace-constrained system is singular".into()))?;
    let rho = normalize_kernel_vector(solution.as_slice())?;
    SteadyState::from_rho(liouvillian, rho, f64::NAN)
}
