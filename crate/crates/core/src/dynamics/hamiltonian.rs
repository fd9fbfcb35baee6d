// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use crate::hilbert::{embed, sigma_minus, sigma_plus, sigma_z, ComplexMatrix, SiteIndex, DIM};

use super::SystemConfig;

/// Free Hamiltonian `Σ_k (E_k / 2) σ_{z,k}`.
pub fn build_h0(config: &SystemConfig) -> ComplexMatrix {
    SiteIndex::all()
        .iter()
        .fold(ComplexMatrix::zeros(DIM, DIM), |acc, &site| {
            let term = embed(&sigma_z(), site)
                .expect("σ_z is 2x2")
                .scale_real(0.5 * config.qubit(site).energy_gap);
            &acc + &term
        })
}

/// Three-body exchange `g (σ₋₁σ₊₂σ₋₃ + σ₊₁σ₋₂σ₊₃)`.
pub fn build_hint(config: &SystemConfig) -> ComplexMatrix {
    let op = |a: ComplexMatrix, b: ComplexMatrix, c: ComplexMatrix| {
        let [s1, s2, s3] = SiteIndex::all();
        let a = embed(&a, s1).expect("2x2");
        let b = embed(&b, s2).expect("2x2");
        let c = embed(&c, s3).expect("2x2");
        &(&a * &b) * &c
    };
    let forward = op(sigma_minus(), sigma_plus(), sigma_minus());
    let backward = op(sigma_plus(), sigma_minus(), sigma_plus());
    (&forward + &backward).scale_real(config.coupling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::basis_index;

    #[test]
    fn h0_diagonal_is_sum_of_half_gaps() {
        let config = SystemConfig::reference();
        let h0 = build_h0(&config);
        let gaps = [1.0, 5.0, 4.0];
        // |e g e⟩ and |g e g⟩ sit at zero energy on resonance
        assert_eq!(h0.nonzero_count(0.0), 6);
        // Enumerate the eight excitation patterns independently of the kron path.
        for pattern in 0..8u32 {
            let excited = [pattern & 4 != 0, pattern & 2 != 0, pattern & 1 != 0];
            let energy: f64 = excited
                .iter()
                .zip(gaps)
                .map(|(&e, gap)| if e { gap / 2.0 } else { -gap / 2.0 })
                .sum();
            let i = basis_index(excited);
            assert!((h0[(i, i)].re - energy).abs() < 1e-15);
        }
        assert_eq!(h0[(0, 0)].re, 5.0);
        assert!(h0.is_hermitian(0.0));
    }

    #[test]
    fn h0_vanishes_with_vanishing_gaps() {
        let mut config = SystemConfig::reference();
        for q in &mut config.qubits {
            q.energy_gap = 1e-12;
        }
        // diagonal, so the operator norm is the largest entry
        assert!(build_h0(&config).max_abs() <= 2e-12);
    }

    #[test]
    fn resonance_makes_exchanged_states_degenerate() {
        let h0 = build_h0(&SystemConfig::reference());
        let ege = basis_index([true, false, true]);
        let geg = basis_index([false, true, false]);
        assert_eq!(h0[(ege, ege)], h0[(geg, geg)]);
        assert_eq!(h0[(ege, ege)].re, 0.0);
    }

    #[test]
    fn hint_zero_coupling() {
        let config = SystemConfig::reference().with_coupling(0.0);
        assert_eq!(build_hint(&config).max_abs(), 0.0);
    }

    #[test]
    fn hint_couples_only_ege_and_geg() {
        let h = build_hint(&SystemConfig::reference());
        assert_eq!(h.nonzero_count(0.0), 2);
        assert_eq!(h.max_abs(), 0.01);
        let ege = basis_index([true, false, true]);
        let geg = basis_index([false, true, false]);
        assert_eq!(h[(ege, geg)].re, 0.01);
        assert_eq!(h[(geg, ege)].re, 0.01);
        assert!(h.is_hermitian(0.0));
    }

    #[test]
    fn hint_squared_is_g_squared_on_exchange_subspace() {
        let h = build_hint(&SystemConfig::reference());
        let h2 = &h * &h;
        let ege = basis_index([true, false, true]);
        let geg = basis_index([false, true, false]);
        let g2 = 0.01 * 0.01;
        assert!((h2[(ege, ege)].re - g2).abs() < 1e-18);
        assert!((h2[(geg, geg)].re - g2).abs() < 1e-18);
        assert_eq!(h2[(ege, geg)].norm(), 0.0);
        assert_eq!(h2.nonzero_count(0.0), 2);
    }
}
