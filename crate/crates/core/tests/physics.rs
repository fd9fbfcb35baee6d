// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use scqr_core::dynamics::{build_liouvillian, steady_state, steady_state_lu, SystemConfig};
use scqr_core::experiments::{enumerate_labels, log_grid, ConfigLabel};
use scqr_core::hilbert::{partial_trace, ComplexMatrix, SiteIndex, DIM};
use scqr_core::reservoir::ReservoirKind;
use scqr_core::thermometry::{analytic_isolated_t1, qubit_temperature};

fn random_kind(rng: &mut StdRng) -> ReservoirKind {
    if rng.random::<bool>() {
        ReservoirKind::Bosonic
    } else {
        ReservoirKind::Fermionic
    }
}

fn random_config(rng: &mut StdRng) -> SystemConfig {
    let mut c = SystemConfig::reference()
        .with_kinds([random_kind(rng), random_kind(rng), random_kind(rng)])
        .with_coupling(rng.random_range(0.0..0.05));
    for (q, r) in c.qubits.iter_mut().zip(c.reservoirs.iter_mut()) {
        q.energy_gap = rng.random_range(0.2..8.0);
        q.dissipation = rng.random_range(1e-3..0.1);
        r.temperature = rng.random_range(0.1..200.0);
    }
    c
}

fn random_density_like(rng: &mut StdRng) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(DIM, DIM);
    for i in 0..DIM {
        for j in 0..DIM {
            m[(i, j)] = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
    }
    let h = m.hermitian_part();
    let tr = h.trace().re;
    h.scale_real(1.0 / tr)
}

fn eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    let d = DMatrix::from_row_slice(n, n, m.as_slice());
    SymmetricEigen::new(d).eigenvalues.iter().copied().collect()
}

fn trace_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    0.5 * eigenvalues(&(a - b)).iter().map(|x| x.abs()).sum::<f64>()
}

/// Product of single-qubit Gibbs states, bit k of the index set when qubit
/// k+1 (counted from the left) is in its ground state.
fn product_thermal(config: &SystemConfig) -> ComplexMatrix {
    let p_excited: Vec<f64> = config
        .qubits
        .iter()
        .zip(&config.reservoirs)
        .map(|(q, r)| 1.0 / (1.0 + (q.energy_gap / r.temperature).exp()))
        .collect();
    let diag: Vec<f64> = (0..DIM)
        .map(|i| {
            (0..3)
                .map(|k| {
                    let ground = (i >> (2 - k)) & 1 == 1;
                    if ground {
                        1.0 - p_excited[k]
                    } else {
                        p_excited[k]
                    }
                })
                .product()
        })
        .collect();
    ComplexMatrix::from_diagonal(&diag)
}

fn reference_regime() -> Vec<SystemConfig> {
    let grid = log_grid(0.1, 1000.0, 9).unwrap();
    let mut out = Vec::new();
    for label in enumerate_labels() {
        for t_c in [0.48, 0.8, 1.0, 1.5, 2.0] {
            for &t_h in &grid {
                out.push(
                    SystemConfig::reference()
                        .with_kinds(label.kinds())
                        .with_cold_temperature(t_c)
                        .with_hot_temperature(t_h),
                );
            }
        }
    }
    out
}

#[test]
fn liouvillian_preserves_trace_and_hermiticity() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let config = random_config(&mut rng);
        let l = build_liouvillian(&config).unwrap();
        assert!(l.trace_preservation_error() <= 1e-10);
        let rho = random_density_like(&mut rng);
        let out = l.apply(&rho).unwrap();
        assert!(out.trace().norm() <= 1e-10, "trace {}", out.trace());
        assert!(out.hermiticity_error() <= 1e-10);
    }
}

#[test]
fn uncoupled_fixed_point_is_product_thermal_for_all_labels() {
    for label in enumerate_labels() {
        let config = SystemConfig::reference()
            .with_kinds(label.kinds())
            .with_coupling(0.0)
            .with_cold_temperature(0.7)
            .with_hot_temperature(35.0);
        let ss = steady_state(&build_liouvillian(&config).unwrap()).unwrap();
        let d = trace_distance(&ss.rho, &product_thermal(&config));
        assert!(d <= 1e-10, "{label}: trace distance {d:e}");
    }
}

#[test]
fn reservoir_kind_changes_rates_not_fixed_point() {
    let base = SystemConfig::reference().with_coupling(0.0);
    let bosonic = base.with_kinds([ReservoirKind::Bosonic; 3]);
    let fermionic = base.with_kinds([ReservoirKind::Fermionic; 3]);
    let lb = build_liouvillian(&bosonic).unwrap();
    let lf = build_liouvillian(&fermionic).unwrap();
    let rb = steady_state(&lb).unwrap().rho;
    let rf = steady_state(&lf).unwrap().rho;
    for site in SiteIndex::all() {
        let d = trace_distance(
            &partial_trace(&rb, site).unwrap(),
            &partial_trace(&rf, site).unwrap(),
        );
        assert!(d <= 1e-10);
    }
    // Slowest nonzero mode: a single-qubit coherence decaying at Γ_total / 2.
    let expected = |c: &SystemConfig| {
        c.exchange_rates()
            .unwrap()
            .iter()
            .map(|r| 0.5 * r.total())
            .fold(f64::INFINITY, f64::min)
    };
    let gap = |l: &scqr_core::dynamics::Liouvillian| {
        l.spectrum()
            .unwrap()
            .iter()
            .map(|z| -z.re)
            .filter(|&r| r > 1e-10)
            .fold(f64::INFINITY, f64::min)
    };
    let (gb, gf) = (gap(&lb), gap(&lf));
    assert!((gb - expected(&bosonic)).abs() < 1e-12);
    assert!((gf - expected(&fermionic)).abs() < 1e-12);
    assert!(gb > gf, "bosonic {gb} fermionic {gf}");
}

#[test]
fn steady_state_diagnostics_over_reference_regime() {
    for config in reference_regime() {
        let ss = steady_state(&build_liouvillian(&config).unwrap()).unwrap();
        let tag = format!(
            "{} t_c={} t_h={}",
            ConfigLabel::of(&config),
            config.t_cold(),
            config.t_hot()
        );
        assert!(ss.residual <= 1e-10, "{tag}: residual {}", ss.residual);
        assert!(ss.min_eigenvalue >= -1e-9, "{tag}: {}", ss.min_eigenvalue);
        assert!(ss.kernel_gap >= 1e3, "{tag}: gap {}", ss.kernel_gap);
        assert!(ss.trace_error <= 1e-10);
        assert!(ss.hermiticity_error <= 1e-10);
        for site in SiteIndex::all() {
            let reduced = partial_trace(&ss.rho, site).unwrap();
            assert!(
                reduced[(0, 1)].norm() <= 1e-8,
                "{tag}: coherence on {site:?}"
            );
        }
    }
}

#[test]
fn kernel_routes_agree() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..20 {
        let config = random_config(&mut rng);
        let l = build_liouvillian(&config).unwrap();
        let a = steady_state(&l).unwrap().rho;
        let b = steady_state_lu(&l).unwrap().rho;
        assert!(a.max_abs_diff(&b) <= 1e-9);
    }
}

fn isolated_t1(kinds: [ReservoirKind; 3], gamma1: f64, t_room: f64, t_h: f64) -> f64 {
    let config = SystemConfig::reference()
        .with_kinds(kinds)
        .with_dissipation(SiteIndex::ONE, gamma1)
        .with_temperature(SiteIndex::TWO, t_room)
        .with_cold_temperature(t_room)
        .with_hot_temperature(t_h);
    let ss = steady_state(&build_liouvillian(&config).unwrap()).unwrap();
    qubit_temperature(&ss.rho, SiteIndex::ONE, 1.0)
        .unwrap()
        .effective_temperature
}

#[test]
fn weakly_damped_cold_qubit_approaches_isolated_limit() {
    // Shared cold and room bath; the closed-form limit is then exact as γ₁ → 0.
    for kinds in [[ReservoirKind::Bosonic; 3], [ReservoirKind::Fermionic; 3]] {
        for (t, t_h) in [(1.0, 10.0), (2.0, 100.0)] {
            let exact = analytic_isolated_t1(1.0, 4.0, t, t_h).unwrap();
            let coarse = (isolated_t1(kinds, 1e-4, t, t_h) - exact).abs();
            let fine = (isolated_t1(kinds, 1e-8, t, t_h) - exact).abs();
            assert!(fine < coarse);
            assert!(fine / exact < 1e-3, "{kinds:?} {t} {t_h}: {}", fine / exact);
        }
    }
}

#[test]
fn isolated_cold_qubit_takes_virtual_temperature() {
    // With separate cold and room baths the isolated qubit 1 equilibrates to
    // the virtual qubit formed by qubits 2 and 3: E₁ / (E₂/T_r − E₃/T_h).
    let config = SystemConfig::reference()
        .with_kinds([ReservoirKind::Fermionic; 3])
        .with_dissipation(SiteIndex::ONE, 1e-9)
        .with_cold_temperature(1.0)
        .with_hot_temperature(50.0);
    let ss = steady_state(&build_liouvillian(&config).unwrap()).unwrap();
    let t1 = qubit_temperature(&ss.rho, SiteIndex::ONE, 1.0)
        .unwrap()
        .effective_temperature;
    let virtual_t = 1.0 / (5.0 / 2.0 - 4.0 / 50.0);
    assert!(
        (t1 - virtual_t).abs() / virtual_t < 1e-3,
        "{t1} vs {virtual_t}"
    );
}
