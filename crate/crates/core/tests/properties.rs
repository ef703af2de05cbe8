//! Property suites over randomized states: structural invariants that must
//! hold for every input, not just the worked examples.

mod support;

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rotor_core::dynamics::{coherence_residual, evolve_quantum, EvolutionParams};
use rotor_core::wigner::{
    marginal_angle, marginal_momentum, phase_space_overlap, wigner_field, wigner_point,
    wigner_point_windowed,
};
use rotor_core::{AngleGrid, AngularWaveFunction, MomentumLattice, ParityClass, RotorSpec};

const CUTOFF: usize = 8;

/// Raw amplitudes for a state of the requested parity; proptest shrinks
/// nicely over plain float pairs.
fn amplitudes() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 2 * CUTOFF + 1)
}

fn build_state(raw: &[(f64, f64)], parity: ParityClass) -> Option<AngularWaveFunction> {
    let terms: Vec<(i64, Complex64)> = raw
        .iter()
        .enumerate()
        .map(|(i, &(re, im))| (i as i64 - CUTOFF as i64, Complex64::new(re, im)))
        .filter(|(n, _)| match parity {
            ParityClass::Even => n.rem_euclid(2) == 0,
            ParityClass::Odd => n.rem_euclid(2) == 1,
            ParityClass::Mixed => true,
        })
        .collect();
    AngularWaveFunction::superposition(&terms, CUTOFF, RotorSpec::natural()).ok()
}

fn parity_strategy() -> impl Strategy<Value = ParityClass> {
    prop_oneof![
        Just(ParityClass::Even),
        Just(ParityClass::Odd),
        Just(ParityClass::Mixed)
    ]
}

proptest! {
    #[test]
    fn kernel_values_are_real(raw in amplitudes(), parity in parity_strategy(),
                              phi in -PI..PI, j in -10.0..10.0f64) {
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        let value = wigner_point_windowed(&psi, phi, j, -PI);
        prop_assert!(value.im.abs() < 1e-10);
        // The checked accessor agrees with the real part.
        prop_assert!((wigner_point(&psi, phi, j) - value.re).abs() < 1e-14);
    }

    #[test]
    fn purity_is_universal(raw in amplitudes(), parity in parity_strategy()) {
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        let overlap = phase_space_overlap(&psi, &psi).unwrap();
        prop_assert!((overlap - 1.0 / (2.0 * PI)).abs() < 1e-10);
    }

    #[test]
    fn angle_sample_round_trip(raw in amplitudes()) {
        prop_assume!(build_state(&raw, ParityClass::Mixed).is_some());
        let psi = build_state(&raw, ParityClass::Mixed).unwrap();
        let grid = AngleGrid::new(2 * CUTOFF + 1).unwrap();
        let samples = psi.angle_samples(&grid).unwrap();
        let back = AngularWaveFunction::from_angle_samples(&samples, CUTOFF, psi.spec()).unwrap();
        for (n, c) in psi.coefficients() {
            prop_assert!((back.coefficient(n) - c).norm() < 1e-12);
        }
    }

    #[test]
    fn evolution_is_unitary_and_composes(raw in amplitudes(), t1 in 0.0..5.0f64, t2 in 0.0..5.0f64) {
        prop_assume!(build_state(&raw, ParityClass::Mixed).is_some());
        let psi = build_state(&raw, ParityClass::Mixed).unwrap();
        let spec = psi.spec();
        let step = evolve_quantum(
            &evolve_quantum(&psi, &EvolutionParams::new(t1, spec)),
            &EvolutionParams::new(t2, spec),
        );
        let direct = evolve_quantum(&psi, &EvolutionParams::new(t1 + t2, spec));
        prop_assert!((step.norm_sqr() - 1.0).abs() < 1e-12);
        for (n, c) in step.coefficients() {
            prop_assert!((direct.coefficient(n) - c).norm() < 1e-12);
        }
    }

    #[test]
    fn even_states_revive_at_pi(raw in amplitudes()) {
        prop_assume!(build_state(&raw, ParityClass::Even).is_some());
        let psi = build_state(&raw, ParityClass::Even).unwrap();
        let revived = evolve_quantum(&psi, &EvolutionParams::new(PI, psi.spec()));
        for (n, c) in psi.coefficients() {
            prop_assert!((revived.coefficient(n) - c).norm() < 1e-12);
        }
    }

    #[test]
    fn window_shift_invariance_for_pure_parity(raw in amplitudes(), even in any::<bool>(),
                                               phi in -PI..PI, j in -6i64..=6) {
        let parity = if even { ParityClass::Even } else { ParityClass::Odd };
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        let w1 = wigner_point_windowed(&psi, phi, j as f64, -PI);
        let w2 = wigner_point_windowed(&psi, phi, j as f64, 0.0);
        prop_assert!((w1 - w2).norm() < 1e-10);
    }
}

proptest! {
    // Field construction is heavier; fewer cases suffice.
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_mass_and_realness(raw in amplitudes(), parity in parity_strategy()) {
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        let grid = AngleGrid::new(64).unwrap();
        let lattice = MomentumLattice::covering(&psi);
        let field = wigner_field(&psi, &grid, &lattice).unwrap();
        prop_assert!((field.total_mass() - 1.0).abs() < 1e-9);
        prop_assert!((field.quadrature_mass() - 1.0).abs() < 1e-9);
        prop_assert!(field.max_imag_residue() < 1e-10);
    }

    #[test]
    fn field_marginals_are_consistent(raw in amplitudes(), parity in parity_strategy()) {
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        let grid = AngleGrid::new(64).unwrap();
        let lattice = MomentumLattice::covering(&psi);
        let field = wigner_field(&psi, &grid, &lattice).unwrap();
        for (col, phi) in grid.points().enumerate().step_by(7) {
            prop_assert!((field.sum_over_lattice(col) - marginal_angle(&psi, phi)).abs() < 1e-9);
        }
        for row in 0..lattice.len() {
            let height = lattice.point_over_hbar(row);
            if height.fract() == 0.0 {
                let quad = field.integrate_over_angle(row);
                prop_assert!((quad - marginal_momentum(&psi, height)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn momentum_marginal_nonnegative_on_integer_heights(raw in amplitudes(),
                                                        parity in parity_strategy()) {
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        for n in -(CUTOFF as i64 + 2)..=(CUTOFF as i64 + 2) {
            prop_assert!(marginal_momentum(&psi, n as f64) >= -1e-12);
        }
    }

    #[test]
    fn quantum_and_classical_evolution_coincide(raw in amplitudes(),
                                                parity in parity_strategy(),
                                                t in 0.0..10.0f64) {
        prop_assume!(build_state(&raw, parity).is_some());
        let psi = build_state(&raw, parity).unwrap();
        let grid = AngleGrid::new(32).unwrap();
        let lattice = MomentumLattice::covering(&psi);
        let params = EvolutionParams::new(t, psi.spec());
        let residual = coherence_residual(&psi, &params, &grid, &lattice).unwrap();
        prop_assert!(residual < 1e-9, "residual {residual:e}");
    }
}

/// The momentum marginal must go negative somewhere off the lattice.
#[test]
fn off_lattice_negativity_witness() {
    let psi = AngularWaveFunction::eigenstate(3, 8, RotorSpec::natural()).unwrap();
    let value = marginal_momentum(&psi, 4.5);
    assert!(
        value < -0.1,
        "marginal at J = 4.5ℏ should be clearly negative, got {value}"
    );
}

/// Window invariance fails by a finite amount for mixed parity on the
/// integer heights.
#[test]
fn mixed_parity_window_defect_is_finite() {
    let psi = AngularWaveFunction::superposition(
        &[(0, Complex64::ONE), (1, Complex64::ONE)],
        4,
        RotorSpec::natural(),
    )
    .unwrap();
    let w1 = wigner_point_windowed(&psi, 0.0, 0.0, -PI);
    let w2 = wigner_point_windowed(&psi, 0.0, 0.0, 0.0);
    let defect = (w1 - w2).norm();
    assert!(defect > 1e-3, "defect {defect}");
    // Matches the direct quadrature of the shifted window.
    let oracle = support::wigner_gamma_quadrature(&psi, 0.0, 0.0, 0.0, 200);
    assert!((w2 - oracle).norm() < 1e-11);
}
