//! Free-rotator time evolution on both sides of the quantum–classical
//! correspondence.
//!
//! The quantum side multiplies each momentum coefficient by the free phase
//! `e^{-i n²ℏt/2I}`; the classical side transports the phase-space field
//! along `φ → φ + Jt/I`, realized spectrally as the per-mode factor
//! `e^{imJt/I}`. On the momentum lattice the two are the same map: for a
//! mode pair `a = J/ℏ + m/2`, `b = J/ℏ - m/2` the quantum phase difference
//! is `(a² - b²)ℏt/2I = m·Jt/I` exactly, so [`coherence_residual`] is zero
//! up to floating-point rounding for every state and every time.

use num_complex::Complex64;

use crate::error::Result;
use crate::rotor::{AngleGrid, AngularWaveFunction, RotorSpec};
use crate::wigner::{wigner_field, MomentumLattice, WignerField};

/// Evolution time together with the rotor constants that drive it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionParams {
    pub time: f64,
    pub spec: RotorSpec,
}

impl EvolutionParams {
    pub fn new(time: f64, spec: RotorSpec) -> Self {
        Self { time, spec }
    }
}

/// Free Schrödinger evolution under `Ĥ = Ĵ²/2I`:
/// `c_n → e^{-i n²ℏt/2I} c_n`. Norm-preserving; eigenstates are stationary.
pub fn evolve_quantum(psi: &AngularWaveFunction, params: &EvolutionParams) -> AngularWaveFunction {
    assert_eq!(
        psi.spec(),
        params.spec,
        "evolution parameters carry a different rotor spec"
    );
    let RotorSpec { hbar, inertia } = params.spec;
    let rate = hbar * params.time / (2.0 * inertia);
    psi.with_phases(|n| Complex64::from_polar(1.0, -((n * n) as f64) * rate))
}

/// Free Liouville transport `f(φ, J, t) = f(φ - Jt/I, J, 0)`, applied
/// spectrally: mode `m` of the row at height `J` is multiplied by
/// `e^{imJt/I}`. Exact for band-limited fields; no grid interpolation.
pub fn liouville_transport(field: &WignerField, params: &EvolutionParams) -> WignerField {
    assert_eq!(
        field.spec(),
        params.spec,
        "evolution parameters carry a different rotor spec"
    );
    let RotorSpec { hbar, inertia } = params.spec;
    let lattice = *field.lattice();
    field.with_mode_phases(|row, m| {
        let j = lattice.point_over_hbar(row) * hbar;
        Complex64::from_polar(1.0, m as f64 * j * params.time / inertia)
    })
}

/// Maximum absolute difference, over all field nodes, between the
/// quantum-evolved field and the classically transported field. An exact
/// identity on the lattice; stays below 1e-9 for any state and time.
pub fn coherence_residual(
    psi: &AngularWaveFunction,
    params: &EvolutionParams,
    grid: &AngleGrid,
    lattice: &MomentumLattice,
) -> Result<f64> {
    let evolved = evolve_quantum(psi, params);
    let quantum_route = wigner_field(&evolved, grid, lattice)?;
    let initial = wigner_field(psi, grid, lattice)?;
    let classical_route = liouville_transport(&initial, params);
    let mut worst = 0.0f64;
    for (a, b) in quantum_route
        .values()
        .iter()
        .zip(classical_route.values().iter())
    {
        worst = worst.max((a - b).abs());
    }
    Ok(worst)
}
